#include "walks/asymptotics.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "walks/lattice_enum.hpp"

namespace walks {

const char* ansatz_name(Ansatz a) {
  switch (a) {
    case Ansatz::LinearN: return "C*n";
    case Ansatz::QuadraticN: return "C*n^2";
    case Ansatz::Constant: return "C";
  }
  return "?";
}

FitResult fit_constant(const std::vector<std::pair<long, BigRat>>& data, Ansatz ansatz,
                       int precision) {
  if (data.size() < 3) throw EmptyData("fit_constant: need at least 3 data points");
  auto it = std::max_element(data.begin(), data.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  long n = it->first;
  BigRat ratio = it->second;
  switch (ansatz) {
    case Ansatz::LinearN: ratio /= BigRat(n); break;
    case Ansatz::QuadraticN: ratio /= BigRat(n) * BigRat(n); break;
    case Ansatz::Constant: break;
  }
  ratio.canonicalize();
  return {ratio, to_decimal(ratio, precision)};
}

std::string safe_digits(const std::string& x, const std::string& y) {
  size_t i = 0;
  while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
  std::string prefix = x.substr(0, i);
  // A prefix that carries no digit is no agreement at all.
  if (prefix.find_first_of("0123456789") == std::string::npos) return "";
  return prefix;
}

namespace {

struct RangeFits {
  // exact values per constant where available, decimal strings always
  std::vector<std::optional<BigRat>> exact;
  std::vector<std::string> decimal;
};

// Standardized odd moments within 1e-3 of zero render as a flat zero;
// the raw value stays in the data points.
bool near_zero(const BigRat& signed_square) {
  static const BigRat threshold(1, 1000000);  // (1e-3)^2 on the squared scale
  return abs(signed_square) < threshold;
}

RangeFits fit_range(const std::vector<const DataPoint*>& pts, unsigned max_moment, int precision) {
  RangeFits out;
  std::vector<std::pair<long, BigRat>> mean_data, var_data;
  for (const auto* p : pts) {
    mean_data.emplace_back(p->n, p->mean);
    var_data.emplace_back(p->n, p->variance);
  }
  FitResult mean_fit = fit_constant(mean_data, Ansatz::LinearN, precision);
  FitResult var_fit = fit_constant(var_data, Ansatz::QuadraticN, precision);
  out.exact.push_back(mean_fit.exact);
  out.decimal.push_back(mean_fit.decimal);
  out.exact.push_back(var_fit.exact);
  out.decimal.push_back(var_fit.decimal);

  // Standardized moments use the constant ansatz: the value at the
  // largest non-degenerate n. Even moments are exact rationals; odd
  // ones go through the square-root rendering.
  const DataPoint* best = nullptr;
  for (const auto* p : pts)
    if (!p->degenerate && (!best || p->n > best->n)) best = p;
  for (unsigned k = 3; k <= max_moment; ++k) {
    if (!best) {
      out.exact.emplace_back(std::nullopt);
      out.decimal.emplace_back("");
      continue;
    }
    const BigRat& sq = best->std_signed_squares[k - 3];
    bool odd = (k % 2) == 1;
    if (odd && near_zero(sq)) {
      out.exact.emplace_back(std::nullopt);
      out.decimal.emplace_back("0.000");
      continue;
    }
    BigRat root;
    if (exact_sqrt(abs(sq), root)) {
      if (sign(sq) < 0) root = -root;
      out.exact.emplace_back(root);
    } else {
      out.exact.emplace_back(std::nullopt);
    }
    out.decimal.push_back(sqrt_to_decimal(sq, precision));
  }
  return out;
}

std::vector<const DataPoint*> points_in(const std::vector<DataPoint>& all, int k1, int k2) {
  std::vector<const DataPoint*> out;
  for (const auto& p : all)
    if (p.n >= k1 && p.n <= k2) out.push_back(&p);
  return out;
}

struct SubsetOutcome {
  std::optional<AsymptoticTheorem> theorem;
  std::optional<Exclusion> exclusion;
};

SubsetOutcome process_subset(const std::vector<Step2>& subset_steps, const BookConfig& config) {
  StepSet2 subset(subset_steps);
  std::vector<int> ns;
  for (int n = config.k1; n <= config.k2; ++n) ns.push_back(n);
  if (config.range2)
    for (int n = config.range2->first; n <= config.range2->second; ++n) ns.push_back(n);

  auto polys = diagonal_polys(subset, Stat::a1, ns);

  std::vector<DataPoint> data;
  for (const auto& [n, f] : polys) {
    if (f.is_zero()) continue;  // (n,n) not reachable with these steps
    MomentReport rep = moment_report(f, config.max_moment, config.precision, n);
    DataPoint p;
    p.n = n;
    p.mass = rep.mass;
    p.mean = rep.mean;
    p.variance = rep.variance;
    p.degenerate = rep.degenerate;
    if (!rep.degenerate)
      for (const auto& m : rep.std_moments) p.std_signed_squares.push_back(m.signed_square);
    data.push_back(std::move(p));
  }

  auto reachable_in = [&](int k1, int k2) {
    return static_cast<int>(points_in(data, k1, k2).size());
  };
  bool reach_ok = reachable_in(config.k1, config.k2) >= 3 &&
                  (!config.range2 || reachable_in(config.range2->first, config.range2->second) >= 3);
  if (!reach_ok)
    return {std::nullopt, Exclusion{subset_steps, "fewer than 3 reachable n in a range"}};

  bool all_zero_mean = std::all_of(data.begin(), data.end(),
                                   [](const DataPoint& p) { return sign(p.mean) == 0; });
  if (all_zero_mean)
    return {std::nullopt, Exclusion{subset_steps, "losing count identically zero"}};

  bool all_degenerate = std::all_of(data.begin(), data.end(),
                                    [](const DataPoint& p) { return p.degenerate; });
  if (all_degenerate)
    return {std::nullopt, Exclusion{subset_steps, "variance is zero at every sampled n"}};

  AsymptoticTheorem thm;
  thm.steps = subset_steps;
  thm.safe_mode = config.range2.has_value();
  thm.data_points = data;

  RangeFits f1 = fit_range(points_in(data, config.k1, config.k2), config.max_moment, config.precision);
  RangeFits f2;
  if (config.range2)
    f2 = fit_range(points_in(data, config.range2->first, config.range2->second), config.max_moment,
                   config.precision);

  auto label_of = [](size_t i) {
    if (i == 0) return std::string("mean");
    if (i == 1) return std::string("variance");
    return "m" + std::to_string(i + 1);
  };
  for (size_t i = 0; i < f1.decimal.size(); ++i) {
    ConstantFit c;
    c.label = label_of(i);
    c.ansatz = i == 0 ? Ansatz::LinearN : (i == 1 ? Ansatz::QuadraticN : Ansatz::Constant);
    c.fit1 = f1.decimal[i];
    c.exact1 = f1.exact[i];
    if (config.range2) {
      c.fit2 = f2.decimal[i];
      c.exact2 = f2.exact[i];
      std::string agreed = safe_digits(c.fit1, c.fit2);
      c.safe = agreed.empty() ? "no agreement" : agreed;
    } else {
      c.safe = c.fit1;
    }
    thm.constants.push_back(std::move(c));
  }
  return {std::move(thm), std::nullopt};
}

}  // namespace

BookResult book(const BookConfig& config) {
  if (config.k1 > config.k2 || (config.range2 && config.range2->first > config.range2->second))
    throw std::invalid_argument("book: empty n-range");
  if (config.max_moment < 2) throw std::invalid_argument("book: max moment must be >= 2");
  if (config.k1 < 0) throw std::invalid_argument("book: negative range");

  const auto& steps = config.steps.steps();
  const size_t m = steps.size();
  const size_t subset_count = (size_t{1} << m) - 1;

  std::vector<std::vector<Step2>> subsets(subset_count);
  for (size_t mask = 1; mask <= subset_count; ++mask)
    for (size_t i = 0; i < m; ++i)
      if (mask & (size_t{1} << i)) subsets[mask - 1].push_back(steps[i]);

  unsigned threads = config.threads ? config.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  std::vector<SubsetOutcome> outcomes(subset_count);
  // Batched so at most `threads` sweeps are alive at once; outcomes are
  // joined in subset order, so output is schedule-independent.
  for (size_t base = 0; base < subset_count; base += threads) {
    size_t end = std::min(subset_count, base + threads);
    std::vector<std::future<SubsetOutcome>> futs;
    for (size_t i = base; i < end; ++i)
      futs.push_back(std::async(std::launch::async,
                                [&, i] { return process_subset(subsets[i], config); }));
    for (size_t i = base; i < end; ++i) outcomes[i] = futs[i - base].get();
  }

  BookResult result;
  for (auto& o : outcomes) {
    if (o.theorem) result.theorems.push_back(std::move(*o.theorem));
    if (o.exclusion) result.excluded.push_back(std::move(*o.exclusion));
  }
  return result;
}

}  // namespace walks
