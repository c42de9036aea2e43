#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walks/moments.hpp"
#include "walks/walk.hpp"

namespace walks {

struct EmptyData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Ansatz { LinearN, QuadraticN, Constant };

const char* ansatz_name(Ansatz a);

struct FitResult {
  std::optional<BigRat> exact;  // present when the fitted ratio is rational
  std::string decimal;
};

/// Fit the constant of an ansatz to exact data points: the per-point
/// ratio value/ansatz(n), taken at the largest sampled n (the two-range
/// safe comparison is the error control, so the estimator stays simple
/// and reproducible). Needs at least 3 points.
FitResult fit_constant(const std::vector<std::pair<long, BigRat>>& data, Ansatz ansatz,
                       int precision);

/// Longest common prefix of two decimal strings, aligned at the decimal
/// point (plain character prefix). Empty result means no agreement.
std::string safe_digits(const std::string& x, const std::string& y);

/// One fitted constant of a theorem, with the per-range renderings that
/// produced the safe digits.
struct ConstantFit {
  std::string label;  // "mean", "variance", "m3", ...
  Ansatz ansatz = Ansatz::Constant;
  std::string fit1;
  std::string fit2;  // empty in single-range mode
  std::string safe;  // = fit1 in single-range mode
  std::optional<BigRat> exact1, exact2;
};

struct DataPoint {
  long n = 0;
  BigInt mass;
  BigRat mean;
  BigRat variance;
  bool degenerate = false;
  std::vector<BigRat> std_signed_squares;  // k = 3..M
};

struct AsymptoticTheorem {
  std::vector<Step2> steps;
  bool safe_mode = false;
  std::vector<ConstantFit> constants;
  std::vector<DataPoint> data_points;
};

struct Exclusion {
  std::vector<Step2> steps;
  std::string reason;
};

struct BookResult {
  std::vector<AsymptoticTheorem> theorems;
  std::vector<Exclusion> excluded;
};

struct BookConfig {
  StepSet2 steps;
  unsigned max_moment = 6;
  int k1 = 0, k2 = 0;
  std::optional<std::pair<int, int>> range2;  // safe mode when present
  int precision = 10;
  unsigned threads = 0;  // 0 = hardware concurrency

  BookConfig(StepSet2 s, unsigned m, int k1_, int k2_) : steps(std::move(s)), max_moment(m), k1(k1_), k2(k2_) {}
};

/// For each non-empty subset of the step set, compute moment reports
/// over the configured range(s) of diagonal endpoints, fit the ansatzes
/// (Cn for the mean, Cn^2 for the variance, C for standardized moments
/// 3..M), and emit a theorem; trivial subsets are excluded with a
/// recorded reason. With a second range, only inter-range agreeing
/// digits are kept.
BookResult book(const BookConfig& config);

}  // namespace walks
