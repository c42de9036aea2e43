#include "walks/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "walks/asymptotics.hpp"
#include "walks/closed_forms.hpp"
#include "walks/lattice_enum.hpp"
#include "walks/moments.hpp"
#include "walks/oracle.hpp"

namespace walks::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { json, csv, latex, text };

std::uint64_t oracle_guard_from_env() {
  if (const char* v = std::getenv("WALKBOOK_ORACLE_GUARD")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return kDefaultOracleGuard;
}

std::pair<int, int> parse_pair(const std::string& s, char sep, const std::string& what) {
  auto pos = s.find(sep);
  if (pos == std::string::npos) throw CLI::ValidationError(what, "expected two integers");
  return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
}

std::array<int, 3> parse_triple(const std::string& s, const std::string& what) {
  auto p1 = s.find(',');
  auto p2 = s.find(',', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw CLI::ValidationError(what, "expected three integers");
  return {std::stoi(s.substr(0, p1)), std::stoi(s.substr(p1 + 1, p2 - p1 - 1)),
          std::stoi(s.substr(p2 + 1))};
}

json coeff_strings(const ZPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

std::string rat_str(const BigRat& q) {
  return q.get_str();
}

std::string poly_latex(const ZPoly& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto cs = p.coeffs();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] == 0) continue;
    BigInt a = cs[i];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^{" << i << "}";
    first = false;
  }
  return os.str();
}

void emit_csv_row(std::ostream& out, const ZPoly& p) {
  auto cs = p.coeffs();
  if (cs.empty()) {
    out << "0\n";
    return;
  }
  for (size_t i = 0; i < cs.size(); ++i) out << (i ? "," : "") << cs[i].get_str();
  out << "\n";
}

struct StepsLabel {
  // Compact row label: single-digit steps render as concatenated
  // digit pairs {01, 10}; anything wider falls back to (dx,dy).
  static std::string of(const std::vector<Step2>& steps) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < steps.size(); ++i) {
      if (i) os << ", ";
      if (steps[i].dx < 10 && steps[i].dy < 10)
        os << steps[i].dx << steps[i].dy;
      else
        os << "(" << steps[i].dx << "," << steps[i].dy << ")";
    }
    os << "}";
    return os.str();
  }
};

json steps_json(const std::vector<Step2>& steps) {
  json arr = json::array();
  for (const auto& s : steps) arr.push_back(json::array({s.dx, s.dy}));
  return arr;
}

// ---- subcommand payloads ------------------------------------------------

struct PolyCmd {
  std::string steps;
  std::string endpoint;
  std::string stat = "a1";
  bool oracle = false;
};

struct Poly3Cmd {
  std::string steps;
  std::string endpoint;
  int region = 7;
  bool oracle = false;
};

struct MomentsCmd {
  std::string steps;
  std::string endpoint;
  unsigned max_moment = 6;
  std::string stat = "a1";
  int precision = 12;
};

struct BookCmd {
  std::string steps;
  unsigned max_moment = 6;
  std::string range;
  std::string range2;
  int precision = 10;
  unsigned threads = 0;
};

struct GfCmd {
  unsigned n = 0;
  long order = -1;
  size_t king_order = 0;
  bool at_one = false;
};

struct ArcsineCmd {
  unsigned n = 0;
};

struct GrandCmd {
  std::string steps;
  unsigned length = 0;
};

void emit_poly(std::ostream& out, Format fmt, const std::string& command, json inputs,
               const ZPoly& p) {
  switch (fmt) {
    case Format::json: {
      json j;
      j["command"] = command;
      j["inputs"] = std::move(inputs);
      j["results"]["coefficients"] = coeff_strings(p);
      j["results"]["degree"] = p.degree() ? json(*p.degree()) : json(nullptr);
      j["results"]["mass"] = p.at_one().get_str();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      emit_csv_row(out, p);
      break;
    case Format::latex:
      out << "$" << poly_latex(p) << "$\n";
      break;
    case Format::text:
      out << "F(t) = " << p.to_string() << "   (mass " << p.at_one().get_str() << ")\n";
      break;
  }
}

void emit_moments(std::ostream& out, Format fmt, json inputs, const MomentReport& r) {
  switch (fmt) {
    case Format::json: {
      json j;
      j["command"] = "moments";
      j["inputs"] = std::move(inputs);
      json& res = j["results"];
      res["mass"] = r.mass.get_str();
      res["mean"] = rat_str(r.mean);
      res["variance"] = rat_str(r.variance);
      res["degenerate"] = r.degenerate;
      json moments = json::array();
      for (const auto& m : r.std_moments) {
        json mj;
        mj["k"] = m.k;
        mj["signed_square"] = rat_str(m.signed_square);
        mj["decimal"] = m.decimal;
        moments.push_back(std::move(mj));
      }
      res["standardized_moments"] = std::move(moments);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      out << "statistic,value\n";
      out << "mass," << r.mass.get_str() << "\n";
      out << "mean," << rat_str(r.mean) << "\n";
      out << "variance," << rat_str(r.variance) << "\n";
      for (const auto& m : r.std_moments) out << "m" << m.k << "," << m.decimal << "\n";
      break;
    }
    case Format::latex: {
      out << "\\begin{tabular}{l l}\n\\hline\n";
      out << "mean & $" << rat_str(r.mean) << "$ \\\\\n";
      out << "variance & $" << rat_str(r.variance) << "$ \\\\\n";
      for (const auto& m : r.std_moments) out << "$m_{" << m.k << "}$ & " << m.decimal << " \\\\\n";
      out << "\\hline\n\\end{tabular}\n";
      break;
    }
    case Format::text: {
      out << "mass      " << r.mass.get_str() << "\n";
      out << "mean      " << rat_str(r.mean) << "\n";
      out << "variance  " << rat_str(r.variance) << "\n";
      if (r.degenerate) {
        out << "degenerate distribution (variance 0): standardized moments undefined\n";
      } else {
        for (const auto& m : r.std_moments)
          out << "m" << m.k << "        " << m.decimal << "  (signed square "
              << rat_str(m.signed_square) << ")\n";
      }
      break;
    }
  }
}

void emit_book(std::ostream& out, Format fmt, json inputs, const BookResult& res,
               unsigned max_moment) {
  switch (fmt) {
    case Format::json: {
      json j;
      j["command"] = "book";
      j["inputs"] = std::move(inputs);
      json thms = json::array();
      for (const auto& t : res.theorems) {
        json tj;
        tj["steps"] = steps_json(t.steps);
        tj["safe"] = t.safe_mode;
        json cs = json::array();
        for (const auto& c : t.constants) {
          json cj;
          cj["label"] = c.label;
          cj["ansatz"] = ansatz_name(c.ansatz);
          cj["fit_range1"] = c.fit1;
          if (t.safe_mode) cj["fit_range2"] = c.fit2;
          cj["safe"] = c.safe;
          cs.push_back(std::move(cj));
        }
        tj["constants"] = std::move(cs);
        json dps = json::array();
        for (const auto& d : t.data_points) {
          json dj;
          dj["n"] = d.n;
          dj["mass"] = d.mass.get_str();
          dj["mean"] = rat_str(d.mean);
          dj["variance"] = rat_str(d.variance);
          if (!d.degenerate) {
            json sq = json::array();
            for (const auto& s : d.std_signed_squares) sq.push_back(rat_str(s));
            dj["std_signed_squares"] = std::move(sq);
          }
          dps.push_back(std::move(dj));
        }
        tj["data_points"] = std::move(dps);
        thms.push_back(std::move(tj));
      }
      j["results"]["theorems"] = std::move(thms);
      json exc = json::array();
      for (const auto& e : res.excluded) {
        json ej;
        ej["steps"] = steps_json(e.steps);
        ej["reason"] = e.reason;
        exc.push_back(std::move(ej));
      }
      j["results"]["excluded"] = std::move(exc);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      out << "steps";
      out << ",mean,variance";
      for (unsigned k = 3; k <= max_moment; ++k) out << ",m" << k;
      out << "\n";
      for (const auto& t : res.theorems) {
        out << "\"" << StepsLabel::of(t.steps) << "\"";
        for (const auto& c : t.constants) out << "," << c.safe;
        out << "\n";
      }
      break;
    }
    case Format::latex: {
      out << "\\begin{tabular}{c";
      for (unsigned k = 0; k < max_moment; ++k) out << " c";
      out << "}\n\\hline\nSteps";
      for (unsigned k = 1; k <= max_moment; ++k) out << " & " << k;
      out << "\n\\\\\n\\hline\n";
      for (const auto& t : res.theorems) {
        out << "$\\{";
        for (size_t i = 0; i < t.steps.size(); ++i) {
          if (i) out << ", ";
          out << t.steps[i].dx << t.steps[i].dy;
        }
        out << "\\}$";
        for (const auto& c : t.constants) {
          out << " & $" << c.safe;
          if (c.ansatz == Ansatz::LinearN) out << "n";
          if (c.ansatz == Ansatz::QuadraticN) out << "n^2";
          out << "$";
        }
        out << "\n\\\\\n";
      }
      out << "\\end{tabular}\n";
      break;
    }
    case Format::text: {
      for (const auto& t : res.theorems) {
        out << "Theorem (steps " << StepsLabel::of(t.steps) << ").\n";
        out << "  As n grows, over walks ending at (n,n):\n";
        for (const auto& c : t.constants) {
          out << "    " << c.label << " ~ " << c.safe;
          if (c.ansatz == Ansatz::LinearN) out << " * n";
          if (c.ansatz == Ansatz::QuadraticN) out << " * n^2";
          if (t.safe_mode) out << "   [range fits " << c.fit1 << " | " << c.fit2 << "]";
          out << "\n";
        }
        out << "\n";
      }
      out << res.theorems.size() << " theorems, " << res.excluded.size() << " subsets excluded:\n";
      for (const auto& e : res.excluded)
        out << "  " << StepsLabel::of(e.steps) << ": " << e.reason << "\n";
      break;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact enumeration and experimental asymptotics for lattice walks"};
  app.require_subcommand(1);
  app.fallthrough();  // let --format/--timing appear after the subcommand

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
  bool timing = false;
  app.add_flag("--timing", timing, "report wall time to stderr");

  PolyCmd poly_cmd;
  auto* poly = app.add_subcommand("poly", "statistic polynomial over walks to an endpoint");
  poly->add_option("--steps", poly_cmd.steps, "step set, e.g. \"1,0;0,1\"")->required();
  poly->add_option("--endpoint", poly_cmd.endpoint, "endpoint a,b")->required();
  poly->add_option("--stat", poly_cmd.stat, "statistic: a1|a2 (a3|a4 need --oracle)");
  poly->add_flag("--oracle", poly_cmd.oracle, "use the brute-force oracle");

  Poly3Cmd poly3_cmd;
  auto* poly3 = app.add_subcommand("poly3", "region-visit polynomial for 3-D walks");
  poly3->add_option("--steps", poly3_cmd.steps, "3-D step set, e.g. \"1,0,0;0,1,0;0,0,1\"")->required();
  poly3->add_option("--endpoint", poly3_cmd.endpoint, "endpoint a,b,c")->required();
  poly3->add_option("--region", poly3_cmd.region, "region index 1..7")
      ->required()
      ->check(CLI::Range(1, 7));
  poly3->add_flag("--oracle", poly3_cmd.oracle, "use the brute-force oracle");

  MomentsCmd moments_cmd;
  auto* moments = app.add_subcommand("moments", "exact moments of a statistic at one endpoint");
  moments->add_option("--steps", moments_cmd.steps)->required();
  moments->add_option("--endpoint", moments_cmd.endpoint)->required();
  moments->add_option("--max-moment", moments_cmd.max_moment, "highest standardized moment");
  moments->add_option("--stat", moments_cmd.stat, "statistic: a1|a2");
  moments->add_option("--precision", moments_cmd.precision, "decimal digits");

  BookCmd book_cmd;
  auto* book_cmd_app = app.add_subcommand("book", "asymptotic storybook over all step subsets");
  book_cmd_app->add_option("--steps", book_cmd.steps)->required();
  book_cmd_app->add_option("--max-moment", book_cmd.max_moment);
  book_cmd_app->add_option("--range", book_cmd.range, "n range K1:K2")->required();
  book_cmd_app->add_option("--range2", book_cmd.range2, "second range K3:K4 (safe mode)");
  book_cmd_app->add_option("--precision", book_cmd.precision);
  book_cmd_app->add_option("--threads", book_cmd.threads, "worker threads (0 = auto)");

  GfCmd gf_cf, gf_a2, gf_king;
  auto* gf = app.add_subcommand("gf", "closed-form generating function coefficients");
  gf->require_subcommand(1);
  auto* cf = gf->add_subcommand("chung-feller", "z^n coefficient of the Chung-Feller GF");
  cf->add_option("--n", gf_cf.n)->required();
  cf->add_option("--order", gf_cf.order, "series order (default n)");
  auto* a2gf = gf->add_subcommand("a2", "z^n coefficient of the break-even GF");
  a2gf->add_option("--n", gf_a2.n)->required();
  a2gf->add_option("--order", gf_a2.order, "series order (default n)");
  auto* king = gf->add_subcommand("king", "forward King walk series");
  king->add_option("--order", gf_king.king_order, "truncation order")->required();
  king->add_flag("--t1", gf_king.at_one, "evaluate at t=1 (diagonal counts)");

  ArcsineCmd arcsine_cmd;
  auto* arcsine = app.add_subcommand("arcsine", "discrete arcsine counts for half-length n");
  arcsine->add_option("--n", arcsine_cmd.n)->required();

  GrandCmd grand_cmd;
  auto* oracle_app = app.add_subcommand("oracle", "brute-force enumerations");
  oracle_app->require_subcommand(1);
  auto* grand = oracle_app->add_subcommand("grand", "joint (a1,a2,a3,a4) distribution");
  grand->add_option("--steps", grand_cmd.steps)->required();
  grand->add_option("--length", grand_cmd.length)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  Format fmt = Format::text;
  if (format_name == "json") fmt = Format::json;
  else if (format_name == "csv") fmt = Format::csv;
  else if (format_name == "latex") fmt = Format::latex;

  const std::uint64_t guard = oracle_guard_from_env();
  auto started = std::chrono::steady_clock::now();

  try {
    if (*poly) {
      auto [a, b] = parse_pair(poly_cmd.endpoint, ',', "--endpoint");
      StepSet2 s = parse_step_set2(poly_cmd.steps);
      Stat stat = parse_stat(poly_cmd.stat);
      ZPoly p;
      if (poly_cmd.oracle) {
        p = oracle_endpoint_poly(s, a, b, stat, guard);
      } else {
        if (stat == Stat::a3 || stat == Stat::a4)
          throw CLI::ValidationError("--stat", "a3/a4 have no forward recursion; pass --oracle");
        p = endpoint_poly_2d(s, a, b, stat);
      }
      json inputs{{"steps", s.to_string()},
                  {"endpoint", json::array({a, b})},
                  {"stat", stat_name(stat)},
                  {"oracle", poly_cmd.oracle}};
      emit_poly(out, fmt, "poly", std::move(inputs), p);
    } else if (*poly3) {
      auto t = parse_triple(poly3_cmd.endpoint, "--endpoint");
      StepSet3 s = parse_step_set3(poly3_cmd.steps);
      ZPoly p = poly3_cmd.oracle
                    ? oracle_endpoint_poly_3d(s, t[0], t[1], t[2], poly3_cmd.region, guard)
                    : endpoint_poly_3d(s, t[0], t[1], t[2], poly3_cmd.region);
      json inputs{{"steps", s.to_string()},
                  {"endpoint", json::array({t[0], t[1], t[2]})},
                  {"region", poly3_cmd.region},
                  {"region_order", region_name(poly3_cmd.region)},
                  {"oracle", poly3_cmd.oracle}};
      emit_poly(out, fmt, "poly3", std::move(inputs), p);
    } else if (*moments) {
      auto [a, b] = parse_pair(moments_cmd.endpoint, ',', "--endpoint");
      StepSet2 s = parse_step_set2(moments_cmd.steps);
      Stat stat = parse_stat(moments_cmd.stat);
      ZPoly p = endpoint_poly_2d(s, a, b, stat);
      MomentReport r = moment_report(p, moments_cmd.max_moment, moments_cmd.precision,
                                     a == b ? a : -1);
      json inputs{{"steps", s.to_string()},
                  {"endpoint", json::array({a, b})},
                  {"stat", stat_name(stat)},
                  {"max_moment", moments_cmd.max_moment}};
      emit_moments(out, fmt, std::move(inputs), r);
    } else if (*book_cmd_app) {
      auto [k1, k2] = parse_pair(book_cmd.range, ':', "--range");
      BookConfig config(parse_step_set2(book_cmd.steps), book_cmd.max_moment, k1, k2);
      if (!book_cmd.range2.empty()) config.range2 = parse_pair(book_cmd.range2, ':', "--range2");
      config.precision = book_cmd.precision;
      config.threads = book_cmd.threads;
      BookResult res = book(config);
      json inputs{{"steps", config.steps.to_string()},
                  {"max_moment", config.max_moment},
                  {"range", json::array({k1, k2})}};
      if (config.range2)
        inputs["range2"] = json::array({config.range2->first, config.range2->second});
      inputs["precision"] = config.precision;
      emit_book(out, fmt, std::move(inputs), res, config.max_moment);
    } else if (*cf) {
      size_t order = gf_cf.order >= 0 ? static_cast<size_t>(gf_cf.order) : gf_cf.n;
      ZPoly p = chung_feller_gf_coeff(gf_cf.n, order);
      json inputs{{"n", gf_cf.n}, {"order", order}};
      emit_poly(out, fmt, "gf chung-feller", std::move(inputs), p);
    } else if (*a2gf) {
      size_t order = gf_a2.order >= 0 ? static_cast<size_t>(gf_a2.order) : gf_a2.n;
      ZPoly p = a2_gf_coeff(gf_a2.n, order);
      json inputs{{"n", gf_a2.n}, {"order", order}};
      emit_poly(out, fmt, "gf a2", std::move(inputs), p);
    } else if (*king) {
      KingSystem sys = solve_king_system(gf_king.king_order);
      const TruncatedSeries& series = gf_king.at_one ? sys.f_k.at_t_one() : sys.f_k;
      json inputs{{"order", gf_king.king_order}, {"t1", gf_king.at_one}};
      switch (fmt) {
        case Format::json: {
          json j;
          j["command"] = "gf king";
          j["inputs"] = std::move(inputs);
          json arr = json::array();
          for (size_t k = 0; k <= sys.f_k.order(); ++k) {
            auto zp = to_integer(series.coeff(k));
            arr.push_back(zp ? json(coeff_strings(*zp)) : json(series.coeff(k).to_string()));
          }
          j["results"]["f_k"] = std::move(arr);
          out << j.dump(2) << "\n";
          break;
        }
        default:
          for (size_t k = 0; k <= series.order(); ++k)
            out << "[z^" << k << "] " << series.coeff(k).to_string() << "\n";
          break;
      }
    } else if (*arcsine) {
      std::vector<BigInt> counts;
      for (unsigned k = 0; k <= arcsine_cmd.n; ++k) counts.push_back(arcsine_count(arcsine_cmd.n, k));
      switch (fmt) {
        case Format::json: {
          json j;
          j["command"] = "arcsine";
          j["inputs"] = {{"n", arcsine_cmd.n}};
          json arr = json::array();
          for (const auto& c : counts) arr.push_back(c.get_str());
          j["results"]["counts"] = std::move(arr);
          out << j.dump(2) << "\n";
          break;
        }
        case Format::csv: {
          for (size_t i = 0; i < counts.size(); ++i) out << (i ? "," : "") << counts[i].get_str();
          out << "\n";
          break;
        }
        default:
          for (unsigned k = 0; k < counts.size(); ++k)
            out << "a1 = " << 2 * k << ": " << counts[k].get_str() << "\n";
          break;
      }
    } else if (*grand) {
      StepSet2 s = parse_step_set2(grand_cmd.steps);
      GrandPolynomial g = oracle_grand_poly(s, grand_cmd.length, guard);
      switch (fmt) {
        case Format::json: {
          json j;
          j["command"] = "oracle grand";
          j["inputs"] = {{"steps", s.to_string()}, {"length", grand_cmd.length}};
          json terms = json::array();
          for (const auto& [e, c] : g.terms)
            terms.push_back({{"exponents", json::array({e[0], e[1], e[2], e[3]})},
                             {"count", c.get_str()}});
          j["results"]["terms"] = std::move(terms);
          j["results"]["total"] = g.total_mass().get_str();
          out << j.dump(2) << "\n";
          break;
        }
        case Format::csv: {
          out << "a1,a2,a3,a4,count\n";
          for (const auto& [e, c] : g.terms)
            out << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << "," << c.get_str() << "\n";
          break;
        }
        default:
          for (const auto& [e, c] : g.terms)
            out << "t1^" << e[0] << " t2^" << e[1] << " t3^" << e[2] << " t4^" << e[3] << " : "
                << c.get_str() << "\n";
          out << "total " << g.total_mass().get_str() << "\n";
          break;
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const TooLarge& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }

  if (timing) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    err << "elapsed " << elapsed.count() << " ms\n";
  }
  return 0;
}

}  // namespace walks::cli
