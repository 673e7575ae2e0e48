#include "coulomb/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "coulomb/acceptance.hpp"
#include "coulomb/error.hpp"
#include "coulomb/geom.hpp"
#include "coulomb/radii.hpp"
#include "coulomb/rayleigh.hpp"
#include "coulomb/real_axis.hpp"
#include "coulomb/series.hpp"
#include "coulomb/zeros.hpp"

namespace coulomb::cli {

using nlohmann::json;

namespace {

// Root abscissae are refined to this unless --tolerance asks for more; the
// tolerance flag otherwise sets the series truncation target.
constexpr double kAbscissaTolerance = 1e-12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string L = "0";
  std::string eta = "0";
  std::string beta = "0";
  std::string kind = "g";
  std::string property = "starlike";
  std::string form = "ratio";
  std::string output = "json";
  bool unsafe = false;
  double tolerance = kDefaultSeriesTolerance;
  std::optional<std::size_t> n_max;
  bool verbose = false;

  std::string z = "0.5";
  std::string target = "F";
  std::size_t count = 5;
  std::size_t negative = 0;
  std::string method = "both";
  int m = 2;
  bool disk = false;
  std::size_t grid_n = 64;
  double radius_cap = 0.99;
};

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_reals(const std::string& text, const char* flag) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(parse_double(item));
  if (out.empty()) throw UsageError(std::string(flag) + " needs at least one value");
  return out;
}

std::vector<std::complex<double>> parse_complexes(const std::string& text, const char* flag) {
  std::vector<std::complex<double>> out;
  for (const auto& item : split_list(text)) out.push_back(parse_complex(item));
  if (out.empty()) throw UsageError(std::string(flag) + " needs at least one value");
  return out;
}

FunctionKind parse_kind(const std::string& s) {
  if (s == "f") return FunctionKind::f;
  if (s == "g") return FunctionKind::g;
  throw UsageError("--kind must be f or g");
}

Property parse_property(const std::string& s) {
  if (s == "starlike") return Property::starlike;
  if (s == "convex") return Property::convex;
  if (s == "univalent") return Property::univalent;
  throw UsageError("--property must be starlike, convex or univalent");
}

ZeroTarget parse_target(const std::string& s) {
  if (s == "F") return ZeroTarget::F;
  if (s == "F_prime" || s == "Fp") return ZeroTarget::F_prime;
  if (s == "g_prime" || s == "gp") return ZeroTarget::g_prime;
  throw UsageError("--target must be F, F_prime or g_prime");
}

CoulombParams make_params(double L, double eta, bool unsafe_flag) {
  return unsafe_flag ? CoulombParams(L, eta, unsafe) : CoulombParams(L, eta);
}

json complex_json(std::complex<double> c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json skeleton(const std::string& command, json params) {
  json r;
  r["command"] = command;
  r["params"] = std::move(params);
  r["result"] = json{{"value", nullptr},
                     {"bracket", nullptr},
                     {"residual", nullptr},
                     {"domain_cap", nullptr},
                     {"method_flags", json::array()}};
  r["warnings"] = json::array();
  return r;
}

json real_params(double L, double eta, std::optional<double> beta) {
  return json{{"L", L}, {"eta", eta}, {"beta", beta ? json(*beta) : json(nullptr)}};
}

void add_unsafe_warning(json& report, const CoulombParams& p) {
  if (p.unsafe()) report["warnings"].push_back("no-certificate");
}

std::size_t resolve_n_max(const Config& cfg) {
  std::size_t n = kDefaultNMax;
  if (const char* env = std::getenv("COULOMB_RADII_NMAX"); env != nullptr && *env != '\0') {
    const double v = parse_double(env);
    if (!(v >= 1.0 && v <= static_cast<double>(kMaxNMax)) || v != std::floor(v)) {
      throw UsageError("COULOMB_RADII_NMAX must be an integer in [1, " + std::to_string(kMaxNMax) + "]");
    }
    n = static_cast<std::size_t>(v);
  }
  if (cfg.n_max) n = *cfg.n_max;
  return n;
}

// Evaluates `task` for every point, several at a time, and returns the
// reports in point order. The first failing point in that order decides the
// exception that escapes.
template <class Point>
std::vector<json> sweep(const std::vector<Point>& points, const std::function<json(const Point&)>& task) {
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<json> out;
  out.reserve(points.size());
  for (std::size_t start = 0; start < points.size(); start += width) {
    const std::size_t stop = std::min(points.size(), start + width);
    std::vector<std::future<json>> batch;
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, task, std::cref(points[i])));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

struct RealPoint {
  double L;
  double eta;
  double beta;
};

std::vector<RealPoint> real_grid(const Config& cfg, bool with_beta) {
  const auto Ls = parse_reals(cfg.L, "--L");
  const auto etas = parse_reals(cfg.eta, "--eta");
  const auto betas = with_beta ? parse_reals(cfg.beta, "--beta") : std::vector<double>{0.0};
  std::vector<RealPoint> grid;
  for (double L : Ls)
    for (double eta : etas)
      for (double beta : betas) grid.push_back({L, eta, beta});
  return grid;
}

// ---------------------------------------------------------------- commands

json radius_report(const Config& cfg, const RealPoint& pt, std::size_t n_max) {
  const auto params = make_params(pt.L, pt.eta, cfg.unsafe);
  const FunctionKind kind = parse_kind(cfg.kind);
  const Property property = parse_property(cfg.property);
  RadiusOptions options;
  options.abscissa_tol = std::min(kAbscissaTolerance, cfg.tolerance);
  options.n_max = n_max;
  if (cfg.form == "polynomial") {
    options.form = EquationForm::polynomial;
  } else if (cfg.form != "ratio") {
    throw UsageError("--form must be ratio or polynomial");
  }
  const double beta = property == Property::univalent ? 0.0 : pt.beta;
  const auto r = solve_radius(RadiusQuery{params, kind, property, beta}, options);

  json report = skeleton("radius", real_params(pt.L, pt.eta, beta));
  auto& res = report["result"];
  res["value"] = r.value;
  res["bracket"] = json::array({r.lo, r.hi});
  res["residual"] = number_or_null(r.residual);
  res["domain_cap"] = r.domain_cap;
  res["method_flags"] = r.method_flags;
  res["kind"] = to_string(kind);
  res["property"] = to_string(property);
  res["certified"] = r.certified;
  res["iterations"] = r.iterations;
  add_unsafe_warning(report, params);
  return report;
}

json zeros_report(const Config& cfg, const RealPoint& pt) {
  const auto params = make_params(pt.L, pt.eta, cfg.unsafe);
  const ZeroTarget target = parse_target(cfg.target);
  ZeroOptions options;
  options.refine_tol = std::min(kAbscissaTolerance, cfg.tolerance);
  const auto zs = find_zeros(params, target, cfg.count, cfg.negative, options);

  json report = skeleton("zeros", real_params(pt.L, pt.eta, std::nullopt));
  auto& res = report["result"];
  const auto side = [](const std::vector<Zero>& zeros) {
    json arr = json::array();
    for (const auto& z : zeros) {
      arr.push_back(json{{"x", z.x}, {"bracket", json::array({z.lo, z.hi})}, {"residual", z.residual}});
    }
    return arr;
  };
  res["target"] = to_string(target);
  res["positive"] = side(zs.positive);
  res["negative"] = side(zs.negative);
  res["truncated"] = zs.truncated;
  if (!zs.positive.empty()) {
    res["value"] = zs.positive.front().x;
    res["bracket"] = json::array({zs.positive.front().lo, zs.positive.front().hi});
    res["residual"] = zs.positive.front().residual;
  }
  res["method_flags"] = json::array({"scan-bisection"});
  if (zs.truncated) report["warnings"].push_back("fewer zeros than requested inside the scan horizon");
  add_unsafe_warning(report, params);
  return report;
}

json bounds_entry(const EulerRayleighBounds& b) {
  return json{{"lower", b.lower},
              {"upper", b.upper ? json(*b.upper) : json(nullptr)},
              {"s_m", b.s_m},
              {"s_m1", b.s_m1},
              {"family", to_string(b.family)}};
}

json bounds_report(const Config& cfg, const RealPoint& pt) {
  const auto params = make_params(pt.L, pt.eta, cfg.unsafe);
  const FunctionKind kind = parse_kind(cfg.kind);
  const bool closed = cfg.method == "closed" || cfg.method == "closed_form" || cfg.method == "both";
  const bool extracted = cfg.method == "extracted" || cfg.method == "both";
  if (!closed && !extracted) throw UsageError("--method must be closed, extracted or both");

  json report = skeleton("bounds", real_params(pt.L, pt.eta, std::nullopt));
  auto& res = report["result"];
  res["kind"] = to_string(kind);
  res["m"] = cfg.m;
  json table = json::object();
  std::optional<EulerRayleighBounds> primary;
  if (extracted) {
    const auto b = euler_rayleigh_bounds(params, kind, cfg.m, SumMethod::extracted);
    table["extracted"] = bounds_entry(b);
    primary = b;
  }
  if (closed) {
    const auto b = euler_rayleigh_bounds(params, kind, cfg.m, SumMethod::closed_form);
    table["closed_form"] = bounds_entry(b);
    if (!primary) primary = b;
    const auto s = sums(params, family_for(kind), SumMethod::closed_form, 3);
    json disc = json::object();
    for (const auto& [m, value] : s.discrepancies) {
      disc[std::to_string(m)] = json{{"printed", s.values.at(m)}, {"extracted", value}};
      report["warnings"].push_back("printed " + to_string(s.family) + "_" + std::to_string(m) +
                                   " disagrees with extraction; extracted bounds are authoritative");
    }
    res["discrepancies"] = disc;
  }
  res["bounds"] = table;
  res["value"] = primary->lower;
  res["bracket"] = json::array({primary->lower, primary->upper ? json(*primary->upper) : json(nullptr)});
  res["method_flags"] = json::array({std::string("euler-rayleigh-") + (extracted ? "extracted" : "closed_form")});
  if (!primary->upper) report["warnings"].push_back("upper bound undefined: S_{m+1} <= 0");
  if (!(pt.eta < 0.0)) report["warnings"].push_back("bounds are proved for eta < 0 only");
  add_unsafe_warning(report, params);
  return report;
}

json eval_report(const Config& cfg, double L, double eta, std::complex<double> z, std::size_t n_max) {
  const auto params = make_params(L, eta, cfg.unsafe);
  json report = skeleton("eval", real_params(L, eta, std::nullopt));
  auto& res = report["result"];
  res["z"] = complex_json(z);
  if (z.imag() == 0.0) {
    const double x = z.real();
    const RealAxisEvaluator ev(params, std::max(1.0, std::abs(x)) * (1.0 + 1e-9), n_max);
    const auto v = ev.eval(x);
    res["value"] = v.p0;
    res["P"] = v.p0;
    res["dP"] = v.p1;
    res["d2P"] = v.p2;
    res["truncation_terms"] = v.truncation_terms;
    json ratios = json::object();
    for (auto kind : {FunctionKind::f, FunctionKind::g}) {
      const double star = star_ratio_from(v, L, kind, x);
      const double conv = conv_ratio_from(v, L, kind, x);
      ratios[to_string(kind)] = json{{"star", number_or_null(star)}, {"conv", number_or_null(conv)}};
      if (!std::isfinite(star) || !std::isfinite(conv)) {
        report["warnings"].push_back("ratio of " + to_string(kind) + " has a pole at z");
      }
    }
    res["ratios"] = ratios;
    res["method_flags"] = json::array({std::abs(x) <= RealAxisEvaluator::kSeriesReach ? "wide-series" : "ode-continuation"});
  } else {
    const ComplexCoulombSeries series(ComplexParams{L, eta}, n_max, cfg.tolerance);
    const auto v = series.eval(z);
    res["value"] = complex_json(v.p0);
    res["P"] = complex_json(v.p0);
    res["dP"] = complex_json(v.p1);
    res["d2P"] = complex_json(v.p2);
    res["truncation_terms"] = v.truncation_terms;
    res["residual"] = v.tail_estimate;
    res["method_flags"] = json::array({"complex-series"});
  }
  add_unsafe_warning(report, params);
  return report;
}

struct ComplexPoint {
  std::complex<double> L;
  std::complex<double> eta;
};

json region_report(const Config& cfg, const ComplexPoint& pt) {
  json report = skeleton("region", json{{"L", complex_json(pt.L)}, {"eta", complex_json(pt.eta)}, {"beta", nullptr}});
  const auto r = region_check(pt.L, pt.eta);
  auto& res = report["result"];
  res["re_positive_ok"] = r.re_positive_ok;
  res["starlike_ok"] = r.starlike_ok;
  res["margins"] = json{{"re_L_minus_half", r.margins.re_L_minus_half},
                        {"im_L_minus_one", r.margins.im_L_minus_one},
                        {"square_gap", r.margins.square_gap},
                        {"starlike_slack", r.margins.starlike_slack}};
  res["method_flags"] = json::array({"inequality"});
  if (cfg.disk) {
    json disk = json::object();
    for (auto [q, name] : {std::pair{DiskQuantity::g, "g"}, std::pair{DiskQuantity::zgpg, "zgpg"}}) {
      const auto m = disk_min_real(pt.L, pt.eta, q, cfg.grid_n, cfg.radius_cap);
      disk[name] = json{{"min_real", m.min_real},
                        {"argmin", complex_json(m.argmin)},
                        {"points", m.points},
                        {"ode_residual", m.ode_residual}};
    }
    res["disk"] = disk;
    res["method_flags"].push_back("disk-grid");
    report["warnings"].push_back("disk minima are grid evidence, not a proof");
  }
  return report;
}

json verify_report(bool& ok) {
  const auto results = acceptance::run_all();
  ok = acceptance::suite_ok(results);
  json report = skeleton("verify", json{{"L", nullptr}, {"eta", nullptr}, {"beta", nullptr}});
  auto& res = report["result"];
  json criteria = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    criteria.push_back(
        json{{"id", r.id}, {"title", r.title}, {"status", acceptance::status_label(r)}, {"notes", r.notes}});
    if (!r.passed && r.known_unattainable) {
      report["warnings"].push_back("criterion " + std::to_string(r.id) + " fails as stated; see notes");
    }
  }
  res["criteria"] = criteria;
  res["value"] = passed;
  res["method_flags"] = json::array({"acceptance-suite"});
  return report;
}

// ---------------------------------------------------------------- output

std::string scalar_text(const json& v, int precision) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) {
    char buf[40];
    if (precision <= 0) {
      // Shortest text that round-trips.
      const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
      return std::string(buf, res.ptr);
    }
    std::snprintf(buf, sizeof buf, "%.*g", precision, v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("re") && v.contains("im")) {
    const double im = v["im"].get<double>();
    return scalar_text(v["re"], precision) + (std::signbit(im) ? "-" : "+") + scalar_text(json(std::abs(im)), precision) +
           "i";
  }
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ";") + scalar_text(e, precision);
    return s;
  }
  return v.dump();
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;
};

json bracket_end(const json& res, std::size_t i) {
  return res["bracket"].is_array() ? res["bracket"][i] : json(nullptr);
}

Table tabulate(const std::string& command, const std::vector<json>& reports) {
  Table t;
  if (command == "radius") {
    t.header = {"L", "eta", "beta", "kind", "property", "value", "lo", "hi", "residual", "domain_cap", "method_flags",
                "warnings"};
    for (const auto& r : reports) {
      const auto& res = r["result"];
      t.rows.push_back({r["params"]["L"], r["params"]["eta"], r["params"]["beta"], res["kind"], res["property"],
                        res["value"], bracket_end(res, 0), bracket_end(res, 1), res["residual"], res["domain_cap"],
                        res["method_flags"], r["warnings"]});
    }
  } else if (command == "zeros") {
    t.header = {"L", "eta", "target", "side", "index", "x", "lo", "hi", "residual"};
    for (const auto& r : reports) {
      const auto& res = r["result"];
      for (const char* side : {"positive", "negative"}) {
        std::size_t i = 0;
        for (const auto& z : res[side]) {
          t.rows.push_back({r["params"]["L"], r["params"]["eta"], res["target"], side, ++i, z["x"], z["bracket"][0],
                            z["bracket"][1], z["residual"]});
        }
      }
    }
  } else if (command == "bounds") {
    t.header = {"L", "eta", "kind", "method", "m", "s_m", "s_m1", "lower", "upper"};
    for (const auto& r : reports) {
      const auto& res = r["result"];
      for (const auto& [method, b] : res["bounds"].items()) {
        t.rows.push_back({r["params"]["L"], r["params"]["eta"], res["kind"], method, res["m"], b["s_m"], b["s_m1"],
                          b["lower"], b["upper"]});
      }
    }
  } else if (command == "eval") {
    t.header = {"L", "eta", "z", "P", "dP", "d2P", "star_f", "star_g", "conv_f", "conv_g"};
    for (const auto& r : reports) {
      const auto& res = r["result"];
      const bool real = res.contains("ratios");
      const auto ratio = [&](const char* kind, const char* which) {
        return real ? res["ratios"][kind][which] : json(nullptr);
      };
      t.rows.push_back({r["params"]["L"], r["params"]["eta"], res["z"], res["P"], res["dP"], res["d2P"],
                        ratio("f", "star"), ratio("g", "star"), ratio("f", "conv"), ratio("g", "conv")});
    }
  } else if (command == "region") {
    t.header = {"L", "eta", "re_positive_ok", "starlike_ok", "re_L_minus_half", "im_L_minus_one", "square_gap",
                "starlike_slack", "disk_min_re_g", "disk_min_re_zgpg"};
    for (const auto& r : reports) {
      const auto& res = r["result"];
      const auto& m = res["margins"];
      const bool disk = res.contains("disk");
      t.rows.push_back({r["params"]["L"], r["params"]["eta"], res["re_positive_ok"], res["starlike_ok"],
                        m["re_L_minus_half"], m["im_L_minus_one"], m["square_gap"], m["starlike_slack"],
                        disk ? res["disk"]["g"]["min_real"] : json(nullptr),
                        disk ? res["disk"]["zgpg"]["min_real"] : json(nullptr)});
    }
  } else if (command == "verify") {
    t.header = {"id", "status", "title"};
    for (const auto& r : reports) {
      for (const auto& c : r["result"]["criteria"]) t.rows.push_back({c["id"], c["status"], c["title"]});
    }
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(scalar_text(row[i], 0));
    out << '\n';
  }
}

void write_table(std::ostream& out, const Table& t) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back(t.header);
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (const auto& v : row) line.push_back(v.is_null() ? "-" : scalar_text(v, 12));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(t.header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << text << '\n';
  }
}

void emit(std::ostream& out, const Config& cfg, const std::string& command, const std::vector<json>& reports) {
  if (cfg.output == "json") {
    out << (reports.size() == 1 ? reports.front() : json(reports)).dump(2) << '\n';
    return;
  }
  const Table t = tabulate(command, reports);
  if (cfg.output == "csv") {
    write_csv(out, t);
  } else {
    write_table(out, t);
    if (command == "verify") {
      for (const auto& c : reports.front()["result"]["criteria"]) {
        for (const auto& note : c["notes"]) out << "  [" << c["id"].get<int>() << "] " << note.get<std::string>() << '\n';
      }
    }
    for (const auto& r : reports) {
      for (const auto& w : r["warnings"]) out << "warning: " << w.get<std::string>() << '\n';
    }
  }
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--L", cfg.L, "order L (comma list sweeps)");
  sub->add_option("--eta", cfg.eta, "Sommerfeld parameter eta (comma list sweeps)");
  sub->add_option("--output", cfg.output, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_flag("--unsafe", cfg.unsafe, "allow parameters outside L > -1, eta <= 0 (no certificate)");
  sub->add_option("--tolerance", cfg.tolerance, "series and abscissa tolerance")->check(CLI::Range(1e-14, 1e-4));
  sub->add_option("--n-max", cfg.n_max, "initial coefficient count (env COULOMB_RADII_NMAX)")
      ->check(CLI::Range(std::size_t{1}, kMaxNMax));
  sub->add_flag("--verbose", cfg.verbose, "runtime metadata on stderr");
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, item.find_last_not_of(" \t") - b + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::complex<double> parse_complex(const std::string& text) {
  if (text.empty()) throw UsageError("empty complex value");
  if (text.back() != 'i' && text.back() != 'j') return {parse_double(text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_double(re), parse_double(im)};
}

std::vector<std::string> validate_report(const json& report) {
  std::vector<std::string> problems;
  if (report.is_array()) {
    for (std::size_t i = 0; i < report.size(); ++i) {
      for (auto& p : validate_report(report[i])) problems.push_back("[" + std::to_string(i) + "] " + p);
    }
    return problems;
  }
  if (!report.is_object()) return {"report is not an object"};
  const auto scalar_like = [](const json& v) {
    return v.is_null() || v.is_number() || (v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im") &&
                                            v["re"].is_number() && v["im"].is_number());
  };
  if (!report.contains("command") || !report["command"].is_string()) problems.push_back("command missing");
  if (!report.contains("params") || !report["params"].is_object()) {
    problems.push_back("params missing");
  } else {
    for (const char* key : {"L", "eta", "beta"}) {
      if (!report["params"].contains(key) || !scalar_like(report["params"][key])) {
        problems.push_back(std::string("params.") + key + " missing or not a scalar");
      }
    }
  }
  if (!report.contains("result") || !report["result"].is_object()) {
    problems.push_back("result missing");
  } else {
    const auto& res = report["result"];
    for (const char* key : {"value", "residual", "domain_cap"}) {
      if (!res.contains(key) || !scalar_like(res[key])) problems.push_back(std::string("result.") + key + " invalid");
    }
    if (!res.contains("bracket") ||
        !(res["bracket"].is_null() || (res["bracket"].is_array() && res["bracket"].size() == 2 &&
                                       scalar_like(res["bracket"][0]) && scalar_like(res["bracket"][1])))) {
      problems.push_back("result.bracket must be null or [lo, hi]");
    }
    if (!res.contains("method_flags") || !res["method_flags"].is_array() ||
        !std::all_of(res["method_flags"].begin(), res["method_flags"].end(), [](const json& f) { return f.is_string(); })) {
      problems.push_back("result.method_flags must be an array of strings");
    }
  }
  if (!report.contains("warnings") || !report["warnings"].is_array() ||
      !std::all_of(report["warnings"].begin(), report["warnings"].end(), [](const json& w) { return w.is_string(); })) {
    problems.push_back("warnings must be an array of strings");
  }
  return problems;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Radii of starlikeness, convexity and univalence for normalized regular Coulomb wave functions"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "P, P', P'' and the defining ratios at points z");
  add_common(eval, cfg);
  eval->add_option("--z", cfg.z, "evaluation points, real or complex (comma list)");

  auto* zeros = app.add_subcommand("zeros", "real zeros of F, F' or g'");
  add_common(zeros, cfg);
  zeros->add_option("--target", cfg.target, "F, F_prime or g_prime");
  zeros->add_option("--count", cfg.count, "positive zeros wanted");
  zeros->add_option("--negative", cfg.negative, "negative zeros wanted");

  auto* radius = app.add_subcommand("radius", "radius of starlikeness, convexity or univalence");
  add_common(radius, cfg);
  radius->add_option("--kind", cfg.kind, "f or g")->check(CLI::IsMember({"f", "g"}));
  radius->add_option("--property", cfg.property, "starlike, convex or univalent")
      ->check(CLI::IsMember({"starlike", "convex", "univalent"}));
  radius->add_option("--beta", cfg.beta, "order beta in [0, 1) (comma list sweeps)");
  radius->add_option("--form", cfg.form, "ratio or polynomial")->check(CLI::IsMember({"ratio", "polynomial"}));

  auto* bounds = app.add_subcommand("bounds", "Euler-Rayleigh bounds for the radius of starlikeness");
  add_common(bounds, cfg);
  bounds->add_option("--kind", cfg.kind, "f or g")->check(CLI::IsMember({"f", "g"}));
  bounds->add_option("--method", cfg.method, "closed, extracted or both")
      ->check(CLI::IsMember({"closed", "closed_form", "extracted", "both"}));
  bounds->add_option("--m", cfg.m, "even order m >= 2");

  auto* region = app.add_subcommand("region", "complex-parameter conditions for Re g > 0 and starlikeness");
  add_common(region, cfg);
  region->add_flag("--disk", cfg.disk, "also run the unit-disk grid check");
  region->add_option("--grid-n", cfg.grid_n, "disk grid rings")->check(CLI::Range(std::size_t{16}, std::size_t{1024}));
  region->add_option("--radius-cap", cfg.radius_cap, "disk grid radius")->check(CLI::Range(1e-3, 0.999999));

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--output", cfg.output, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  verify->add_flag("--verbose", cfg.verbose, "runtime metadata on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  const std::string command = app.get_subcommands().front()->get_name();
  int status = kOk;
  try {
    std::vector<json> reports;
    const std::size_t n_max = command == "verify" ? kDefaultNMax : resolve_n_max(cfg);
    if (command == "radius") {
      reports = sweep<RealPoint>(real_grid(cfg, true),
                                 [&](const RealPoint& p) { return radius_report(cfg, p, n_max); });
    } else if (command == "zeros") {
      reports = sweep<RealPoint>(real_grid(cfg, false), [&](const RealPoint& p) { return zeros_report(cfg, p); });
    } else if (command == "bounds") {
      reports = sweep<RealPoint>(real_grid(cfg, false), [&](const RealPoint& p) { return bounds_report(cfg, p); });
    } else if (command == "eval") {
      struct EvalPoint {
        double L;
        double eta;
        std::complex<double> z;
      };
      std::vector<EvalPoint> points;
      const auto zs = parse_complexes(cfg.z, "--z");
      for (const auto& p : real_grid(cfg, false))
        for (const auto& z : zs) points.push_back({p.L, p.eta, z});
      reports = sweep<EvalPoint>(points, [&](const EvalPoint& p) { return eval_report(cfg, p.L, p.eta, p.z, n_max); });
    } else if (command == "region") {
      std::vector<ComplexPoint> points;
      for (const auto& L : parse_complexes(cfg.L, "--L"))
        for (const auto& eta : parse_complexes(cfg.eta, "--eta")) points.push_back({L, eta});
      reports = sweep<ComplexPoint>(points, [&](const ComplexPoint& p) { return region_report(cfg, p); });
    } else {
      bool ok = true;
      reports.push_back(verify_report(ok));
      if (!ok) status = kVerifyFailed;
    }
    emit(out, cfg, command, reports);
    if (cfg.verbose) {
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      err << "command=" << command << " points=" << reports.size() << " n_max=" << n_max
          << " tolerance=" << cfg.tolerance << " elapsed_ms=" << ms << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  }
  return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("coulomb-radii");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace coulomb::cli
