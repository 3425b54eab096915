#pragma once

// Command-line front end. run_cli() does all the work so that tests can drive
// it in-process; tools/quartic.cpp only forwards argv.
//
// Exit codes: 0 pass, 1 verification or agreement failure, 2 usage error.

#include "quartic/quartic.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace quartic::cli {

using json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct FieldSpec {
  std::uint32_t p;
  std::uint32_t m;
};

/// q = 1 (mod 4): 5, 9, 13, 17, 25, 29, 37, 41, 49; q = 3 (mod 4): 7, 11, 19, 23, 27.
inline const std::vector<FieldSpec> kTestFields{{5, 1},  {3, 2},  {13, 1}, {17, 1}, {5, 2},  {29, 1}, {37, 1},
                                                {41, 1}, {7, 2},  {7, 1},  {11, 1}, {19, 1}, {23, 1}, {3, 3}};

struct RunConfig {
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> m;
  std::optional<Code> generator;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::optional<std::uint64_t> c;
  std::optional<std::uint64_t> y;
  unsigned n = 1;
  unsigned nmax = 8;
  unsigned terms = 8;
  std::string method;  // empty: count_N dispatch
  bool all_methods = false;
  bool expsums = false;
  bool corrupt_t = false;
  Format format = Format::Text;
  std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::uint32_t> parse_modulus(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw UsageError("--modulus expects comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

inline FieldContext make_context(const RunConfig& cfg, std::uint32_t p, std::uint32_t m) {
  Field field = Field::build(p, m);
  if (cfg.modulus) {
    field = Field::with_modulus(p, *cfg.modulus);
    if (cfg.m && *cfg.m != field.m()) throw UsageError("--modulus has degree " + std::to_string(field.m()) + " but --m is " + std::to_string(*cfg.m));
  }
  Generator gen = cfg.generator ? Generator::from(field, field.checked(*cfg.generator)) : Generator::find(field);
  return FieldContext(std::move(gen));
}

inline FieldContext make_context(const RunConfig& cfg) {
  if (!cfg.p) throw UsageError("--p is required");
  const std::uint32_t m = cfg.modulus ? static_cast<std::uint32_t>(cfg.modulus->size() - 1) : cfg.m.value_or(1);
  return make_context(cfg, *cfg.p, m);
}

inline std::vector<FieldContext> field_set(const RunConfig& cfg) {
  if (cfg.p) return {make_context(cfg)};
  std::vector<FieldContext> out;
  for (const auto& fs : kTestFields) out.push_back(make_context(cfg, fs.p, fs.m));
  return out;
}

inline json strings(const std::vector<BigInt>& vs) { return json(to_decimal(vs)); }

// ---------------------------------------------------------------------------
// Output

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + scalar_text(e);
    return s;
  }
  return v.dump();
}

inline std::string csv_cell(const json& v) {
  std::string s = v.is_array() ? scalar_text(v) : (v.is_object() ? v.dump() : scalar_text(v));
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

inline void write_rows(std::ostream& out, const json& rows, char sep) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [key, _] : row.items())
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? std::string(1, sep) : "") << cols[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out << sep;
      if (row.contains(cols[i])) out << (sep == ',' ? csv_cell(row[cols[i]]) : scalar_text(row[cols[i]]));
    }
    out << '\n';
  }
}

/// `table_key` names the array of row objects that CSV output consists of.
inline void emit(std::ostream& out, const json& report, Format format, const std::string& table_key = "") {
  if (format == Format::Json) {
    out << report.dump(2) << '\n';
    return;
  }
  if (format == Format::Csv) {
    if (!table_key.empty() && report.contains(table_key)) {
      write_rows(out, report[table_key], ',');
    } else {
      json flat = json::object();
      for (const auto& [key, value] : report.items())
        if (!value.is_object() && !(value.is_array() && !value.empty() && value.front().is_object())) flat[key] = value;
      write_rows(out, json::array({flat}), ',');
    }
    return;
  }
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      write_rows(out, value, '\t');
    } else if (value.is_object()) {
      for (const auto& [sub, inner] : value.items()) out << key << '.' << sub << ": " << scalar_text(inner) << '\n';
    } else {
      out << key << ": " << scalar_text(value) << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Timing

template <class Fn>
double median_seconds(Fn&& fn, double min_total = 2e-3, int min_reps = 5, int max_reps = 2000) {
  std::vector<double> samples;
  double total = 0;
  while ((static_cast<int>(samples.size()) < min_reps || total < min_total) && static_cast<int>(samples.size()) < max_reps) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    samples.push_back(dt);
    total += dt;
  }
  std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2), samples.end());
  return samples[samples.size() / 2];
}

inline volatile std::size_t bench_sink = 0;

struct SeriesStep {
  std::int64_t q = 0;
  Code c = 0;
  unsigned n = 0;
  double series_per_n = 0;   // marginal cost of one more coefficient
  double oracle_seconds = 0; // full oracle recompute at n
  BigInt series_value;
  BigInt oracle_value;

  double ratio() const { return series_per_n > 0 ? oracle_seconds / series_per_n : INFINITY; }
  bool identical() const { return series_value == oracle_value; }
};

/// Compares the cost of extending the N-series by one term, measured as
/// (t(2n terms) - t(n terms)) / n, with recomputing N_n(c) by the oracle.
inline SeriesStep measure_series_step(const FieldContext& ctx, Code c, unsigned n) {
  SeriesStep r;
  r.q = ctx.q();
  r.c = c;
  r.n = n;
  const RationalGF gf = gf_N(ctx, c);
  const std::vector<Code> ones(n, 1);
  r.series_value = series(gf, n)[n - 1];
  r.oracle_value = oracle_count(ctx.field(), ones, c);
  std::size_t sink = 0;
  const double t_short = median_seconds([&] { sink += series(gf, n).size(); });
  const double t_long = median_seconds([&] { sink += series(gf, 2 * n).size(); });
  r.series_per_n = std::max(t_long - t_short, 1e-9) / n;
  r.oracle_seconds = median_seconds([&] { sink += oracle_count(ctx.field(), ones, c).is_zero(); });
  bench_sink = sink;
  return r;
}

// ---------------------------------------------------------------------------
// count methods

inline const std::vector<std::string> kCountMethods{"oracle", "closed", "cyclotomy", "expsum", "series"};
inline const std::vector<std::string> kTwistedMethods{"oracle", "closed", "series"};

/// Empty when `method` applies to N_n(c), otherwise the reason it does not.
inline std::string inapplicable(const FieldContext& ctx, const std::string& method, Code c, unsigned n) {
  const bool q1 = ctx.q_is_1_mod_4();
  if (method == "closed" && q1 && (c == 0 || n > 4)) return "closed forms cover c != 0 and n <= 4";
  if (method == "cyclotomy" && (!q1 || c == 0 || n > 4)) return "cyclotomic route needs q = 1 mod 4, c != 0, n <= 4";
  if (method == "expsum" && (!q1 || c == 0 || n > kMaxReconstructionN)) return "reconstruction needs q = 1 mod 4, c != 0";
  return "";
}

inline BigInt count_by(const FieldContext& ctx, const std::string& method, Code c, unsigned n) {
  const std::vector<Code> ones(n, 1);
  if (method == "auto") return count_N(ctx, c, n);
  if (method == "oracle") return oracle_count(ctx.field(), ones, c);
  if (method == "closed") return ctx.q_is_1_mod_4() ? count_small(ctx, c, n) : count_quadratic_form(ctx.field(), c, n);
  if (method == "cyclotomy") return count_via_cyclotomy(ctx, c, n);
  if (method == "expsum") return reconstruct_N(GaussSumTable(ctx), c, n);
  if (method == "series") return series(gf_N(ctx, c), n)[n - 1];
  throw UsageError("unknown method '" + method + "'");
}

inline BigInt twisted_by(const FieldContext& ctx, const std::string& method, Code y, unsigned n) {
  if (method == "auto" || method == "closed") return count_M(ctx, y, n);
  if (method == "oracle") {
    std::vector<Code> coeffs(n, 1);
    coeffs.back() = y;
    return oracle_count(ctx.field(), coeffs, 0);
  }
  if (method == "series") {
    detail::require_nonquartic(ctx, y);
    return series(gf_M(ctx, y), n - 1)[n - 2];
  }
  throw UsageError("method '" + method + "' does not apply to the twisted form");
}

// ---------------------------------------------------------------------------
// subcommands

inline json field_report(const FieldContext& ctx) {
  json r;
  r["q"] = ctx.q();
  r["p"] = ctx.field().p();
  r["m"] = ctx.field().m();
  r["modulus"] = ctx.field().modulus();
  r["modulus_text"] = ctx.field().describe_modulus();
  r["g"] = ctx.generator().element();
  if (ctx.q_is_1_mod_4()) {
    r["s"] = ctx.quartic().s;
    r["t"] = ctx.quartic().t;
    r["f_parity"] = ((ctx.q() - 1) / 4) % 2 == 0 ? "even" : "odd";
  } else {
    r["s"] = nullptr;
    r["t"] = nullptr;
    r["f_parity"] = nullptr;
  }
  return r;
}

inline int cmd_field(const RunConfig& cfg, std::ostream& out) {
  emit(out, field_report(make_context(cfg)), cfg.format);
  return 0;
}

inline int cmd_cyclotomic(const RunConfig& cfg, std::ostream& out) {
  const FieldContext ctx = make_context(cfg);
  const auto& dec = ctx.quartic();
  const auto closed = CyclotomicTable::quartic(dec, ctx.q());
  const auto enumerated = CyclotomicTable::enumerate(ctx.generator(), 4);
  json r = field_report(ctx);
  r.erase("p");
  r.erase("m");
  r.erase("modulus");
  r.erase("modulus_text");
  bool agree = true;
  json entries = json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      agree = agree && closed(i, j) == enumerated(i, j);
      entries.push_back({{"i", i}, {"j", j}, {"closed", closed(i, j)}, {"enumerated", enumerated(i, j)}});
    }
  json diagonal = json::array();
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < 4; ++i) {
      const std::vector<std::int64_t> idx(static_cast<std::size_t>(n), i);
      const auto a = cyclo_diag_quartic(n, i, dec, ctx.q());
      const auto b = cyclo_dim_enum(ctx.generator(), 4, idx);
      agree = agree && a == b;
      diagonal.push_back({{"n", n}, {"i", i}, {"closed", a}, {"enumerated", b}});
    }
  r["entries"] = entries;
  r["diagonal"] = diagonal;
  r["agree"] = agree;
  emit(out, r, cfg.format, "entries");
  return agree ? 0 : 1;
}

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
  if (cfg.c.has_value() == cfg.y.has_value()) throw UsageError("give exactly one of --c and --y");
  if (cfg.all_methods && !cfg.method.empty()) throw UsageError("--method and --all-methods are exclusive");
  const FieldContext ctx = make_context(cfg);
  const bool twisted = cfg.y.has_value();
  const Code value = ctx.field().checked(twisted ? *cfg.y : *cfg.c);
  if (cfg.n < 1 || (twisted && cfg.n < 2)) throw UsageError(twisted ? "--n must be at least 2 for --y" : "--n must be at least 1");

  json r;
  r["q"] = ctx.q();
  r[twisted ? "y" : "c"] = value;
  r["n"] = cfg.n;
  if (!cfg.all_methods) {
    const std::string method = cfg.method.empty() ? "auto" : cfg.method;
    if (!twisted && method != "auto") {
      if (std::find(kCountMethods.begin(), kCountMethods.end(), method) == kCountMethods.end())
        throw UsageError("unknown method '" + method + "'");
      if (auto why = inapplicable(ctx, method, value, cfg.n); !why.empty()) throw UsageError(why);
    }
    const BigInt count = twisted ? twisted_by(ctx, method, value, cfg.n) : count_by(ctx, method, value, cfg.n);
    r["method"] = method;
    r["count"] = count.str();
    emit(out, r, cfg.format);
    return 0;
  }

  json methods = json::array();
  std::optional<BigInt> first;
  bool agree = true;
  for (const auto& method : twisted ? kTwistedMethods : kCountMethods) {
    if (!twisted && !inapplicable(ctx, method, value, cfg.n).empty()) continue;
    const BigInt v = twisted ? twisted_by(ctx, method, value, cfg.n) : count_by(ctx, method, value, cfg.n);
    if (!first) first = v;
    agree = agree && v == *first;
    methods.push_back({{"method", method}, {"count", v.str()}});
  }
  r["method"] = "all";
  r["count"] = first->str();
  r["agree"] = agree;
  r["methods"] = methods;
  emit(out, r, cfg.format, "methods");
  return agree ? 0 : 1;
}

inline int cmd_series(const RunConfig& cfg, std::ostream& out) {
  if (cfg.c.has_value() == cfg.y.has_value()) throw UsageError("give exactly one of --c and --y");
  if (cfg.terms < 1) throw UsageError("--terms must be positive");
  const FieldContext ctx = make_context(cfg);
  const bool twisted = cfg.y.has_value();
  const Code value = ctx.field().checked(twisted ? *cfg.y : *cfg.c);
  const RationalGF gf = twisted ? gf_M(ctx, value) : gf_N(ctx, value);
  json r;
  r["q"] = ctx.q();
  r["kind"] = twisted ? "y" : "c";
  r["c_or_y"] = value;
  json parts = json::array();
  for (const auto& part : gf.parts) parts.push_back({{"num", strings(part.numerator)}, {"den", strings(part.denominator)}});
  r["parts"] = parts;
  r["coefficients"] = strings(series(gf, cfg.terms));
  if (cfg.format == Format::Csv) {
    json rows = json::array();
    const auto coeffs = series(gf, cfg.terms);
    for (std::size_t i = 0; i < coeffs.size(); ++i) rows.push_back({{"n", i + 1}, {"coefficient", coeffs[i].str()}});
    r["rows"] = rows;
  }
  emit(out, r, cfg.format, "rows");
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string name;
  bool pass = true;
  double max_diff = 0;
  double seconds = 0;
  std::string detail;
};

class Verifier {
 public:
  Verifier(const FieldContext& ctx, const RunConfig& cfg) : ctx_(ctx), cfg_(cfg) {}

  std::vector<CheckResult> run(json* expsum_detail) {
    const bool q1 = ctx_.q_is_1_mod_4();
    check("field", [&](CheckResult& r) { field_checks(r); });
    if (q1) check("cyclotomic_closed", [&](CheckResult& r) { cyclotomic_closed(r); });
    check("reduction", [&](CheckResult& r) { reduction(r); });
    check("count_oracle", [&](CheckResult& r) { count_oracle(r); });
    if (q1) check("count_paths", [&](CheckResult& r) { count_paths(r); });
    check("twisted", [&](CheckResult& r) { twisted(r); });
    if (q1) check("recurrence", [&](CheckResult& r) { recurrence(r); });
    check("expsums", [&](CheckResult& r) { expsums(r, expsum_detail); });
    return results_;
  }

 private:
  template <class Fn>
  void check(const std::string& name, Fn&& fn) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(r);
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("defect: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  static void fail(CheckResult& r, const std::string& what) {
    if (r.pass) r.detail = what;
    r.pass = false;
  }

  static void compare(CheckResult& r, const BigInt& got, const BigInt& want, const std::string& where) {
    if (got == want) return;
    const BigInt diff = abs(got - want);
    r.max_diff = std::max(r.max_diff, diff.convert_to<double>());
    fail(r, where + ": got " + got.str() + ", expected " + want.str());
  }

  void field_checks(CheckResult& r) {
    const Field& F = ctx_.field();
    const Generator& gen = ctx_.generator();
    std::vector<bool> seen(F.q(), false);
    for (std::int64_t e = 0; e < ctx_.q() - 1; ++e) {
      const Code x = gen.power(e);
      if (seen[x]) fail(r, "generator repeats at exponent " + std::to_string(e));
      seen[x] = true;
      if (gen.index_of(x) != e) fail(r, "index_of(g^" + std::to_string(e) + ") is wrong");
    }
    for (Code x = 0; x < F.q(); ++x)
      if (F.trace(F.pow(x, F.p())) != F.trace(x)) fail(r, "trace is not Frobenius invariant at " + std::to_string(x));
  }

  void cyclotomic_closed(CheckResult& r) {
    const auto& dec = ctx_.quartic();
    const auto closed = CyclotomicTable::quartic(dec, ctx_.q());
    const auto enumerated = CyclotomicTable::enumerate(ctx_.generator(), 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        compare(r, closed(i, j), enumerated(i, j), "(" + std::to_string(i) + "," + std::to_string(j) + ")_4");
    for (int n = 2; n <= 4; ++n)
      for (int i = 0; i < 4; ++i) {
        const std::vector<std::int64_t> idx(static_cast<std::size_t>(n), i);
        compare(r, cyclo_diag_quartic(n, i, dec, ctx_.q()), cyclo_dim_enum(ctx_.generator(), 4, idx),
                "diagonal n=" + std::to_string(n) + " i=" + std::to_string(i));
      }
  }

  void reduction(CheckResult& r) {
    const auto q = ctx_.q();
    std::vector<std::int64_t> orders;
    if ((q - 1) % 4 == 0) orders.push_back(4);
    orders.push_back(2);
    for (auto k : orders) {
      const auto table = CyclotomicTable::enumerate(ctx_.generator(), k);
      for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<std::int64_t> idx(n, 0);
        while (true) {
          compare(r, cyclo_dim(table, idx), cyclo_dim_enum(ctx_.generator(), k, idx), "k=" + std::to_string(k) + " " + tuple(idx));
          std::size_t i = 0;
          while (i < n && ++idx[i] == k) idx[i++] = 0;
          if (i == n) break;
        }
      }
    }
    if (q > 5) {
      const std::int64_t k = (q - 1) / 2;
      const auto table = CyclotomicTable::enumerate(ctx_.generator(), k);
      const std::vector<std::vector<std::int64_t>> spots{{0, 0}, {1, 2}, {0, 0, 0}, {1, 2, 3}, {0, k - 1, 1},
                                                         {0, 0, 0, 0}, {1, 2, 3, 4}, {k - 1, 0, 1, k / 2}};
      for (const auto& idx : spots)
        compare(r, cyclo_dim(table, idx), cyclo_dim_enum(ctx_.generator(), k, idx), "k=" + std::to_string(k) + " " + tuple(idx));
    }
  }

  static std::string tuple(const std::vector<std::int64_t>& idx) {
    std::string s = "[";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + "]";
  }

  void count_oracle(CheckResult& r) {
    const auto dists = oracle_distributions(ctx_.field(), cfg_.nmax);
    for (unsigned n = 1; n <= cfg_.nmax; ++n) {
      BigInt mass = 0;
      for (Code c = 0; c < ctx_.q(); ++c) {
        const BigInt v = count_N(ctx_, c, n);
        mass += v;
        compare(r, v, dists[n - 1][c], "N_" + std::to_string(n) + "(" + std::to_string(c) + ")");
      }
      compare(r, mass, big_pow(BigInt(ctx_.q()), n), "total mass n=" + std::to_string(n));
    }
  }

  void count_paths(CheckResult& r) {
    const auto dists = oracle_distributions(ctx_.field(), 4);
    for (Code c = 1; c < ctx_.q(); ++c)
      for (unsigned n = 1; n <= 4; ++n) {
        const std::string where = "N_" + std::to_string(n) + "(" + std::to_string(c) + ")";
        compare(r, count_small(ctx_, c, n), dists[n - 1][c], where + " closed");
        compare(r, count_via_cyclotomy(ctx_, c, n), dists[n - 1][c], where + " cyclotomy");
      }
  }

  void twisted(CheckResult& r) {
    const Field& F = ctx_.field();
    for (Code y = 1; y < F.q(); ++y) {
      const bool quartic = ctx_.q_is_1_mod_4() ? ctx_.residue_class(y) == 0 : quadratic_character(F, y) == 1;
      if (quartic) continue;
      const auto coeffs = series(gf_M(ctx_, y), cfg_.nmax - 1);
      for (unsigned n = 2; n <= cfg_.nmax; ++n) {
        std::vector<Code> a(n, 1);
        a.back() = y;
        const BigInt want = oracle_count(F, a, 0);
        const std::string where = "M_" + std::to_string(n) + "(" + std::to_string(y) + ")";
        compare(r, count_M(ctx_, y, n), want, where);
        compare(r, coeffs[n - 2], want, where + " series");
      }
    }
  }

  void recurrence(CheckResult& r) {
    if (cfg_.nmax < 5) return;
    for (Code c = 1; c < ctx_.q(); ++c) {
      const auto report = recurrence_check(ctx_, c, cfg_.nmax);
      for (std::size_t k = 0; k < report.residuals.size(); ++k)
        compare(r, report.residuals[k], 0, "D recurrence c=" + std::to_string(c) + " n=" + std::to_string(5 + k));
    }
  }

  void expsums(CheckResult& r, json* detail) {
    const Field& F = ctx_.field();
    const double q = static_cast<double>(ctx_.q());
    const AdditiveCharacter psi(F);
    for (Code y = 0; y < F.q(); ++y) {
      const double d = std::abs(psi.character_sum(y) - Complex(y == 0 ? q : 0.0, 0));
      r.max_diff = std::max(r.max_diff, d);
      if (!(d < 1e-9 * q)) fail(r, "orthogonality fails at y=" + std::to_string(y));
    }
    if (!ctx_.q_is_1_mod_4()) return;
    const GaussSumTable table(ctx_);
    std::mt19937_64 rng(cfg_.seed ^ static_cast<std::uint64_t>(ctx_.q()));
    std::uniform_int_distribution<Code> pick(1, F.q() - 1);
    for (int i = 0; i < 50; ++i) {
      const Code u = pick(rng);
      const double d = std::abs(psi.quartic_gauss_sum(u) - table[ctx_.residue_class(u)]);
      if (!(d < 1e-9 * q)) fail(r, "T_u is not constant on the class of u=" + std::to_string(u));
    }
    const auto residuals = verify_myerson(table, ctx_.quartic(), ctx_.q());
    const unsigned nmax = std::min(cfg_.nmax, 6U);
    const auto dists = oracle_distributions(F, nmax);
    double worst = 0;
    for (Code c = 1; c < F.q(); ++c)
      for (unsigned n = 1; n <= nmax; ++n) {
        const auto rec = reconstruct(table, c, n);
        worst = std::max(worst, rec.distance);
        compare(r, rec.value, dists[n - 1][c], "reconstructed N_" + std::to_string(n) + "(" + std::to_string(c) + ")");
      }
    if (detail) {
      json T = json::array();
      for (std::size_t l = 0; l < 4; ++l) T.push_back({{"l", l}, {"re", table[l].real()}, {"im", table[l].imag()}, {"residual", residuals[l]}});
      (*detail)["q"] = ctx_.q();
      (*detail)["T"] = T;
      (*detail)["max_rounding_distance"] = worst;
    }
  }

  const FieldContext& ctx_;
  const RunConfig& cfg_;
  std::vector<CheckResult> results_;
};

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.nmax < 2) throw UsageError("--nmax must be at least 2");
  std::vector<FieldContext> fields = field_set(cfg);
  if (cfg.corrupt_t) {
    std::vector<FieldContext> corrupted;
    for (const auto& ctx : fields)
      if (ctx.q_is_1_mod_4()) {
        auto dec = ctx.quartic();
        dec.t += 1;
        corrupted.push_back(FieldContext::with_decomposition(ctx.generator(), dec));
      }
    if (corrupted.empty()) throw UsageError("--corrupt-t needs a field with q = 1 mod 4");
    fields = std::move(corrupted);
  }
  json checks = json::array();
  json expsum_details = json::array();
  bool pass = true;
  for (const auto& ctx : fields) {
    json detail;
    for (const auto& r : Verifier(ctx, cfg).run(cfg.expsums ? &detail : nullptr)) {
      pass = pass && r.pass;
      checks.push_back({{"q", ctx.q()},
                        {"check", r.name},
                        {"status", r.pass ? "pass" : "fail"},
                        {"max_diff", r.max_diff},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
    }
    if (cfg.expsums && !detail.is_null()) expsum_details.push_back(detail);
  }
  json r;
  r["status"] = pass ? "pass" : "fail";
  r["nmax"] = cfg.nmax;
  r["checks"] = checks;
  if (cfg.expsums) r["expsums"] = expsum_details;
  emit(out, r, cfg.format, "checks");
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

inline int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  std::vector<FieldContext> fields;
  if (cfg.p) {
    fields.push_back(make_context(cfg));
  } else {
    for (const auto& fs : kTestFields)
      if (fs.p == 5 || fs.p == 13 || (fs.p == 7 && fs.m == 2) || (fs.p == 23)) fields.push_back(make_context(cfg, fs.p, fs.m));
  }
  const std::vector<unsigned> ns{1, 4, cfg.nmax};
  json rows = json::array();
  bool identical = true;
  for (const auto& ctx : fields) {
    const Code c = cfg.c ? ctx.field().checked(*cfg.c) : 1;
    for (unsigned n : ns) {
      std::optional<BigInt> reference;
      for (const std::string method : {"oracle", "auto", "series", "closed", "cyclotomy", "expsum"}) {
        if (!inapplicable(ctx, method, c, n).empty()) continue;
        if (method == "expsum" && n > 6) continue;
        BigInt value = count_by(ctx, method, c, n);
        const double t = median_seconds([&] { value = count_by(ctx, method, c, n); });
        if (!reference) reference = value;
        identical = identical && value == *reference;
        rows.push_back({{"q", ctx.q()}, {"n", n}, {"c", c}, {"method", method}, {"seconds", t}, {"count", value.str()}});
      }
    }
  }
  json r;
  r["rows"] = rows;
  r["identical"] = identical;
  json steps = json::array();
  for (const auto& ctx : fields) {
    if (!ctx.q_is_1_mod_4()) continue;
    const auto s = measure_series_step(ctx, cfg.c ? ctx.field().checked(*cfg.c) : 1, cfg.nmax);
    identical = identical && s.identical();
    steps.push_back({{"q", s.q},
                     {"n", s.n},
                     {"series_seconds_per_n", s.series_per_n},
                     {"oracle_seconds", s.oracle_seconds},
                     {"ratio", s.ratio()},
                     {"identical", s.identical()}});
  }
  r["series_step"] = steps;
  r["identical"] = identical;
  emit(out, r, cfg.format, "rows");
  return identical ? 0 : 1;
}

// ---------------------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of diagonal quartic forms over finite fields", "quartic"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  std::string modulus;
  bool as_json = false;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "characteristic (odd prime)");
    sub->add_option("--m", cfg.m, "extension degree");
    sub->add_option("--generator", cfg.generator, "generator override, as a canonical code");
    sub->add_option("--modulus", modulus, "modulus override, comma-separated coefficients, constant term first");
    sub->add_flag("--json", as_json, "shorthand for --format json");
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
  };

  auto* field = app.add_subcommand("field", "describe F_q, its generator and (s, t)");
  common(field);
  auto* cyclo = app.add_subcommand("cyclotomic", "order-4 cyclotomic numbers, closed form against enumeration");
  common(cyclo);
  auto* count = app.add_subcommand("count", "N_n(c) or M_n(y)");
  common(count);
  count->add_option("--c", cfg.c, "right-hand side c");
  count->add_option("--y", cfg.y, "twist y of x_1^4 + ... + y x_n^4 = 0");
  count->add_option("--n", cfg.n, "number of variables");
  count->add_option("--method", cfg.method, "oracle, closed, cyclotomy, expsum or series");
  count->add_flag("--all-methods", cfg.all_methods, "run every applicable method and compare");
  auto* ser = app.add_subcommand("series", "generating function and its coefficients");
  common(ser);
  ser->add_option("--c", cfg.c, "right-hand side c");
  ser->add_option("--y", cfg.y, "twist y");
  ser->add_option("--terms", cfg.terms, "number of coefficients");
  auto* verify = app.add_subcommand("verify", "cross-check every method against the oracle");
  common(verify);
  verify->add_option("--nmax", cfg.nmax, "largest n checked");
  verify->add_flag("--expsums", cfg.expsums, "report Gauss sums, residuals and rounding distances");
  verify->add_flag("--corrupt-t", cfg.corrupt_t)->group("");
  auto* bench = app.add_subcommand("bench", "timings per method, with the counts they produced");
  common(bench);
  bench->add_option("--c", cfg.c, "right-hand side c");
  bench->add_option("--nmax", cfg.nmax, "largest n timed");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    cfg.format = as_json || format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    if (!modulus.empty()) cfg.modulus = parse_modulus(modulus);
    if (*field) return cmd_field(cfg, out);
    if (*cyclo) return cmd_cyclotomic(cfg, out);
    if (*count) return cmd_count(cfg, out);
    if (*ser) return cmd_series(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    return cmd_bench(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "defect: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace quartic::cli
