#include "quadcount/cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <exception>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <thread>

#include "quadcount/cli/verify.hpp"
#include "quadcount/quadcount.hpp"

namespace quadcount::cli {

using Json = nlohmann::ordered_json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw UsageError("expected an integer, got an empty string");
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(std::string(s), &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + std::string(s) + "'");
  }
  if (pos != s.size()) throw UsageError("not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (depth < 0) throw UsageError("unbalanced brackets in '" + std::string(s) + "'");
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw UsageError("unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(s.substr(start));
  return out;
}

Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(v.convert_to<std::int64_t>());
  }
  return Json(v.str());
}

std::string bigint_csv(const BigInt& v) { return v.str(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json element_json(const FieldCtx& F, FqElem a) {
  if (F.nu() == 1) return Json(a.index());
  return Json(F.coeffs(a));
}

// Options shared by every subcommand that needs a field.
struct FieldOptions {
  std::optional<std::uint32_t> p;
  unsigned nu = 1;
  std::optional<std::uint32_t> q;
  std::string modulus;

  void attach(CLI::App* app) {
    app->add_option("--p", p, "Characteristic (odd prime)");
    app->add_option("--nu", nu, "Extension degree")->check(CLI::PositiveNumber);
    app->add_option("--q", q, "Field order, instead of --p/--nu");
    app->add_option("--modulus", modulus, "Field modulus m_0,...,m_nu over F_p (low to high, monic)");
  }

  [[nodiscard]] FieldCtx build(std::optional<std::uint32_t> default_q = std::nullopt) const {
    std::uint32_t pp = 0;
    unsigned n = nu;
    if (q && p) throw UsageError("give either --q or --p/--nu, not both");
    if (q || (!p && default_q)) {
      const FieldCtx probe = FieldCtx::from_order(q ? *q : *default_q);
      pp = probe.p();
      n = probe.nu();
    } else if (p) {
      pp = *p;
    } else {
      throw UsageError("missing field: pass --p (and optionally --nu) or --q");
    }
    std::optional<std::vector<std::uint32_t>> m;
    if (!modulus.empty()) {
      std::vector<std::uint32_t> coeffs;
      for (auto part : split_top_level(modulus, ',')) {
        const std::int64_t v = parse_int(part);
        if (v < 0) throw UsageError("modulus coefficients must be non-negative");
        coeffs.push_back(static_cast<std::uint32_t>(v));
      }
      m = std::move(coeffs);
    }
    return FieldCtx(pp, n, std::move(m));
  }
};

struct JobOptions {
  FieldOptions field;
  std::string coeffs;
  std::string gram;
  std::optional<unsigned> P;
  std::string p_range;
  std::vector<std::string> methods{"exact"};
  std::string emit = "json";
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;

  void attach(CLI::App* app) {
    field.attach(app);
    app->add_option("--coeffs", coeffs, "Diagonal coefficients a_1,...,a_n");
    app->add_option("--gram", gram, "Symmetric Gram matrix, rows separated by ';'");
    app->add_option("--P", P, "Degree bound P");
    app->add_option("--P-range", p_range, "Inclusive range a..b of P values");
    app->add_option("--method", methods, "exact, circle, brute, convolution")
        ->delimiter(',')
        ->check(CLI::IsMember({"exact", "circle", "brute", "convolution"}));
    app->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--budget", budget, "Brute-force evaluation budget (default 1e8 or QUADCOUNT_BUDGET)");
    app->add_option("--jobs", jobs, "Independent cells evaluated in parallel")->check(CLI::PositiveNumber);
  }

  [[nodiscard]] std::vector<unsigned> p_values() const {
    if (P && !p_range.empty()) throw UsageError("give either --P or --P-range, not both");
    if (P) return {*P};
    if (p_range.empty()) throw UsageError("missing --P or --P-range");
    const auto [lo, hi] = parse_p_range(p_range);
    std::vector<unsigned> out;
    for (unsigned v = lo; v <= hi && hi >= lo; ++v) out.push_back(v);
    return out;
  }

  [[nodiscard]] OracleConfig oracle() const {
    OracleConfig cfg = OracleConfig::from_env();
    if (budget) cfg.budget = *budget;
    if (jobs > 1) cfg.threads = 1;
    return cfg;
  }
};

Method method_of(const std::string& s) {
  if (s == "exact") return Method::ExactFormula;
  if (s == "circle") return Method::CircleReassembly;
  if (s == "brute") return Method::BruteForce;
  return Method::Convolution;
}

// The quadratic form of a job, diagonalized when given as a Gram matrix.
struct Job {
  FieldCtx field;
  PolyRing ring;
  QuadForm form;
  std::optional<GramMatrix> gram;
  OracleConfig oracle;
};

Job make_job(const JobOptions& o) {
  FieldCtx F = o.field.build();
  if (o.coeffs.empty() == o.gram.empty()) throw UsageError("give exactly one of --coeffs and --gram");
  if (!o.coeffs.empty()) {
    return Job{F, PolyRing(F), QuadForm(parse_element_list(F, o.coeffs)), std::nullopt, o.oracle()};
  }
  GramMatrix g = parse_gram(F, o.gram);
  QuadForm form = diagonalize(F, g).form;
  return Job{F, PolyRing(F), std::move(form), std::move(g), o.oracle()};
}

BigInt n_by(const Job& job, Method m, unsigned P) {
  switch (m) {
    case Method::ExactFormula: return n_exact_from_zero(job.field, job.form, P);
    case Method::CircleReassembly: return n_circle(job.ring, job.form, P);
    case Method::BruteForce:
      return job.gram ? brute_n_gram(job.ring, *job.gram, P, job.oracle) : brute_n(job.ring, job.form, P, job.oracle);
    case Method::Convolution: return convolution_count(job.ring, job.form, P, job.oracle);
  }
  throw std::logic_error("unknown method");
}

BigInt compute(const Job& job, Quantity quantity, Method m, unsigned P) {
  const std::uint32_t q = job.field.q();
  switch (quantity) {
    case Quantity::N: return n_by(job, m, P);
    case Quantity::Primitive:
      if (P == 0) throw UsageError("primitive counts need P >= 1");
      if (m == Method::BruteForce) return brute_primitive(job.ring, job.form, P, job.oracle);
      return primitive_from_counts(n_by(job, m, P), n_by(job, m, P - 1), q);
    case Quantity::Mor:
      if (P == 0) throw UsageError("morphism counts need P >= 1");
      if (m == Method::ExactFormula) return mor_exact(job.field, job.form, P);
      if (m == Method::BruteForce) return brute_mor(job.ring, job.form, P, job.oracle);
      return mor_from_counts(n_by(job, m, P + 1), n_by(job, m, P), n_by(job, m, P - 1), q);
  }
  throw std::logic_error("unknown quantity");
}

// Evaluates cells[i] into results[i] on `jobs` threads; the first failure
// (in cell order) is rethrown so errors are as deterministic as the output.
template <typename Result, typename Fn>
std::vector<Result> run_cells(std::size_t count, unsigned jobs, Fn&& fn) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += jobs) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1 || count <= 1) {
    work(0);
    jobs = 1;
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

Json field_json(const FieldCtx& F) {
  return Json{{"p", F.p()}, {"nu", F.nu()}, {"q", F.q()}, {"modulus", F.modulus()}};
}

Json form_json(const Job& job) {
  Json coeffs = Json::array();
  for (auto c : job.form.coeffs()) coeffs.push_back(element_json(job.field, c));
  return Json{{"n", job.form.n()},
              {"coeffs", coeffs},
              {"case", to_string(classify(job.field, job.form))},
              {"from_gram", job.gram.has_value()}};
}

void emit_json(std::ostream& out, const std::string& command, Json data, Json metadata) {
  Json doc{{"schema_version", kSchemaVersion}, {"command", command}, {"data", std::move(data)},
           {"metadata", std::move(metadata)}};
  out << doc.dump(2) << '\n';
}

struct CountCell {
  unsigned P;
  Method method;
  BigInt value;
  double ms = 0;
};

int cmd_count(const JobOptions& o, const std::string& quantity_name, std::ostream& out) {
  const Quantity quantity = quantity_name == "N" ? Quantity::N
                            : quantity_name == "primitive" ? Quantity::Primitive
                                                           : Quantity::Mor;
  const Job job = make_job(o);
  std::vector<CountCell> cells;
  for (unsigned P : o.p_values()) {
    for (const auto& m : o.methods) cells.push_back(CountCell{P, method_of(m), 0, 0});
  }
  auto done = run_cells<CountCell>(cells.size(), o.jobs, [&](std::size_t i) {
    CountCell c = cells[i];
    const auto t0 = std::chrono::steady_clock::now();
    c.value = compute(job, quantity, c.method, c.P);
    c.ms = elapsed_ms(t0);
    return c;
  });

  if (o.emit == "csv") {
    out << "P,quantity,method,value\n";
    for (const auto& c : done) {
      out << c.P << ',' << to_string(quantity) << ',' << to_string(c.method) << ',' << bigint_csv(c.value) << '\n';
    }
    return kOk;
  }
  Json reports = Json::array();
  Json timings = Json::array();
  for (const auto& c : done) {
    reports.push_back(Json{{"P", c.P},
                           {"quantity", to_string(quantity)},
                           {"method", to_string(c.method)},
                           {"value", bigint_json(c.value)}});
    timings.push_back(Json{{"P", c.P}, {"method", to_string(c.method)}, {"runtime_ms", c.ms}});
  }
  emit_json(out, "count",
            Json{{"field", field_json(job.field)}, {"form", form_json(job)}, {"reports", std::move(reports)}},
            Json{{"runtime_ms", std::move(timings)}});
  return kOk;
}

struct TableRow {
  unsigned P = 0;
  Method method = Method::ExactFormula;
  BigInt n;
  std::optional<BigInt> primitive;
  std::optional<BigInt> mor;
  double ms = 0;
};

int cmd_table(const JobOptions& o, std::ostream& out) {
  const Job job = make_job(o);
  std::vector<TableRow> rows;
  for (const auto& m : o.methods) {
    for (unsigned P : o.p_values()) rows.push_back(TableRow{P, method_of(m), 0, std::nullopt, std::nullopt, 0});
  }
  auto done = run_cells<TableRow>(rows.size(), o.jobs, [&](std::size_t i) {
    TableRow r = rows[i];
    const auto t0 = std::chrono::steady_clock::now();
    r.n = compute(job, Quantity::N, r.method, r.P);
    if (r.P >= 1) {
      r.primitive = compute(job, Quantity::Primitive, r.method, r.P);
      r.mor = compute(job, Quantity::Mor, r.method, r.P);
    }
    r.ms = elapsed_ms(t0);
    return r;
  });

  if (o.emit == "csv") {
    out << "P,method,N,primitive,mor\n";
    for (const auto& r : done) {
      out << r.P << ',' << to_string(r.method) << ',' << bigint_csv(r.n) << ','
          << (r.primitive ? bigint_csv(*r.primitive) : "") << ',' << (r.mor ? bigint_csv(*r.mor) : "") << '\n';
    }
    return kOk;
  }
  Json data_rows = Json::array();
  Json timings = Json::array();
  for (const auto& r : done) {
    data_rows.push_back(Json{{"P", r.P},
                             {"method", to_string(r.method)},
                             {"N", bigint_json(r.n)},
                             {"primitive", r.primitive ? bigint_json(*r.primitive) : Json(nullptr)},
                             {"mor", r.mor ? bigint_json(*r.mor) : Json(nullptr)}});
    timings.push_back(Json{{"P", r.P}, {"method", to_string(r.method)}, {"runtime_ms", r.ms}});
  }
  emit_json(out, "table",
            Json{{"field", field_json(job.field)}, {"form", form_json(job)}, {"rows", std::move(data_rows)}},
            Json{{"runtime_ms", std::move(timings)}});
  return kOk;
}

struct VerifyOptions {
  FieldOptions field;
  std::string suite;
  VerifyBounds bounds;
  std::string emit = "json";
  std::optional<std::uint64_t> budget;

  void attach(CLI::App* app) {
    app->add_option("suite", suite, "gauss, srf, lemma31, lemma32, counts, mor or phis")->required();
    field.attach(app);
    app->add_option("--maxdeg", bounds.maxdeg, "Maximum modulus degree");
    app->add_option("--maxk", bounds.maxk, "Maximum prime power exponent");
    app->add_option("--nmax", bounds.nmax, "Maximum number of variables");
    app->add_option("--pmax", bounds.pmax, "Maximum P");
    app->add_option("--n", bounds.n, "Restrict to this number of variables");
    app->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--budget", budget, "Brute-force evaluation budget");
  }
};

int cmd_verify(VerifyOptions o, std::ostream& out) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw UnknownSuite("unknown verification suite '" + o.suite + "'");
  }
  const FieldCtx F = o.field.build(3);
  o.bounds.oracle = OracleConfig::from_env();
  if (o.budget) o.bounds.oracle.budget = *o.budget;
  const auto t0 = std::chrono::steady_clock::now();
  const auto checks = run_suite(o.suite, F, o.bounds);
  const double ms = elapsed_ms(t0);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.pass ? 0 : 1;

  if (o.emit == "csv") {
    out << "name,params,lhs,rhs,pass\n";
    for (const auto& c : checks) {
      out << csv_escape(c.name) << ',' << csv_escape(c.params) << ',' << csv_escape(c.lhs) << ','
          << csv_escape(c.rhs) << ',' << (c.pass ? "true" : "false") << '\n';
    }
  } else {
    Json list = Json::array();
    for (const auto& c : checks) {
      list.push_back(Json{{"name", c.name}, {"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    }
    emit_json(out, "verify",
              Json{{"suite", o.suite},
                   {"field", field_json(F)},
                   {"passed", checks.size() - failed},
                   {"failed", failed},
                   {"checks", std::move(list)}},
              Json{{"runtime_ms", ms}});
  }
  return failed == 0 ? kOk : kFailure;
}

}  // namespace

FqElem parse_element(const FieldCtx& F, std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw UsageError("empty field element");
  if (s.front() != '[') return F.from_int(parse_int(s));
  if (s.back() != ']') throw UsageError("unterminated field element '" + std::string(s) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::uint32_t> coords;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      const std::int64_t v = parse_int(s.substr(i, j - i));
      if (v < 0 || v >= static_cast<std::int64_t>(F.p())) {
        throw UsageError("coordinate " + std::to_string(v) + " out of range [0, p)");
      }
      coords.push_back(static_cast<std::uint32_t>(v));
    }
    i = j;
  }
  if (coords.size() > F.nu()) throw UsageError("too many coordinates in '" + std::string(text) + "'");
  return F.from_coeffs(coords);
}

std::vector<FqElem> parse_element_list(const FieldCtx& F, std::string_view text) {
  std::vector<FqElem> out;
  for (auto part : split_top_level(text, ',')) out.push_back(parse_element(F, part));
  return out;
}

GramMatrix parse_gram(const FieldCtx& F, std::string_view text) {
  GramMatrix g;
  for (auto row : split_top_level(text, ';')) g.push_back(parse_element_list(F, row));
  return g;
}

std::pair<unsigned, unsigned> parse_p_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw UsageError("P range must look like a..b");
  const std::int64_t lo = parse_int(text.substr(0, dots));
  const std::int64_t hi = parse_int(text.substr(dots + 2));
  if (lo < 0 || hi < 0) throw UsageError("P range bounds must be non-negative");
  return {static_cast<unsigned>(lo), static_cast<unsigned>(hi)};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact point counts on diagonal quadrics over F_q(t)", "qcount"};
  app.require_subcommand(1);

  JobOptions count_opts;
  std::string quantity = "N";
  auto* count = app.add_subcommand("count", "Count solutions of f(x) = 0 with deg x_i < P");
  count_opts.attach(count);
  count->add_option("--quantity", quantity, "N, primitive or mor")->check(CLI::IsMember({"N", "primitive", "mor"}));

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against direct evaluation");
  verify_opts.attach(verify);

  JobOptions table_opts;
  auto* table = app.add_subcommand("table", "Table of N(P), primitive counts and morphism counts over a P range");
  table_opts.attach(table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kOk;
    err << "qcount: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(count_opts, quantity, out);
    if (verify->parsed()) return cmd_verify(verify_opts, out);
    if (table->parsed()) return cmd_table(table_opts, out);
  } catch (const BudgetExceeded& e) {
    err << "qcount: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    // field, parse and unknown-suite errors
    err << "qcount: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "qcount: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "qcount: internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace quadcount::cli
