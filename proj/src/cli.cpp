#include "quadperiod/cli.hpp"

#include "quadperiod/errors.hpp"
#include "quadperiod/parse.hpp"
#include "quadperiod/serialize.hpp"
#include "quadperiod/sums.hpp"
#include "quadperiod/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>

namespace qp {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAudit = 2;
constexpr int kExitPrecision = 3;

struct CommonOpts {
  std::string x_expr;
  long prec = 128;
  long prec_cap = 8192;
  std::string tol = "1e-8";
  long depth = 4096;
  std::string format = "table";
  int digits = 12;
  std::uint64_t seed = 20260810;

  long effective_cap() const {
    if (const char* env = std::getenv("QUADPERIOD_PREC_CAP")) {
      long cap = std::strtol(env, nullptr, 10);
      if (cap > 0) return cap;
    }
    return prec_cap;
  }
};

// Runs `body` with x parsed at doubling precision until it stops throwing
// precision errors or the cap is exhausted. Returns the retry count used.
template <typename Body>
int with_precision_retries(const CommonOpts& opts, Body&& body, int& retries) {
  long prec = opts.prec;
  long cap = opts.effective_cap();
  retries = 0;
  while (true) {
    try {
      Real x = opts.x_expr.empty() ? Real::integer(0)
                                   : parse_real(opts.x_expr, static_cast<mpfr_prec_t>(prec));
      body(x);
      return kExitOk;
    } catch (const InsufficientPrecision&) {
    } catch (const PrecisionLoss&) {
    }
    if (prec >= cap) return kExitPrecision;
    prec = std::min(prec * 2, cap);
    ++retries;
  }
}

Json meta_block(const CommonOpts& opts, int retries,
                std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  return Json{{"version", "1.0.0"},
              {"precision_start", opts.prec},
              {"precision_cap", opts.effective_cap()},
              {"retries", retries},
              {"wall_ms", ms}};
}

void emit(std::ostream& out, const CommonOpts& opts, const Json& payload, const Json& meta,
          const std::function<void(std::ostream&)>& table_writer) {
  if (opts.format == "json") {
    Json doc{{"payload", payload}, {"meta", meta}};
    out << doc.dump(2) << "\n";
  } else {
    table_writer(out);
  }
}

Representation parse_representation(const std::string& s) {
  if (s == "direct") return Representation::direct;
  if (s == "simple") return Representation::simple_conditioned;
  if (s == "reduced") return Representation::reduced_conditioned;
  if (s == "unconditioned") return Representation::unconditioned;
  if (s == "gamma1") return Representation::gamma1_conditioned;
  if (s == "gamma1-unconditioned") return Representation::gamma1_unconditioned;
  throw CLI::ValidationError("--representation", "unknown representation: " + s);
}

int cmd_cf(const CommonOpts& opts, const std::string& algo, long limit, bool paper_literal,
           std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  Json payload;
  int retries = 0;
  int rc = with_precision_retries(opts, [&](const Real& x) {
    Json steps = Json::array();
    if (algo == "plus") {
      for (const auto& st : plus_cf(x, limit)) steps.push_back(to_json(st, opts.digits));
    } else if (algo == "minus") {
      for (const auto& st : minus_cf(x, limit, paper_literal))
        steps.push_back(to_json(st, opts.digits));
    } else if (algo == "slowplus") {
      for (const auto& st : slow_plus(x, limit)) steps.push_back(to_json(st, opts.digits));
    } else if (algo == "slowsimple") {
      for (const auto& st : slow_simple(x, limit)) steps.push_back(to_json(st, opts.digits));
    } else {
      throw DomainError("unknown algorithm: " + algo);
    }
    payload = Json{{"x", opts.x_expr}, {"algorithm", algo}, {"steps", steps}};
  }, retries);
  if (rc != kExitOk) return rc;
  emit(out, opts, payload, meta_block(opts, retries, start), [&](std::ostream& os) {
    if (opts.format == "csv") {
      os << "i,digit,x,r,s,t,u,p,q,delta\n";
      for (const auto& st : payload["steps"]) {
        os << st["i"] << "," << (st.contains("digit") ? st["digit"].dump() : "")
           << "," << st.value("x", std::string("?"));
        if (st.contains("matrix"))
          os << "," << st["matrix"][0][0] << "," << st["matrix"][0][1] << ","
             << st["matrix"][1][0] << "," << st["matrix"][1][1];
        os << "," << (st.contains("p") ? st["p"].dump() : "")
           << "," << (st.contains("q") ? st["q"].dump() : "")
           << "," << (st.contains("delta") ? st["delta"].dump() : "") << "\n";
      }
    } else {
      for (const auto& st : payload["steps"]) os << st.dump() << "\n";
    }
  });
  return kExitOk;
}

int cmd_forms(const CommonOpts& opts, const Int& D, const std::string& kind, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  Json payload = Json::object();
  if (kind == "simple" || kind == "both") {
    Json arr = Json::array();
    for (const auto& q : enumerate_forms(D, FormKind::simple)) arr.push_back(to_json(q));
    payload["simple"] = arr;
  }
  if (kind == "reduced" || kind == "both") {
    Json arr = Json::array();
    for (const auto& q : enumerate_forms(D, FormKind::reduced)) arr.push_back(to_json(q));
    payload["reduced"] = arr;
  }
  payload["D"] = json_int(D);
  emit(out, opts, payload, meta_block(opts, 0, start), [&](std::ostream& os) {
    os << payload.dump(2) << "\n";
  });
  return kExitOk;
}

int cmd_classes(const CommonOpts& opts, const Int& D, const std::string& group,
                std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  Group g = group == "gamma" ? Group::gamma : Group::gamma1;
  Json payload = class_dump(D, g, class_decomposition(D, g));
  emit(out, opts, payload, meta_block(opts, 0, start),
       [&](std::ostream& os) { os << payload.dump(2) << "\n"; });
  return kExitOk;
}

int cmd_sum(const CommonOpts& opts, const Int& D, int k, const std::string& rep_name,
            long class_index, bool ledger, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  Representation rep = parse_representation(rep_name);
  Json payload;
  int retries = 0;
  int rc = with_precision_retries(opts, [&](const Real& x) {
    SumRequest req;
    req.D = D;
    req.k = k;
    req.x = x;
    req.tol = rat_from_decimal(opts.tol);
    req.depth = opts.depth;
    req.representation = rep;
    req.with_ledger = ledger;
    if (rep == Representation::gamma1_conditioned ||
        rep == Representation::gamma1_unconditioned || class_index >= 0) {
      Group g = (rep == Representation::gamma1_conditioned ||
                 rep == Representation::gamma1_unconditioned)
                    ? Group::gamma1
                    : Group::gamma;
      auto classes = class_decomposition(D, g);
      long idx = class_index >= 0 ? class_index : 0;
      if (idx >= static_cast<long>(classes.size()))
        throw DomainError("class index out of range");
      req.cls = classes[idx];
    }
    SumResult res = a_sum_stream(req);
    payload = to_json(res, opts.digits);
    payload["D"] = json_int(D);
    payload["k"] = k;
    payload["x"] = opts.x_expr;
    payload["representation"] = rep_name;
  }, retries);
  if (rc != kExitOk) return rc;
  emit(out, opts, payload, meta_block(opts, retries, start), [&](std::ostream& os) {
    os << "A_{" << k << "," << D << "}(" << opts.x_expr << ") = " << payload["value"].get<std::string>()
       << "  (error bound " << payload["error_bound"].get<double>() << ", " << payload["terms"]
       << " terms, " << (payload["exact"].get<bool>() ? "exact" : "truncated") << ")\n";
  });
  return kExitOk;
}

int cmd_lists(const CommonOpts& opts, const Int& D, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  Json payload;
  int retries = 0;
  int rc = with_precision_retries(opts, [&](const Real& x) {
    ZagierTables tables = zagier_lists(D, x, opts.depth);
    payload = to_json(tables, opts.digits);
    payload["D"] = json_int(D);
    payload["x"] = opts.x_expr;
  }, retries);
  if (rc != kExitOk) return rc;
  emit(out, opts, payload, meta_block(opts, retries, start), [&](std::ostream& os) {
    if (opts.format == "csv") {
      os << "list,i,form,value,cond_infinity,cond_floor,included\n";
      int list_no = 0;
      for (const auto& list : payload["lists"]) {
        ++list_no;
        for (const auto& row : list["rows"]) {
          os << list_no << "," << row["i"] << ",\"" << row["form"].dump() << "\","
             << row["value"].get<std::string>() << "," << row["cond_infinity"] << ","
             << row["cond_floor"] << "," << row["included"] << "\n";
        }
      }
    } else {
      for (const auto& list : payload["lists"]) {
        os << "orbit of " << list["base"].dump() << ":\n";
        for (const auto& row : list["rows"]) {
          if (!row["included"].get<bool>()) continue;
          os << "  " << row["form"].dump() << "  " << row["value"].get<std::string>() << "\n";
        }
        os << "  sum: " << list["included_sum"].get<std::string>() << "\n";
      }
      os << "total: " << payload["total"].get<std::string>() << "\n";
    }
  });
  return kExitOk;
}

int cmd_periods(const CommonOpts& opts, const Int& D, int k, const std::string& scope,
                long class_index, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  IntPoly P;
  if (scope == "disc") {
    P = disc_period_polynomial(D, k);
  } else if (scope == "gamma") {
    auto classes = class_decomposition(D, Group::gamma);
    long idx = class_index >= 0 ? class_index : 0;
    if (idx >= static_cast<long>(classes.size())) throw DomainError("class index out of range");
    P = class_period_polynomial(classes[idx], k);
  } else if (scope == "gamma1") {
    auto classes = class_decomposition(D, Group::gamma1);
    long idx = class_index >= 0 ? class_index : 0;
    if (idx >= static_cast<long>(classes.size())) throw DomainError("class index out of range");
    P = gamma1_period_polynomial(classes[idx], k);
  } else {
    throw DomainError("unknown scope: " + scope);
  }
  CocycleResult cc = cocycle_check(P, 2 * k - 2);
  Json payload{{"D", json_int(D)},
               {"k", k},
               {"scope", scope},
               {"polynomial", to_json(P)},
               {"display", P.str()},
               {"cocycle_pass", cc.pass}};
  if (k % 2 == 0) {
    payload["l_value_arg"] = -(k - 1);
    payload["l_value"] = l_value(D, 1 - k).str();
  }
  emit(out, opts, payload, meta_block(opts, 0, start),
       [&](std::ostream& os) { os << payload.dump(2) << "\n"; });
  return kExitOk;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, const Int& Dmax,
               std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  CheckList results;
  if (suite == "all") {
    results = run_all_checks(opts.seed);
  } else if (suite == "zagier") {
    results.push_back(check_zagier_tables());
  } else if (suite == "constant") {
    results.push_back(check_constant_value(Dmax.is_zero() ? Int(30) : Dmax));
  } else if (suite == "weight6") {
    results.push_back(check_weight6_failure());
  } else if (suite == "representations") {
    results.push_back(check_representation_equivalence(opts.seed));
  } else if (suite == "bijections") {
    results.push_back(check_bijection_audits(Dmax.is_zero() ? Int(50) : Dmax));
  } else if (suite == "cocycle") {
    results.push_back(check_cocycles(Dmax.is_zero() ? Int(50) : Dmax));
  } else if (suite == "lvalue") {
    results.push_back(check_dual_l_oracle(Dmax.is_zero() ? Int(200) : Dmax));
  } else if (suite == "counts") {
    results.push_back(check_counts_and_cycles(Dmax.is_zero() ? Int(200) : Dmax,
                                              Dmax.is_zero() ? Int(100) : std::min(Dmax, Int(100))));
  } else if (suite == "streams") {
    results.push_back(check_stream_laws());
  } else if (suite == "identities") {
    results.push_back(check_sum_identities());
  } else {
    err << "unknown suite: " << suite << "\n";
    return kExitUsage;
  }
  bool all_pass = true;
  Json items = Json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    items.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  Json payload{{"pass", all_pass}, {"checks", items}};
  emit(out, opts, payload, meta_block(opts, 0, start), [&](std::ostream& os) {
    for (const auto& r : results)
      os << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
  });
  return all_pass ? kExitOk : kExitAudit;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact reduction-theory sums over binary quadratic forms"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string D_str = "5";
  int k = 2;
  std::string algo = "plus";
  long limit = 32;
  bool paper_literal = false;
  std::string kind = "both";
  std::string group = "gamma1";
  std::string representation = "simple";
  long class_index = -1;
  bool ledger = false;
  std::string scope = "disc";
  std::string suite = "all";
  std::string Dmax_str = "0";

  auto add_common = [&](CLI::App* cmd, bool with_x) {
    if (with_x) cmd->add_option("--x", opts.x_expr, "real argument expression")->required();
    cmd->add_option("--prec", opts.prec, "starting precision in bits");
    cmd->add_option("--prec-cap", opts.prec_cap, "precision retry cap in bits");
    cmd->add_option("--tol", opts.tol, "truncation tolerance");
    cmd->add_option("--depth", opts.depth, "stream depth cap");
    cmd->add_option("--format", opts.format, "output format: table|json|csv");
    cmd->add_option("--digits", opts.digits, "display digits");
    cmd->add_option("--seed", opts.seed, "seed for sampled audits");
  };

  CLI::App* cf = app.add_subcommand("cf", "continued fraction step streams");
  add_common(cf, true);
  cf->add_option("--algo", algo, "plus|minus|slowplus|slowsimple");
  cf->add_option("--limit", limit, "maximum steps");
  cf->add_flag("--paper-literal", paper_literal,
               "diagnostic ceil+1 digit rule for the negative expansion");

  CLI::App* forms = app.add_subcommand("forms", "enumerate simple/reduced forms");
  add_common(forms, false);
  forms->add_option("--D", D_str, "discriminant")->required();
  forms->add_option("--kind", kind, "simple|reduced|both");

  CLI::App* classes = app.add_subcommand("classes", "cycle/class decomposition");
  add_common(classes, false);
  classes->add_option("--D", D_str, "discriminant")->required();
  classes->add_option("--group", group, "gamma|gamma1");

  CLI::App* sum = app.add_subcommand("sum", "power sums over forms");
  add_common(sum, true);
  sum->add_option("--D", D_str, "discriminant")->required();
  sum->add_option("--k", k, "weight parameter (terms Q(x)^(k-1))");
  sum->add_option("--representation", representation,
                  "direct|simple|reduced|unconditioned|gamma1|gamma1-unconditioned");
  sum->add_option("--class-index", class_index, "restrict to one class");
  sum->add_flag("--ledger", ledger, "emit the per-term ledger");

  CLI::App* lists = app.add_subcommand("lists", "orbit tables of included/excluded terms");
  add_common(lists, true);
  lists->add_option("--D", D_str, "discriminant")->required();

  CLI::App* periods = app.add_subcommand("periods", "period polynomials and L-values");
  add_common(periods, false);
  periods->add_option("--D", D_str, "discriminant")->required();
  periods->add_option("--k", k, "weight parameter");
  periods->add_option("--scope", scope, "disc|gamma|gamma1");
  periods->add_option("--class-index", class_index, "class selector");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, false);
  verify->add_option("--suite", suite,
                     "all|zagier|constant|weight6|representations|bijections|cocycle|lvalue|"
                     "counts|streams|identities");
  verify->add_option("--Dmax", Dmax_str, "discriminant bound override");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Int D(D_str);
    if (cf->parsed()) return cmd_cf(opts, algo, limit, paper_literal, out);
    if (forms->parsed()) return cmd_forms(opts, D, kind, out);
    if (classes->parsed()) return cmd_classes(opts, D, group, out);
    if (sum->parsed()) return cmd_sum(opts, D, k, representation, class_index, ledger, out);
    if (lists->parsed()) return cmd_lists(opts, D, out);
    if (periods->parsed()) return cmd_periods(opts, D, k, scope, class_index, out);
    if (verify->parsed()) return cmd_verify(opts, suite, Int(Dmax_str), out, err);
  } catch (const AuditFailure& e) {
    err << "audit failure: " << e.what() << "\n";
    return kExitAudit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qp
