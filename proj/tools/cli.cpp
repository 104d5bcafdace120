#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "CLI11.hpp"
#include "class_expr.hpp"
#include "records.hpp"
#include "schubfire/errors.hpp"
#include "schubfire/format.hpp"
#include "schubfire/limiting.hpp"

namespace schubfire::cli {

namespace {

struct Options {
  int r = -1;
  int n = -1;
  int d = -1;
  int k = -1;
  std::string route = "direct";
  std::string format = "text";
  std::string basis = "schubert";
  std::string expr;
  bool latex = false;
  int r_max = -1;
  int n_max = -1;
  int d_max = -1;
  int jobs = 0;
};

template <typename F>
auto timed(std::map<std::string, double>& timings, const std::string& phase, F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto value = fn();
  timings[phase] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return value;
}

void emit(std::ostream& out, const Options& opt, const OutputRecord& record) {
  if (opt.format == "json") {
    out << to_json(record, opt.latex).dump() << '\n';
  } else {
    out << to_text(record, opt.latex);
  }
}

std::string status_of(long m) { return m < 0 ? "negative_expected_dimension" : "ok"; }

int cmd_count(const Options& opt, std::ostream& out) {
  const ProblemParams params{opt.r, opt.n, opt.d, std::nullopt};
  params.validate();
  check_guardrail(opt.r, opt.d);
  OutputRecord record{.params = params, .total = ChowClass::zero(GrassCtx::get(opt.r, opt.n))};
  record.m = expected_dim(opt.r, opt.n, opt.d);
  record.total = timed(record.timings_ms, "total_class", [&] { return total_class(opt.r, opt.n, opt.d); });
  record.generically_empty = record.total.is_zero();
  if (record.m == 0) record.total_count = integral(record.total);
  record.status = status_of(record.m);
  emit(out, opt, record);
  return kExitOk;
}

int cmd_split(const Options& opt, std::ostream& out) {
  const ProblemParams params{opt.r, opt.n, opt.d, opt.k};
  params.validate();
  check_guardrail(opt.r, opt.d);
  const Route route = parse_route(opt.route);
  const int r = opt.r, n = opt.n, d = opt.d, k = opt.k, l = params.l();

  OutputRecord record{.params = params, .total = ChowClass::zero(GrassCtx::get(r, n))};
  record.m = expected_dim(r, n, d);
  record.route = route;
  record.total = timed(record.timings_ms, "total_class", [&] { return total_class(r, n, d); });
  record.generically_empty = record.total.is_zero();
  const auto primary = [&](int deg) {
    return route == Route::ProjectiveBundle ? sigma_pb(r, n, d, deg) : sigma_direct(r, n, d, deg);
  };
  record.sigma_k = timed(record.timings_ms, "sigma", [&] { return primary(k); });
  record.sigma_l = primary(l);
  if (route == Route::Both) {
    record.routes_agree = timed(record.timings_ms, "cross_check", [&] {
      return sigma_pb(r, n, d, k) == *record.sigma_k && sigma_pb(r, n, d, l) == *record.sigma_l;
    });
  }
  record.identity_ok = *record.sigma_k + *record.sigma_l == record.total;
  if (record.m == 0) {
    record.total_count = integral(record.total);
    record.count_k = integral(*record.sigma_k);
    record.count_l = integral(*record.sigma_l);
  }
  record.status = status_of(record.m);
  emit(out, opt, record);
  const bool ok = *record.identity_ok && record.routes_agree.value_or(true);
  return ok ? kExitOk : kExitVerification;
}

int cmd_class(const Options& opt, std::ostream& out) {
  if (opt.basis != "schubert" && opt.basis != "chern") {
    throw ParseError("unknown basis '" + opt.basis + "'");
  }
  const auto ctx = GrassCtx::get(opt.r, opt.n);
  const ClassExpr expr = parse_class_expr(opt.expr);
  Json value;
  std::string rendered;
  if (opt.basis == "schubert") {
    const ChowClass a = evaluate(expr, GrassRing(ctx));
    value = schubert_json(a);
    rendered = format_schubert(a, opt.latex);
  } else {
    const Polynomial p = evaluate(expr, UniversalRing(ctx->k(), ctx->dim()));
    value = chern_json(p);
    rendered = format_chern(p, opt.latex);
  }
  if (opt.format == "json") {
    Json record{{"params", {{"r", opt.r}, {"n", opt.n}}},
                {"expr", opt.expr},
                {"basis", opt.basis},
                {"class", value}};
    if (opt.latex) record["class_latex"] = rendered;
    out << record.dump() << '\n';
  } else {
    out << rendered << '\n';
  }
  return kExitOk;
}

struct SweepPoint {
  int r, n, d, k;
  bool skipped = false;
  bool identity_ok = false;
  std::optional<bool> routes_agree;
};

int cmd_verify(const Options& opt, std::ostream& out) {
  if (opt.r_max < 0 || opt.n_max < 1 || opt.d_max < 2) {
    throw std::invalid_argument("verify needs --r-max >= 0, --n-max >= 1 and --d-max >= 2");
  }
  const Route route = parse_route(opt.route);
  std::vector<SweepPoint> points;
  for (int r = 0; r <= opt.r_max; ++r) {
    for (int n = r + 1; n <= opt.n_max; ++n) {
      for (int d = 2; d <= opt.d_max; ++d) {
        for (int k = 1; k < d; ++k) points.push_back({r, n, d, k});
      }
    }
  }
  const long cap = rank_cap();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = opt.jobs > 0 ? static_cast<unsigned>(opt.jobs) : hw;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      SweepPoint& p = points[i];
      if (binomial(p.r + p.d, p.r) > cap) {
        p.skipped = true;
        continue;
      }
      const ChowClass sk = route == Route::ProjectiveBundle ? sigma_pb(p.r, p.n, p.d, p.k)
                                                             : sigma_direct(p.r, p.n, p.d, p.k);
      const ChowClass sl = route == Route::ProjectiveBundle ? sigma_pb(p.r, p.n, p.d, p.d - p.k)
                                                             : sigma_direct(p.r, p.n, p.d, p.d - p.k);
      p.identity_ok = sk + sl == total_class(p.r, p.n, p.d);
      if (route == Route::Both) {
        p.routes_agree = sigma_pb(p.r, p.n, p.d, p.k) == sk && sigma_pb(p.r, p.n, p.d, p.d - p.k) == sl;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::min<std::size_t>(workers, points.size()); ++t) pool.emplace_back(work);
    work();
  }

  std::size_t failures = 0, skipped = 0;
  Json rows = Json::array();
  for (const SweepPoint& p : points) {
    const bool ok = p.skipped || (p.identity_ok && p.routes_agree.value_or(true));
    failures += !ok;
    skipped += p.skipped;
    if (opt.format == "json") {
      Json row{{"params", {{"r", p.r}, {"n", p.n}, {"d", p.d}, {"k", p.k}, {"l", p.d - p.k}}},
               {"skipped", p.skipped}};
      if (!p.skipped) row["identity_ok"] = p.identity_ok;
      if (p.routes_agree) row["routes_agree"] = *p.routes_agree;
      rows.push_back(row);
    } else {
      out << "r=" << p.r << " n=" << p.n << " d=" << p.d << " k=" << p.k << ' ';
      if (p.skipped) {
        out << "skipped\n";
      } else {
        out << "identity_ok=" << (p.identity_ok ? "true" : "false");
        if (p.routes_agree) out << " routes_agree=" << (*p.routes_agree ? "true" : "false");
        out << '\n';
      }
    }
  }
  if (opt.format == "json") {
    Json report{{"route", to_string(route)},
                {"points", rows},
                {"checked", points.size() - skipped},
                {"skipped", skipped},
                {"failures", failures},
                {"all_ok", failures == 0}};
    out << report.dump() << '\n';
  } else {
    out << "checked: " << points.size() - skipped << '\n'
        << "skipped: " << skipped << '\n'
        << "failures: " << failures << '\n'
        << "all_ok: " << (failures == 0 ? "true" : "false") << '\n';
  }
  return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Counts and limiting classes of linear subspaces on hypersurfaces", "schubfire"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"text", "json"});

  auto* count = app.add_subcommand("count", "c_top(Sym^d U*) on G(r+1, n+1) and its degree");
  count->add_option("--r", opt.r, "Dimension of the linear subspaces")->required();
  count->add_option("--n", opt.n, "Dimension of the ambient projective space")->required();
  count->add_option("--d", opt.d, "Degree of the hypersurface")->required();

  auto* split = app.add_subcommand("split", "Limiting classes for a degeneration into degrees k and d - k");
  split->add_option("--r", opt.r)->required();
  split->add_option("--n", opt.n)->required();
  split->add_option("--d", opt.d)->required();
  split->add_option("--k", opt.k, "Degree of the first component")->required();
  split->add_option("--route", opt.route, "direct, pb or both")->check(CLI::IsMember({"direct", "pb", "both"}));

  auto* klass = app.add_subcommand("class", "Evaluate a class expression on G(r+1, n+1)");
  klass->add_option("--expr", opt.expr, "e.g. \"ctop(sym(2,Ustar))\"")->required();
  klass->add_option("--r", opt.r)->required();
  klass->add_option("--n", opt.n)->required();
  klass->add_option("--basis", opt.basis, "schubert or chern")->check(CLI::IsMember({"schubert", "chern"}));

  auto* verify = app.add_subcommand("verify", "Check sigma_K + sigma_L = c_top(Sym^d U*) over a grid");
  verify->add_option("--r-max", opt.r_max)->required();
  verify->add_option("--n-max", opt.n_max)->required();
  verify->add_option("--d-max", opt.d_max)->required();
  verify->add_option("--route", opt.route, "direct, pb or both")->check(CLI::IsMember({"direct", "pb", "both"}));
  verify->add_option("--jobs", opt.jobs, "Worker threads (default: hardware concurrency)");

  for (auto* sub : {count, split, klass, verify}) {
    sub->add_option("--format", opt.format, "text or json")->check(format_check);
    sub->add_flag("--latex", opt.latex, "Render classes in LaTeX");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = e.get_exit_code();
    if (code == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(opt, out);
    if (*split) return cmd_split(opt, out);
    if (*klass) return cmd_class(opt, out);
    if (*verify) return cmd_verify(opt, out);
  } catch (const GuardrailError& e) {
    err << "guardrail: " << e.what() << '\n';
    return kExitGuardrail;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace schubfire::cli
