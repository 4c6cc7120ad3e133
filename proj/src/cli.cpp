#include "oag/cli.hpp"

#include "oag/report.hpp"
#include "oag/syntax.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>

namespace oag::cli {
namespace {

struct Options {
  std::string spec, elem, formula, params, hints;
  std::int64_t n = 2;
  int oracle_radius = -1;
  std::uint64_t p = 2;
  std::size_t depth = 1, width = 3, grid = 3, paths = 1000;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  bool json = false, verify = false;
};

std::string join_cuts(const std::vector<ConvexCut>& cuts) {
  std::string out;
  for (ConvexCut c : cuts) out += (out.empty() ? "" : ", ") + to_string(c);
  return out;
}

int analyze_cmd(const Options& o, std::ostream& out) {
  Analysis a = analyze(parse_spec(o.spec));
  if (o.json) {
    out << to_json(a).dump(2) << "\n";
    return kOk;
  }
  out << "spec: " << to_string(a.spec) << "\n";
  std::string primes;
  for (auto p : a.singular) primes += (primes.empty() ? "" : ", ") + std::to_string(p);
  out << "singular primes: {" << primes << "}\n";
  for (const PrimeSorts& ps : a.sorts) {
    out << "S_" << ps.p << ": raw " << ps.raw.size() << " [" << join_cuts(ps.raw) << "], collapsed "
        << ps.collapsed.size() << " [";
    for (std::size_t i = 0; i < ps.collapsed.size(); ++i)
      out << (i ? ", " : "") << "{" << join_cuts(ps.collapsed[i]) << "}";
    out << "]\n";
  }
  out << "dp-rank bound: " << a.bound.bound << "\n";
  out << "strongly dependent: " << (a.bound.strongly_dependent ? "yes" : "no") << "\n";
  return kOk;
}

int hsub_cmd(const Options& o, std::ostream& out) {
  GroupSpec spec = parse_spec(o.spec);
  if (o.n < 1) throw ParseError("--n must be positive", 0);
  ConvexCut cut = hsub(parse_element(o.elem, spec), o.n);
  if (o.json)
    out << Json{{"n", o.n}, {"cut", cut.s}, {"subgroup", cut.describe()}}.dump(2) << "\n";
  else
    out << to_string(cut) << " (" << cut.describe() << ")\n";
  return kOk;
}

int status_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return kOk;
    case SolveStatus::Unsat: return kNegative;
    case SolveStatus::Unknown: return kUnknown;
  }
  return kUnknown;
}

int solve_cmd(const Options& o, std::ostream& out) {
  GroupSpec spec = parse_spec(o.spec);
  Conjunction conj{spec, parse_formula(o.formula), parse_params(o.params, spec)};
  SolveResult result = solve(conj);
  std::optional<Element> oracle;
  if (o.oracle_radius >= 0) oracle = oracle_search(conj, o.oracle_radius);
  if (o.json) {
    Json j = to_json(result);
    if (o.oracle_radius >= 0)
      j["oracle"] = {{"radius", o.oracle_radius},
                     {"witness", oracle ? Json(to_string(*oracle)) : Json(nullptr)}};
    out << j.dump(2) << "\n";
  } else {
    out << to_string(result.status) << "\n";
    if (result.witness) out << "witness: " << to_string(*result.witness) << "\n";
    for (const CertificateEntry& e : result.certificate) {
      out << "certificate: " << e.kind << " coord " << e.coordinate << " b" << e.basis << " mod "
          << e.modulus;
      for (const auto& [r, lit] : e.excluded) out << " " << r << ":L" << lit;
      if (!e.detail.empty()) out << " (" << e.detail << ")";
      out << "\n";
    }
    if (!result.reason.empty()) out << "reason: " << result.reason << "\n";
    if (o.oracle_radius >= 0)
      out << "oracle radius " << o.oracle_radius << ": "
          << (oracle ? "witness " + to_string(*oracle) : std::string("no witness")) << "\n";
  }
  return status_exit(result.status);
}

int normalize_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<Literal> formula = parse_formula(o.formula);
  std::vector<Element> params, hints;
  if (!o.spec.empty()) {
    GroupSpec spec = parse_spec(o.spec);
    params = parse_params(o.params, spec);
    hints = parse_params(o.hints, spec);
  } else if (!o.params.empty() || !o.hints.empty()) {
    throw ParseError("--params and --hints need --spec", 0);
  }
  Json all = Json::array();
  std::vector<Literal> result;
  for (const Literal& lit : formula) {
    if (lit.kind != LiteralKind::Cong) {
      result.push_back(lit);
      continue;
    }
    NormalizeResult r;
    try {
      r = normalize_type_I(lit, params, hints);
    } catch (const PreconditionError& e) {
      err << "unsatisfiable: " << to_string(lit) << ": " << e.what() << "\n";
      return kNegative;
    }
    if (o.json) {
      all.push_back(to_json(r));
    } else {
      for (const RewriteStep& step : r.steps)
        out << step.op << ": " << to_string(step.before) << "  =>  " << to_string(step.after)
            << "\n";
    }
    params = r.params;
    result.insert(result.end(), r.literals.begin(), r.literals.end());
  }
  if (o.json) {
    Json p = Json::array();
    for (const Element& e : params) p.push_back(to_string(e));
    out << Json{{"literals", std::move(all)}, {"result", to_string(result)}, {"params", p}}.dump(2)
        << "\n";
  } else {
    out << "result: " << to_string(result) << "\n";
    for (std::size_t i = 0; i < params.size(); ++i)
      out << "a" << i << " = " << to_string(params[i]) << "\n";
  }
  return kOk;
}

int pattern_cmd(const InpPattern& pattern, const Options& o, std::ostream& out) {
  if (!o.verify) {
    if (o.json)
      out << Json{{"pattern", to_json(pattern)}}.dump(2) << "\n";
    else
      for (const PatternRow& row : pattern.rows)
        out << row.label << ": " << to_string(row.formula) << " (" << row.columns.size()
            << " columns)\n";
    return kOk;
  }
  VerificationReport report = verify(pattern, o.paths, o.seed, o.threads);
  if (o.json) {
    out << Json{{"pattern", to_json(pattern)}, {"report", to_json(report)}}.dump(2) << "\n";
  } else {
    out << "spec: " << to_string(pattern.group) << "\n";
    for (const RowReport& row : report.rows)
      out << pattern.rows[row.index].label << ": " << to_string(pattern.rows[row.index].formula)
          << "  " << row.k << "-inconsistent: " << to_string(row.verdict) << "\n";
    std::size_t sat = std::count_if(report.paths.begin(), report.paths.end(), [](const auto& p) {
      return p.status == SolveStatus::Sat && p.witness_confirmed;
    });
    out << "paths: " << sat << "/" << report.paths.size() << " SAT with confirmed witness"
        << (report.sampled ? " (sampled from " + std::to_string(report.total_paths) +
                                 ", seed " + std::to_string(report.seed) + ")"
                           : "")
        << "\n";
    out << "sp lemma: " << (report.structural.sp_lemma ? "holds" : "fails")
        << ", convex rows: " << report.structural.convex_rows << "\n";
    for (const std::string& u : report.unknowns) out << "unknown: " << u << "\n";
    out << "depth " << report.depth << (report.verified ? " verified" : " NOT verified") << "\n";
  }
  if (report.verified) return kOk;
  return report.unknowns.empty() ? kNegative : kUnknown;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered abelian groups: invariants, formula solving and inp-pattern checks", "oag"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "singular primes, sorts and dp-rank bound");
  analyze->add_option("--spec", o.spec, "group, e.g. lex(Q, Gp(2)^2)")->required();
  analyze->add_flag("--json", o.json);

  auto* hsub = app.add_subcommand("hsub", "the convex subgroup H_n(a)");
  hsub->add_option("--spec", o.spec)->required();
  hsub->add_option("--n", o.n)->required();
  hsub->add_option("--elem", o.elem, "element, e.g. (1/2 | b0 + 2*b1)")->required();
  hsub->add_flag("--json", o.json);

  auto* solve = app.add_subcommand("solve", "decide a conjunction of literals in x");
  solve->add_option("--spec", o.spec)->required();
  solve->add_option("--formula", o.formula)->required();
  solve->add_option("--params", o.params, "parameter elements a0, a1, ...");
  solve->add_option("--oracle-radius", o.oracle_radius, "also run the brute-force search");
  solve->add_flag("--json", o.json);

  auto* normalize = app.add_subcommand("normalize", "rewrite congruences to x == t mod (p^l, alpha)");
  normalize->add_option("--formula", o.formula)->required();
  normalize->add_option("--params", o.params);
  normalize->add_option("--spec", o.spec, "needed to read --params / --hints");
  normalize->add_option("--hints", o.hints, "elements a' used by reduce_k_prime");
  normalize->add_flag("--json", o.json);

  auto* pattern = app.add_subcommand("pattern", "generate and verify inp-patterns");
  pattern->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--verify", o.verify);
    sub->add_option("--paths", o.paths, "path budget before sampling");
    sub->add_option("--seed", o.seed, "sampling seed")->envname("OAG_SEED");
    sub->add_option("--threads", o.threads, "0 = hardware concurrency");
    sub->add_flag("--json", o.json);
  };
  auto* chain = pattern->add_subcommand("chain", "single-prime chain pattern");
  chain->add_option("--p", o.p)->required();
  chain->add_option("--depth", o.depth)->required();
  chain->add_option("--width", o.width);
  add_common(chain);
  auto* optimal = pattern->add_subcommand("optimal", "pattern of depth 1 + sum k_i");
  optimal->add_option("--spec", o.spec)->required();
  optimal->add_option("--grid", o.grid);
  add_common(optimal);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (analyze->parsed()) return analyze_cmd(o, out);
    if (hsub->parsed()) return hsub_cmd(o, out);
    if (solve->parsed()) return solve_cmd(o, out);
    if (normalize->parsed()) return normalize_cmd(o, out, err);
    if (chain->parsed()) return pattern_cmd(gen_chain_pattern(o.p, o.depth, o.width), o, out);
    if (optimal->parsed()) return pattern_cmd(gen_optimal_pattern(parse_spec(o.spec), o.grid), o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}

}  // namespace oag::cli
