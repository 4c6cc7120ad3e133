#include "oag/report.hpp"

#include "oag/syntax.hpp"

namespace oag {

Analysis analyze(const GroupSpec& spec) {
  Analysis out{spec, singular_primes(spec), {}, dp_rank_bound(spec)};
  for (std::uint64_t p : out.singular)
    out.sorts.push_back({p, sorts(spec, static_cast<std::int64_t>(p)), collapse_sorts(spec, p)});
  return out;
}

Json sort_json(std::uint64_t p, ConvexCut cut) {
  return {{"p", p}, {"cut", cut.s}, {"subgroup", cut.describe()}};
}

Json to_json(const Analysis& analysis) {
  Json sorts = Json::array();
  for (const PrimeSorts& ps : analysis.sorts) {
    Json raw = Json::array();
    for (ConvexCut cut : ps.raw) raw.push_back(sort_json(ps.p, cut));
    Json collapsed = Json::array();
    for (const auto& cls : ps.collapsed) {
      Json members = Json::array();
      for (ConvexCut cut : cls) members.push_back(sort_json(ps.p, cut));
      collapsed.push_back(std::move(members));
    }
    sorts.push_back({{"p", ps.p},
                     {"raw_count", ps.raw.size()},
                     {"collapsed_count", ps.collapsed.size()},
                     {"raw", std::move(raw)},
                     {"collapsed", std::move(collapsed)}});
  }
  return {{"spec", to_string(analysis.spec)},
          {"singular_primes", analysis.singular},
          {"sorts", std::move(sorts)},
          {"dp_rank_bound", analysis.bound.bound},
          {"strongly_dependent", analysis.bound.strongly_dependent}};
}

Json to_json(const CertificateEntry& entry) {
  Json excluded = Json::array();
  for (const auto& [residue, literal] : entry.excluded)
    excluded.push_back({{"residue", residue}, {"literal", literal}});
  return {{"kind", entry.kind},           {"coordinate", entry.coordinate},
          {"basis", entry.basis},         {"modulus", entry.modulus},
          {"excluded", std::move(excluded)}, {"detail", entry.detail}};
}

Json to_json(const SolveResult& result) {
  Json cert = Json::array();
  for (const CertificateEntry& entry : result.certificate) cert.push_back(to_json(entry));
  return {{"status", to_string(result.status)},
          {"witness", result.witness ? Json(to_string(*result.witness)) : Json(nullptr)},
          {"certificate", std::move(cert)},
          {"reason", result.reason}};
}

Json to_json(const NormalizeResult& result) {
  Json steps = Json::array();
  for (const RewriteStep& step : result.steps) {
    Json after = Json::array();
    for (const Literal& lit : step.after) after.push_back(to_string(lit));
    steps.push_back({{"op", step.op}, {"before", to_string(step.before)}, {"after", std::move(after)}});
  }
  Json params = Json::array();
  for (const Element& e : result.params) params.push_back(to_string(e));
  return {{"steps", std::move(steps)},
          {"result", to_string(result.literals)},
          {"params", std::move(params)}};
}

Json to_json(const InpPattern& pattern) {
  Json rows = Json::array();
  for (const PatternRow& row : pattern.rows) {
    Json columns = Json::array();
    for (const auto& column : row.columns) {
      Json params = Json::array();
      for (const Element& e : column) params.push_back(to_string(e));
      columns.push_back(std::move(params));
    }
    rows.push_back({{"label", row.label},
                    {"formula", to_string(row.formula)},
                    {"k", row.k},
                    {"columns", std::move(columns)}});
  }
  return {{"spec", to_string(pattern.group)}, {"depth", pattern.depth()}, {"rows", std::move(rows)}};
}

Json to_json(const VerificationReport& report) {
  Json rows = Json::array();
  for (const RowReport& row : report.rows) {
    Json subsets = Json::array();
    for (const SubsetResult& s : row.subsets) {
      Json r = to_json(s.result);
      subsets.push_back({{"columns", s.columns},
                         {"status", r["status"]},
                         {"certificate", r["certificate"]}});
    }
    rows.push_back({{"index", row.index},
                    {"k", row.k},
                    {"verdict", to_string(row.verdict)},
                    {"subsets", std::move(subsets)}});
  }
  Json paths = Json::array();
  for (const PathReport& path : report.paths) {
    paths.push_back({{"eta", path.eta},
                     {"status", to_string(path.status)},
                     {"witness", path.witness ? Json(to_string(*path.witness)) : Json(nullptr)},
                     {"witness_confirmed", path.witness_confirmed},
                     {"constructed_confirmed", path.constructed_confirmed
                                                   ? Json(*path.constructed_confirmed)
                                                   : Json(nullptr)}});
  }
  return {{"depth", report.depth},
          {"verified", report.verified},
          {"rows", std::move(rows)},
          {"paths", std::move(paths)},
          {"total_paths", report.total_paths},
          {"sampled", report.sampled},
          {"structural",
           {{"sp_lemma", report.structural.sp_lemma},
            {"convex_rows", report.structural.convex_rows}}},
          {"seed", report.seed},
          {"unknowns", report.unknowns}};
}

}  // namespace oag
