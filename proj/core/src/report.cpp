#include "imaged/report.hpp"

#include "json.hpp"

#ifndef IMAGED_VERSION
#define IMAGED_VERSION "0.0.0"
#endif

namespace imaged {

namespace {

using nlohmann::ordered_json;

ordered_json search_fields(const SearchReport& r) {
  ordered_json j;
  j["outcome"] = to_string(r.outcome);
  j["nodesVisited"] = r.nodes_visited;
  j["maxDepth"] = r.max_depth;
  j["deepestWord"] = r.deepest_word.str();
  j["ruleFireCounts"] = r.rule_fires;
  j["capHits"] = r.cap_hits;
  return j;
}

}  // namespace

const char* version() { return IMAGED_VERSION; }

const Stage* Report::failed_stage() const {
  for (const auto& s : stages) {
    if (!s.pass) {
      return &s;
    }
  }
  return nullptr;
}

std::string Report::to_json(bool with_timing, int indent) const {
  ordered_json j;
  j["theorem"] = theorem;
  j["pass"] = pass;
  ordered_json stages_json = ordered_json::array();
  for (const auto& s : stages) {
    ordered_json sj;
    sj["name"] = s.name;
    sj["pass"] = s.pass;
    if (!s.counterexample.empty()) {
      sj["counterexample"] = s.counterexample;
    }
    sj["counts"] = s.counts;
    if (!s.detail.empty()) {
      sj["detail"] = s.detail;
    }
    if (with_timing) {
      sj["elapsedMs"] = s.elapsed_ms;
    }
    stages_json.push_back(std::move(sj));
  }
  j["stages"] = std::move(stages_json);
  if (search) {
    const auto sf = search_fields(*search);
    j["nodesVisited"] = sf["nodesVisited"];
    j["maxDepth"] = sf["maxDepth"];
    j["search"] = sf;
  }
  if (with_timing) {
    j["elapsedMs"] = elapsed_ms;
  }
  j["version"] = version();
  return j.dump(indent);
}

std::string search_report_json(const SearchReport& r, int indent) { return search_fields(r).dump(indent); }

}  // namespace imaged
