#pragma once

#include <string>

#include <json.hpp>

#include "hamseq/graph.hpp"
#include "hamseq/verify.hpp"

namespace hamseq {

inline nlohmann::json graph_to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return nlohmann::json{{"n", g.order()}, {"edges", std::move(edges)}};
}

// Stable report schema; absent fields are emitted as null.
inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json out;
  out["sequence"] = r.sequence.values();
  out["graphical"] = r.graphical;
  out["chvatal"] = {
      {"satisfied", r.chvatal.satisfied},
      {"failing_k",
       r.chvatal.failing_k.has_value() ? nlohmann::json(*r.chvatal.failing_k) : nlohmann::json()},
  };
  out["nw_shape_k"] = r.nw_shape_k.has_value() ? nlohmann::json(*r.nw_shape_k) : nlohmann::json();
  out["exception"] = r.exception;
  out["verdict"] = std::string(to_string(r.verdict));
  out["counterexample"] =
      r.counterexample.has_value() ? graph_to_json(*r.counterexample) : nlohmann::json();
  out["realizations_checked"] = r.realizations_checked;
  out["closure_accepts"] = r.closure_accepts;
  return out;
}

}  // namespace hamseq
