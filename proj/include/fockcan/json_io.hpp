#pragma once

#include "fockcan/cato.hpp"

namespace fockcan {

// Exponent -> coefficient map with string values, so coefficients survive
// any magnitude exactly.
inline nlohmann::json laurent_json(const Laurent& c) {
  nlohmann::json o = nlohmann::json::object();
  for (const auto& [e, v] : c.terms()) o[std::to_string(e)] = v.str();
  return o;
}

inline nlohmann::json weight_to_json(const Signature& sig, const Weight& f) {
  nlohmann::json blocks = nlohmann::json::array();
  int idx = 0;
  for (int b = 0; b < sig.block_count(); ++b) {
    nlohmann::json blk = nlohmann::json::array();
    for (int i = 0; i < sig.block_size(b); ++i, ++idx) blk.push_back(f[idx]);
    blocks.push_back(blk);
  }
  return blocks;
}

inline nlohmann::json vector_json(const FockVector& v) {
  nlohmann::json o;
  o["signature"] = v.sig().str();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [g, c] : v.terms()) {
    terms.push_back({{"weight", weight_to_json(v.sig(), g)},
                     {"coeff", laurent_json(c)},
                     {"text", weight_str(v.sig(), g)}});
  }
  o["terms"] = terms;
  return o;
}

inline nlohmann::json word_json(const OperatorWord& w) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& s : w)
    a.push_back({{"gen", s.gen == Gen::E ? "E" : "F"}, {"index", s.index}, {"power", s.power}});
  return a;
}

inline nlohmann::json table_json(const Signature& sig, const Engine::Table& t) {
  nlohmann::json o;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& f : t.weights) ws.push_back(weight_str(sig, f));
  o["weights"] = ws;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [rc, v] : t.entry)
    entries.push_back({{"row", rc.first}, {"col", rc.second}, {"coeff", laurent_json(v)}});
  o["entries"] = entries;
  return o;
}

inline nlohmann::json flag_report_json(const FlagReport& r) {
  nlohmann::json o;
  o["signature"] = r.sig.str();
  o["kind"] = flag_kind_str(r.kind);
  o["head"] = weight_str(r.sig, r.head);
  o["head_lambda"] = lambda_from_weight(r.sig, r.head);
  o["proven"] = r.proven;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"weight", weight_str(r.sig, row.f)},
                    {"lambda", lambda_from_weight(r.sig, row.f)},
                    {"mult", row.mult.str()}});
  }
  o["rows"] = rows;
  return o;
}

inline nlohmann::json duality_report_json(const DualityReport& r) {
  nlohmann::json o;
  o["classical_signature"] = r.classical_sig.str();
  o["super_signature"] = r.super_sig.str();
  o["head"] = weight_str(r.classical_sig, r.head);
  o["window_size"] = r.window_size;
  o["pairs_checked"] = r.pairs_checked;
  o["ok"] = r.ok();
  nlohmann::json ms = nlohmann::json::array();
  for (const auto& m : r.mismatches) {
    nlohmann::json e;
    e["classical_col"] = weight_str(r.classical_sig, m.classical_col);
    if (!m.classical_row.empty()) {
      e["classical_row"] = weight_str(r.classical_sig, m.classical_row);
      e["classical_value"] = laurent_json(m.classical_value);
    }
    e["super_row"] = weight_str(r.super_sig, m.super_row);
    e["super_value"] = laurent_json(m.super_value);
    ms.push_back(e);
  }
  o["mismatches"] = ms;
  return o;
}

}  // namespace fockcan
