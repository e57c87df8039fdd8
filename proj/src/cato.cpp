#include "fockcan/cato.hpp"

#include <algorithm>

namespace fockcan {

namespace {

bool shape_11n(const Signature& sig) {
  return sig.kind() == Kind::Super && sig.neg_blocks() == std::vector<int>{1, 1} &&
         sig.pos_blocks().size() == 1;
}

bool shape_m11(const Signature& sig) {
  return sig.kind() == Kind::Super && sig.neg_blocks().size() == 2 &&
         sig.neg_blocks()[1] == 1 && sig.pos_blocks() == std::vector<int>{1};
}

bool proven_weight(const Signature& sig, const Weight& f) {
  if (sig.kind() == Kind::Classical) return true;
  if (shape_11n(sig) || shape_m11(sig)) return true;
  if (is_typical(sig, f)) return true;
  return sig.neg_blocks().size() == 2 && sig.pos_blocks().size() <= 2 &&
         has_isolated_matches(sig, f);
}

void sort_rows(std::vector<FlagRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const FlagRow& a, const FlagRow& b) { return a.f < b.f; });
}

}  // namespace

FlagKind parse_flag_kind(const std::string& name) {
  if (name == "tilting") return FlagKind::Tilting;
  if (name == "verma") return FlagKind::Verma;
  if (name == "irreducible") return FlagKind::Irreducible;
  if (name == "projective") return FlagKind::Projective;
  throw Error("Parse", "unknown flag kind: " + name);
}

std::string flag_kind_str(FlagKind k) {
  switch (k) {
    case FlagKind::Tilting: return "tilting";
    case FlagKind::Verma: return "verma";
    case FlagKind::Irreducible: return "irreducible";
    case FlagKind::Projective: return "projective";
  }
  throw Error("Parse", "bad flag kind");
}

FlagReport character_flag(const Signature& sig, FlagKind kind, const Weight& f,
                          const EngineOptions& opt) {
  if (!is_dominant(sig, f))
    throw Error("NotDominant", weight_str(sig, f) + " is not dominant");
  FlagReport rep{sig, kind, f, {}, true};
  switch (kind) {
    case FlagKind::Tilting: {
      Engine eng(sig, f, opt);
      for (const auto& [g, c] : eng.canonical(f).terms()) {
        Int m = c.eval_one();
        if (m != 0) rep.rows.push_back({g, m});
      }
      rep.proven = proven_weight(sig, f);
      break;
    }
    case FlagKind::Irreducible: {
      Engine eng(sig, f, opt);
      for (const auto& [g, c] : eng.dual_canonical(f).terms()) {
        Int m = c.eval_one();
        if (m != 0) rep.rows.push_back({g, m});
      }
      rep.proven = proven_weight(sig, f);
      break;
    }
    case FlagKind::Projective: {
      const Weight nf = negate_weight(sig, f);
      Engine eng(sig, nf, opt);
      for (const auto& [g, c] : eng.canonical(nf).terms()) {
        Int m = c.eval_one();
        if (m != 0) rep.rows.push_back({negate_weight(sig, g), m});
      }
      rep.proven = proven_weight(sig, nf);
      break;
    }
    case FlagKind::Verma: {
      const Weight nf = negate_weight(sig, f);
      Engine down(sig, f, opt);
      Engine up(sig, nf, opt);
      for (const auto& s : down.order().reachable(f)) {
        if (!is_dominant(sig, s)) continue;
        const Weight nk = negate_weight(sig, s);
        Int m = up.canonical(nk).coeff(nf).eval_one();
        rep.proven = rep.proven && proven_weight(sig, nk);
        if (m != 0) rep.rows.push_back({s, m});
      }
      break;
    }
  }
  sort_rows(rep.rows);
  return rep;
}

std::vector<Weight> block_members(const Signature& sig, const Weight& head, int bound) {
  if (!is_dominant(sig, head))
    throw Error("NotDominant", weight_str(sig, head) + " is not dominant");
  if (bound < 0) throw Error("BadWeight", "bound must be nonnegative");
  for (int v : head)
    if (v < -bound || v > bound)
      throw Error("BadWeight", "head value " + std::to_string(v) + " exceeds the bound");
  const auto target = eps_weight(sig, head);
  std::vector<Weight> out;
  Weight cur(sig.size());
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == sig.size()) {
      if (eps_weight(sig, cur) == target) out.push_back(cur);
      return;
    }
    int lo = -bound, hi = bound;
    const int b = sig.block_of_index(idx);
    if (idx > sig.block_first_index(b)) {
      if (sig.block_increasing(b))
        lo = std::max(lo, cur[idx - 1] + 1);
      else
        hi = std::min(hi, cur[idx - 1] - 1);
    }
    for (int v = lo; v <= hi; ++v) {
      cur[idx] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

nlohmann::json weight_json(const Weight& f) {
  nlohmann::json a = nlohmann::json::array();
  for (int v : f) a.push_back(v);
  return a;
}

nlohmann::json rows_json(const std::vector<FlagRow>& rows) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rows)
    a.push_back({weight_json(r.f), r.mult.convert_to<long long>()});
  return a;
}

}  // namespace

nlohmann::json gl21_block_report(int bound, EngineOptions opt) {
  if (bound < 1) throw Error("BadWeight", "bound must be at least 1");
  const Signature sig({1, 1}, {1}, Kind::Super);
  const Weight head{0, 0, 0};
  opt.radius = std::max(opt.radius, bound + 3);
  Engine eng(sig, head, opt);

  const auto members = block_members(sig, head, bound);
  std::map<Weight, int> idx;
  for (std::size_t i = 0; i < members.size(); ++i) idx[members[i]] = static_cast<int>(i);

  nlohmann::json report;
  report["signature"] = sig.str();
  report["bound"] = bound;
  nlohmann::json mj = nlohmann::json::array();
  for (const auto& f : members) mj.push_back(weight_json(f));
  report["members"] = mj;

  nlohmann::json edges = nlohmann::json::array();
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (a == b || !eng.order().less(a, b)) continue;
      bool cover = true;
      for (const auto& c : members) {
        if (c == a || c == b) continue;
        if (eng.order().less(a, c) && eng.order().less(c, b)) {
          cover = false;
          break;
        }
      }
      if (cover) edges.push_back({idx.at(a), idx.at(b)});
    }
  }
  report["cover_edges"] = edges;

  nlohmann::json tables;
  std::map<Weight, std::vector<FlagRow>> tilt_rows, proj_rows;
  for (FlagKind kind : {FlagKind::Tilting, FlagKind::Verma, FlagKind::Projective,
                        FlagKind::Irreducible}) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < members.size(); ++i) {
      FlagReport r = character_flag(sig, kind, members[i], opt);
      if (!r.proven)
        throw Error("ConditionViolated", "report row is not on proved ground");
      if (kind == FlagKind::Tilting) tilt_rows[members[i]] = r.rows;
      if (kind == FlagKind::Projective) proj_rows[members[i]] = r.rows;
      arr.push_back({{"head", static_cast<int>(i)}, {"rows", rows_json(r.rows)}});
    }
    tables[flag_kind_str(kind)] = arr;
  }
  report["tables"] = tables;

  auto same_rows = [](const std::vector<FlagRow>& x, const std::vector<FlagRow>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].f != y[i].f || x[i].mult != y[i].mult) return false;
    return true;
  };
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : members) {
    for (const auto& u : members) {
      if (same_rows(proj_rows.at(p), tilt_rows.at(u))) {
        pairs.push_back({idx.at(p), idx.at(u)});
        break;
      }
    }
  }
  report["projective_tilting"] = pairs;
  return report;
}

}  // namespace fockcan
