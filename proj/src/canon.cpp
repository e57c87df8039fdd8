#include "fockcan/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <tuple>

namespace fockcan {

namespace {

std::size_t resolve_cap(std::size_t requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("FOCKCAN_MAX_WINDOW")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

int weight_min(const Weight& f) { return *std::min_element(f.begin(), f.end()); }
int weight_max(const Weight& f) { return *std::max_element(f.begin(), f.end()); }

bool block_holds(const Signature& sig, const Weight& f, int idx, int value) {
  int b = sig.block_of_index(idx);
  int a = sig.block_first_index(b), s = sig.block_size(b);
  for (int k = a; k < a + s; ++k)
    if (k != idx && f[k] == value) return true;
  return false;
}

}  // namespace

Engine::Engine(Signature sig, const Weight& reference, EngineOptions opt)
    : sig_(std::move(sig)),
      opt_(opt),
      floor_(0),
      ceil_(0),
      order_(sig_, 0, 1) {
  if (static_cast<int>(reference.size()) != sig_.size())
    throw Error("BadWeight", "reference weight has the wrong length");
  if (opt_.radius < 0) throw Error("BadWeight", "radius must be nonnegative");
  opt_.max_states = resolve_cap(opt_.max_states);
  floor_ = weight_min(reference) - opt_.radius;
  ceil_ = weight_max(reference) + opt_.radius;
  order_ = WeightOrder(sig_, floor_, opt_.max_states);
}

bool Engine::shape_two_singletons() const {
  return sig_.kind() == Kind::Super && sig_.neg_blocks() == std::vector<int>{1, 1} &&
         sig_.pos_blocks().size() == 1;
}

bool Engine::shape_pair_one() const {
  return sig_.kind() == Kind::Super && sig_.neg_blocks().size() == 2 &&
         sig_.neg_blocks()[1] == 1 && sig_.pos_blocks() == std::vector<int>{1};
}

const FockVector& Engine::bar_invariant(const Weight& f) {
  if (auto it = b_memo_.find(f); it != b_memo_.end()) return it->second;
  if (!is_dominant(sig_, f))
    throw Error("NotDominant", weight_str(sig_, f) + " is not dominant");
  if (failed_.count(f))
    throw Error("SynthesisFailed", "no construction found for " + weight_str(sig_, f));
  if (weight_min(f) < floor_ || weight_max(f) > ceil_)
    throw Error("WindowExceeded", "weight outside the engine value range: " + weight_str(sig_, f));
  if (depth_ >= opt_.max_depth)
    throw Error("SynthesisFailed",
                "construction recursion exceeds the depth limit at " + weight_str(sig_, f));
  if (!building_.insert(f).second)
    throw Error("SynthesisFailed", "cyclic dependency at " + weight_str(sig_, f));
  ++depth_;
  try {
    FockVector v = build_invariant(f);
    --depth_;
    building_.erase(f);
    return b_memo_.emplace(f, std::move(v)).first->second;
  } catch (...) {
    --depth_;
    building_.erase(f);
    failed_.insert(f);
    throw;
  }
}

FockVector Engine::build_invariant(const Weight& f) {
  if (is_minimal(sig_, f)) return FockVector::monomial(sig_, f);
  if (sig_.kind() == Kind::Super && !is_typical(sig_, f)) {
    if (shape_two_singletons() || shape_pair_one()) {
      auto [step, h] = reduction_step(f);
      FockVector v = apply_step(canonical(h), step);
      if (!verify_leading(v, f))
        throw Error("SynthesisFailed",
                    "reduction step lost unitriangularity at " + weight_str(sig_, f));
      return v;
    }
    // General signatures: detach one matched copy to a strictly less
    // atypical weight and raise it back with the matching generator. Each
    // candidate is verified; failures fall through to the step search.
    for (const auto& [step, h] : detach_candidates(f)) {
      try {
        FockVector v = apply_step(canonical(h), step);
        if (verify_leading(v, f)) return v;
      } catch (const Error&) {
      }
    }
  }
  return synthesize(f);
}

std::vector<std::pair<OpStep, Weight>> Engine::detach_candidates(const Weight& f) const {
  std::vector<std::pair<OpStep, Weight>> out;
  for (const auto& [pi, pj] : matched_pairs(sig_, f)) {
    const int ii = sig_.index_of_position(pi), jj = sig_.index_of_position(pj);
    const int a = f[jj];
    if (a - 1 < floor_) continue;
    // Lower the positive copy; E_{a-1} raises it back.
    if (!block_holds(sig_, f, jj, a - 1)) {
      Weight h = f;
      h[jj] = a - 1;
      if (auto dom = try_dominant_conjugate(sig_, h))
        out.emplace_back(OpStep{Gen::E, a - 1, 1}, std::move(*dom));
    }
    // Lower the negative copy; F_{a-1} raises it back.
    if (!block_holds(sig_, f, ii, a - 1)) {
      Weight h = f;
      h[ii] = a - 1;
      if (auto dom = try_dominant_conjugate(sig_, h))
        out.emplace_back(OpStep{Gen::F, a - 1, 1}, std::move(*dom));
    }
  }
  return out;
}

FockVector Engine::synthesize(const Weight& f) {
  struct Cand {
    OpStep step;
    Weight h;
    int key_a;
    int key_b;
  };
  const bool super = sig_.kind() == Kind::Super;

  std::vector<Cand> lowers, divided, raisers;
  std::map<int, std::vector<int>> lower_group;  // generator index -> weight indices
  for (int idx = 0; idx < sig_.size(); ++idx) {
    const bool w = super && !sig_.block_is_negative(sig_.block_of_index(idx));
    const int v = f[idx];

    int tgt = w ? v + 1 : v - 1;
    int a = w ? v : v - 1;
    if (tgt >= floor_ && tgt <= ceil_ && !block_holds(sig_, f, idx, tgt)) {
      Weight h = f;
      h[idx] = tgt;
      if (auto dom = try_dominant_conjugate(sig_, h)) {
        lower_group[a].push_back(idx);
        lowers.push_back({OpStep{Gen::F, a, 1}, std::move(*dom), -a, idx});
      }
    }

    if (!super) continue;
    tgt = w ? v - 1 : v + 1;
    a = w ? v - 1 : v;
    if (tgt >= floor_ && tgt <= ceil_ && !block_holds(sig_, f, idx, tgt)) {
      Weight h = f;
      h[idx] = tgt;
      if (auto dom = try_dominant_conjugate(sig_, h))
        raisers.push_back({OpStep{Gen::E, a, 1}, std::move(*dom), -a, idx});
    }
  }
  for (const auto& [a, idxs] : lower_group) {
    const unsigned k = static_cast<unsigned>(idxs.size());
    if (k < 2) continue;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      int r = std::popcount(mask);
      if (r < 2) continue;
      Weight h = f;
      for (unsigned l = 0; l < k; ++l) {
        if (!(mask & (1u << l))) continue;
        int idx = idxs[l];
        bool w = super && !sig_.block_is_negative(sig_.block_of_index(idx));
        h[idx] = w ? f[idx] + 1 : f[idx] - 1;
      }
      auto dom = try_dominant_conjugate(sig_, h);
      if (!dom) continue;
      divided.push_back({OpStep{Gen::F, a, r}, std::move(*dom), -a, r});
    }
  }
  auto by_key = [](const Cand& x, const Cand& y) {
    return std::tie(x.key_a, x.key_b) < std::tie(y.key_a, y.key_b);
  };
  std::sort(lowers.begin(), lowers.end(), by_key);
  std::sort(divided.begin(), divided.end(), by_key);
  std::sort(raisers.begin(), raisers.end(), by_key);
  std::vector<Cand> cands = std::move(lowers);
  cands.insert(cands.end(), std::make_move_iterator(divided.begin()),
               std::make_move_iterator(divided.end()));
  cands.insert(cands.end(), std::make_move_iterator(raisers.begin()),
               std::make_move_iterator(raisers.end()));
  if (opt_.permute_candidates) {
    std::mt19937 rng(opt_.seed);
    std::shuffle(cands.begin(), cands.end(), rng);
  }

  int window_failures = 0;
  for (const auto& c : cands) {
    if (c.h == f) continue;
    try {
      FockVector v = apply_step(bar_invariant(c.h), c.step);
      if (verify_leading(v, f)) return v;
    } catch (const Error& e) {
      if (std::string_view(e.code()) == "WindowExceeded") ++window_failures;
    }
  }
  std::string detail = "no candidate step works at " + weight_str(sig_, f);
  if (window_failures > 0)
    detail += " (" + std::to_string(window_failures) +
              " candidates exceeded the window; try a larger radius or state cap)";
  throw Error("SynthesisFailed", detail);
}

bool Engine::verify_leading(const FockVector& v, const Weight& f) {
  if (!v.coeff(f).is_one()) return false;
  for (const auto& [g, c] : v.terms()) {
    if (g == f) continue;
    if (!order_.leq(g, f)) return false;
  }
  return true;
}

// Dual basis vectors of singular weights have no finite monomial expansion;
// the expansion is cut at the weights whose own invariant vector cannot be
// built inside the value window, and every term at or below such a cutoff
// weight is dropped from the result. Coefficients at surviving weights are
// exact: their whole up-set stays inside the window, so the triangular
// correction there is the same as in the untruncated space.
bool Engine::below_dual_cutoff(const Weight& g) {
  for (const auto& d : dual_cutoffs_)
    if (g == d || order_.leq(g, d)) return true;
  return false;
}

bool Engine::dual_constructible(const Weight& g) {
  if (b_memo_.count(g)) return true;
  if (failed_.count(g)) return false;
  try {
    bar_invariant(g);
    return true;
  } catch (const Error& e) {
    const std::string_view code = e.code();
    if (code == "WindowExceeded" || code == "SynthesisFailed") return false;
    throw;
  }
}

const FockVector& Engine::refine(const Weight& f, bool dual) {
  auto& memo = dual ? l_memo_ : u_memo_;
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  FockVector v = bar_invariant(f);
  for (;;) {
    std::vector<Weight> bad;
    bool cut = false;
    for (const auto& [g, c] : v.terms()) {
      if (g == f) continue;
      if (dual) {
        if (below_dual_cutoff(g)) continue;
        if (!dual_constructible(g)) {
          dual_cutoffs_.push_back(g);
          cut = true;
          break;
        }
      }
      bool ok = dual ? c.all_exponents_at_most(-1) : c.all_exponents_at_least(1);
      if (!ok) bad.push_back(g);
    }
    if (cut) continue;
    if (bad.empty()) break;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < bad.size(); ++i) {
      bool below_other = false;
      for (std::size_t j = 0; j < bad.size(); ++j) {
        if (i != j && order_.less(bad[i], bad[j])) {
          below_other = true;
          break;
        }
      }
      if (!below_other) {
        pick = i;
        break;
      }
    }
    const Weight g = bad[pick];
    const Laurent c = v.coeff(g);
    Laurent p = Laurent::term(c.coeff(0), 0);
    const int span = std::max(std::abs(c.min_exp()), std::abs(c.max_exp()));
    for (int k = 1; k <= span; ++k) {
      Int ck = dual ? c.coeff(k) : c.coeff(-k);
      if (ck != 0) p += Laurent::term(ck, k) + Laurent::term(ck, -k);
    }
    v -= refine(g, dual) * p;
    if (v.coeff(g) != c - p)
      throw Error("SynthesisFailed", "correction failed to fix " + weight_str(sig_, g));
  }
  if (dual) {
    std::vector<Weight> drop;
    for (const auto& [g, c] : v.terms())
      if (g != f && below_dual_cutoff(g)) drop.push_back(g);
    for (const auto& g : drop) v.add(g, -v.coeff(g));
  }
  return memo.emplace(f, std::move(v)).first->second;
}

const FockVector& Engine::canonical(const Weight& f) { return refine(f, false); }
const FockVector& Engine::dual_canonical(const Weight& f) { return refine(f, true); }

FockVector Engine::canonical_closed_form(const Weight& f) {
  if (!is_dominant(sig_, f))
    throw Error("NotDominant", weight_str(sig_, f) + " is not dominant");
  if (sig_.kind() != Kind::Super)
    throw Error("Unsupported", "the closed form covers super signatures only");
  if (sig_.neg_blocks().size() != 2 || sig_.pos_blocks().size() > 2)
    throw Error("Unsupported", "the closed form needs two negative blocks");
  if (!has_isolated_matches(sig_, f))
    throw Error("ConditionViolated", "matches are not isolated at " + weight_str(sig_, f));
  const auto pairs = matched_pairs(sig_, f);
  FockVector out(sig_);
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    Weight g = lower_pairs_subset(sig_, f, pairs, mask);
    int theta = std::popcount(mask);
    const auto vs = swap_pair_selection(sig_, g, 0, 1);
    for (unsigned m2 = 0; m2 < (1u << vs.size()); ++m2) {
      Weight h = apply_swaps(sig_, g, vs, m2);
      int e2 = theta + std::popcount(m2);
      if (sig_.pos_blocks().size() == 2) {
        const auto ws = swap_pair_selection(sig_, g, 2, 3);
        for (unsigned m3 = 0; m3 < (1u << ws.size()); ++m3)
          out.add(apply_swaps(sig_, h, ws, m3), Laurent::q(e2 + std::popcount(m3)));
      } else {
        out.add(h, Laurent::q(e2));
      }
    }
  }
  return out;
}

std::pair<OpStep, Weight> Engine::reduction_step(const Weight& f) {
  if (!is_dominant(sig_, f))
    throw Error("NotDominant", weight_str(sig_, f) + " is not dominant");
  if (sig_.kind() != Kind::Super || is_typical(sig_, f))
    throw Error("Unsupported", "reduction steps need an atypical super weight");
  if (shape_two_singletons()) return step_two_singletons(f);
  if (shape_pair_one()) return step_pair_one(f);
  throw Error("Unsupported", "no reduction procedure for signature " + sig_.str());
}

std::pair<OpStep, Weight> Engine::step_two_singletons(const Weight& f) {
  const int n = sig_.n();
  auto w_has = [&](int v) {
    for (int j = 0; j < n; ++j)
      if (f[2 + j] == v) return true;
    return false;
  };
  const int a2 = f[0], a1 = f[1];
  const bool s13 = w_has(a2);
  Weight h = f;
  if (s13) {
    if (a2 == a1) {
      h[0] = a2 - 1;
      h[1] = a1 - 1;
      return {OpStep{Gen::F, a2 - 1, 2}, h};
    }
    h[0] = a2 - 1;
    return {OpStep{Gen::F, a2 - 1, 1}, h};
  }
  if (!w_has(a1)) throw Error("Unsupported", "weight is typical: " + weight_str(sig_, f));
  if (a2 != a1 - 1) {
    h[1] = a1 - 1;
    return {OpStep{Gen::F, a1 - 1, 1}, h};
  }
  if (!w_has(a2 - 1)) {
    h[0] = a2 - 1;
    return {OpStep{Gen::F, a2 - 1, 1}, h};
  }
  // Walk down the run of consecutive values sitting under a1 in the last
  // block and detach its bottom entry.
  int v = a1 - 2;
  while (w_has(v - 1)) --v;
  for (int j = 0; j < n; ++j) {
    if (h[2 + j] == v) {
      h[2 + j] = v - 1;
      break;
    }
  }
  return {OpStep{Gen::E, v - 1, 1}, h};
}

std::pair<OpStep, Weight> Engine::step_pair_one(const Weight& f) {
  const int last = sig_.neg_blocks()[0] - 1;  // last index of the first block
  const int bidx = last + 1;                  // position -1
  const int pidx = last + 2;                  // position 1
  const int a = f[pidx];
  auto walk = [&](int i) {
    while (i + 1 <= last && f[i + 1] == f[i] - 1) ++i;
    return i;
  };
  Weight h = f;
  for (int i = 0; i <= last; ++i) {
    if (f[i] != a) continue;
    int j = walk(i);
    if (f[j] == f[bidx]) {
      h[j] = f[j] - 1;
      h[bidx] = f[bidx] - 1;
      return {OpStep{Gen::F, f[j] - 1, 2}, h};
    }
    h[j] = f[j] - 1;
    return {OpStep{Gen::F, f[j] - 1, 1}, h};
  }
  if (f[bidx] != a) throw Error("Unsupported", "weight is typical: " + weight_str(sig_, f));
  for (int i = 0; i <= last; ++i) {
    if (f[i] != a - 1) continue;
    int j = walk(i);
    h[j] = f[j] - 1;
    return {OpStep{Gen::F, f[j] - 1, 1}, h};
  }
  h[bidx] = a - 1;
  return {OpStep{Gen::F, a - 1, 1}, h};
}

OperatorWord Engine::reduction_word(const Weight& f, Weight* base_out) {
  if (!is_dominant(sig_, f))
    throw Error("NotDominant", weight_str(sig_, f) + " is not dominant");
  OperatorWord collected;
  Weight cur = f;
  while (!is_typical(sig_, cur)) {
    auto [st, h] = reduction_step(cur);
    collected.push_back(st);
    cur = std::move(h);
    if (collected.size() > 4096)
      throw Error("SynthesisFailed", "reduction chain does not terminate");
  }
  if (base_out) *base_out = cur;
  std::reverse(collected.begin(), collected.end());
  return collected;
}

FockVector Engine::canonical_by_reduction(const Weight& f) {
  Weight base;
  OperatorWord word = reduction_word(f, &base);
  FockVector v = apply_word(canonical(base), word);
  if (!verify_leading(v, f))
    throw Error("SynthesisFailed",
                "reduction word lost unitriangularity at " + weight_str(sig_, f));
  return v;
}

std::vector<Weight> Engine::window(const Weight& f) {
  std::set<Weight> done;
  std::vector<Weight> queue{dominant_conjugate(sig_, f)};
  while (!queue.empty()) {
    Weight g = std::move(queue.back());
    queue.pop_back();
    if (done.count(g)) continue;
    done.insert(g);
    if (done.size() > opt_.max_states)
      throw Error("WindowExceeded", "window closure exceeds the state cap");
    for (const auto& [h, c] : bar_invariant(g).terms())
      if (!done.count(h)) queue.push_back(h);
  }
  return sort_low_to_high({done.begin(), done.end()});
}

std::vector<Weight> Engine::sort_low_to_high(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  std::vector<Weight> out;
  std::vector<bool> placed(ws.size(), false);
  for (std::size_t round = 0; round < ws.size(); ++round) {
    std::size_t pick = ws.size();
    for (std::size_t i = 0; i < ws.size() && pick == ws.size(); ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < ws.size(); ++j) {
        if (j == i || placed[j]) continue;
        if (order_.less(ws[j], ws[i])) {
          minimal = false;
          break;
        }
      }
      if (minimal) pick = i;
    }
    placed[pick] = true;
    out.push_back(ws[pick]);
  }
  return out;
}

const Laurent& Engine::Table::at(int row, int col) const {
  static const Laurent zero;
  auto it = entry.find({row, col});
  return it == entry.end() ? zero : it->second;
}

int Engine::Table::index_of(const Weight& f) const {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == f) return static_cast<int>(i);
  return -1;
}

namespace {

Engine::Table assemble(Engine& eng, const std::vector<Weight>& ws,
                       const FockVector& (Engine::*column)(const Weight&)) {
  Engine::Table t;
  t.weights = eng.sort_low_to_high(ws);
  std::map<Weight, int> pos;
  for (std::size_t i = 0; i < t.weights.size(); ++i) pos[t.weights[i]] = static_cast<int>(i);
  for (std::size_t c = 0; c < t.weights.size(); ++c) {
    for (const auto& [g, coeff] : (eng.*column)(t.weights[c]).terms()) {
      auto it = pos.find(g);
      if (it == pos.end())
        throw Error("BadWeight", "weight list is not support closed at " +
                                     weight_str(eng.sig(), t.weights[c]));
      t.entry[{it->second, static_cast<int>(c)}] = coeff;
    }
  }
  return t;
}

}  // namespace

Engine::Table Engine::change_of_basis(const std::vector<Weight>& ws) {
  return assemble(*this, ws, &Engine::bar_invariant);
}

Engine::Table Engine::u_table(const std::vector<Weight>& ws) {
  return assemble(*this, ws, &Engine::canonical);
}

Engine::Table Engine::l_table(const std::vector<Weight>& ws) {
  return assemble(*this, ws, &Engine::dual_canonical);
}

Engine::Table Engine::bar_matrix(const std::vector<Weight>& ws) {
  Table c = change_of_basis(ws);
  const int k = static_cast<int>(c.weights.size());
  Table barc = c;
  for (auto& [rc, v] : barc.entry) v = v.bar();
  // Invert the bar image by back substitution; it is unitriangular in the
  // low-to-high ordering.
  Table inv;
  inv.weights = c.weights;
  for (int col = 0; col < k; ++col) {
    std::map<int, Laurent> x;
    x[col] = Laurent(1);
    for (int r = col - 1; r >= 0; --r) {
      Laurent s;
      for (const auto& [t, xt] : x) {
        if (t <= r) continue;
        const Laurent& m = barc.at(r, t);
        if (!m.is_zero()) s += m * xt;
      }
      if (!s.is_zero()) x[r] = -s;
    }
    for (const auto& [r, xr] : x)
      if (!xr.is_zero()) inv.entry[{r, col}] = xr;
  }
  Table out;
  out.weights = c.weights;
  for (int col = 0; col < k; ++col) {
    std::map<int, Laurent> acc;
    for (int mid = 0; mid <= col; ++mid) {
      auto it = inv.entry.find({mid, col});
      if (it == inv.entry.end()) continue;
      for (int r = 0; r <= mid; ++r) {
        auto ic = c.entry.find({r, mid});
        if (ic == c.entry.end()) continue;
        acc[r] += ic->second * it->second;
      }
    }
    for (const auto& [r, v] : acc)
      if (!v.is_zero()) out.entry[{r, col}] = v;
  }
  return out;
}

DualityReport duality_check(const std::vector<int>& neg_blocks, int classical_n, int super_n,
                            const Weight& classical_head, const EngineOptions& opt) {
  Signature csig(neg_blocks, {classical_n}, Kind::Classical);
  Signature ssig(neg_blocks, {super_n}, Kind::Super);
  DualityReport rep{csig, ssig, classical_head, 0, 0, {}};
  Engine ce(csig, classical_head, opt);
  const auto win = ce.window(classical_head);
  rep.window_size = static_cast<int>(win.size());
  EngineOptions sopt = opt;
  sopt.radius = opt.radius + classical_n + super_n;
  Engine se(ssig, complement_transform(csig, classical_head, ssig), sopt);
  std::map<Weight, Weight> to_super;
  std::set<Weight> image;
  for (const auto& g : win) {
    Weight t = complement_transform(csig, g, ssig);
    image.insert(t);
    to_super.emplace(g, std::move(t));
  }
  // The complement transform is a bijection onto super weights whose positive
  // values all lie in [1 - classical_n, super_n]; super terms outside that box
  // have no classical counterpart at this size, so only in-box extra support
  // counts as a defect.
  const int box_lo = 1 - classical_n;
  auto in_box = [&](const Weight& h) {
    for (int j = 1; j <= super_n; ++j) {
      int v = h[ssig.index_of_position(j)];
      if (v < box_lo || v > super_n) return false;
    }
    return true;
  };
  for (const auto& f : win) {
    const FockVector& uc = ce.canonical(f);
    const FockVector& us = se.canonical(to_super.at(f));
    for (const auto& g : win) {
      Laurent a = uc.coeff(g);
      Laurent b = us.coeff(to_super.at(g));
      ++rep.pairs_checked;
      if (a != b) rep.mismatches.push_back({g, f, to_super.at(g), a, b});
    }
    for (const auto& [h, c] : us.terms())
      if (!image.count(h) && in_box(h)) rep.mismatches.push_back({{}, f, h, Laurent(), c});
  }
  return rep;
}

}  // namespace fockcan
