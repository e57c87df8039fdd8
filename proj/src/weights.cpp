#include "fockcan/weights.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace fockcan {

Signature::Signature(std::vector<int> neg, std::vector<int> pos, Kind kind)
    : neg_(std::move(neg)), pos_(std::move(pos)), kind_(kind) {
  if (neg_.empty() || pos_.empty())
    throw Error("BadSignature", "need at least one block on each side");
  for (int b : neg_)
    if (b <= 0) throw Error("BadSignature", "block sizes must be positive");
  for (int b : pos_)
    if (b <= 0) throw Error("BadSignature", "block sizes must be positive");
  m_ = std::accumulate(neg_.begin(), neg_.end(), 0);
  n_ = std::accumulate(pos_.begin(), pos_.end(), 0);
  int at = 0;
  for (int b : neg_) {
    first_.push_back(at);
    at += b;
  }
  for (int b : pos_) {
    first_.push_back(at);
    at += b;
  }
}

static std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) throw Error("Parse", "empty entry in list '" + s + "'");
      try {
        out.push_back(std::stoi(cur));
      } catch (const std::exception&) {
        throw Error("Parse", "bad integer '" + cur + "'");
      }
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  return out;
}

Signature Signature::parse(const std::string& text) {
  auto plus = text.find('+');
  auto bar = text.find('|');
  if (plus != std::string::npos) {
    return Signature(parse_int_list(text.substr(0, plus)),
                     parse_int_list(text.substr(plus + 1)), Kind::Classical);
  }
  if (bar != std::string::npos) {
    return Signature(parse_int_list(text.substr(0, bar)),
                     parse_int_list(text.substr(bar + 1)), Kind::Super);
  }
  throw Error("Parse", "signature '" + text + "' needs '|' (super) or '+' (classical)");
}

int Signature::block_size(int b) const {
  int nn = static_cast<int>(neg_.size());
  if (b < 0 || b >= block_count()) throw Error("BadSignature", "block index out of range");
  return b < nn ? neg_[b] : pos_[b - nn];
}

int Signature::block_of_index(int idx) const {
  for (int b = block_count() - 1; b >= 0; --b)
    if (idx >= first_[b]) return b;
  throw Error("BadWeight", "index out of range");
}

int Signature::index_of_position(int p) const {
  if (p < 0) {
    if (p < -m_) throw Error("BadWeight", "position out of range");
    return p + m_;
  }
  if (p == 0 || p > n_) throw Error("BadWeight", "position out of range");
  return m_ + p - 1;
}

std::string Signature::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < neg_.size(); ++i) os << (i ? "," : "") << neg_[i];
  os << (kind_ == Kind::Super ? "|" : "+");
  for (std::size_t i = 0; i < pos_.size(); ++i) os << (i ? "," : "") << pos_[i];
  return os.str();
}

Weight parse_weight(const Signature& sig, const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::string cur;
  for (char c : text + "|") {
    if (c == '|') {
      blocks.push_back(parse_int_list(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (static_cast<int>(blocks.size()) != sig.block_count())
    throw Error("BadWeight", "expected " + std::to_string(sig.block_count()) + " blocks");
  Weight f;
  for (int b = 0; b < sig.block_count(); ++b) {
    if (static_cast<int>(blocks[b].size()) != sig.block_size(b))
      throw Error("BadWeight", "block " + std::to_string(b) + " has wrong size");
    for (int v : blocks[b]) f.push_back(v);
  }
  return f;
}

std::string weight_str(const Signature& sig, const Weight& f) {
  if (static_cast<int>(f.size()) != sig.size())
    throw Error("BadWeight", "weight has wrong length");
  std::ostringstream os;
  int idx = 0;
  for (int b = 0; b < sig.block_count(); ++b) {
    if (b) os << "|";
    for (int i = 0; i < sig.block_size(b); ++i, ++idx) {
      if (i) os << ",";
      os << f[idx];
    }
  }
  return os.str();
}

static void check_size(const Signature& sig, const Weight& f) {
  if (static_cast<int>(f.size()) != sig.size())
    throw Error("BadWeight", "weight has wrong length");
}

bool is_dominant(const Signature& sig, const Weight& f) {
  check_size(sig, f);
  for (int b = 0; b < sig.block_count(); ++b) {
    int at = sig.block_first_index(b);
    bool inc = sig.block_increasing(b);
    for (int i = 1; i < sig.block_size(b); ++i) {
      int prev = f[at + i - 1], cur = f[at + i];
      if (inc ? (prev >= cur) : (prev <= cur)) return false;
    }
  }
  return true;
}

Weight sorted_state(const Signature& sig, const Weight& f) {
  check_size(sig, f);
  Weight s = f;
  for (int b = 0; b < sig.block_count(); ++b) {
    auto begin = s.begin() + sig.block_first_index(b);
    auto end = begin + sig.block_size(b);
    if (sig.block_increasing(b))
      std::sort(begin, end);
    else
      std::sort(begin, end, std::greater<int>());
  }
  return s;
}

std::optional<Weight> try_dominant_conjugate(const Signature& sig, const Weight& f) {
  Weight s = sorted_state(sig, f);
  for (int b = 0; b < sig.block_count(); ++b) {
    int at = sig.block_first_index(b);
    for (int i = 1; i < sig.block_size(b); ++i)
      if (s[at + i] == s[at + i - 1]) return std::nullopt;
  }
  return s;
}

Weight dominant_conjugate(const Signature& sig, const Weight& f) {
  auto r = try_dominant_conjugate(sig, f);
  if (!r)
    throw Error("NoDominantConjugate",
                "weight " + weight_str(sig, f) + " has a repeated value inside a block");
  return *r;
}

std::map<int, int> eps_weight(const Signature& sig, const Weight& f) {
  check_size(sig, f);
  std::map<int, int> w;
  for (int idx = 0; idx < sig.size(); ++idx) {
    int sgn = (idx < sig.m() || sig.kind() == Kind::Classical) ? 1 : -1;
    w[f[idx]] += sgn;
    if (w[f[idx]] == 0) w.erase(f[idx]);
  }
  return w;
}

int atypicality(const Signature& sig, const Weight& f) {
  if (sig.kind() != Kind::Super) throw Error("Unsupported", "atypicality is a super notion");
  auto w = eps_weight(sig, f);
  int abs_sum = 0;
  for (const auto& [v, c] : w) {
    (void)v;
    abs_sum += std::abs(c);
  }
  return (sig.size() - abs_sum) / 2;
}

bool is_typical(const Signature& sig, const Weight& f) { return atypicality(sig, f) == 0; }

std::vector<std::pair<int, int>> matched_pairs(const Signature& sig, const Weight& f) {
  if (sig.kind() != Kind::Super) throw Error("Unsupported", "matched pairs are a super notion");
  check_size(sig, f);
  std::vector<bool> used(sig.m(), false);
  std::vector<std::pair<int, int>> out;
  for (int j = sig.n(); j >= 1; --j) {
    int vj = f[sig.index_of_position(j)];
    for (int idx = 0; idx < sig.m(); ++idx) {
      if (!used[idx] && f[idx] == vj) {
        used[idx] = true;
        out.emplace_back(sig.position_of_index(idx), j);
        break;
      }
    }
  }
  return out;
}

// Enumerate one-step lowerings of a sorted state. The callback receives the
// sorted image state; enumeration stops early when it returns false.
template <typename Fn>
static void for_each_lowering(const Signature& sig, const Weight& s, int floor, Fn&& fn) {
  const int nblocks = sig.block_count();
  for (int b1 = 0; b1 < nblocks; ++b1) {
    for (int b2 = b1 + 1; b2 < nblocks; ++b2) {
      bool neg1 = sig.block_is_negative(b1);
      bool neg2 = sig.block_is_negative(b2);
      int a1 = sig.block_first_index(b1), s1 = sig.block_size(b1);
      int a2 = sig.block_first_index(b2), s2 = sig.block_size(b2);
      if (sig.kind() == Kind::Classical || (neg1 && neg2)) {
        // Swap a larger earlier value with a smaller later value.
        for (int i = a1; i < a1 + s1; ++i) {
          if (i > a1 && s[i] == s[i - 1]) continue;
          for (int j = a2; j < a2 + s2; ++j) {
            if (j > a2 && s[j] == s[j - 1]) continue;
            if (s[i] > s[j]) {
              Weight t = s;
              std::swap(t[i], t[j]);
              if (!fn(sorted_state(sig, t))) return;
            }
          }
        }
      } else if (!neg1 && !neg2) {
        // Two positive super blocks: swap a smaller earlier value with a
        // larger later value.
        for (int i = a1; i < a1 + s1; ++i) {
          if (i > a1 && s[i] == s[i - 1]) continue;
          for (int j = a2; j < a2 + s2; ++j) {
            if (j > a2 && s[j] == s[j - 1]) continue;
            if (s[i] < s[j]) {
              Weight t = s;
              std::swap(t[i], t[j]);
              if (!fn(sorted_state(sig, t))) return;
            }
          }
        }
      } else {
        // Negative and positive super blocks: decrement an equal pair.
        for (int i = a1; i < a1 + s1; ++i) {
          if (i > a1 && s[i] == s[i - 1]) continue;
          for (int j = a2; j < a2 + s2; ++j) {
            if (j > a2 && s[j] == s[j - 1]) continue;
            if (s[i] == s[j] && s[i] - 1 >= floor) {
              Weight t = s;
              --t[i];
              --t[j];
              if (!fn(sorted_state(sig, t))) return;
            }
          }
        }
      }
    }
  }
}

bool is_minimal(const Signature& sig, const Weight& f) {
  check_size(sig, f);
  if (sig.kind() == Kind::Super && atypicality(sig, f) > 0) return false;
  // No lowering cross-block swap may land on a weight with a dominant
  // rearrangement.
  const int nblocks = sig.block_count();
  for (int b1 = 0; b1 < nblocks; ++b1) {
    for (int b2 = b1 + 1; b2 < nblocks; ++b2) {
      bool neg1 = sig.block_is_negative(b1), neg2 = sig.block_is_negative(b2);
      bool swap_blocks = sig.kind() == Kind::Classical || neg1 == neg2;
      if (!swap_blocks) continue;
      bool pos_side = sig.kind() == Kind::Super && !neg1;
      int a1 = sig.block_first_index(b1), s1 = sig.block_size(b1);
      int a2 = sig.block_first_index(b2), s2 = sig.block_size(b2);
      for (int i = a1; i < a1 + s1; ++i) {
        for (int j = a2; j < a2 + s2; ++j) {
          bool lowering = pos_side ? f[i] < f[j] : f[i] > f[j];
          if (!lowering) continue;
          Weight t = f;
          std::swap(t[i], t[j]);
          if (try_dominant_conjugate(sig, t)) return false;
        }
      }
    }
  }
  return true;
}

WeightOrder::WeightOrder(Signature sig, int value_floor, std::size_t state_cap)
    : sig_(std::move(sig)), floor_(value_floor), cap_(state_cap) {}

const std::set<Weight>& WeightOrder::reachable(const Weight& f) {
  Weight start = sorted_state(sig_, f);
  auto it = memo_.find(start);
  if (it != memo_.end()) return it->second;
  std::set<Weight> seen;
  std::deque<Weight> queue;
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    Weight s = queue.front();
    queue.pop_front();
    for_each_lowering(sig_, s, floor_, [&](const Weight& t) {
      if (seen.insert(t).second) {
        if (seen.size() > cap_)
          throw Error("WindowExceeded", "order exploration exceeded state cap");
        queue.push_back(t);
      }
      return true;
    });
  }
  return memo_.emplace(start, std::move(seen)).first->second;
}

bool WeightOrder::leq(const Weight& g, const Weight& f) {
  if (g == f) return true;
  Weight gs = sorted_state(sig_, g);
  return reachable(f).count(gs) > 0;
}

Weight weight_from_lambda(const Signature& sig, const std::vector<int>& lambda) {
  check_size(sig, lambda);
  Weight f(lambda.size());
  for (int idx = 0; idx < sig.size(); ++idx) {
    int p = sig.position_of_index(idx);
    if (sig.kind() == Kind::Super) {
      f[idx] = p < 0 ? lambda[idx] - p : p - lambda[idx];
    } else {
      f[idx] = p < 0 ? lambda[idx] - p : lambda[idx] + 1 - p;
    }
  }
  return f;
}

std::vector<int> lambda_from_weight(const Signature& sig, const Weight& f) {
  check_size(sig, f);
  std::vector<int> lambda(f.size());
  for (int idx = 0; idx < sig.size(); ++idx) {
    int p = sig.position_of_index(idx);
    if (sig.kind() == Kind::Super) {
      lambda[idx] = p < 0 ? f[idx] + p : p - f[idx];
    } else {
      lambda[idx] = p < 0 ? f[idx] + p : f[idx] - 1 + p;
    }
  }
  return lambda;
}

bool in_restricted_region(const Signature& sig, const Weight& f) {
  if (!is_dominant(sig, f)) return false;
  int last = f[sig.index_of_position(sig.n())];
  return sig.kind() == Kind::Super ? last <= sig.n() : last >= 1 - sig.n();
}

Weight negate_weight(const Signature& sig, const Weight& f) {
  check_size(sig, f);
  Weight g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = -f[i];
  return dominant_conjugate(sig, g);
}

// One matched pair stays lowerable when some positive amount produces a
// dominant-rearrangeable weight.
static bool pair_lowerable(const Signature& sig, const Weight& f, int i, int j, int cap) {
  int ii = sig.index_of_position(i), jj = sig.index_of_position(j);
  for (int a = 1; a <= cap; ++a) {
    Weight g = f;
    g[ii] -= a;
    g[jj] -= a;
    if (try_dominant_conjugate(sig, g)) return true;
  }
  return false;
}

Weight lower_matched_pair(const Signature& sig, const Weight& f, int neg_pos, int pos_pos,
                          int cap) {
  int ii = sig.index_of_position(neg_pos), jj = sig.index_of_position(pos_pos);
  if (f[ii] != f[jj])
    throw Error("BadWeight", "positions do not hold a matched value");
  auto pairs = matched_pairs(sig, f);
  for (int a = 1; a <= cap; ++a) {
    Weight g = f;
    g[ii] -= a;
    g[jj] -= a;
    auto dom = try_dominant_conjugate(sig, g);
    if (!dom) continue;
    bool ok = true;
    // Pairs at smaller positive positions have not been processed yet and
    // must stay individually lowerable.
    for (const auto& [pi, pj] : pairs) {
      if (pj >= pos_pos) continue;
      if (!pair_lowerable(sig, g, pi, pj, cap)) {
        ok = false;
        break;
      }
    }
    if (ok) return *dom;
  }
  throw Error("PairLoweringUnresolved",
              "no admissible amount for pair (" + std::to_string(neg_pos) + "," +
                  std::to_string(pos_pos) + ") of " + weight_str(sig, f));
}

Weight lower_pairs_subset(const Signature& sig, const Weight& f,
                          const std::vector<std::pair<int, int>>& pairs, unsigned mask,
                          int cap) {
  Weight g = f;
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    if (mask & (1u << l)) g = lower_matched_pair(sig, g, pairs[l].first, pairs[l].second, cap);
  }
  return g;
}

std::vector<std::pair<int, int>> swap_pair_selection(const Signature& sig, const Weight& f,
                                                     int block_a, int block_b) {
  check_size(sig, f);
  int a1 = sig.block_first_index(block_a), s1 = sig.block_size(block_a);
  int a2 = sig.block_first_index(block_b), s2 = sig.block_size(block_b);
  bool pos_side = !sig.block_is_negative(block_a);
  // Collect admissible lowering swaps with their value distance.
  struct Cand {
    int d, i, j;
  };
  std::vector<Cand> cands;
  for (int i = a1; i < a1 + s1; ++i) {
    for (int j = a2; j < a2 + s2; ++j) {
      int vi = f[i], vj = f[j];
      bool lowering = pos_side && sig.kind() == Kind::Super ? vi < vj : vi > vj;
      if (!lowering) continue;
      Weight t = f;
      std::swap(t[i], t[j]);
      if (!try_dominant_conjugate(sig, t)) continue;
      cands.push_back({std::abs(vi - vj), i, j});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    return std::tie(x.d, x.i, x.j) < std::tie(y.d, y.i, y.j);
  });
  std::vector<bool> used(f.size(), false);
  std::vector<std::pair<int, int>> out;
  for (const auto& c : cands) {
    if (used[c.i] || used[c.j]) continue;
    used[c.i] = used[c.j] = true;
    out.emplace_back(sig.position_of_index(c.i), sig.position_of_index(c.j));
  }
  return out;
}

Weight apply_swaps(const Signature& sig, const Weight& f,
                   const std::vector<std::pair<int, int>>& pairs, unsigned mask) {
  Weight g = f;
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    if (mask & (1u << l)) {
      int ii = sig.index_of_position(pairs[l].first);
      int jj = sig.index_of_position(pairs[l].second);
      std::swap(g[ii], g[jj]);
    }
  }
  return dominant_conjugate(sig, g);
}

bool has_isolated_matches(const Signature& sig, const Weight& f) {
  auto pairs = matched_pairs(sig, f);
  for (const auto& [i, j] : pairs) {
    int ii = sig.index_of_position(i), jj = sig.index_of_position(j);
    int a = f[ii];
    for (int idx = 0; idx < sig.size(); ++idx) {
      if (idx == ii || idx == jj) continue;
      if (f[idx] == a || f[idx] == a - 1) return false;
    }
  }
  return true;
}

bool tail_conforms(const Signature& sig, const Weight& f, int n_to) {
  check_size(sig, f);
  if (n_to < 0 || n_to > sig.n()) throw Error("BadWeight", "bad truncation length");
  if (sig.pos_blocks().size() != 1)
    throw Error("Unsupported", "truncation needs a single positive block");
  for (int j = n_to + 1; j <= sig.n(); ++j) {
    int v = f[sig.index_of_position(j)];
    if (sig.kind() == Kind::Super ? v != j : v != 1 - j) return false;
  }
  return true;
}

Signature truncate_signature(const Signature& sig, int n_to) {
  if (sig.pos_blocks().size() != 1)
    throw Error("Unsupported", "truncation needs a single positive block");
  if (n_to <= 0 || n_to > sig.n()) throw Error("BadWeight", "bad truncation length");
  return Signature(sig.neg_blocks(), {n_to}, sig.kind());
}

Weight truncate_weight(const Signature& sig, const Weight& f, int n_to) {
  if (!tail_conforms(sig, f, n_to))
    throw Error("BadWeight", "weight tail does not conform for truncation");
  Weight g(f.begin(), f.begin() + sig.m() + n_to);
  return g;
}

Weight complement_transform(const Signature& classical_sig, const Weight& f,
                            const Signature& super_sig) {
  if (classical_sig.kind() != Kind::Classical || super_sig.kind() != Kind::Super)
    throw Error("Unsupported", "complement transform maps classical to super");
  if (classical_sig.neg_blocks() != super_sig.neg_blocks())
    throw Error("BadSignature", "negative blocks must agree");
  if (classical_sig.pos_blocks().size() != 1 || super_sig.pos_blocks().size() != 1)
    throw Error("Unsupported", "complement transform needs single positive blocks");
  check_size(classical_sig, f);
  const int N = classical_sig.n(), n = super_sig.n();
  std::set<int> taken;
  for (int j = 1; j <= N; ++j) taken.insert(f[classical_sig.index_of_position(j)]);
  if (static_cast<int>(taken.size()) != N)
    throw Error("BadWeight", "positive values must be distinct");
  // Values below 1-N are implied by the tail. The image conforms to the
  // identity tail beyond position n exactly when every taken value lies in
  // [1-N, n].
  for (int v : taken) {
    if (v < 1 - N) throw Error("BadWeight", "positive value below the admissible tail");
    if (v > n)
      throw Error("BadWeight",
                  "complement image does not conform beyond position " + std::to_string(n));
  }
  std::vector<int> comp;
  for (int v = 1 - N; static_cast<int>(comp.size()) < n; ++v)
    if (!taken.count(v)) comp.push_back(v);
  Weight g(f.begin(), f.begin() + classical_sig.m());
  for (int j = 1; j <= n; ++j) g.push_back(comp[j - 1]);
  if (!is_dominant(super_sig, g)) throw Error("BadWeight", "complement image not dominant");
  return g;
}

std::vector<int> twist_lambda(const Signature& sig, const std::vector<int>& lambda) {
  check_size(sig, lambda);
  std::vector<int> out(lambda.size());
  for (int b = 0; b < sig.block_count(); ++b) {
    int at = sig.block_first_index(b), k = sig.block_size(b);
    for (int t = 0; t < k; ++t) {
      int idx = at + t;
      int ridx = at + (k - 1 - t);
      int p = sig.position_of_index(idx);
      // 2 rho at position p is -2p; 2 rho_l inside a block of size k is
      // k+1-2(t+1) at the t-th slot.
      out[idx] = -lambda[ridx] + 2 * p + (k - 1 - 2 * t);
    }
  }
  return out;
}

}  // namespace fockcan
