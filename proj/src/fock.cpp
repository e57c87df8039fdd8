#include "fockcan/fock.hpp"

#include <algorithm>
#include <sstream>

namespace fockcan {

std::string OpStep::str() const {
  std::ostringstream os;
  os << (gen == Gen::F ? "F" : "E") << "_" << index;
  if (power != 1) os << "^(" << power << ")";
  return os.str();
}

FockVector FockVector::monomial(const Signature& sig, const Weight& f, const Laurent& c) {
  if (!is_dominant(sig, f))
    throw Error("NotDominant", "monomial label must be dominant: " + weight_str(sig, f));
  FockVector v(sig);
  v.add(f, c);
  return v;
}

void FockVector::add(const Weight& f, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = t_.find(f);
  if (it == t_.end()) {
    t_.emplace(f, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (sig_ != o.sig_) throw Error("BadSignature", "mixed signatures in vector sum");
  for (const auto& [f, c] : o.t_) add(f, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (sig_ != o.sig_) throw Error("BadSignature", "mixed signatures in vector sum");
  for (const auto& [f, c] : o.t_) add(f, -c);
  return *this;
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r = *this;
  r += o;
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector r = *this;
  r -= o;
  return r;
}

FockVector FockVector::operator*(const Laurent& c) const {
  FockVector r(sig_);
  if (c.is_zero()) return r;
  for (const auto& [f, cf] : t_) r.t_[f] = cf * c;
  return r;
}

FockVector FockVector::bar_coefficients() const {
  FockVector r(sig_);
  for (const auto& [f, c] : t_) r.t_[f] = c.bar();
  return r;
}

std::string FockVector::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*K[" << weight_str(sig_, f) << "]";
  }
  return os.str();
}

namespace {

std::vector<std::vector<int>> to_blocks(const Signature& sig, const Weight& f) {
  std::vector<std::vector<int>> blocks(sig.block_count());
  for (int b = 0; b < sig.block_count(); ++b) {
    int at = sig.block_first_index(b);
    blocks[b].assign(f.begin() + at, f.begin() + at + sig.block_size(b));
  }
  return blocks;
}

bool block_is_w(const Signature& sig, int b) {
  return sig.kind() == Kind::Super && !sig.block_is_negative(b);
}

// Exponent of K_a K_{a+1}^{-1} on one factor.
int kw_block(bool is_w, const std::vector<int>& vals, int a) {
  int e = 0;
  for (int v : vals) {
    if (v == a) e += 1;
    if (v == a + 1) e -= 1;
  }
  return is_w ? -e : e;
}

// Single generator application inside one factor; the result keeps strict
// ordering because moved values collide rather than cross. Returns false
// for zero.
bool move_in_block(bool is_w, Gen gen, int a, std::vector<int>& vals) {
  // Source and target values of the move within this factor kind.
  int src, dst;
  if (gen == Gen::F) {
    if (!is_w) {
      src = a;
      dst = a + 1;
    } else {
      src = a + 1;
      dst = a;
    }
  } else {
    if (!is_w) {
      src = a + 1;
      dst = a;
    } else {
      src = a;
      dst = a + 1;
    }
  }
  auto it = std::find(vals.begin(), vals.end(), src);
  if (it == vals.end()) return false;
  if (std::find(vals.begin(), vals.end(), dst) != vals.end()) return false;
  *it = dst;
  return true;
}

struct Expansion {
  std::vector<std::vector<int>> blocks;
  Laurent coeff;
};

// Divided power action of F, recursing over factors left to right. The
// comultiplication puts the diagonal correction on the first factor and
// the residual power on the rest; within a single factor only powers
// zero and one survive.
void rec_f(const Signature& sig, const std::vector<std::vector<int>>& blocks, int t, int r,
           std::vector<std::vector<int>>& acc, const Laurent& coeff, int a,
           std::vector<Expansion>& out) {
  const int nb = static_cast<int>(blocks.size());
  if (t == nb) {
    if (r == 0) out.push_back({acc, coeff});
    return;
  }
  bool is_w = block_is_w(sig, t);
  for (int j = 0; j <= std::min(r, 1); ++j) {
    int i = r - j;
    std::vector<int> vals = blocks[t];
    if (j == 1 && !move_in_block(is_w, Gen::F, a, vals)) continue;
    Laurent c = coeff;
    if (i > 0) {
      int e = i * j + i * kw_block(is_w, vals, a);
      c *= Laurent::q(e);
    }
    acc.push_back(vals);
    rec_f(sig, blocks, t + 1, i, acc, c, a, out);
    acc.pop_back();
  }
}

// Divided power action of E. Here the diagonal correction rides on the
// factors to the right of the one taking the local power, so the exponent
// is assembled from the already-moved suffix inside the recursion results.
void rec_e(const Signature& sig, const std::vector<std::vector<int>>& blocks, int t, int r,
           int a, std::vector<Expansion>& out) {
  const int nb = static_cast<int>(blocks.size());
  if (t == nb) {
    if (r == 0) out.push_back({{}, Laurent(1)});
    return;
  }
  bool is_w = block_is_w(sig, t);
  for (int i = 0; i <= std::min(r, 1); ++i) {
    int j = r - i;
    std::vector<int> vals = blocks[t];
    if (i == 1 && !move_in_block(is_w, Gen::E, a, vals)) continue;
    std::vector<Expansion> rest;
    rec_e(sig, blocks, t + 1, j, a, rest);
    for (auto& ex : rest) {
      Laurent c = ex.coeff;
      if (i > 0) {
        int e = i * j;
        for (std::size_t s = 0; s < ex.blocks.size(); ++s)
          e -= i * kw_block(block_is_w(sig, t + 1 + static_cast<int>(s)), ex.blocks[s], a);
        c *= Laurent::q(e);
      }
      std::vector<std::vector<int>> full;
      full.reserve(ex.blocks.size() + 1);
      full.push_back(vals);
      for (auto& bvals : ex.blocks) full.push_back(std::move(bvals));
      out.push_back({std::move(full), c});
    }
  }
}

Weight from_blocks(const std::vector<std::vector<int>>& blocks) {
  Weight f;
  for (const auto& b : blocks) f.insert(f.end(), b.begin(), b.end());
  return f;
}

}  // namespace

int k_exponent(const Signature& sig, const Weight& f, int a) {
  auto blocks = to_blocks(sig, f);
  int e = 0;
  for (int b = 0; b < sig.block_count(); ++b) e += kw_block(block_is_w(sig, b), blocks[b], a);
  return e;
}

FockVector apply_step(const FockVector& v, const OpStep& step) {
  if (step.power < 0) throw Error("BadStep", "negative divided power");
  FockVector out(v.sig());
  if (step.power == 0) return v;
  for (const auto& [f, c] : v.terms()) {
    auto blocks = to_blocks(v.sig(), f);
    std::vector<Expansion> exps;
    if (step.gen == Gen::F) {
      std::vector<std::vector<int>> acc;
      rec_f(v.sig(), blocks, 0, step.power, acc, Laurent(1), step.index, exps);
    } else {
      rec_e(v.sig(), blocks, 0, step.power, step.index, exps);
    }
    for (const auto& ex : exps) out.add(from_blocks(ex.blocks), c * ex.coeff);
  }
  return out;
}

FockVector apply_word(const FockVector& v, const OperatorWord& word) {
  FockVector r = v;
  for (const auto& step : word) r = apply_step(r, step);
  return r;
}

FockVector normalize(const Signature& sig, const std::vector<std::vector<int>>& factors,
                     const Laurent& c) {
  if (static_cast<int>(factors.size()) != sig.block_count())
    throw Error("BadWeight", "expected one value list per factor");
  Laurent coeff = c;
  Weight f;
  for (int b = 0; b < sig.block_count(); ++b) {
    if (static_cast<int>(factors[b].size()) != sig.block_size(b))
      throw Error("BadWeight", "factor " + std::to_string(b) + " has wrong size");
    std::vector<int> vals = factors[b];
    bool inc = sig.block_increasing(b);
    // Bubble toward the storage order; every adjacent transposition costs
    // a factor -1/q, a repeated value kills the term.
    for (std::size_t pass = 0; pass + 1 < vals.size() || pass == 0; ++pass) {
      bool moved = false;
      for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        if (vals[i] == vals[i + 1]) return FockVector(sig);
        bool wrong = inc ? vals[i] > vals[i + 1] : vals[i] < vals[i + 1];
        if (wrong) {
          std::swap(vals[i], vals[i + 1]);
          coeff *= Laurent::term(-1, -1);
          moved = true;
        }
      }
      if (!moved) break;
    }
    f.insert(f.end(), vals.begin(), vals.end());
  }
  return FockVector::monomial(sig, f, coeff);
}

FockVector truncate_vector(const FockVector& v, int n_to) {
  Signature tsig = truncate_signature(v.sig(), n_to);
  FockVector out(tsig);
  for (const auto& [f, c] : v.terms()) {
    if (tail_conforms(v.sig(), f, n_to)) out.add(truncate_weight(v.sig(), f, n_to), c);
  }
  return out;
}

}  // namespace fockcan
