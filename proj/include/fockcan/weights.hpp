#pragma once

#include "fockcan/laurent.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fockcan {

// Two flavours of tensor space share one weight combinatorics:
//  - Super: negative positions index dual-exterior-type factors whose
//    values sort strictly decreasing, positive positions index factors
//    whose values sort strictly increasing.
//  - Classical: every factor sorts strictly decreasing.
enum class Kind { Super, Classical };

// Factor shape of the space. Negative blocks occupy positions -m..-1
// left to right, positive blocks occupy positions 1..n.
class Signature {
public:
  Signature(std::vector<int> neg, std::vector<int> pos, Kind kind);

  // "2,1|1" for super, "2,1+6" for classical.
  static Signature parse(const std::string& text);

  Kind kind() const { return kind_; }
  const std::vector<int>& neg_blocks() const { return neg_; }
  const std::vector<int>& pos_blocks() const { return pos_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return m_ + n_; }
  int block_count() const { return static_cast<int>(neg_.size() + pos_.size()); }

  // Blocks are numbered left to right over negative then positive blocks.
  int block_size(int b) const;
  bool block_is_negative(int b) const { return b < static_cast<int>(neg_.size()); }
  // True when values in block b sort increasing (super positive blocks).
  bool block_increasing(int b) const {
    return kind_ == Kind::Super && !block_is_negative(b);
  }
  int block_first_index(int b) const { return first_[b]; }
  int block_of_index(int idx) const;

  // Positions run -m..-1, 1..n; indices run 0..m+n-1.
  int index_of_position(int p) const;
  int position_of_index(int idx) const { return idx < m_ ? idx - m_ : idx - m_ + 1; }

  std::string str() const;
  bool operator==(const Signature& o) const {
    return kind_ == o.kind_ && neg_ == o.neg_ && pos_ == o.pos_;
  }
  bool operator!=(const Signature& o) const { return !(*this == o); }

private:
  std::vector<int> neg_, pos_;
  Kind kind_;
  int m_ = 0, n_ = 0;
  std::vector<int> first_;
};

// A weight is the list of factor values in position order (index order).
using Weight = std::vector<int>;

Weight parse_weight(const Signature& sig, const std::string& text);
std::string weight_str(const Signature& sig, const Weight& f);

bool is_dominant(const Signature& sig, const Weight& f);

// Sort every block into its dominant direction; repeated values inside a
// block are allowed here (used for order exploration states).
Weight sorted_state(const Signature& sig, const Weight& f);

// Dominant rearrangement; empty when some block has a repeated value.
std::optional<Weight> try_dominant_conjugate(const Signature& sig, const Weight& f);
Weight dominant_conjugate(const Signature& sig, const Weight& f);

// Signed multiplicity of each value: negative positions count +1, positive
// positions count -1 for super and +1 for classical.
std::map<int, int> eps_weight(const Signature& sig, const Weight& f);

// Number of value matches between the negative and positive sides after
// maximal pairing (super only).
int atypicality(const Signature& sig, const Weight& f);
bool is_typical(const Signature& sig, const Weight& f);

// Pairs (negative position, positive position) of equal values, listed with
// the positive position descending; each positive position takes the
// leftmost unused negative position of equal value.
std::vector<std::pair<int, int>> matched_pairs(const Signature& sig, const Weight& f);

// Moves of the lowering order: cross-block swaps that strictly lower, and
// for super the simultaneous decrement of an equal negative/positive value
// pair. A weight is minimal when no move applies to it.
bool is_minimal(const Signature& sig, const Weight& f);

// Lowering order explorer with memoised reachability sets. States are
// per-block sorted tuples; repeats inside a block are legal intermediate
// states even though they are not weights of basis vectors.
class WeightOrder {
public:
  WeightOrder(Signature sig, int value_floor, std::size_t state_cap);

  // g is below-or-equal f.
  bool leq(const Weight& g, const Weight& f);
  bool less(const Weight& g, const Weight& f) { return g != f && leq(g, f); }
  const std::set<Weight>& reachable(const Weight& f);

private:
  Signature sig_;
  int floor_;
  std::size_t cap_;
  std::map<Weight, std::set<Weight>> memo_;
};

// Rho-shifted coordinates. lambda is indexed like a weight.
Weight weight_from_lambda(const Signature& sig, const std::vector<int>& lambda);
std::vector<int> lambda_from_weight(const Signature& sig, const Weight& f);

// Restricted dominant region whose members truncate/extend compatibly:
// last positive value at most n for super, at least 1-n for classical.
bool in_restricted_region(const Signature& sig, const Weight& f);

// Dominant rearrangement of the negated weight.
Weight negate_weight(const Signature& sig, const Weight& f);

// Lower both members of a matched pair by the least amount that yields a
// weight with a dominant rearrangement while keeping every other matched
// pair individually lowerable. Throws PairLoweringUnresolved past the cap.
Weight lower_matched_pair(const Signature& sig, const Weight& f, int neg_pos, int pos_pos,
                          int cap = 64);

// Apply lower_matched_pair for the pairs selected by mask, in the stored
// order (positive position descending).
Weight lower_pairs_subset(const Signature& sig, const Weight& f,
                          const std::vector<std::pair<int, int>>& pairs, unsigned mask,
                          int cap = 64);

// Disjoint family of admissible lowering swaps between two blocks, chosen
// nearest value distance first. Positions are global weight positions.
std::vector<std::pair<int, int>> swap_pair_selection(const Signature& sig, const Weight& f,
                                                     int block_a, int block_b);

Weight apply_swaps(const Signature& sig, const Weight& f,
                   const std::vector<std::pair<int, int>>& pairs, unsigned mask);

// Every matched value appears only at its two matched positions, and the
// value one below it appears nowhere else.
bool has_isolated_matches(const Signature& sig, const Weight& f);

// Tail conformance for dropping positive positions beyond n_to: kept
// positions must carry the identity tail (value j for super, 1-j for
// classical at position j).
bool tail_conforms(const Signature& sig, const Weight& f, int n_to);
Signature truncate_signature(const Signature& sig, int n_to);
Weight truncate_weight(const Signature& sig, const Weight& f, int n_to);

// Complement transform from a classical weight to a super weight: the
// negative side is kept, the positive side is replaced by the ascending
// complement of its value set (the classical tail 1-j beyond position n is
// implied). Throws when the resulting super weight does not conform to the
// identity tail beyond the requested number of positive positions.
Weight complement_transform(const Signature& classical_sig, const Weight& f,
                            const Signature& super_sig);

// -w0(lambda) - 2 rho + 2 rho_l in lambda coordinates, where w0 reverses
// every block and rho_l is the half sum for the block Levi.
std::vector<int> twist_lambda(const Signature& sig, const std::vector<int>& lambda);

}  // namespace fockcan
