#pragma once

#include "fockcan/fock.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace fockcan {

struct EngineOptions {
  // Values may run this far below the reference weight minimum (and above
  // its maximum for raising steps).
  int radius = 8;
  // State cap for order exploration and window closure; 0 reads the
  // FOCKCAN_MAX_WINDOW environment variable and falls back to 20000.
  std::size_t max_states = 0;
  // Shuffle synthesis candidates; the result of canonical() must not
  // depend on this.
  bool permute_candidates = false;
  unsigned seed = 1;
  // Construction recursion limit; deeper searches fail with SynthesisFailed
  // instead of exhausting the stack.
  int max_depth = 600;
};

// Per-family computation context: builds bar-invariant vectors by applying
// generator words to smaller weights, refines them to the canonical and
// dual canonical bases, and assembles triangular tables.
class Engine {
public:
  Engine(Signature sig, const Weight& reference, EngineOptions opt = {});

  const Signature& sig() const { return sig_; }
  WeightOrder& order() { return order_; }
  int value_floor() const { return floor_; }

  // Bar-invariant vector with unit leading coefficient at f and all other
  // support strictly lower.
  const FockVector& bar_invariant(const Weight& f);

  // Unique bar-invariant vector whose off-leading coefficients lie in
  // q Z[q], resp. q^{-1} Z[q^{-1}] for the dual.
  const FockVector& canonical(const Weight& f);
  const FockVector& dual_canonical(const Weight& f);

  Laurent u_entry(const Weight& g, const Weight& f) { return canonical(f).coeff(g); }
  Laurent l_entry(const Weight& g, const Weight& f) { return dual_canonical(f).coeff(g); }

  // Closed form over subsets of matched-pair lowerings and disjoint swap
  // selections; requires isolated matches and at most two blocks per side.
  FockVector canonical_closed_form(const Weight& f);

  // One reduction step for the supported shapes (two singleton negative
  // blocks, or a negative pair (m,1) with one positive value). Requires an
  // atypical weight.
  std::pair<OpStep, Weight> reduction_step(const Weight& f);

  // Full reduction chain: word in application order and the typical base
  // weight it starts from.
  OperatorWord reduction_word(const Weight& f, Weight* base_out = nullptr);

  // Recompute the canonical vector by applying the reduction word to the
  // canonical vector of the typical base.
  FockVector canonical_by_reduction(const Weight& f);

  // Closure of f under supports of bar-invariant vectors, sorted so that
  // lower weights come first.
  std::vector<Weight> window(const Weight& f);

  struct Table {
    std::vector<Weight> weights;
    std::map<std::pair<int, int>, Laurent> entry;
    const Laurent& at(int row, int col) const;
    int index_of(const Weight& f) const;
  };

  // Columns are bar-invariant vectors over the monomial basis.
  Table change_of_basis(const std::vector<Weight>& weights);
  // C * bar(C)^{-1}; the identity matrix exactly when the change of basis
  // columns are genuinely bar-invariant.
  Table bar_matrix(const std::vector<Weight>& weights);
  Table u_table(const std::vector<Weight>& weights);
  Table l_table(const std::vector<Weight>& weights);

  std::vector<Weight> sort_low_to_high(std::vector<Weight> weights);

  bool shape_two_singletons() const;  // negative blocks (1,1), one positive block
  bool shape_pair_one() const;        // negative blocks (m,1), positive block (1)

private:
  FockVector build_invariant(const Weight& f);
  FockVector synthesize(const Weight& f);
  const FockVector& refine(const Weight& f, bool dual);
  bool below_dual_cutoff(const Weight& g);
  bool dual_constructible(const Weight& g);
  bool verify_leading(const FockVector& v, const Weight& f);
  std::pair<OpStep, Weight> step_two_singletons(const Weight& f);
  std::pair<OpStep, Weight> step_pair_one(const Weight& f);
  std::vector<std::pair<OpStep, Weight>> detach_candidates(const Weight& f) const;

  Signature sig_;
  EngineOptions opt_;
  int floor_, ceil_;
  WeightOrder order_;
  std::map<Weight, FockVector> b_memo_, u_memo_, l_memo_;
  std::set<Weight> building_, failed_;
  std::vector<Weight> dual_cutoffs_;
  int depth_ = 0;
};

// Comparison of the triangular coefficients of a classical family with
// those of its complement-transformed super family.
struct DualityMismatch {
  Weight classical_row, classical_col;  // classical_row empty: extra super support
  Weight super_row;
  Laurent classical_value, super_value;
};

struct DualityReport {
  Signature classical_sig;
  Signature super_sig;
  Weight head;
  int window_size = 0;
  int pairs_checked = 0;
  std::vector<DualityMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

DualityReport duality_check(const std::vector<int>& neg_blocks, int classical_n, int super_n,
                            const Weight& classical_head, const EngineOptions& opt = {});

}  // namespace fockcan
