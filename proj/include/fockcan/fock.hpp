#pragma once

#include "fockcan/weights.hpp"

#include <map>
#include <vector>

namespace fockcan {

// One Chevalley generator application, optionally a divided power.
// F with index a moves a value a to a+1 in negative-side factors and a
// value a+1 to a in positive super factors; E is the reverse.
enum class Gen { E, F };

struct OpStep {
  Gen gen;
  int index;
  int power = 1;

  bool operator==(const OpStep& o) const {
    return gen == o.gen && index == o.index && power == o.power;
  }
  std::string str() const;
};

// Steps are applied in listed order: word[0] acts first.
using OperatorWord = std::vector<OpStep>;

// Finitely supported vector with Laurent coefficients over the dominant
// monomial basis.
class FockVector {
public:
  explicit FockVector(Signature sig) : sig_(std::move(sig)) {}

  static FockVector monomial(const Signature& sig, const Weight& f,
                             const Laurent& c = Laurent(1));

  const Signature& sig() const { return sig_; }
  const std::map<Weight, Laurent>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }

  Laurent coeff(const Weight& f) const {
    auto it = t_.find(f);
    return it == t_.end() ? Laurent() : it->second;
  }

  void add(const Weight& f, const Laurent& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector operator*(const Laurent& c) const;

  // Bar every coefficient, leaving the basis labels alone.
  FockVector bar_coefficients() const;

  bool operator==(const FockVector& o) const { return sig_ == o.sig_ && t_ == o.t_; }
  bool operator!=(const FockVector& o) const { return !(*this == o); }

  std::string str() const;

private:
  Signature sig_;
  std::map<Weight, Laurent> t_;
};

// Exponent of the diagonal operator paired with index a on a monomial:
// K_{a} K_{a+1}^{-1} acts by q to this exponent.
int k_exponent(const Signature& sig, const Weight& f, int a);

FockVector apply_step(const FockVector& v, const OpStep& step);
FockVector apply_word(const FockVector& v, const OperatorWord& word);

// Expand a pure tensor of factor words (arbitrary value lists per factor)
// over the dominant monomial basis, straightening each factor.
FockVector normalize(const Signature& sig, const std::vector<std::vector<int>>& factors,
                     const Laurent& c = Laurent(1));

// Drop positive positions beyond n_to. Terms whose tail does not carry the
// identity values vanish; kept terms reindex over the truncated signature.
FockVector truncate_vector(const FockVector& v, int n_to);

}  // namespace fockcan
