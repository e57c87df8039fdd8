#include "doctest.h"
#include "fockcan/fock.hpp"

using namespace fockcan;

namespace {

FockVector mono(const Signature& sig, const Weight& f, const Laurent& c = Laurent(1)) {
  return FockVector::monomial(sig, f, c);
}

}  // namespace

TEST_SUITE_BEGIN("fock");

TEST_CASE("vector container semantics") {
  Signature sig = Signature::parse("2|1");
  FockVector v(sig);
  CHECK(v.is_zero());
  v.add({3, 0, 1}, Laurent::q(2));
  v.add({3, 0, 1}, -Laurent::q(2));
  CHECK(v.is_zero());

  v.add({3, 0, 1}, Laurent(1));
  v.add({2, 0, 1}, Laurent::q(-1));
  CHECK(v.term_count() == 2);
  CHECK(v.coeff({3, 0, 1}).is_one());
  CHECK(v.coeff({9, 9, 9}).is_zero());

  FockVector w = v * Laurent::q(1);
  CHECK(w.coeff({2, 0, 1}).is_one());

  FockVector b = w.bar_coefficients();
  CHECK(b.coeff({3, 0, 1}) == Laurent::q(-1));

  CHECK_THROWS_AS(mono(sig, {0, 3, 1}), Error);

  Signature other = Signature::parse("1,1|1");
  FockVector u(other);
  CHECK_THROWS_AS(v += u, Error);
}

TEST_CASE("diagonal exponents count values on each side") {
  Signature sig = Signature::parse("1,1|1");
  CHECK(k_exponent(sig, {0, 0, 0}, 0) == 1);
  CHECK(k_exponent(sig, {0, 0, 0}, -1) == -1);

  Signature vw = Signature::parse("1|1");
  CHECK(k_exponent(vw, {5, 1}, 1) == -1);
  CHECK(k_exponent(vw, {5, 1}, 5) == 1);
  CHECK(k_exponent(vw, {0, 1}, 0) == 2);
}

TEST_CASE("lowering moves a value up on the left and down on the right") {
  Signature sig = Signature::parse("1|1");
  FockVector v = apply_step(mono(sig, {0, 1}), {Gen::F, 0, 1});
  FockVector want = mono(sig, {1, 1}) + mono(sig, {0, 0}, Laurent::q(1));
  CHECK(v == want);

  // No source value on the left factor: only the right factor moves.
  CHECK(apply_step(mono(sig, {5, 1}), {Gen::F, 0, 1}) == mono(sig, {5, 0}));
}

TEST_CASE("raising is the reverse move with suffix diagonal corrections") {
  Signature sig = Signature::parse("1|1");
  CHECK(apply_step(mono(sig, {5, 0}), {Gen::E, 0, 1}) == mono(sig, {5, 1}));

  FockVector v = apply_step(mono(sig, {1, 0}), {Gen::E, 0, 1});
  FockVector want = mono(sig, {0, 0}, Laurent::q(1)) + mono(sig, {1, 1});
  CHECK(v == want);

  Signature two = Signature::parse("1,1|1");
  CHECK(apply_step(mono(two, {0, 0, 0}), {Gen::E, 0, 1}) == mono(two, {0, 0, 1}));
}

TEST_CASE("commutator acts by a quantum integer on a monomial") {
  Signature sig = Signature::parse("1|1");
  FockVector v = mono(sig, {0, 1});
  FockVector ef = apply_word(v, {{Gen::F, 0, 1}, {Gen::E, 0, 1}});
  FockVector fe = apply_word(v, {{Gen::E, 0, 1}, {Gen::F, 0, 1}});
  CHECK(fe.is_zero());
  CHECK(ef - fe == v * Laurent::quantum_int(k_exponent(sig, {0, 1}, 0)));
}

TEST_CASE("divided powers spread across factors") {
  Signature sig = Signature::parse("2|1");
  FockVector start = mono(sig, {3, 0, 1});
  FockVector divided = apply_step(start, {Gen::F, 0, 2});
  CHECK(divided == mono(sig, {3, 1, 0}));

  FockVector squared = apply_word(start, {{Gen::F, 0, 1}, {Gen::F, 0, 1}});
  CHECK(squared == divided * Laurent::quantum_factorial(2));

  CHECK(apply_step(mono(sig, {3, 1, 0}), {Gen::E, 0, 2}) == start);

  // A single factor never absorbs two copies of the same move.
  Signature col = Signature::parse("2|1");
  CHECK(apply_step(mono(col, {1, 0, 5}), {Gen::F, 0, 2}).is_zero());
}

TEST_CASE("zero and negative powers") {
  Signature sig = Signature::parse("1|1");
  FockVector v = mono(sig, {0, 1});
  CHECK(apply_step(v, {Gen::F, 0, 0}) == v);
  CHECK_THROWS_AS(apply_step(v, {Gen::F, 0, -1}), Error);
}

TEST_CASE("straightening orders factors at a unit cost per crossing") {
  Signature sig = Signature::parse("2|1");
  CHECK(normalize(sig, {{3, 0}, {1}}) == mono(sig, {3, 0, 1}));
  CHECK(normalize(sig, {{0, 3}, {1}}) == mono(sig, {3, 0, 1}, Laurent::term(-1, -1)));
  CHECK(normalize(sig, {{3, 3}, {1}}).is_zero());

  Signature w2 = Signature::parse("1|2");
  CHECK(normalize(w2, {{5}, {2, 1}}) == mono(w2, {5, 1, 2}, Laurent::term(-1, -1)));

  Signature v3 = Signature::parse("3|1");
  CHECK(normalize(v3, {{0, 1, 2}, {0}}) == mono(v3, {2, 1, 0, 0}, Laurent::term(-1, -3)));
  CHECK(normalize(v3, {{3, 0, 3}, {0}}).is_zero());
}

TEST_CASE("tail truncation keeps conforming terms and reindexes") {
  Signature sig = Signature::parse("1|2");
  FockVector v = mono(sig, {4, 1, 2}) + mono(sig, {4, 0, 2}, Laurent::q(1)) +
                 mono(sig, {4, 0, 1}, Laurent::q(2));
  FockVector t = truncate_vector(v, 1);
  CHECK(t.sig() == Signature::parse("1|1"));
  CHECK(t.term_count() == 2);
  CHECK(t.coeff({4, 1}).is_one());
  CHECK(t.coeff({4, 0}) == Laurent::q(1));
}

TEST_CASE("step formatting") {
  OpStep f{Gen::F, 0, 1};
  CHECK(f.str() == "F_0");
  OpStep e{Gen::E, 3, 2};
  CHECK(e.str() == "E_3^(2)");
  CHECK(f == OpStep{Gen::F, 0, 1});
  CHECK(!(f == e));
}

TEST_SUITE_END();
