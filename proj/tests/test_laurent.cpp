#include "doctest.h"
#include "fockcan/laurent.hpp"

using namespace fockcan;

TEST_SUITE_BEGIN("laurent");

TEST_CASE("construction and basic queries") {
  Laurent z;
  CHECK(z.is_zero());
  CHECK(z.eval_one() == 0);
  CHECK_THROWS_AS(z.min_exp(), Error);

  Laurent one(1);
  CHECK(one.is_one());
  CHECK(Laurent::term(0, 5).is_zero());

  Laurent p = Laurent::q(2) - Laurent::q(-1) * Laurent(Int(3));
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(-1) == -3);
  CHECK(p.coeff(0) == 0);
  CHECK(p.min_exp() == -1);
  CHECK(p.max_exp() == 2);
  CHECK(p.eval_one() == -2);
}

TEST_CASE("ring arithmetic") {
  Laurent a = Laurent(1) + Laurent::q();
  Laurent b = Laurent(1) - Laurent::q();
  CHECK(a * b == Laurent(1) - Laurent::q(2));
  CHECK(a - a == Laurent());
  CHECK(a.pow(3) == Laurent(1) + Laurent::term(3, 1) + Laurent::term(3, 2) + Laurent::q(3));
  CHECK((a * Laurent()).is_zero());
}

TEST_CASE("bar swaps q and its inverse") {
  Laurent p = Laurent::term(2, 3) + Laurent::term(-1, 0) + Laurent::q(-2);
  Laurent barred = p.bar();
  CHECK(barred.coeff(-3) == 2);
  CHECK(barred.coeff(0) == -1);
  CHECK(barred.coeff(2) == 1);
  CHECK(barred.bar() == p);
}

TEST_CASE("substitution of minus inverse") {
  Laurent p = Laurent::q(-1) + Laurent::term(2, -3);
  Laurent s = p.subst_minus_inverse();
  CHECK(s == Laurent::term(-1, 1) + Laurent::term(-2, 3));
  CHECK(s.subst_minus_inverse() == p);
}

TEST_CASE("exact division") {
  Laurent a = Laurent(1) + Laurent::q();
  Laurent prod = a * a * Laurent::q(-1);
  CHECK(prod.div_exact(a) == a * Laurent::q(-1));
  CHECK((Laurent(1) + Laurent::q(3)).div_exact(a) == Laurent(1) - Laurent::q(1) + Laurent::q(2));
  CHECK_THROWS_AS((Laurent(1) + Laurent::q(2)).div_exact(a), Error);
}

TEST_CASE("exponent range predicates") {
  Laurent p = Laurent::q(1) + Laurent::q(4);
  CHECK(p.all_exponents_at_least(1));
  CHECK(!p.all_exponents_at_least(2));
  CHECK(p.bar().all_exponents_at_most(-1));
  CHECK(Laurent().all_exponents_at_least(100));
  CHECK(p.coefficients_nonnegative());
  CHECK(!(p - Laurent::q(2)).coefficients_nonnegative());
}

TEST_CASE("quantum integers and factorials") {
  CHECK(Laurent::quantum_int(1).is_one());
  CHECK(Laurent::quantum_int(2) == Laurent::q() + Laurent::q(-1));
  CHECK(Laurent::quantum_int(3) == Laurent::q(2) + Laurent(1) + Laurent::q(-2));
  CHECK(Laurent::quantum_factorial(3) ==
        Laurent::quantum_int(2) * Laurent::quantum_int(3));
  CHECK(Laurent::quantum_factorial(0).is_one());
  CHECK(Laurent::quantum_int(2).bar() == Laurent::quantum_int(2));
}

TEST_CASE("big coefficients stay exact") {
  Laurent p = Laurent(Int(1));
  for (int i = 0; i < 40; ++i) p = p * Laurent(Int(10));
  CHECK(p.str() == std::string("1") + std::string(40, '0'));
}

TEST_SUITE_END();
