#include "doctest.h"
#include "fockcan/weights.hpp"

using namespace fockcan;

TEST_SUITE_BEGIN("weights");

TEST_CASE("signature parsing and layout") {
  Signature sig = Signature::parse("2,1|3");
  CHECK(sig.kind() == Kind::Super);
  CHECK(sig.m() == 3);
  CHECK(sig.n() == 3);
  CHECK(sig.block_count() == 3);
  CHECK(sig.block_size(0) == 2);
  CHECK(sig.block_is_negative(1));
  CHECK(!sig.block_increasing(0));
  CHECK(sig.block_increasing(2));
  CHECK(sig.index_of_position(-3) == 0);
  CHECK(sig.index_of_position(-1) == 2);
  CHECK(sig.index_of_position(1) == 3);
  CHECK(sig.position_of_index(3) == 1);
  CHECK(sig.str() == "2,1|3");

  Signature c = Signature::parse("1,1+6");
  CHECK(c.kind() == Kind::Classical);
  CHECK(c.n() == 6);
  CHECK(!c.block_increasing(2));
  CHECK(c.str() == "1,1+6");

  CHECK_THROWS_AS(Signature::parse("2,1"), Error);
  CHECK_THROWS_AS(Signature::parse("0|1"), Error);
}

TEST_CASE("weight text round trip") {
  Signature sig = Signature::parse("2,1|2");
  Weight f = parse_weight(sig, "5,3|2|1,4");
  CHECK(f == Weight{5, 3, 2, 1, 4});
  CHECK(weight_str(sig, f) == "5,3|2|1,4");
  CHECK_THROWS_AS(parse_weight(sig, "5,3|2|1"), Error);
  CHECK_THROWS_AS(parse_weight(sig, "5,3|2"), Error);
}

TEST_CASE("dominance respects block directions") {
  Signature sig = Signature::parse("2|2");
  CHECK(is_dominant(sig, {3, 1, 0, 2}));
  CHECK(!is_dominant(sig, {1, 3, 0, 2}));
  CHECK(!is_dominant(sig, {3, 1, 2, 0}));
  CHECK(!is_dominant(sig, {3, 3, 0, 2}));

  Signature c = Signature::parse("2+2");
  CHECK(is_dominant(c, {3, 1, 2, 0}));
  CHECK(!is_dominant(c, {3, 1, 0, 2}));
}

TEST_CASE("dominant conjugation and sorted states") {
  Signature sig = Signature::parse("2|2");
  CHECK(sorted_state(sig, {1, 3, 2, 0}) == Weight{3, 1, 0, 2});
  auto dom = try_dominant_conjugate(sig, {1, 3, 2, 0});
  REQUIRE(dom.has_value());
  CHECK(*dom == Weight{3, 1, 0, 2});
  CHECK(!try_dominant_conjugate(sig, {3, 3, 0, 2}).has_value());
  CHECK(dominant_conjugate(sig, {1, 3, 0, 2}) == Weight{3, 1, 0, 2});
}

TEST_CASE("eps weight cancels opposite sides") {
  Signature sig = Signature::parse("1,1|1");
  auto e = eps_weight(sig, {0, 0, 0});
  REQUIRE(e.size() == 1);
  CHECK(e.at(0) == 1);
  CHECK(eps_weight(sig, {0, 0, 0}) == eps_weight(sig, {1, 0, 1}));
  CHECK(eps_weight(sig, {0, 0, 0}) != eps_weight(sig, {2, 1, 1}));

  Signature c = Signature::parse("1+1");
  auto ec = eps_weight(c, {2, 2});
  CHECK(ec.at(2) == 2);
}

TEST_CASE("atypicality and matched pairs") {
  Signature sig = Signature::parse("2,1|2");
  CHECK(atypicality(sig, {5, 3, 2, 1, 4}) == 0);
  CHECK(is_typical(sig, {5, 3, 2, 1, 4}));

  Weight f = {5, 3, 2, 3, 5};
  CHECK(atypicality(sig, f) == 2);
  auto pairs = matched_pairs(sig, f);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<int, int>{-3, 2});
  CHECK(pairs[1] == std::pair<int, int>{-2, 1});

  Weight rep = {3, 1, 3, 3, 4};
  auto rp = matched_pairs(sig, rep);
  REQUIRE(rp.size() == 1);
  CHECK(rp[0] == std::pair<int, int>{-3, 1});
}

TEST_CASE("minimal weights admit no lowering move") {
  Signature sig = Signature::parse("1,1|1");
  CHECK(is_minimal(sig, {-1, -1, 0}));
  CHECK(!is_minimal(sig, {0, 0, 0}));
  CHECK(!is_minimal(sig, {0, -2, 0}));

  Signature c = Signature::parse("1,1+2");
  CHECK(!is_minimal(c, {1, 0, 0, -1}));
  CHECK(!is_minimal(c, {0, 1, 0, -1}));
  CHECK(is_minimal(c, {-1, 0, 1, 0}));
}

TEST_CASE("order relations in the two singleton space") {
  Signature sig = Signature::parse("1,1|1");
  WeightOrder order(sig, -10, 100000);
  CHECK(order.leq({0, 0, 0}, {0, 0, 0}));
  CHECK(order.less({0, -1, -1}, {0, 0, 0}));
  CHECK(order.less({-1, 0, -1}, {0, 0, 0}));
  CHECK(order.less({-1, 0, -1}, {0, -1, -1}));
  CHECK(order.less({0, 0, 0}, {0, 1, 1}));
  CHECK(order.less({0, 1, 1}, {1, 0, 1}));
  CHECK(!order.leq({0, 1, 1}, {0, 0, 0}));
  CHECK(!order.leq({0, 2, 2}, {1, 0, 1}));

  CHECK(order.reachable({0, 0, 0}).count({-2, 0, -2}) == 1);

  WeightOrder tiny(sig, -10, 3);
  std::string code;
  try {
    tiny.reachable({0, 0, 0});
  } catch (const Error& e) {
    code = e.code();
  }
  CHECK(code == "WindowExceeded");
}

TEST_CASE("shift between highest weight and function coordinates") {
  Signature sig = Signature::parse("1,1|1");
  CHECK(weight_from_lambda(sig, {0, 0, 0}) == Weight{2, 1, 1});
  CHECK(lambda_from_weight(sig, {2, 1, 1}) == std::vector<int>{0, 0, 0});

  Signature c = Signature::parse("1,1+2");
  CHECK(weight_from_lambda(c, {0, 0, 0, 0}) == Weight{2, 1, 0, -1});
  CHECK(lambda_from_weight(c, {2, 1, 0, -1}) == std::vector<int>{0, 0, 0, 0});

  Signature big = Signature::parse("2|2");
  Weight f = weight_from_lambda(big, {4, 2, 1, 1});
  CHECK(f == Weight{6, 3, 0, 1});
  CHECK(lambda_from_weight(big, f) == std::vector<int>{4, 2, 1, 1});
}

TEST_CASE("negation lands in the dominant chamber") {
  Signature sig = Signature::parse("2|1");
  CHECK(negate_weight(sig, {3, 1, 2}) == Weight{-1, -3, -2});
  CHECK(negate_weight(sig, {0, -2, 1}) == Weight{2, 0, -1});
  CHECK(negate_weight(sig, negate_weight(sig, {3, 1, 2})) == Weight{3, 1, 2});
}

TEST_CASE("matched pair lowering finds the least admissible drop") {
  Signature sig = Signature::parse("1,1|1");
  CHECK(lower_matched_pair(sig, {0, 0, 0}, -2, 1) == Weight{-1, 0, -1});

  Signature two = Signature::parse("2|1");
  CHECK(lower_matched_pair(two, {1, 0, 1}, -2, 1) == Weight{0, -1, -1});
  CHECK_THROWS_AS(lower_matched_pair(two, {1, 0, 0}, -2, 1), Error);
}

TEST_CASE("pair subsets lower in stored order") {
  Signature sig = Signature::parse("2|2");
  Weight f = {3, 1, 1, 3};
  auto pairs = matched_pairs(sig, f);
  REQUIRE(pairs.size() == 2);
  CHECK(lower_pairs_subset(sig, f, pairs, 0) == f);
  Weight both = lower_pairs_subset(sig, f, pairs, 3);
  CHECK(is_dominant(sig, both));
  CHECK(atypicality(sig, both) == 2);
}

TEST_CASE("swap selection pairs nearest values across blocks") {
  Signature sig = Signature::parse("2,2|1");
  Weight f = {5, 2, 4, 1, 0};
  auto sel = swap_pair_selection(sig, f, 0, 1);
  REQUIRE(!sel.empty());
  Weight swapped = apply_swaps(sig, f, sel, (1u << sel.size()) - 1);
  CHECK(is_dominant(sig, swapped));
  WeightOrder order(sig, -12, 200000);
  CHECK(order.less(swapped, f));
}

TEST_CASE("isolated match detection") {
  Signature sig = Signature::parse("1,1|1");
  CHECK(!has_isolated_matches(sig, {0, 0, 0}));
  CHECK(has_isolated_matches(sig, {5, 2, 2}));
  CHECK(!has_isolated_matches(sig, {1, 0, 1}));

  Signature two = Signature::parse("2|1");
  CHECK(!has_isolated_matches(two, {3, 2, 3}));
}

TEST_CASE("truncation keeps identity tails only") {
  Signature sig = Signature::parse("1,1|3");
  Weight good = {4, 0, 1, 2, 3};
  CHECK(tail_conforms(sig, good, 1));
  Weight bad = {4, 0, 1, 2, 4};
  CHECK(!tail_conforms(sig, bad, 1));
  CHECK(tail_conforms(sig, bad, 3));
  CHECK(truncate_signature(sig, 1) == Signature::parse("1,1|1"));
  CHECK(truncate_weight(sig, good, 1) == Weight{4, 0, 1});

  Signature c = Signature::parse("1+3");
  Weight cw = {7, 2, -1, -2};
  CHECK(tail_conforms(c, cw, 1));
  CHECK(truncate_weight(c, cw, 1) == Weight{7, 2});
}

TEST_CASE("complement transform keeps negatives and complements positives") {
  Signature csig = Signature::parse("1,1+6");
  Signature ssig = Signature::parse("1,1|3");
  Weight head = {2, 1, 0, -1, -2, -3, -4, -5};
  CHECK(complement_transform(csig, head, ssig) == Weight{2, 1, 1, 2, 3});

  Weight shifted = {2, 1, 1, 0, -1, -2, -3, -4};
  CHECK(complement_transform(csig, shifted, ssig) == Weight{2, 1, -5, 2, 3});

  Weight out_of_range = {2, 1, 4, 0, -1, -2, -3, -4};
  CHECK_THROWS_AS(complement_transform(csig, out_of_range, ssig), Error);
}

TEST_CASE("restricted region bound on the last positive value") {
  Signature sig = Signature::parse("1,1|2");
  CHECK(in_restricted_region(sig, {5, 0, 1, 2}));
  CHECK(!in_restricted_region(sig, {5, 0, 1, 3}));
}

TEST_SUITE_END();
