#include "doctest.h"
#include "fockcan/cato.hpp"

using namespace fockcan;

namespace {

bool has_row(const FlagReport& r, const Weight& f, long long m) {
  for (const auto& row : r.rows)
    if (row.f == f) return row.mult == m;
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("cato");

TEST_CASE("flag kind names round trip") {
  for (FlagKind k : {FlagKind::Tilting, FlagKind::Verma, FlagKind::Irreducible,
                     FlagKind::Projective})
    CHECK(parse_flag_kind(flag_kind_str(k)) == k);
  CHECK_THROWS_AS(parse_flag_kind("junk"), Error);
}

TEST_CASE("tilting flags") {
  Signature sig = Signature::parse("1,1|1");
  FlagReport r = character_flag(sig, FlagKind::Tilting, {0, 0, 0});
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].f == Weight{-1, 0, -1});
  CHECK(r.rows[1].f == Weight{0, -1, -1});
  CHECK(r.rows[2].f == Weight{0, 0, 0});
  for (const auto& row : r.rows) CHECK(row.mult == 1);
  CHECK(r.proven);

  FlagReport n1 = character_flag(sig, FlagKind::Tilting, {-1, 0, -1});
  REQUIRE(n1.rows.size() == 2);
  CHECK(has_row(n1, {-1, 0, -1}, 1));
  CHECK(has_row(n1, {-2, 0, -2}, 1));
}

TEST_CASE("verma composition rows") {
  Signature sig = Signature::parse("1,1|1");
  FlagReport r = character_flag(sig, FlagKind::Verma, {0, 1, 1});
  REQUIRE(r.rows.size() == 2);
  CHECK(has_row(r, {0, 1, 1}, 1));
  CHECK(has_row(r, {0, 0, 0}, 1));
  CHECK(r.proven);

  FlagReport p1 = character_flag(sig, FlagKind::Verma, {1, 0, 1});
  REQUIRE(p1.rows.size() == 4);
  CHECK(has_row(p1, {1, 0, 1}, 1));
  CHECK(has_row(p1, {0, 1, 1}, 1));
  CHECK(has_row(p1, {0, 0, 0}, 1));
  CHECK(has_row(p1, {0, -1, -1}, 1));

  Signature cls = Signature::parse("1+1");
  FlagReport c = character_flag(cls, FlagKind::Verma, {1, 0});
  REQUIRE(c.rows.size() == 2);
  CHECK(has_row(c, {1, 0}, 1));
  CHECK(has_row(c, {0, 1}, 1));
  CHECK(c.proven);
}

TEST_CASE("projective flags by negation") {
  Signature sig = Signature::parse("1,1|1");
  FlagReport r = character_flag(sig, FlagKind::Projective, {-2, 0, -2});
  REQUIRE(r.rows.size() == 4);
  CHECK(has_row(r, {-2, 0, -2}, 1));
  CHECK(has_row(r, {0, -2, -2}, 1));
  CHECK(has_row(r, {-1, 0, -1}, 1));
  CHECK(has_row(r, {0, -1, -1}, 1));

  FlagReport s0 = character_flag(sig, FlagKind::Projective, {0, 0, 0});
  REQUIRE(s0.rows.size() == 3);
  CHECK(has_row(s0, {0, 0, 0}, 1));
  CHECK(has_row(s0, {0, 1, 1}, 1));
  CHECK(has_row(s0, {1, 0, 1}, 1));
}

TEST_CASE("irreducible characters alternate down the chain") {
  Signature sig = Signature::parse("1,1|1");
  FlagReport r = character_flag(sig, FlagKind::Irreducible, {-1, 0, -1});
  REQUIRE(r.rows.size() == 8);
  for (int t = 0; t < 8; ++t) {
    CHECK(r.rows[t].f == Weight{t - 8, 0, t - 8});
    CHECK(r.rows[t].mult == (t % 2 == 0 ? -1 : 1));
  }
}

TEST_CASE("flags reject bad input") {
  Signature sig = Signature::parse("2|1");
  CHECK_THROWS_AS(character_flag(sig, FlagKind::Tilting, {0, 1, 5}), Error);
  Signature s11 = Signature::parse("1,1|1");
  CHECK_THROWS_AS(block_members(s11, {0, 1, 5}, 3), Error);
  CHECK_THROWS_AS(block_members(s11, {0, 0, 0}, -1), Error);
}

TEST_CASE("block membership enumeration") {
  Signature sig = Signature::parse("1,1|1");
  auto five = block_members(sig, {0, 0, 0}, 1);
  REQUIRE(five.size() == 5);
  CHECK(five[0] == Weight{-1, 0, -1});
  CHECK(five[1] == Weight{0, -1, -1});
  CHECK(five[2] == Weight{0, 0, 0});
  CHECK(five[3] == Weight{0, 1, 1});
  CHECK(five[4] == Weight{1, 0, 1});
  CHECK(block_members(sig, {0, 0, 0}, 2).size() == 9);
  CHECK(block_members(sig, {0, 0, 0}, 5).size() == 21);
}

TEST_CASE("block report structure at bound one") {
  CHECK_THROWS_AS(gl21_block_report(0), Error);
  nlohmann::json rep = gl21_block_report(1);
  CHECK(rep["signature"] == "1,1|1");
  CHECK(rep["bound"] == 1);
  REQUIRE(rep["members"].size() == 5);
  CHECK(rep["members"][0] == nlohmann::json::parse("[-1,0,-1]"));
  CHECK(rep["members"][4] == nlohmann::json::parse("[1,0,1]"));
  CHECK(rep["cover_edges"] == nlohmann::json::parse("[[0,1],[1,2],[2,3],[3,4]]"));
  CHECK(rep["projective_tilting"] == nlohmann::json::parse("[[0,2],[2,4]]"));
  REQUIRE(rep["tables"].size() == 4);
  for (const char* kind : {"tilting", "verma", "irreducible", "projective"}) {
    REQUIRE(rep["tables"].contains(kind));
    CHECK(rep["tables"][kind].size() == 5);
  }
  CHECK(rep["tables"]["tilting"][2]["head"] == 2);
  CHECK(rep["tables"]["tilting"][2]["rows"] ==
        nlohmann::json::parse("[[[-1,0,-1],1],[[0,-1,-1],1],[[0,0,0],1]]"));
  CHECK(rep["tables"]["verma"][4]["rows"].size() == 4);
}

TEST_CASE("proven marker distinguishes proved shapes") {
  CHECK(character_flag(Signature::parse("1,1|1"), FlagKind::Tilting, {1, 0, 1}).proven);
  CHECK(character_flag(Signature::parse("2,1|1"), FlagKind::Tilting, {3, 1, 2, 2}).proven);

  EngineOptions opt;
  opt.radius = 4;
  Signature wide = Signature::parse("2,2|1");
  FlagReport far = character_flag(wide, FlagKind::Tilting, {2, 0, 2, 1, 2}, opt);
  CHECK(!far.proven);
  CHECK(has_row(far, {2, 0, 2, 1, 2}, 1));
}

TEST_SUITE_END();
