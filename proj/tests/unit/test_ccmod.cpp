#include "doctest.h"

#include "glsca/ccmod.hpp"
#include "glsca/error.hpp"
#include "glsca/fixtures.hpp"

using namespace glsca;

TEST_CASE("g-vectors from rank vectors") {
  CartanTriple t = fixture("b3tilde");
  CHECK(g_from_rank(t, {1, 0, 0, 0}) == IntVec{-1, 1, 0, 0});
  CHECK(g_from_rank(t, {1, 1, 1, 1}) == IntVec{-1, 0, 0, 1});
  CHECK(rank_from_g(t, {-1, 0, 0, 1}) == IntVec{1, 1, 1, 1});
  for (const auto& name : fixture_names()) {
    CartanTriple u = fixture(name);
    for (const auto& lr : enumerate_real_schur(u, 2)) CHECK(rank_from_g(u, g_from_rank(u, lr.root)) == lr.root);
  }
  CHECK(rank_from_g(t, {1, 0, 0, 0}) == IntVec{-1, 0, 0, 0});
}

TEST_CASE("reflection refuses the simple at its own vertex") {
  CartanTriple t = fixture("b3tilde");
  CCDatum d = build_preprojective(t, 0, 0);
  CHECK(d.rank == IntVec{1, 0, 0, 0});
  CHECK(d.F == LaurentPoly::constant(4, 1) + LaurentPoly::variable(4, 0));
  try {
    reflect_ccdatum(d, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NegativeRank);
  }
  try {
    reflect_ccdatum(d, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSinkOrSource);
  }
}

TEST_CASE("CC functions of real Schur roots are cluster variables") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CartanTriple t = fixture(name);
    auto roots = enumerate_real_schur(t, 1);
    std::vector<IntVec> targets;
    for (const auto& lr : roots) targets.push_back(lr.root);
    ExploreResult ex = bfs_explore(t.B, 12, targets);
    auto M = principal_extension(t.B);
    ReflectionLog log;
    for (const auto& lr : roots) {
      CAPTURE(lr.label.str());
      CCDatum d = build_for_label(t, lr.label, &log);
      CHECK(d.rank == lr.root);
      auto it = ex.by_d.find(lr.root);
      REQUIRE(it != ex.by_d.end());
      CHECK(cc_function(d, M) == it->second.x);
      CHECK(cc_function_literal(d) == it->second.x);
      CHECK(d.F == it->second.data.F);
      CHECK(d.g == it->second.data.g);
    }
    CHECK(log.identities > 0);
  }
}

TEST_CASE("tube data is periodic and rotates") {
  CartanTriple t = fixture("b3tilde");
  TubeFamily fam = build_tubes(t);
  auto data = build_tube_data(t, fam);
  REQUIRE(data.size() == fam.tubes.size());
  for (size_t i = 0; i < data.size(); ++i)
    for (int L = 1; L < data[i].period; ++L)
      for (int m = 0; m < data[i].period; ++m) CHECK(data[i].data[L - 1][m].rank == fam.tubes[i].at(L, m));
}

TEST_CASE("t_map and decorated reflection") {
  CartanTriple t = fixture("b3tilde");
  auto M = principal_extension(t.B);
  for (int k = 0; k < 4; ++k) {
    IntVec g{1, -2, 0, 1, 0, 1, -1, 2};
    CHECK(t_map(t_map(g, M, k), mutate_matrix(M, k), k) == g);
  }
  CHECK(decorated_reflect({1, 0, 0, 0}, t, 0) == IntVec{-1, 0, 0, 0});
  CHECK(decorated_reflect({-1, 0, 0, 0}, t, 0) == IntVec{1, 0, 0, 0});
}

TEST_CASE("generic reflection identity on simples") {
  CartanTriple t = fixture("b3tilde");
  LaurentPoly one = LaurentPoly::constant(4, 1);
  LaurentPoly F1 = one + LaurentPoly::variable(4, 0);
  CHECK(generic_reflect_check({1, 0, 0, 0}, t, 0, F1, one).ok);
  CHECK(generic_reflect_check({-1, 0, 0, 0}, t, 0, one, F1).ok);
  CHECK_FALSE(generic_reflect_check({1, 0, 0, 0}, t, 0, F1, F1).ok);
}
