#include "doctest.h"

#include "glsca/error.hpp"
#include "glsca/fixtures.hpp"
#include "glsca/rootsys.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace glsca;

namespace {

RootVec e(int n, int i) {
  RootVec v(n, 0);
  v[i] = 1;
  return v;
}

std::set<RootVec> tube_roots(const TubeFamily& fam) {
  std::set<RootVec> s;
  for (const auto& tube : fam.tubes)
    for (const auto& level : tube.levels) s.insert(level.begin(), level.end());
  return s;
}

}  // namespace

TEST_CASE("bilinear form and reflections on b3tilde") {
  CartanTriple t = fixture("b3tilde");
  CHECK(bilinear(t, e(4, 0), e(4, 0)) == 2);
  CHECK(bilinear(t, e(4, 0), e(4, 1)) == -2);
  CHECK(bilinear(t, e(4, 1), e(4, 0)) == -2);
  CHECK(bilinear(t, {1, 1, 1, 1}, {3, -1, 4, 7}) == 0);
  CHECK(simple_reflection(t, 0, e(4, 0)) == RootVec{-1, 0, 0, 0});
  CHECK(simple_reflection(t, 0, e(4, 1)) == RootVec{2, 1, 0, 0});
}

TEST_CASE("Coxeter element on b3tilde") {
  CartanTriple t = fixture("b3tilde");
  CHECK(coxeter(t, {0, 1, 1, 0}, 1) == RootVec{2, 1, 2, 2});
  CHECK(coxeter(t, {2, 1, 2, 2}, 1) == RootVec{2, 2, 1, 2});
  CHECK(coxeter(t, {2, 2, 1, 2}, 1) == RootVec{0, 1, 1, 0});
  CHECK(coxeter(t, {1, 1, 1, 1}, 5) == RootVec{1, 1, 1, 1});
  CHECK(coxeter(t, coxeter(t, {3, 1, 4, 1}, 1), -1) == RootVec{3, 1, 4, 1});
  CHECK(infinite_orbit_seed(t, 0, Side::Preprojective) == e(4, 0));
  CHECK(infinite_orbit_seed(t, 1, Side::Preprojective) == RootVec{2, 1, 0, 0});
  CHECK(infinite_orbit_seed(t, 3, Side::Preinjective) == e(4, 3));
  CHECK(orbit_kind(t, {0, 1, 1, 0}).finite);
  CHECK(orbit_kind(t, {0, 1, 1, 0}).period == 3);
  CHECK_FALSE(orbit_kind(t, e(4, 0)).finite);
  CHECK(orbit_kind(t, {1, 1, 1, 1}).period == 1);
}

TEST_CASE("b3tilde tube from the extended vertex 4") {
  CartanTriple t = fixture("b3tilde");
  TubeFamily fam = build_tubes(t, 3);
  REQUIRE(fam.tubes.size() == 1);
  const Tube& tube = fam.tubes[0];
  CHECK(tube.period == 3);
  std::set<RootVec> bottom(tube.levels[0].begin(), tube.levels[0].end());
  CHECK(bottom == std::set<RootVec>{{0, 1, 0, 0}, {0, 0, 1, 0}, {2, 1, 1, 2}});
  std::set<RootVec> level2(tube.levels[1].begin(), tube.levels[1].end());
  CHECK(level2 == std::set<RootVec>{{0, 1, 1, 0}, {2, 1, 2, 2}, {2, 2, 1, 2}});
  CHECK(tube.at(1, 0) == RootVec{2, 1, 1, 2});
}

TEST_CASE("tubes do not depend on the extended vertex") {
  for (const auto& name : fixture_names()) {
    CartanTriple t = fixture(name);
    if (t.n == 2) {
      CHECK(build_tubes(t).tubes.empty());
      continue;
    }
    std::set<RootVec> ref = tube_roots(build_tubes(t));
    int admissible = 0;
    for (int k = 0; k < t.n; ++k) {
      if (!is_admissible_vertex(t, k)) continue;
      ++admissible;
      CHECK(tube_roots(build_tubes(t, k)) == ref);
    }
    CHECK(admissible >= 2);
  }
}

TEST_CASE("tube shapes on the rank-3 fixtures") {
  for (const char* name : {"a2tilde", "c2tilde"}) {
    TubeFamily fam = build_tubes(fixture(name));
    REQUIRE(fam.tubes.size() == 1);
    CHECK(fam.tubes[0].period == 2);
  }
}

TEST_CASE("real Schur root enumeration") {
  CartanTriple t = fixture("b3tilde");
  auto roots = enumerate_real_schur(t, 0);
  CHECK(roots.size() == 14);
  auto k = enumerate_real_schur(fixture("kronecker"), 2);
  CHECK(k.size() == 12);
  for (const auto& lr : k) CHECK(lr.label.type != SchurRootLabel::Type::Tube);
  auto all = enumerate_real_schur(t, 3);
  CHECK(all.size() == 32 + 6);
  std::set<long long> norms;
  for (int d : t.D) norms.insert(2LL * d);
  for (const auto& lr : all) {
    CHECK(is_positive(lr.root));
    CHECK(norms.count(bilinear(t, lr.root, lr.root)) == 1);
  }
  // Preprojective orbit roots frozen from an independent reflection script.
  CHECK(all[4].root == RootVec{1, 1, 0, 0});
  CHECK(all[6].root == RootVec{4, 3, 2, 2});
  CHECK(all[13].root == RootVec{6, 5, 4, 4});
  CHECK(all[16].root == RootVec{1, 1, 1, 2});
  CHECK(all[16].label.str() == "I(1,0)");
}

TEST_CASE("root labels round trip") {
  for (const char* s : {"P(1,0)", "I(4,3)", "T(1,2,0)"})
    CHECK(SchurRootLabel::parse(s).str() == s);
  CHECK_THROWS_AS(SchurRootLabel::parse("Q(1,2)"), Error);
}

TEST_CASE("root system invariants on random vectors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (const auto& name : fixture_names()) {
    CartanTriple t = fixture(name);
    RootVec eta = null_root(t);
    for (int trial = 0; trial < 50; ++trial) {
      RootVec u(t.n), v(t.n);
      for (int i = 0; i < t.n; ++i) {
        u[i] = coord(rng);
        v[i] = coord(rng);
      }
      for (int i = 0; i < t.n; ++i) {
        CHECK(bilinear(t, simple_reflection(t, i, u), simple_reflection(t, i, v)) == bilinear(t, u, v));
        CHECK(simple_reflection(t, i, simple_reflection(t, i, u)) == u);
        CHECK(simple_reflection(t, i, eta) == eta);
      }
      CHECK(bilinear(t, u, v) == bilinear(t, v, u));
    }
  }
}

TEST_CASE("infinite orbits grow") {
  for (const auto& name : fixture_names()) {
    CartanTriple t = fixture(name);
    for (int l = 0; l < t.n; ++l) {
      RootVec b = infinite_orbit_seed(t, l, Side::Preprojective);
      CHECK_FALSE(orbit_kind(t, b).finite);
      auto norm1 = [](const RootVec& v) {
        long long s = 0;
        for (int x : v) s += std::abs(x);
        return s;
      };
      long long prev = norm1(coxeter(t, b, 2 * t.n));
      for (int k = 2 * t.n + 1; k < 2 * t.n + 6; ++k) {
        long long cur = norm1(coxeter(t, b, k));
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }
}
