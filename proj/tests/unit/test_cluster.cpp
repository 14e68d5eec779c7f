#include "doctest.h"

#include "glsca/cluster.hpp"
#include "glsca/error.hpp"
#include "glsca/fixtures.hpp"

using namespace glsca;

namespace {

LaurentPoly var(int n, int i) { return LaurentPoly::variable(n, i); }
LaurentPoly one(int n) { return LaurentPoly::constant(n, 1); }

}  // namespace

TEST_CASE("matrix mutation") {
  auto M = make_matrix({{0, 2}, {-2, 0}}, 2);
  CHECK(mutate_matrix(M, 0).b == IntMatrix{{0, -2}, {2, 0}});
  CHECK(mutate_matrix(mutate_matrix(M, 1), 1) == M);
  CartanTriple t = fixture("b3tilde");
  auto P = principal_extension(t.B);
  CHECK(mutate_matrix(P, 1).b[0][2] == 2);
  for (int k = 0; k < 4; ++k) CHECK(mutate_matrix(mutate_matrix(P, k), k) == P);
  CHECK(P.full_rank());
}

TEST_CASE("seed mutation") {
  Seed s = initial_seed(make_matrix({{0, 1}, {-1, 0}}, 2));
  Seed s1 = mutate_seed(s, 0);
  CHECK(s1.vars[0] == divide_exact(one(2) + var(2, 1), var(2, 0)));
  CHECK(mutate_seed(s1, 0).vars == s.vars);
  CartanTriple t = fixture("b3tilde");
  Seed p = initial_seed(principal_extension(t.B));
  // b_21 = -1 and the principal row gives y_1, so x_1' = (x_2 + y_1) / x_1.
  CHECK(mutate_seed(p, 0).vars[0] == divide_exact(var(8, 1) + var(8, 4), var(8, 0)));
}

TEST_CASE("principal data of simple cases") {
  CartanTriple t = fixture("b3tilde");
  Seed p = initial_seed(principal_extension(t.B));
  PrincipalData d0 = principal_data(p.vars[2], t.B);
  CHECK(d0.F == one(4));
  CHECK(d0.g == IntVec{0, 0, 1, 0});
  CHECK(d0.d == IntVec{0, 0, -1, 0});
  CHECK(d0.h == IntVec{0, 0, 0, 0});
  PrincipalData d1 = principal_data(mutate_seed(p, 0).vars[0], t.B);
  CHECK(d1.F == one(4) + var(4, 0));
  CHECK(d1.d == IntVec{1, 0, 0, 0});
  CHECK(d1.h[0] == -d1.d[0]);
}

TEST_CASE("exploration counts") {
  auto a2 = bfs_explore({{0, 1}, {-1, 0}}, 10);
  CHECK(a2.by_d.size() + 2 == 5);
  CartanTriple t = fixture("b3tilde");
  auto r1 = bfs_explore(t.B, 1);
  CHECK(r1.by_d.size() == 4);
  for (int k = 0; k < 4; ++k) {
    IntVec e(4, 0);
    e[k] = 1;
    CHECK(r1.by_d.count(e) == 1);
  }
  auto r3 = bfs_explore(t.B, 3);
  CHECK(r3.by_d.count({0, 1, 1, 0}) == 1);
}

TEST_CASE("separation reproduces explored variables") {
  for (const auto& name : fixture_names()) {
    CartanTriple t = fixture(name);
    auto P = principal_extension(t.B);
    auto res = bfs_explore(t.B, 4);
    for (const auto& [d, v] : res.by_d) {
      CHECK(v.data.F.constant_term() == 1);
      CHECK(separation(v.data.F, v.data.g, P) == v.x);
    }
  }
}

TEST_CASE("separation with frozen rows that are not principal") {
  auto M = make_matrix({{0, 1}, {-1, 0}, {-1, 2}}, 2);
  Seed s = initial_seed(M);
  auto principal = bfs_explore({{0, 1}, {-1, 0}}, 4);
  Seed cur = s;
  for (int step = 0; step < 5; ++step) {
    int k = step % 2;
    cur = mutate_seed(cur, k);
    Seed pc = mutate_path(initial_seed(principal_extension({{0, 1}, {-1, 0}})), cur.path);
    PrincipalData pd = principal_data(pc.vars[k], {{0, 1}, {-1, 0}});
    CHECK(separation(pd.F, pd.g, M) == cur.vars[k]);
  }
}

TEST_CASE("DWZ recurrence across the initial edges") {
  for (const auto& name : fixture_names()) {
    CartanTriple t = fixture(name);
    const int n = t.n;
    auto res = bfs_explore(t.B, 3);
    for (const auto& [d, v] : res.by_d) {
      int pos_in_seed = v.path.back();
      for (int k = 0; k < n; ++k) {
        IntMatrix B1 = mutate_matrix(principal_extension(t.B), k).principal_part();
        std::vector<int> path{k};
        path.insert(path.end(), v.path.begin(), v.path.end());
        Seed s1 = mutate_path(initial_seed(principal_extension(B1)), path);
        PrincipalData d1 = principal_data(s1.vars[pos_in_seed], B1);
        CheckReport rep = dwz_recurrence_check(t.B, k, v.data, d1);
        CHECK_MESSAGE(rep.ok, name, " ", rep.failed);
        PrincipalData bad = v.data;
        bad.h[k] += 1;
        CHECK_FALSE(dwz_recurrence_check(t.B, k, bad, d1).ok);
      }
    }
  }
}
