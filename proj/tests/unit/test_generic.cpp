#include "doctest.h"

#include "glsca/error.hpp"
#include "glsca/fixtures.hpp"
#include "glsca/generic.hpp"

#include <random>

using namespace glsca;

namespace {

LaurentPoly b3_f_eta() {
  auto y = [](int i) { return LaurentPoly::variable(4, i); };
  return LaurentPoly::constant(4, 1) + y(0) + y(0) * y(1) + y(0) * y(1) * y(2) + y(0) * y(1) * y(2) * y(3);
}

std::string parts_str(const CanonicalDecomposition& d) {
  std::string s = std::to_string(d.m) + ":";
  for (const auto& [lr, a] : d.parts) s += " " + std::to_string(a) + lr.label.str();
  return s;
}

}  // namespace

TEST_CASE("canonical decompositions on the B-tilde-3 triple") {
  CartanTriple t = fixture("b3tilde");
  GenericBasis gb(t, b3_f_eta());
  CHECK(parts_str(gb.decompose({1, 1, 1, 1})) == "1:");
  CHECK(parts_str(gb.decompose({2, 2, 2, 2})) == "2:");
  CHECK(parts_str(gb.decompose({0, 0, 0, 0})) == "0:");
  CHECK(parts_str(gb.decompose({1, 0, 0, 0})) == "0: 1P(1,0)");
  CHECK(parts_str(gb.decompose({0, 1, 1, 0})) == "0: 1T(1,2,1)");
  CHECK(parts_str(gb.decompose({1, 2, 1, 1})) == "1: 1T(1,1,1)");
  CHECK(parts_str(gb.decompose({2, 4, 6, 14})) == "0: 2I(1,0) 2I(2,0) 2I(3,0) 2I(4,0)");
  CHECK(parts_str(gb.decompose({0, 2, 0, 0})) == "0: 2T(1,1,1)");
  for (const auto& lr : enumerate_real_schur(t, 2)) {
    const CanonicalDecomposition& d = gb.decompose(lr.root);
    REQUIRE(d.parts.size() == 1);
    CHECK(d.m == 0);
    CHECK(d.parts[0].second == 1);
    CHECK(d.parts[0].first.root == lr.root);
  }
  try {
    gb.decompose({1, -1, 0, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadInput);
  }
}

TEST_CASE("canonical decompositions on rank-two and A-tilde triples") {
  CartanTriple k = fixture("kronecker");
  CHECK(canonical_decomposition(k, {1, 1}).m == 1);
  CHECK(canonical_decomposition(k, {3, 3}).m == 3);
  CanonicalDecomposition d = canonical_decomposition(k, {1, 2});
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0].first.root == RootVec{1, 2});
  CHECK(canonical_decomposition(k, {2, 4}).parts[0].second == 2);
  CartanTriple a = fixture("a2tilde");
  CHECK(canonical_decomposition(a, {2, 2, 2}).m == 2);
  try {
    canonical_decomposition(fixture("b3tilde"), {1, 0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ArityMismatch);
  }
}

TEST_CASE("rigid canonical decompositions match random modules") {
  // A random module of rank r lies in the open orbit of the rigid sum with high probability.
  CartanTriple t = fixture("b3tilde");
  GenericBasis gb(t, b3_f_eta());
  std::mt19937_64 rng(17);
  for (RootVec r : std::vector<RootVec>{{1, 1, 0, 0}, {1, 1, 1, 0}, {2, 1, 0, 1}, {0, 1, 1, 1}, {1, 1, 2, 2}}) {
    CAPTURE(to_string(r));
    const CanonicalDecomposition& d = gb.decompose(r);
    REQUIRE(d.m == 0);
    FqModule S = zero_module(t, RootVec(4, 0), 5);
    for (const auto& [lr, a] : d.parts)
      for (int c = 0; c < a; ++c) S = direct_sum(S, module_for_label(t, lr.label, 5));
    CHECK(S.rank == r);
    CHECK(is_rigid(S));
    size_t best = static_cast<size_t>(-1);
    FqModule G;
    for (int s = 0; s < 4; ++s) {
      FqModule X = random_module(t, r, 5, rng);
      size_t e = end_dim(X);
      if (e < best) best = e, G = X;
    }
    CHECK(best == end_dim(S));
    CHECK(hom_dim(G, S) == end_dim(S));
  }
}

TEST_CASE("generic CC functions") {
  CartanTriple t = fixture("b3tilde");
  GenericBasis gb(t, b3_f_eta());
  auto M = principal_extension(t.B);
  for (int i = 0; i < 8; ++i) {
    IntVec g(8, 0);
    g[i] = 1;
    GenericCC x = gb.generic_cc(g, M);
    CHECK(x.X == LaurentPoly::variable(8, i));
  }
  GenericCC eta = gb.generic_cc({-1, 0, 0, 1, 0, 0, 0, 0}, M);
  CHECK(eta.v == IntVec{1, 1, 1, 1});
  CHECK(eta.F == b3_f_eta());
  CHECK(compatibly_pointed_check(eta.X, eta.g_ext, M).ok);
  for (const auto& lr : enumerate_real_schur(t, 1)) {
    CAPTURE(lr.label.str());
    CCDatum d = build_for_label(t, lr.label);
    IntVec g(8, 0);
    for (int i = 0; i < 4; ++i) g[i] = d.g[i];
    GenericCC x = gb.generic_cc(g, M);
    CHECK(x.v == lr.root);
    CHECK(x.X == cc_function(d, M));
    CHECK(compatibly_pointed_check(gb, g, M).ok);
  }
  try {
    gb.generic_cc({0, 0, 0, 0}, M);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ArityMismatch);
  }
}

TEST_CASE("exchange substitution inverts mutation") {
  CartanTriple t = fixture("b3tilde");
  auto M = principal_extension(t.B);
  Seed s0 = initial_seed(M);
  for (int k = 0; k < 4; ++k) {
    Seed s1 = mutate_seed(s0, k);
    LaurentPoly back = substitute(s1.vars[k], exchange_sub(M, k));
    CHECK(back == LaurentPoly::variable(8, k));
  }
}

TEST_CASE("compatibly pointed walk") {
  CartanTriple t = fixture("b3tilde");
  GenericBasis gb(t, b3_f_eta());
  auto M = principal_extension(t.B);
  SourceSequence seq(M);
  CHECK(seq.seeds().size() == 5);
  std::mt19937_64 rng(4);
  for (int s = 0; s < 200; ++s) {
    IntVec g(8);
    for (int& x : g) x = static_cast<int>(rng() % 5) - 2;
    GenericCC x = gb.generic_cc(g, M);
    PointedWalk w = seq.check(x.X, g);
    CHECK(w.ok);
    REQUIRE(w.g.size() == 5);
    for (int k = 0; k < 4; ++k) CHECK(w.g[k + 1] == t_map(w.g[k], seq.seeds()[k], 3 - k));
  }
  // Negative controls: a wrong pointing vector and a polynomial that is not Laurent downstream.
  GenericCC x = gb.generic_cc({-1, 0, 0, 1, 0, 0, 0, 0}, M);
  CHECK_FALSE(seq.check(x.X, {-1, 0, 0, 1, 1, 0, 0, 0}).ok);
  LaurentPoly bad = x.X + LaurentPoly::monomial(8, {-1, 0, 0, 2, 0, 0, 0, 0});
  PointedWalk w = seq.check(bad, x.g_ext);
  CHECK_FALSE(w.ok);
  try {
    CartanTriple a = fixture("a2tilde");
    SourceSequence deficient(make_matrix(a.B, 3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RankDeficient);
  }
}
