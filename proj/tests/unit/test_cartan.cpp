#include "doctest.h"

#include <functional>

#include "glsca/cartan.hpp"
#include "glsca/error.hpp"
#include "glsca/fixtures.hpp"

using namespace glsca;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::BadInput;
}

}  // namespace

TEST_CASE("b3tilde triple is affine with the expected exchange matrix") {
  CartanTriple t = fixture("b3tilde");
  CHECK(t.kind == Kind::Affine);
  CHECK(is_normalized(t));
  CHECK(t.B[0][1] == 2);
  CHECK(t.B[1][0] == -1);
  CHECK(t.B[1][2] == 1);
  CHECK(t.B[2][1] == -1);
  CHECK(t.B[2][3] == 1);
  CHECK(t.B[3][2] == -2);
  CHECK(null_root(t) == IntVec{1, 1, 1, 1});
}

TEST_CASE("classification of small triples") {
  CHECK(validate({{2, -1}, {-1, 2}}, {1, 1}, {{0, 1}}).kind == Kind::Finite);
  CartanTriple k = fixture("kronecker");
  CHECK(k.kind == Kind::Affine);
  CHECK(null_root(k) == IntVec{1, 1});
  CHECK(validate({{2, -3}, {-3, 2}}, {1, 1}, {{0, 1}}).kind == Kind::Indefinite);
  CHECK(null_root(fixture("a12")) == IntVec{1, 2});
  CHECK(null_root(fixture("c2tilde")) == IntVec{1, 2, 1});
  CHECK(null_root(fixture("a2tilde")) == IntVec{1, 1, 1});
  CHECK(code_of([] { null_root(validate({{2, -1}, {-1, 2}}, {1, 1}, {{0, 1}})); }) == Errc::NotAffine);
}

TEST_CASE("validation errors") {
  CHECK(code_of([] { validate({{2, -1}, {-4, 2}}, {1, 4}, {{0, 1}}); }) == Errc::NotSymmetrizer);
  CHECK(code_of([] { validate({{3, -1}, {-1, 2}}, {1, 1}, {{0, 1}}); }) == Errc::NonCartan);
  CHECK(code_of([] { validate({{2, 1}, {1, 2}}, {1, 1}, {}); }) == Errc::NonCartan);
  CHECK(code_of([] { validate({{2, -1}, {0, 2}}, {1, 1}, {}); }) == Errc::NonCartan);
  CHECK(code_of([] { validate({{2, -1}, {-1, 2}}, {1, 1}, {}); }) == Errc::BadOrientation);
  CHECK(code_of([] { validate({{2, -1}, {-1, 2}}, {1, 1}, {{0, 1}, {1, 0}}); }) ==
        Errc::BadOrientation);
  CHECK(code_of([] {
          validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, {1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}});
        }) == Errc::BadOrientation);
  CHECK(code_of([] { validate({{2, 0}, {0, 2}}, {1, 1}, {{0, 1}}); }) == Errc::BadOrientation);
}

TEST_CASE("reflecting the orientation") {
  CartanTriple t = fixture("b3tilde");
  CHECK(is_sink(t, 0));
  CHECK(is_source(t, 3));
  CHECK_FALSE(is_sink(t, 1));
  CartanTriple r = reflect_orientation(t, 0);
  CHECK(r.has_pair(1, 0));
  CHECK(r.has_pair(1, 2));
  CHECK(r.has_pair(2, 3));
  CHECK(r.B[0][1] == -2);
  CHECK(r.B[1][0] == 1);
  CHECK(r.kind == t.kind);
  CHECK(r.C == t.C);
  CHECK(reflect_orientation(r, 0).omega == t.omega);
  CHECK(reflect_orientation(r, 0).B == t.B);
  CartanTriple s = reflect_orientation(t, 3);
  CHECK(s.has_pair(3, 2));
  CHECK(s.has_pair(1, 2));
  CHECK(s.has_pair(0, 1));
  CHECK(code_of([&] { reflect_orientation(t, 1); }) == Errc::NotSinkOrSource);
}

TEST_CASE("exchange matrices are skew-symmetrizable") {
  for (const auto& name : fixture_names()) {
    CartanTriple t = fixture(name);
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j) {
        CHECK(t.D[i] * t.B[i][j] == -t.D[j] * t.B[j][i]);
        if (i != j) CHECK(std::abs(t.B[i][j]) == std::abs(t.C[i][j]));
      }
  }
}

TEST_CASE("normalization relabels sinks first") {
  // Arrows 1 -> 2 -> 3 in 1-based terms, so vertex 3 is the sink.
  CartanTriple t = validate({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, {{1, 0}, {2, 1}});
  CHECK_FALSE(is_normalized(t));
  Normalized nt = normalize(t);
  CHECK(is_normalized(nt.triple));
  CHECK(nt.perm == std::vector<int>{2, 1, 0});
  CHECK(normalize(fixture("b3tilde")).perm == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("restriction to a vertex subset") {
  CartanTriple t = fixture("b3tilde");
  CHECK(restrict(t, {0, 1, 2}).kind == Kind::Finite);
  CHECK(restrict(t, {1, 2, 3}).kind == Kind::Finite);
  CHECK(restrict(t, {1, 2}).C == IntMatrix{{2, -1}, {-1, 2}});
}
