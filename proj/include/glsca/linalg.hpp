#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace glsca {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;

std::string to_string(const IntVec& v);
std::string to_string(const IntMatrix& m);

/// Exact linear algebra over the rationals on small integer matrices.
namespace linalg {

int rank(const IntMatrix& a);

/// Basis of the right kernel {x : a x = 0}.
std::vector<std::vector<Rational>> nullspace(const IntMatrix& a);

struct SymmetricInfo {
  bool positive_semidefinite = false;
  int nullity = 0;
};

/// Sign data of a symmetric matrix via symmetric elimination (Schur complements).
SymmetricInfo symmetric_info(const IntMatrix& sym);

/// Scales a rational vector to the primitive integer vector on the same ray.
IntVec primitive_integer(const std::vector<Rational>& v);

/// Integer solver for a x = b with a of full column rank.
/// Picks an invertible square block of rows once; solve() is then integer-only.
class FullRankSolver {
 public:
  explicit FullRankSolver(const IntMatrix& a);
  /// Returns false if no integer solution exists.
  bool solve(const int* b, int* x) const;
  int rows() const { return m_; }
  int cols() const { return n_; }

 private:
  int m_ = 0, n_ = 0;
  IntMatrix a_;
  std::vector<int> pivot_rows_;
  std::vector<std::vector<long long>> adj_;  // adjugate of the chosen block
  long long det_ = 0;
};

}  // namespace linalg

inline int pos(int x) { return x > 0 ? x : 0; }

}  // namespace glsca
