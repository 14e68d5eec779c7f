#include "glsca/linalg.hpp"

#include "glsca/error.hpp"

#include <numeric>
#include <sstream>

namespace glsca {

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << to_string(m[i]);
  os << ']';
  return os.str();
}

namespace linalg {

namespace {

using RMat = std::vector<std::vector<Rational>>;

RMat to_rational(const IntMatrix& a) {
  RMat r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const IntMatrix& a) {
  RMat m = to_rational(a);
  return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rational>> nullspace(const IntMatrix& a) {
  std::vector<std::vector<Rational>> basis;
  if (a.empty()) return basis;
  const int cols = static_cast<int>(a[0].size());
  RMat m = to_rational(a);
  std::vector<int> piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

SymmetricInfo symmetric_info(const IntMatrix& sym) {
  RMat m = to_rational(sym);
  const int n = static_cast<int>(m.size());
  SymmetricInfo info;
  info.positive_semidefinite = true;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] < 0) {
      info.positive_semidefinite = false;
      return info;
    }
    if (m[k][k] == 0) {
      for (int j = k + 1; j < n; ++j)
        if (m[k][j] != 0) {
          info.positive_semidefinite = false;
          return info;
        }
      ++info.nullity;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return info;
}

IntVec primitive_integer(const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& x : v) {
    Integer d = boost::multiprecision::denominator(x);
    den = den / boost::multiprecision::gcd(den, d) * d;
  }
  std::vector<Integer> w;
  Integer g = 0;
  for (const auto& x : v) {
    Integer y = boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x));
    w.push_back(y);
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(y));
  }
  IntVec out;
  for (auto& y : w) out.push_back(g == 0 ? 0 : static_cast<int>(y / g));
  return out;
}

FullRankSolver::FullRankSolver(const IntMatrix& a) : a_(a) {
  m_ = static_cast<int>(a.size());
  n_ = m_ ? static_cast<int>(a[0].size()) : 0;
  IntMatrix chosen;
  for (int i = 0; i < m_ && static_cast<int>(pivot_rows_.size()) < n_; ++i) {
    chosen.push_back(a[i]);
    if (rank(chosen) == static_cast<int>(chosen.size())) {
      pivot_rows_.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  require(static_cast<int>(pivot_rows_.size()) == n_, Errc::RankDeficient,
          "matrix does not have full column rank");
  // Inverse of the square block through an augmented rref.
  RMat aug(n_, std::vector<Rational>(2 * n_, Rational(0)));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) aug[i][j] = chosen[i][j];
    aug[i][n_ + i] = 1;
  }
  Rational det = 1;
  {
    RMat t(n_, std::vector<Rational>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t[i][j] = chosen[i][j];
    for (int c = 0; c < n_; ++c) {
      int p = c;
      while (p < n_ && t[p][c] == 0) ++p;
      if (p != c) {
        std::swap(t[p], t[c]);
        det = -det;
      }
      det *= t[c][c];
      for (int i = c + 1; i < n_; ++i) {
        Rational f = t[i][c] / t[c][c];
        for (int j = c; j < n_; ++j) t[i][j] -= f * t[c][j];
      }
    }
  }
  rref(aug);
  det_ = static_cast<long long>(boost::multiprecision::numerator(det));
  adj_.assign(n_, std::vector<long long>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Rational v = aug[i][n_ + j] * det;
      adj_[i][j] = static_cast<long long>(boost::multiprecision::numerator(v));
    }
}

bool FullRankSolver::solve(const int* b, int* x) const {
  for (int i = 0; i < n_; ++i) {
    long long s = 0;
    for (int j = 0; j < n_; ++j) s += adj_[i][j] * b[pivot_rows_[j]];
    if (s % det_ != 0) return false;
    x[i] = static_cast<int>(s / det_);
  }
  for (int r = 0; r < m_; ++r) {
    long long s = 0;
    for (int j = 0; j < n_; ++j) s += static_cast<long long>(a_[r][j]) * x[j];
    if (s != b[r]) return false;
  }
  return true;
}

}  // namespace linalg
}  // namespace glsca
