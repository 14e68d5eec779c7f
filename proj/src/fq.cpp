#include "glsca/fq.hpp"

#include "glsca/error.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace glsca {

namespace {

struct FieldSpec {
  int q, p, k;
  std::array<int, 4> modulus;  // monic irreducible, low degree first
};

constexpr FieldSpec kSpecs[] = {
    {2, 2, 1, {0, 1, 0, 0}}, {3, 3, 1, {0, 1, 0, 0}}, {5, 5, 1, {0, 1, 0, 0}}, {7, 7, 1, {0, 1, 0, 0}},
    {4, 2, 2, {1, 1, 1, 0}},  // x^2 + x + 1
    {8, 2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
    {9, 3, 2, {1, 0, 1, 0}},  // x^2 + 1
};

const FieldSpec* find_spec(int q) {
  for (const auto& s : kSpecs)
    if (s.q == q) return &s;
  return nullptr;
}

}  // namespace

bool GF::supported(int q) { return find_spec(q) != nullptr; }

GF::GF(int q) : q_(q) {
  const FieldSpec* s = find_spec(q);
  require(s != nullptr, Errc::BadInput, "unsupported field size " + std::to_string(q));
  p_ = s->p;
  const int k = s->k;
  auto digits = [&](int x) {
    std::array<int, 3> d{};
    for (int i = 0; i < k; ++i, x /= p_) d[i] = x % p_;
    return d;
  };
  auto pack = [&](const std::array<int, 3>& d) {
    int x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * p_ + d[i];
    return x;
  };
  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    std::array<int, 3> dn{};
    for (int i = 0; i < k; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<uint8_t>(pack(dn));
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::array<int, 3> ds{};
      for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<uint8_t>(pack(ds));
      std::array<int, 6> prod{};
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int deg = 2 * k - 2; deg >= k; --deg) {
        int c = prod[deg];
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i) prod[deg - k + i] = ((prod[deg - k + i] - c * s->modulus[i]) % p_ + p_) % p_;
      }
      std::array<int, 3> dm{};
      for (int i = 0; i < k; ++i) dm[i] = prod[i];
      mul_[a * q + b] = static_cast<uint8_t>(pack(dm));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
  for (int a = 1; a < q; ++a)
    require(inv_[a] != 0, Errc::InvariantBreach, "field table has a zero divisor");
}

const GF& GF::get(int q) {
  static std::mutex mu;
  static std::unique_ptr<GF> fields[10];
  require(q >= 0 && q < 10 && supported(q), Errc::BadInput, "unsupported field size " + std::to_string(q));
  std::lock_guard<std::mutex> lock(mu);
  if (!fields[q]) fields[q].reset(new GF(q));
  return *fields[q];
}

FqMatrix FqMatrix::identity(int n) {
  FqMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FqMatrix::is_zero() const {
  for (uint8_t x : a)
    if (x) return false;
  return true;
}

namespace fq {

FqMatrix mul(const GF& F, const FqMatrix& x, const FqMatrix& y) {
  require(x.cols == y.rows, Errc::ShapeMismatch, "matrix product shapes");
  FqMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    uint8_t* out = r.a.data() + static_cast<size_t>(i) * r.cols;
    for (int k = 0; k < x.cols; ++k) {
      uint8_t c = x.at(i, k);
      if (!c) continue;
      const uint8_t* m = F.mul_row(c);
      const uint8_t* row = y.a.data() + static_cast<size_t>(k) * y.cols;
      for (int j = 0; j < y.cols; ++j)
        if (row[j]) out[j] = F.add(out[j], m[row[j]]);
    }
  }
  return r;
}

FqMatrix add(const GF& F, const FqMatrix& x, const FqMatrix& y) {
  require(x.rows == y.rows && x.cols == y.cols, Errc::ShapeMismatch, "matrix sum shapes");
  FqMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
  return r;
}

FqMatrix sub(const GF& F, const FqMatrix& x, const FqMatrix& y) {
  require(x.rows == y.rows && x.cols == y.cols, Errc::ShapeMismatch, "matrix difference shapes");
  FqMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.sub(x.a[i], y.a[i]);
  return r;
}

FqMatrix transpose(const FqMatrix& x) {
  FqMatrix r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

FqMatrix hstack(const FqMatrix& x, const FqMatrix& y) {
  require(x.rows == y.rows, Errc::ShapeMismatch, "hstack shapes");
  FqMatrix r(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

FqMatrix columns(const FqMatrix& x, const std::vector<int>& cols) {
  FqMatrix r(x.rows, static_cast<int>(cols.size()));
  for (int i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j) r.at(i, static_cast<int>(j)) = x.at(i, cols[j]);
  return r;
}

std::vector<int> row_reduce(const GF& F, FqMatrix& x) {
  std::vector<int> pivots;
  int row = 0;
  const int n = x.cols;
  for (int col = 0; col < n && row < x.rows; ++col) {
    int piv = -1;
    for (int r = row; r < x.rows; ++r)
      if (x.at(r, col)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    uint8_t* prow = x.a.data() + static_cast<size_t>(piv) * n;
    if (piv != row) {
      uint8_t* trow = x.a.data() + static_cast<size_t>(row) * n;
      std::swap_ranges(prow, prow + n, trow);
      prow = trow;
    }
    const uint8_t* scale = F.mul_row(F.inv(prow[col]));
    for (int j = col; j < n; ++j) prow[j] = scale[prow[j]];
    for (int r = 0; r < x.rows; ++r) {
      if (r == row) continue;
      uint8_t* rr = x.a.data() + static_cast<size_t>(r) * n;
      uint8_t c = rr[col];
      if (!c) continue;
      const uint8_t* m = F.mul_row(F.neg(c));
      for (int j = col; j < n; ++j)
        if (prow[j]) rr[j] = F.add(rr[j], m[prow[j]]);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const GF& F, FqMatrix x) { return static_cast<int>(row_reduce(F, x).size()); }

FqMatrix kernel(const GF& F, const FqMatrix& x) {
  FqMatrix r = x;
  std::vector<int> piv = row_reduce(F, r);
  std::vector<bool> is_piv(x.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < x.cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  FqMatrix k(x.cols, static_cast<int>(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    k.at(fc, static_cast<int>(f)) = 1;
    for (size_t p = 0; p < piv.size(); ++p) k.at(piv[p], static_cast<int>(f)) = F.neg(r.at(static_cast<int>(p), fc));
  }
  return k;
}

bool solve(const GF& F, const FqMatrix& x, const FqMatrix& y, FqMatrix& sol) {
  require(x.rows == y.rows, Errc::ShapeMismatch, "solve shapes");
  FqMatrix aug = hstack(x, y);
  std::vector<int> piv = row_reduce(F, aug);
  sol = FqMatrix(x.cols, y.cols);
  for (size_t p = 0; p < piv.size(); ++p) {
    if (piv[p] >= x.cols) return false;
    for (int j = 0; j < y.cols; ++j) sol.at(piv[p], j) = aug.at(static_cast<int>(p), x.cols + j);
  }
  return true;
}

bool inverse(const GF& F, const FqMatrix& x, FqMatrix& inv) {
  require(x.rows == x.cols, Errc::ShapeMismatch, "inverse of a non-square matrix");
  if (rank(F, x) != x.rows) return false;
  return solve(F, x, FqMatrix::identity(x.rows), inv);
}

}  // namespace fq

}  // namespace glsca
