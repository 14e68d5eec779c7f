#pragma once

#include <cstdint>
#include <vector>

namespace glsca {

/// Finite field F_q for q in {2, 3, 4, 5, 7, 8, 9} with lookup tables.
/// Elements are 0..q-1; prime-power fields use base-p digits of polynomial coefficients.
class GF {
 public:
  static const GF& get(int q);
  static bool supported(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const { return inv_[a]; }
  const uint8_t* mul_row(uint8_t a) const { return mul_.data() + a * q_; }
  const uint8_t* add_row(uint8_t a) const { return add_.data() + a * q_; }

 private:
  explicit GF(int q);
  int q_, p_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

/// Dense matrix over F_q, row-major.
struct FqMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  static FqMatrix identity(int n);
  uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  bool is_zero() const;
  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

namespace fq {

FqMatrix mul(const GF& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix add(const GF& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix sub(const GF& F, const FqMatrix& x, const FqMatrix& y);
FqMatrix transpose(const FqMatrix& x);
FqMatrix hstack(const FqMatrix& x, const FqMatrix& y);
FqMatrix columns(const FqMatrix& x, const std::vector<int>& cols);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(const GF& F, FqMatrix& x);
int rank(const GF& F, FqMatrix x);
/// Columns form a basis of {v : x v = 0}.
FqMatrix kernel(const GF& F, const FqMatrix& x);
/// Some solution of x * sol = y, if any.
bool solve(const GF& F, const FqMatrix& x, const FqMatrix& y, FqMatrix& sol);
/// Inverse of a square matrix; false if singular.
bool inverse(const GF& F, const FqMatrix& x, FqMatrix& inv);

}  // namespace fq

}  // namespace glsca
