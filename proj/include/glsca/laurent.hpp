#pragma once

#include "glsca/linalg.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace glsca {

/// Sparse multivariate Laurent polynomial with big-integer coefficients.
/// Terms are kept sorted by ascending lexicographic exponent with no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const Integer& c);
  static LaurentPoly monomial(int nvars, const IntVec& exp, const Integer& c = 1);
  static LaurentPoly variable(int nvars, int i);
  /// Builds from arbitrary terms; equal exponents are merged.
  static LaurentPoly from_terms(int nvars, std::vector<std::pair<IntVec, Integer>> terms);

  int nvars() const { return nvars_; }
  size_t size() const { return coefs_.size(); }
  bool is_zero() const { return coefs_.empty(); }
  const int32_t* exp(size_t t) const { return exps_.data() + t * nvars_; }
  IntVec exponent(size_t t) const { return IntVec(exp(t), exp(t) + nvars_); }
  const Integer& coef(size_t t) const { return coefs_[t]; }

  Integer coefficient(const IntVec& e) const;
  Integer constant_term() const;
  bool is_monomial() const { return coefs_.size() == 1; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly scaled(const Integer& c) const;
  /// Multiplies by the monomial x^delta.
  LaurentPoly shifted(const IntVec& delta) const;
  LaurentPoly pow(int k) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_ && a.coefs_ == b.coefs_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);
  size_t hash() const;

  /// Componentwise minimum and maximum exponents; zero polynomial gives empty vectors.
  IntVec min_exponents() const;
  IntVec max_exponents() const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  friend class LaurentBuilder;
  int nvars_ = 0;
  std::vector<int32_t> exps_;
  std::vector<Integer> coefs_;
};

/// Exact quotient p / q; throws NotDivisible if q does not divide p.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

/// Evaluates the given variables at 1, keeping the arity.
LaurentPoly specialize_ones(const LaurentPoly& p, const std::vector<int>& vars);
/// Keeps only the listed variables (in order) and drops the others, which must not occur.
LaurentPoly select_vars(const LaurentPoly& p, const std::vector<int>& vars);
/// Places variable i of p at position where[i] of an arity-nvars polynomial.
LaurentPoly embed_vars(const LaurentPoly& p, int nvars, const std::vector<int>& where);

/// Substitutes x_i -> monomial images[i] (exponent vectors in the target variables).
LaurentPoly substitute_monomial(const LaurentPoly& p, const std::vector<IntVec>& images);

/// Per-variable image x_i -> z^{images[i]} * factor^{factor_powers[i]}.
struct MonomialSub {
  std::vector<IntVec> images;
  std::vector<int> factor_powers;
  LaurentPoly factor;
  int target_nvars() const { return factor.nvars(); }
};

/// The value num * factor^power with a possibly negative power.
struct FactoredPoly {
  LaurentPoly num;
  LaurentPoly factor;
  int power = 0;
};

FactoredPoly substitute_factored(const LaurentPoly& p, const MonomialSub& sub);
/// Clears the factor power; negative powers are divided out exactly.
LaurentPoly resolve(const FactoredPoly& f);
LaurentPoly substitute(const LaurentPoly& p, const MonomialSub& sub);
/// Equality of two factored values sharing a factor, decided by cross-multiplication.
bool factored_equal(const FactoredPoly& a, const FactoredPoly& b);

/// Tropical value: min over terms of sum_i e_i * images[i], componentwise.
IntVec tropical_eval(const LaurentPoly& p, const std::vector<IntVec>& images);

/// Negated componentwise minimum exponent over the first nmut variables.
IntVec d_vector(const LaurentPoly& p, int nmut);
std::vector<IntVec> newton_support(const LaurentPoly& p);

}  // namespace glsca
