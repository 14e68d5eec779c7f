#pragma once

#include "glsca/cartan.hpp"
#include "glsca/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace glsca {

/// m x n integer matrix whose top n x n block is skew-symmetrizable.
struct ExtendedExchangeMatrix {
  int m = 0;
  int n = 0;
  IntMatrix b;

  IntMatrix principal_part() const;
  bool full_rank() const;
  friend bool operator==(const ExtendedExchangeMatrix&, const ExtendedExchangeMatrix&) = default;
};

ExtendedExchangeMatrix make_matrix(const IntMatrix& b, int n);
/// [B; I], the principal-coefficient extension.
ExtendedExchangeMatrix principal_extension(const IntMatrix& B);
ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& M, int k);

struct Seed {
  ExtendedExchangeMatrix matrix;
  std::vector<LaurentPoly> vars;  // n mutable variables in m ambient variables
  std::vector<int> path;
};

Seed initial_seed(const ExtendedExchangeMatrix& M);
/// Exchange relation with exact division; raises NotLaurent if the result is not Laurent
/// in the mutable variables and polynomial in the frozen ones.
Seed mutate_seed(const Seed& s, int k);
Seed mutate_path(const Seed& s, const std::vector<int>& path);

struct PrincipalData {
  LaurentPoly F;  // in y_1..y_n
  IntVec g, d, h;
};

/// Data of a variable x in principal coefficients (2n ambient variables) relative to B0.
PrincipalData principal_data(const LaurentPoly& x, const IntMatrix& B0);

/// Images of y_i in the tropical evaluation defining h-vectors.
std::vector<IntVec> h_images(const IntMatrix& B0);

/// F(y-hat) x^g divided by the tropical value of F at the frozen part of M.
LaurentPoly separation(const LaurentPoly& F, const IntVec& g, const ExtendedExchangeMatrix& M);
/// F(y-hat) x^g_ext for an extended m-vector.
LaurentPoly separation_ext(const LaurentPoly& F, const IntVec& g_ext, const ExtendedExchangeMatrix& M);
/// Tropical denominator exponent of F at the frozen part of M (length m).
IntVec tropical_denominator(const LaurentPoly& F, const ExtendedExchangeMatrix& M);

struct ExploredVariable {
  LaurentPoly x;
  PrincipalData data;
  std::vector<int> path;
};

struct ExploreResult {
  std::map<IntVec, ExploredVariable> by_d;
  size_t seeds = 0;
  size_t mutations = 0;
};

/// BFS over principal-coefficient seeds of t.B up to `depth` mutations, deduplicated by
/// canonical seed. Stops early once every d-vector in `targets` has been found (if given).
ExploreResult bfs_explore(const IntMatrix& B, int depth, const std::vector<IntVec>& targets = {});

/// y_k -> y_k^{-1}, y_i -> y_i y_k^{[b_ki]+} (1 + y_k)^{-b_ki}.
MonomialSub y_mutation_sub(const IntMatrix& B, int k);

struct CheckReport {
  bool ok = true;
  std::string failed;
};

/// Compares data of one cluster variable relative to t0 (matrix B) and t1 = mu_k(t0).
CheckReport dwz_recurrence_check(const IntMatrix& B, int k, const PrincipalData& t0,
                                 const PrincipalData& t1);

}  // namespace glsca
