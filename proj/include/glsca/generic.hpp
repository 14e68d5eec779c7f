#pragma once

#include "glsca/ccmod.hpp"
#include "glsca/cluster.hpp"
#include "glsca/laurent.hpp"
#include "glsca/modrep.hpp"
#include "glsca/rootsys.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace glsca {

/// r = m * eta + sum of parts, each part a real Schur root with its multiplicity.
struct CanonicalDecomposition {
  int m = 0;
  std::vector<std::pair<LabeledRoot, int>> parts;
};

/// Pointed element x^g_ext F(y-hat) of the generic basis.
struct GenericCC {
  IntVec g_ext;
  IntVec v;
  LaurentPoly F;
  LaurentPoly X;
};

/// Real Schur roots, their CC data and explicit modules, with cached Ext-compatibility.
class GenericBasis {
 public:
  /// f_eta is the generic F-polynomial of the null root; q is the field of the Ext tests.
  GenericBasis(const CartanTriple& t, LaurentPoly f_eta, int q = 5);

  const CartanTriple& triple() const { return t_; }
  const LaurentPoly& f_eta() const { return f_eta_; }

  const CanonicalDecomposition& decompose(const RootVec& r);
  /// Generic F-polynomial of rank r assembled from the canonical decomposition.
  LaurentPoly generic_f(const RootVec& r);
  GenericCC generic_cc(const IntVec& g_ext, const ExtendedExchangeMatrix& M);

  /// Ext^1 vanishes in both directions between the explicit modules of two real Schur roots.
  bool compatible(const LabeledRoot& a, const LabeledRoot& b);
  const CCDatum& datum(const LabeledRoot& a);

  size_t ext_tests() const { return ext_tests_; }

 private:
  void ensure_roots(const RootVec& bound);
  const FqModule& module(const LabeledRoot& a);

  CartanTriple t_;
  LaurentPoly f_eta_;
  int q_;
  RootVec eta_;
  int depth_ = -1;
  std::vector<LabeledRoot> roots_;
  std::map<std::string, CCDatum> data_;
  std::map<std::string, FqModule> modules_;
  std::map<std::pair<std::string, std::string>, bool> compat_;
  std::map<RootVec, CanonicalDecomposition> decomp_;
  std::map<RootVec, LaurentPoly> fpoly_;
  size_t ext_tests_ = 0;
};

/// Canonical decomposition with a fresh cache; the null-root factor is not needed here.
CanonicalDecomposition canonical_decomposition(const CartanTriple& t, const RootVec& r);

GenericCC generic_cc(const CartanTriple& t, const IntVec& g_ext, const ExtendedExchangeMatrix& M,
                     const LaurentPoly& f_eta);

/// x_k -> x_k'^{-1} (prod x_j^{[b_jk]+} + prod x_j^{[-b_jk]+}), the inverse exchange relation.
MonomialSub exchange_sub(const ExtendedExchangeMatrix& M, int k);

/// True if X x^{-g_ext} is a polynomial in y-hat of M with constant term 1.
bool is_pointed(const LaurentPoly& X, const IntVec& g_ext, const ExtendedExchangeMatrix& M);

struct PointedWalk {
  bool ok = true;
  int failed_seed = -1;
  std::string failed;
  /// g_ext at v_0, ..., v_n.
  std::vector<IntVec> g;
};

/// Seeds v_0, ..., v_n of the source sequence with their substitutions and pointedness solvers.
class SourceSequence {
 public:
  explicit SourceSequence(const ExtendedExchangeMatrix& M);
  /// Re-expresses X seed by seed; checks pointedness and that consecutive g-vectors follow t_map.
  PointedWalk check(const LaurentPoly& X, const IntVec& g_ext) const;
  const std::vector<ExtendedExchangeMatrix>& seeds() const { return seeds_; }

 private:
  std::vector<ExtendedExchangeMatrix> seeds_;
  std::vector<MonomialSub> subs_;
  std::vector<linalg::FullRankSolver> solvers_;
};

/// Re-expresses X along the source sequence (mutations at n, n-1, ..., 1) and checks that X is
/// pointed at every seed with consecutive g-vectors related by t_map.
PointedWalk compatibly_pointed_check(const LaurentPoly& X, const IntVec& g_ext, const ExtendedExchangeMatrix& M);
PointedWalk compatibly_pointed_check(GenericBasis& basis, const IntVec& g_ext, const ExtendedExchangeMatrix& M);

}  // namespace glsca
