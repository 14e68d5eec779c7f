#pragma once

#include "glsca/cartan.hpp"
#include "glsca/cluster.hpp"
#include "glsca/laurent.hpp"
#include "glsca/rootsys.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace glsca {

/// Rank, F-polynomial and injective g-vector of a rigid locally free module.
struct CCDatum {
  CartanTriple triple;
  RootVec rank;
  LaurentPoly F;
  IntVec g;
  std::string label;
};

/// Injective g-vector of a module with the given rank.
IntVec g_from_rank(const CartanTriple& t, const RootVec& m);

/// Vertices listed so that each is a sink once the earlier ones are removed.
std::vector<int> sink_order(const CartanTriple& t);

/// Decorated rank vector recovered from a g-vector (positive parts feed the recursion).
IntVec rank_from_g(const CartanTriple& t, const IntVec& g);
IntVec positive_part(const IntVec& v);
IntVec negative_part(const IntVec& v);

/// Counts and optional trace of the identities checked during reflections.
struct ReflectionLog {
  size_t reflections = 0;
  size_t identities = 0;
  std::vector<std::string> trace;
  bool keep_trace = false;
};

/// Reflection of CC data at a sink or source k of d.triple.
CCDatum reflect_ccdatum(const CCDatum& d, int k, ReflectionLog* log = nullptr);

CCDatum build_preprojective(const CartanTriple& t, int l, int r, ReflectionLog* log = nullptr);
CCDatum build_preinjective(const CartanTriple& t, int l, int r, ReflectionLog* log = nullptr);

struct TubeData {
  int tube = 0;
  int period = 0;
  /// data[L - 1][m] for level L and slot m.
  std::vector<std::vector<CCDatum>> data;
};

std::vector<TubeData> build_tube_data(const CartanTriple& t, const TubeFamily& tubes,
                                      ReflectionLog* log = nullptr);

/// Datum for any label produced by enumerate_real_schur.
CCDatum build_for_label(const CartanTriple& t, const SchurRootLabel& label, ReflectionLog* log = nullptr);

/// Cluster character F(y-hat) x^g adjusted for the coefficients of M by the separation formula.
LaurentPoly cc_function(const CCDatum& d, const ExtendedExchangeMatrix& M);
/// Literal principal-coefficient sum over submodule ranks with Euler characteristics read off F.
LaurentPoly cc_function_literal(const CCDatum& d);

LaurentPoly cluster_monomial_cc(const std::vector<std::pair<CCDatum, int>>& summands, const IntVec& a,
                                const ExtendedExchangeMatrix& M);

/// Reflection of a decorated rank vector at a sink k.
IntVec decorated_reflect(const IntVec& v, const CartanTriple& t, int k);

/// Piecewise-linear mutation of an extended g-vector at k.
IntVec t_map(const IntVec& g_ext, const ExtendedExchangeMatrix& M, int k);

/// Checks (1 + y_k)^{-v_k^+} F_v(y) = (1 + y_k')^{-v_k^-} F_v'(y') at a sink k.
CheckReport generic_reflect_check(const IntVec& v, const CartanTriple& t, int k, const LaurentPoly& Fv,
                                  const LaurentPoly& Fv_prime);

}  // namespace glsca
