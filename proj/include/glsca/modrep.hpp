#pragma once

#include "glsca/cartan.hpp"
#include "glsca/fq.hpp"
#include "glsca/laurent.hpp"
#include "glsca/rootsys.hpp"

#include <functional>
#include <map>
#include <random>
#include <vector>

namespace glsca {

/// Shape data of the bimodule for the pair omega[p] = (i, j): g arrows j -> i subject to
/// eps_i^{f_ji} a = a eps_j^{f_ij}, with g = gcd(c_ij, c_ji) and f_ij = |c_ij| / g.
struct ArrowShape {
  int i = 0, j = 0, g = 0, f_ij = 0, f_ji = 0;
};

ArrowShape arrow_shape(const CartanTriple& t, int p);

/// Element of H_i = F_q[eps]/(eps^{d_i}) as its coefficient vector.
using HElem = std::vector<int>;
/// H_i-matrix of shape r_i x |c_ij| r_j; column (g * f_ij + b) * r_j + c stands for a_g eps_j^b (x) u_c.
using HMatrix = std::vector<std::vector<HElem>>;

/// Locally free H-module as a quiver representation over F_q. M_i = H_i^{r_i} with
/// F_q-basis eps^p u_c at index c * d_i + p; arrows[p][g] maps M_j to M_i.
struct FqModule {
  int q = 2;
  CartanTriple triple;
  RootVec rank;
  std::vector<std::vector<FqMatrix>> arrows;

  int dim(int i) const { return triple.D[i] * rank[i]; }
  int total_dim() const;
  const GF& field() const { return GF::get(q); }
};

/// Multiplication by eps on H_i^r.
FqMatrix eps_matrix(int d, int r);

FqModule zero_module(const CartanTriple& t, const RootVec& rank, int q);
FqModule make_module(const CartanTriple& t, const RootVec& rank, const std::vector<HMatrix>& structure, int q);
FqModule random_module(const CartanTriple& t, const RootVec& rank, int q, std::mt19937_64& rng);
std::vector<HMatrix> structure_of(const FqModule& M);
/// Throws ShapeMismatch or InvariantBreach if shapes or relations fail.
void check_module(const FqModule& M);

FqModule direct_sum(const FqModule& M, const FqModule& N);
/// Random change of H-bases at every vertex.
FqModule base_change(const FqModule& M, std::mt19937_64& rng);

/// <m, n> = sum_i d_i m_i n_i - sum_{(i,j)} d_i |c_ij| m_j n_i.
long long euler_form(const CartanTriple& t, const RootVec& m, const RootVec& n);

size_t hom_dim(const FqModule& M, const FqModule& N);
size_t end_dim(const FqModule& M);
/// Ext^1 as the cokernel of the map from vertexwise H-linear maps to the arrow space.
size_t ext1_dim(const FqModule& M, const FqModule& N);
/// Ext^1 as cocycles modulo coboundaries of extensions of the quiver with relations.
size_t ext1_dim_direct(const FqModule& M, const FqModule& N);
bool is_rigid(const FqModule& M);

/// Reflection functor at a sink (kernel) or source (cokernel) k.
FqModule reflect_module(const FqModule& M, int k);

FqModule simple_module(const CartanTriple& t, int i, int q);
FqModule preprojective_module(const CartanTriple& t, int l, int r, int q);
FqModule preinjective_module(const CartanTriple& t, int l, int r, int q);
/// Explicit rigid module for every label of enumerate_real_schur.
FqModule module_for_label(const CartanTriple& t, const SchurRootLabel& label, int q);

/// The level-2 tube modules drawn for the B-tilde-3 triple, ranks (0,1,1,0), (2,1,2,2), (2,2,1,2).
std::vector<FqModule> b3tilde_diagram_modules(int q);

/// Number of locally free submodules N of M with rank e.
unsigned long long count_submodules(const FqModule& M, const RootVec& e, unsigned long long limit = 10000000);

struct OracleOptions {
  std::vector<int> qlist{2, 3, 4, 5, 7, 8, 9};
  int max_total_dim = 10;
  int samples = 7;
  uint64_t seed = 1;
};

/// Interpolation of point counts; returns the value at q = 1 after checking one extra point.
Integer interpolate_at_one(const std::vector<int>& qs, const std::vector<unsigned long long>& counts, int degree);

/// F-polynomial from submodule counts of the module family over the listed fields.
LaurentPoly f_poly_oracle(const std::function<FqModule(int)>& family, const CartanTriple& t, const RootVec& rank,
                          const OracleOptions& opt = {});

/// Generic F-polynomial of rank r from random modules over each field.
LaurentPoly generic_f_poly(const CartanTriple& t, const RootVec& rank, const OracleOptions& opt = {});

}  // namespace glsca
