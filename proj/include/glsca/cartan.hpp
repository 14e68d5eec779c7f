#pragma once

#include "glsca/linalg.hpp"

#include <utility>
#include <vector>

namespace glsca {

enum class Kind { Finite, Affine, Indefinite };

const char* kind_name(Kind k);

/// Validated symmetrizable Cartan matrix with symmetrizer and acyclic orientation.
/// Vertices are 0-based. A pair (i, j) in omega stands for an arrow j -> i.
struct CartanTriple {
  int n = 0;
  IntMatrix C;
  IntVec D;
  std::vector<std::pair<int, int>> omega;  // sorted
  IntMatrix B;
  Kind kind = Kind::Indefinite;

  bool has_pair(int i, int j) const;
  /// D * C, the symmetric form on the root lattice.
  IntMatrix symmetrized() const;
};

CartanTriple validate(const IntMatrix& C, const IntVec& D,
                      std::vector<std::pair<int, int>> omega);

/// Relabeled triple with (i, j) in omega implying i < j; perm[new] = old.
struct Normalized {
  CartanTriple triple;
  std::vector<int> perm;
};

Normalized normalize(const CartanTriple& t);
bool is_normalized(const CartanTriple& t);

bool is_sink(const CartanTriple& t, int k);
bool is_source(const CartanTriple& t, int k);

/// Reverses every arrow at the sink or source k.
CartanTriple reflect_orientation(const CartanTriple& t, int k);

/// Primitive positive generator of ker(D C); affine type only.
IntVec null_root(const CartanTriple& t);

/// Full sub-triple on the given vertices, in the given order.
CartanTriple restrict(const CartanTriple& t, const std::vector<int>& vertices);

}  // namespace glsca
