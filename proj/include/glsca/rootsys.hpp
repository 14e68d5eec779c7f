#pragma once

#include "glsca/cartan.hpp"

#include <string>
#include <vector>

namespace glsca {

using RootVec = IntVec;

long long bilinear(const CartanTriple& t, const RootVec& a, const RootVec& b);

/// s_i(v) = v - (v, alpha_i)/d_i * alpha_i.
RootVec simple_reflection(const CartanTriple& t, int i, const RootVec& v);

/// c^power(v) for c = s_1 s_2 ... s_n; the triple must be normalized.
RootVec coxeter(const CartanTriple& t, const RootVec& v, int power);

enum class Side { Preprojective, Preinjective };

/// beta_l = s_1...s_{l-1}(alpha_l) or gamma_l = s_n...s_{l+1}(alpha_l).
RootVec infinite_orbit_seed(const CartanTriple& t, int l, Side side);

struct OrbitKind {
  bool finite = false;
  int period = 0;
};

OrbitKind orbit_kind(const CartanTriple& t, const RootVec& v);

bool is_positive(const RootVec& v);

/// Positive roots supported on `vertices`, whose restriction must be of finite type.
std::vector<RootVec> finite_positive_roots(const CartanTriple& t, const std::vector<int>& vertices);

struct Tube {
  int period = 0;
  /// levels[L - 1][m] is the root at level L and slot m; levels run 1..period-1.
  std::vector<std::vector<RootVec>> levels;

  const RootVec& at(int level, int slot) const;
};

struct TubeFamily {
  int extended_vertex = -1;
  std::vector<Tube> tubes;
};

/// True if eta_k = 1 and the complement of k is connected of finite type.
bool is_admissible_vertex(const CartanTriple& t, int k);
int first_admissible_vertex(const CartanTriple& t);

/// Tubes of finite c-orbits; k < 0 picks the first admissible vertex.
TubeFamily build_tubes(const CartanTriple& t, int k = -1);

struct SchurRootLabel {
  enum class Type { Preprojective, Preinjective, Tube };
  Type type = Type::Preprojective;
  int a = 0;  // vertex l, or tube index
  int b = 0;  // r, or level
  int c = 0;  // slot for tubes

  static SchurRootLabel preprojective(int l, int r) { return {Type::Preprojective, l, r, 0}; }
  static SchurRootLabel preinjective(int l, int r) { return {Type::Preinjective, l, r, 0}; }
  static SchurRootLabel tube(int i, int level, int slot) { return {Type::Tube, i, level, slot}; }

  /// 1-based text form: P(l,r), I(l,r), T(i,level,slot).
  std::string str() const;
  static SchurRootLabel parse(const std::string& s);
  bool operator==(const SchurRootLabel&) const = default;
};

struct LabeledRoot {
  RootVec root;
  SchurRootLabel label;
};

/// All c^r beta_l, c^{-r} gamma_l for r <= depth and all tube roots, deduplicated.
std::vector<LabeledRoot> enumerate_real_schur(const CartanTriple& t, int depth);

}  // namespace glsca
