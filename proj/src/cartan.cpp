#include "glsca/cartan.hpp"

#include "glsca/error.hpp"

#include <algorithm>

namespace glsca {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Finite: return "Finite";
    case Kind::Affine: return "Affine";
    case Kind::Indefinite: return "Indefinite";
  }
  return "Unknown";
}

bool CartanTriple::has_pair(int i, int j) const {
  return std::binary_search(omega.begin(), omega.end(), std::make_pair(i, j));
}

IntMatrix CartanTriple::symmetrized() const {
  IntMatrix s(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = D[i] * C[i][j];
  return s;
}

namespace {

bool acyclic(int n, const std::vector<std::pair<int, int>>& omega) {
  std::vector<int> outdeg(n, 0);
  for (auto [i, j] : omega) ++outdeg[j];
  std::vector<bool> gone(n, false);
  for (int step = 0; step < n; ++step) {
    int k = -1;
    for (int v = 0; v < n && k < 0; ++v)
      if (!gone[v] && outdeg[v] == 0) k = v;
    if (k < 0) return false;
    gone[k] = true;
    for (auto [i, j] : omega)
      if (i == k) --outdeg[j];
  }
  return true;
}

IntMatrix exchange_matrix(int n, const IntMatrix& C, const std::vector<std::pair<int, int>>& omega) {
  IntMatrix b(n, IntVec(n, 0));
  for (auto [i, j] : omega) {
    b[i][j] = -C[i][j];
    b[j][i] = C[j][i];
  }
  return b;
}

Kind classify(const IntMatrix& sym) {
  auto info = linalg::symmetric_info(sym);
  if (!info.positive_semidefinite) return Kind::Indefinite;
  if (info.nullity == 0) return Kind::Finite;
  if (info.nullity == 1) return Kind::Affine;
  return Kind::Indefinite;
}

}  // namespace

CartanTriple validate(const IntMatrix& C, const IntVec& D, std::vector<std::pair<int, int>> omega) {
  const int n = static_cast<int>(C.size());
  require(n > 0, Errc::BadInput, "empty Cartan matrix");
  for (const auto& row : C)
    require(static_cast<int>(row.size()) == n, Errc::BadInput, "Cartan matrix is not square");
  require(static_cast<int>(D.size()) == n, Errc::BadInput, "symmetrizer length differs from rank");
  for (int d : D) require(d > 0, Errc::BadInput, "symmetrizer entries must be positive");
  for (int i = 0; i < n; ++i) {
    require(C[i][i] == 2, Errc::NonCartan, "diagonal entry " + std::to_string(i + 1) + " is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      require(C[i][j] <= 0, Errc::NonCartan, "positive off-diagonal entry");
      require((C[i][j] == 0) == (C[j][i] == 0), Errc::NonCartan, "zero pattern is not symmetric");
      require(D[i] * C[i][j] == D[j] * C[j][i], Errc::NotSymmetrizer, "D*C is not symmetric");
    }
  }
  for (auto [i, j] : omega) {
    require(i >= 0 && i < n && j >= 0 && j < n && i != j, Errc::BadOrientation,
            "orientation pair out of range");
    require(C[i][j] < 0, Errc::BadOrientation, "orientation pair on a non-edge");
  }
  std::sort(omega.begin(), omega.end());
  omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (C[i][j] == 0) continue;
      bool a = std::binary_search(omega.begin(), omega.end(), std::make_pair(i, j));
      bool b = std::binary_search(omega.begin(), omega.end(), std::make_pair(j, i));
      require(a != b, Errc::BadOrientation,
              "edge " + std::to_string(i + 1) + "-" + std::to_string(j + 1) +
                  " needs exactly one orientation");
    }
  require(acyclic(n, omega), Errc::BadOrientation, "orientation has an oriented cycle");

  CartanTriple t;
  t.n = n;
  t.C = C;
  t.D = D;
  t.omega = std::move(omega);
  t.B = exchange_matrix(n, C, t.omega);
  t.kind = classify(t.symmetrized());
  return t;
}

Normalized normalize(const CartanTriple& t) {
  const int n = t.n;
  std::vector<bool> gone(n, false);
  std::vector<int> perm;
  for (int step = 0; step < n; ++step) {
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      bool sink = true;
      for (auto [i, j] : t.omega)
        if (j == v && !gone[i]) sink = false;
      if (sink) {
        perm.push_back(v);
        gone[v] = true;
        break;
      }
    }
  }
  Normalized out{restrict(t, perm), perm};
  return out;
}

bool is_normalized(const CartanTriple& t) {
  for (auto [i, j] : t.omega)
    if (i > j) return false;
  return true;
}

bool is_sink(const CartanTriple& t, int k) {
  for (auto [i, j] : t.omega)
    if (j == k) return false;
  return true;
}

bool is_source(const CartanTriple& t, int k) {
  for (auto [i, j] : t.omega)
    if (i == k) return false;
  return true;
}

CartanTriple reflect_orientation(const CartanTriple& t, int k) {
  require(k >= 0 && k < t.n, Errc::BadInput, "vertex out of range");
  require(is_sink(t, k) || is_source(t, k), Errc::NotSinkOrSource,
          "vertex " + std::to_string(k + 1) + " is neither a sink nor a source");
  CartanTriple r = t;
  for (auto& [i, j] : r.omega)
    if (i == k || j == k) std::swap(i, j);
  std::sort(r.omega.begin(), r.omega.end());
  r.B = exchange_matrix(r.n, r.C, r.omega);
  return r;
}

IntVec null_root(const CartanTriple& t) {
  require(t.kind == Kind::Affine, Errc::NotAffine, "null root requires affine type");
  auto ker = linalg::nullspace(t.symmetrized());
  require(ker.size() == 1, Errc::InvariantBreach, "affine kernel is not one-dimensional");
  IntVec eta = linalg::primitive_integer(ker[0]);
  if (std::any_of(eta.begin(), eta.end(), [](int x) { return x < 0; }))
    for (int& x : eta) x = -x;
  for (int x : eta) require(x > 0, Errc::InvariantBreach, "null root is not positive");
  return eta;
}

CartanTriple restrict(const CartanTriple& t, const std::vector<int>& vertices) {
  const int m = static_cast<int>(vertices.size());
  std::vector<int> where(t.n, -1);
  for (int a = 0; a < m; ++a) where[vertices[a]] = a;
  IntMatrix C(m, IntVec(m));
  IntVec D(m);
  for (int a = 0; a < m; ++a) {
    D[a] = t.D[vertices[a]];
    for (int b = 0; b < m; ++b) C[a][b] = t.C[vertices[a]][vertices[b]];
  }
  std::vector<std::pair<int, int>> omega;
  for (auto [i, j] : t.omega)
    if (where[i] >= 0 && where[j] >= 0) omega.emplace_back(where[i], where[j]);
  return validate(C, D, std::move(omega));
}

}  // namespace glsca
