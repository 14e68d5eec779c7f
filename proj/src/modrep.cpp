#include "glsca/modrep.hpp"

#include "glsca/error.hpp"

#include <algorithm>
#include <numeric>

namespace glsca {

namespace {

FqMatrix power(const GF& F, const FqMatrix& E, int k) {
  FqMatrix r = FqMatrix::identity(E.rows);
  for (int s = 0; s < k; ++s) r = fq::mul(F, E, r);
  return r;
}

int find_pair(const CartanTriple& t, int i, int j) {
  for (size_t p = 0; p < t.omega.size(); ++p)
    if (t.omega[p] == std::make_pair(i, j)) return static_cast<int>(p);
  return -1;
}

uint8_t random_element(const GF& F, std::mt19937_64& rng) {
  return static_cast<uint8_t>(std::uniform_int_distribution<int>(0, F.q() - 1)(rng));
}

}  // namespace

ArrowShape arrow_shape(const CartanTriple& t, int p) {
  ArrowShape s;
  s.i = t.omega[p].first;
  s.j = t.omega[p].second;
  int a = -t.C[s.i][s.j], b = -t.C[s.j][s.i];
  s.g = std::gcd(a, b);
  s.f_ij = a / s.g;
  s.f_ji = b / s.g;
  return s;
}

int FqModule::total_dim() const {
  int s = 0;
  for (int i = 0; i < triple.n; ++i) s += dim(i);
  return s;
}

FqMatrix eps_matrix(int d, int r) {
  FqMatrix E(d * r, d * r);
  for (int c = 0; c < r; ++c)
    for (int p = 0; p + 1 < d; ++p) E.at(c * d + p + 1, c * d + p) = 1;
  return E;
}

FqModule zero_module(const CartanTriple& t, const RootVec& rank, int q) {
  require(static_cast<int>(rank.size()) == t.n, Errc::ShapeMismatch, "rank vector length");
  for (int x : rank) require(x >= 0, Errc::ShapeMismatch, "negative rank");
  GF::get(q);
  FqModule M;
  M.q = q;
  M.triple = t;
  M.rank = rank;
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    M.arrows.emplace_back(s.g, FqMatrix(M.dim(s.i), M.dim(s.j)));
  }
  return M;
}

FqModule make_module(const CartanTriple& t, const RootVec& rank, const std::vector<HMatrix>& structure, int q) {
  FqModule M = zero_module(t, rank, q);
  require(structure.size() == t.omega.size(), Errc::ShapeMismatch, "one structure matrix per pair in omega");
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    const int di = t.D[s.i], dj = t.D[s.j], ri = rank[s.i], rj = rank[s.j];
    const HMatrix& S = structure[p];
    require(static_cast<int>(S.size()) == ri, Errc::ShapeMismatch, "structure matrix row count");
    for (const auto& row : S) {
      require(static_cast<int>(row.size()) == s.g * s.f_ij * rj, Errc::ShapeMismatch, "structure matrix column count");
      for (const auto& h : row) {
        require(static_cast<int>(h.size()) == di, Errc::ShapeMismatch, "H_i element length");
        for (int x : h) require(x >= 0 && x < q, Errc::ShapeMismatch, "field element out of range");
      }
    }
    for (int g = 0; g < s.g; ++g) {
      FqMatrix& A = M.arrows[p][g];
      for (int c = 0; c < rj; ++c)
        for (int pj = 0; pj < dj; ++pj) {
          int a = pj / s.f_ij, b = pj % s.f_ij;
          int col = (g * s.f_ij + b) * rj + c;
          for (int row = 0; row < ri; ++row)
            for (int e = 0; e < di; ++e) {
              int target = e + a * s.f_ji;
              if (target < di) A.at(row * di + target, c * dj + pj) = static_cast<uint8_t>(S[row][col][e]);
            }
        }
    }
  }
  check_module(M);
  return M;
}

std::vector<HMatrix> structure_of(const FqModule& M) {
  const CartanTriple& t = M.triple;
  std::vector<HMatrix> out;
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    const int di = t.D[s.i], dj = t.D[s.j], ri = M.rank[s.i], rj = M.rank[s.j];
    HMatrix S(ri, std::vector<HElem>(s.g * s.f_ij * rj, HElem(di, 0)));
    for (int g = 0; g < s.g; ++g)
      for (int b = 0; b < s.f_ij; ++b)
        for (int c = 0; c < rj; ++c)
          for (int row = 0; row < ri; ++row)
            for (int e = 0; e < di; ++e)
              S[row][(g * s.f_ij + b) * rj + c][e] = M.arrows[p][g].at(row * di + e, c * dj + b);
    out.push_back(std::move(S));
  }
  return out;
}

void check_module(const FqModule& M) {
  const CartanTriple& t = M.triple;
  const GF& F = M.field();
  require(static_cast<int>(M.rank.size()) == t.n, Errc::ShapeMismatch, "rank vector length");
  require(M.arrows.size() == t.omega.size(), Errc::ShapeMismatch, "arrow list length");
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    require(static_cast<int>(M.arrows[p].size()) == s.g, Errc::ShapeMismatch, "arrow multiplicity");
    FqMatrix Ei = power(F, eps_matrix(t.D[s.i], M.rank[s.i]), s.f_ji);
    FqMatrix Ej = power(F, eps_matrix(t.D[s.j], M.rank[s.j]), s.f_ij);
    for (const auto& A : M.arrows[p]) {
      require(A.rows == M.dim(s.i) && A.cols == M.dim(s.j), Errc::ShapeMismatch, "arrow matrix shape");
      for (uint8_t x : A.a) require(x < F.q(), Errc::ShapeMismatch, "field element out of range");
      require(fq::mul(F, Ei, A) == fq::mul(F, A, Ej), Errc::InvariantBreach,
              "arrow does not satisfy the commutation relation");
    }
  }
}

FqModule random_module(const CartanTriple& t, const RootVec& rank, int q, std::mt19937_64& rng) {
  const GF& F = GF::get(q);
  std::vector<HMatrix> S;
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    HMatrix m(rank[s.i], std::vector<HElem>(s.g * s.f_ij * rank[s.j], HElem(t.D[s.i], 0)));
    for (auto& row : m)
      for (auto& h : row)
        for (auto& x : h) x = random_element(F, rng);
    S.push_back(std::move(m));
  }
  return make_module(t, rank, S, q);
}

FqModule direct_sum(const FqModule& M, const FqModule& N) {
  require(M.q == N.q && M.triple.omega == N.triple.omega && M.triple.C == N.triple.C, Errc::ShapeMismatch,
          "direct sum of modules over different algebras");
  RootVec r(M.rank.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = M.rank[i] + N.rank[i];
  FqModule S = zero_module(M.triple, r, M.q);
  for (size_t p = 0; p < M.arrows.size(); ++p)
    for (size_t g = 0; g < M.arrows[p].size(); ++g) {
      const FqMatrix& a = M.arrows[p][g];
      const FqMatrix& b = N.arrows[p][g];
      FqMatrix& out = S.arrows[p][g];
      for (int x = 0; x < a.rows; ++x)
        for (int y = 0; y < a.cols; ++y) out.at(x, y) = a.at(x, y);
      for (int x = 0; x < b.rows; ++x)
        for (int y = 0; y < b.cols; ++y) out.at(a.rows + x, a.cols + y) = b.at(x, y);
    }
  return S;
}

namespace {

// F_q-matrix of the H_i-linear map sending u_c to sum_row G[row][c] u_row.
FqMatrix h_linear(const std::vector<std::vector<HElem>>& G, int d, int rows, int cols) {
  FqMatrix m(d * rows, d * cols);
  for (int c = 0; c < cols; ++c)
    for (int p = 0; p < d; ++p)
      for (int row = 0; row < rows; ++row)
        for (int e = 0; e + p < d; ++e) m.at(row * d + e + p, c * d + p) = static_cast<uint8_t>(G[row][c][e]);
  return m;
}

}  // namespace

FqModule base_change(const FqModule& M, std::mt19937_64& rng) {
  const GF& F = M.field();
  const CartanTriple& t = M.triple;
  std::vector<FqMatrix> g(t.n), ginv(t.n);
  for (int i = 0; i < t.n; ++i) {
    const int r = M.rank[i], d = t.D[i];
    for (;;) {
      std::vector<std::vector<HElem>> G(r, std::vector<HElem>(r, HElem(d, 0)));
      for (auto& row : G)
        for (auto& h : row)
          for (auto& x : h) x = random_element(F, rng);
      g[i] = h_linear(G, d, r, r);
      if (fq::inverse(F, g[i], ginv[i])) break;
    }
  }
  FqModule R = M;
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    for (auto& A : R.arrows[p]) A = fq::mul(F, g[s.i], fq::mul(F, A, ginv[s.j]));
  }
  check_module(R);
  return R;
}

long long euler_form(const CartanTriple& t, const RootVec& m, const RootVec& n) {
  long long s = 0;
  for (int i = 0; i < t.n; ++i) s += static_cast<long long>(t.D[i]) * m[i] * n[i];
  for (auto [i, j] : t.omega) s -= static_cast<long long>(t.D[i]) * -t.C[i][j] * m[j] * n[i];
  return s;
}

namespace {

void same_algebra(const FqModule& M, const FqModule& N) {
  require(M.q == N.q && M.triple.omega == N.triple.omega && M.triple.C == N.triple.C && M.triple.D == N.triple.D,
          Errc::ShapeMismatch, "modules over different algebras");
}

// Map from tuples of H_i-linear maps M_i -> N_i to the arrow space: f -> f A^M - A^N f.
FqMatrix hom_map(const FqModule& M, const FqModule& N) {
  same_algebra(M, N);
  const GF& F = M.field();
  const CartanTriple& t = M.triple;
  const int n = t.n;
  std::vector<int> unk_off(n + 1, 0);
  for (int i = 0; i < n; ++i) unk_off[i + 1] = unk_off[i] + t.D[i] * N.rank[i] * M.rank[i];
  struct Block {
    int p, g, off;
  };
  std::vector<Block> blocks;
  int rows = 0;
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    for (int g = 0; g < s.g; ++g) {
      blocks.push_back({static_cast<int>(p), g, rows});
      rows += s.f_ij * M.rank[s.j] * N.dim(s.i);
    }
  }
  FqMatrix phi(rows, unk_off[n]);
  for (const Block& blk : blocks) {
    ArrowShape s = arrow_shape(t, blk.p);
    const int di = t.D[s.i], dj = t.D[s.j];
    const FqMatrix& AM = M.arrows[blk.p][blk.g];
    const FqMatrix& AN = N.arrows[blk.p][blk.g];
    const int ndi = N.dim(s.i);
    for (int b = 0; b < s.f_ij; ++b)
      for (int cp = 0; cp < M.rank[s.j]; ++cp) {
        const int eq0 = blk.off + (b * M.rank[s.j] + cp) * ndi;
        // f_i applied to A^M(eps^b u_cp).
        const int src = cp * dj + b;
        for (int x = 0; x < AM.rows; ++x) {
          uint8_t v = AM.at(x, src);
          if (!v) continue;
          int c = x / di, pp = x % di;
          for (int row = 0; row < N.rank[s.i]; ++row)
            for (int e = 0; e + pp < di; ++e) {
              int u = unk_off[s.i] + (row * M.rank[s.i] + c) * di + e;
              int eq = eq0 + row * di + e + pp;
              phi.at(eq, u) = F.add(phi.at(eq, u), v);
            }
        }
        // minus A^N applied to f_j(eps^b u_cp).
        for (int row = 0; row < N.rank[s.j]; ++row)
          for (int e = 0; e + b < dj; ++e) {
            int u = unk_off[s.j] + (row * M.rank[s.j] + cp) * dj + e;
            int col = row * dj + e + b;
            for (int x = 0; x < ndi; ++x) {
              uint8_t v = AN.at(x, col);
              if (v) phi.at(eq0 + x, u) = F.sub(phi.at(eq0 + x, u), v);
            }
          }
      }
  }
  return phi;
}

}  // namespace

size_t hom_dim(const FqModule& M, const FqModule& N) {
  FqMatrix phi = hom_map(M, N);
  return static_cast<size_t>(phi.cols - fq::rank(M.field(), phi));
}

size_t end_dim(const FqModule& M) { return hom_dim(M, M); }

size_t ext1_dim(const FqModule& M, const FqModule& N) {
  FqMatrix phi = hom_map(M, N);
  return static_cast<size_t>(phi.rows - fq::rank(M.field(), phi));
}

bool is_rigid(const FqModule& M) { return ext1_dim(M, M) == 0; }

namespace {

// Linear system on block unknowns; add_term accumulates coef * L X R into a relation block.
struct BlockSystem {
  const GF& F;
  std::vector<int> unk_off, unk_rows, unk_cols;
  std::vector<int> rel_off, rel_rows, rel_cols;
  FqMatrix mat;

  explicit BlockSystem(const GF& f) : F(f) {}
  int add_unknown(int r, int c) {
    int off = unk_off.empty() ? 0 : unk_off.back() + unk_rows.back() * unk_cols.back();
    unk_off.push_back(off);
    unk_rows.push_back(r);
    unk_cols.push_back(c);
    return static_cast<int>(unk_off.size()) - 1;
  }
  int add_relation(int r, int c) {
    int off = rel_off.empty() ? 0 : rel_off.back() + rel_rows.back() * rel_cols.back();
    rel_off.push_back(off);
    rel_rows.push_back(r);
    rel_cols.push_back(c);
    return static_cast<int>(rel_off.size()) - 1;
  }
  void finalize() {
    int nu = unk_off.empty() ? 0 : unk_off.back() + unk_rows.back() * unk_cols.back();
    int nr = rel_off.empty() ? 0 : rel_off.back() + rel_rows.back() * rel_cols.back();
    mat = FqMatrix(nr, nu);
  }
  void add_term(int rel, int unk, const FqMatrix& L, const FqMatrix& R, bool negate) {
    for (int a = 0; a < unk_rows[unk]; ++a)
      for (int b = 0; b < unk_cols[unk]; ++b) {
        int col = unk_off[unk] + a * unk_cols[unk] + b;
        for (int r = 0; r < L.rows; ++r) {
          uint8_t l = L.at(r, a);
          if (!l) continue;
          for (int s = 0; s < R.cols; ++s) {
            uint8_t x = R.at(b, s);
            if (!x) continue;
            uint8_t v = F.mul(l, x);
            if (negate) v = F.neg(v);
            int row = rel_off[rel] + r * rel_cols[rel] + s;
            mat.at(row, col) = F.add(mat.at(row, col), v);
          }
        }
      }
  }
};

}  // namespace

size_t ext1_dim_direct(const FqModule& M, const FqModule& N) {
  same_algebra(M, N);
  const GF& F = M.field();
  const CartanTriple& t = M.triple;
  const int n = t.n;
  std::vector<FqMatrix> EM(n), EN(n);
  for (int i = 0; i < n; ++i) {
    EM[i] = eps_matrix(t.D[i], M.rank[i]);
    EN[i] = eps_matrix(t.D[i], N.rank[i]);
  }
  auto I = [](int k) { return FqMatrix::identity(k); };

  // Cocycles: upper right blocks of extensions [[N, X], [0, M]] satisfying the relations.
  BlockSystem Z(F);
  std::vector<int> loop(n);
  for (int i = 0; i < n; ++i) loop[i] = Z.add_unknown(N.dim(i), M.dim(i));
  std::vector<std::vector<int>> arrow(t.omega.size());
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    for (int g = 0; g < s.g; ++g) arrow[p].push_back(Z.add_unknown(N.dim(s.i), M.dim(s.j)));
  }
  std::vector<int> loop_rel(n);
  for (int i = 0; i < n; ++i) loop_rel[i] = Z.add_relation(N.dim(i), M.dim(i));
  std::vector<std::vector<int>> comm_rel(t.omega.size());
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    for (int g = 0; g < s.g; ++g) comm_rel[p].push_back(Z.add_relation(N.dim(s.i), M.dim(s.j)));
  }
  Z.finalize();
  for (int i = 0; i < n; ++i) {
    const int d = t.D[i];
    for (int s = 0; s < d; ++s)
      Z.add_term(loop_rel[i], loop[i], power(F, EN[i], s), power(F, EM[i], d - 1 - s), false);
  }
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    for (int g = 0; g < s.g; ++g) {
      const FqMatrix& AM = M.arrows[p][g];
      const FqMatrix& AN = N.arrows[p][g];
      int rel = comm_rel[p][g];
      // eps_i^{f_ji} a
      for (int k = 0; k < s.f_ji; ++k)
        Z.add_term(rel, loop[s.i], power(F, EN[s.i], k), fq::mul(F, power(F, EM[s.i], s.f_ji - 1 - k), AM), false);
      Z.add_term(rel, arrow[p][g], power(F, EN[s.i], s.f_ji), I(M.dim(s.j)), false);
      // minus a eps_j^{f_ij}
      Z.add_term(rel, arrow[p][g], I(N.dim(s.i)), power(F, EM[s.j], s.f_ij), true);
      for (int k = 0; k < s.f_ij; ++k)
        Z.add_term(rel, loop[s.j], fq::mul(F, AN, power(F, EN[s.j], k)), power(F, EM[s.j], s.f_ij - 1 - k), true);
    }
  }
  const int zdim = Z.mat.cols - fq::rank(F, Z.mat);

  // Coboundaries: h -> (T^N h - h T^M) over all generators.
  BlockSystem B(F);
  std::vector<int> h(n);
  for (int i = 0; i < n; ++i) h[i] = B.add_unknown(N.dim(i), M.dim(i));
  std::vector<int> lrel(n);
  for (int i = 0; i < n; ++i) lrel[i] = B.add_relation(N.dim(i), M.dim(i));
  std::vector<std::vector<int>> arel(t.omega.size());
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    for (int g = 0; g < s.g; ++g) arel[p].push_back(B.add_relation(N.dim(s.i), M.dim(s.j)));
  }
  B.finalize();
  for (int i = 0; i < n; ++i) {
    B.add_term(lrel[i], h[i], EN[i], I(M.dim(i)), false);
    B.add_term(lrel[i], h[i], I(N.dim(i)), EM[i], true);
  }
  for (size_t p = 0; p < t.omega.size(); ++p) {
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    for (int g = 0; g < s.g; ++g) {
      B.add_term(arel[p][g], h[s.j], N.arrows[p][g], I(M.dim(s.j)), false);
      B.add_term(arel[p][g], h[s.i], I(N.dim(s.i)), M.arrows[p][g], true);
    }
  }
  const int bdim = fq::rank(F, B.mat);
  require(zdim >= bdim, Errc::InvariantBreach, "coboundaries exceed cocycles");
  return static_cast<size_t>(zdim - bdim);
}

namespace {

// Basis eps^p u_c (index c * d + p) of the eps-stable subspace spanned by the columns of K.
FqMatrix standardize(const GF& F, const FqMatrix& K, const FqMatrix& E, int d) {
  const int D = K.cols;
  require(D % d == 0, Errc::NotLocallyFreeResult, "reflected space has dimension prime to d_k");
  const int r = D / d;
  FqMatrix EK = fq::mul(F, E, K);
  int base = fq::rank(F, EK);
  require(base == D - r, Errc::NotLocallyFreeResult, "reflected space is not free over H_k");
  std::vector<int> chosen;
  FqMatrix span = EK;
  int cur = base;
  for (int c = 0; c < D && static_cast<int>(chosen.size()) < r; ++c) {
    FqMatrix trial = fq::hstack(span, fq::columns(K, {c}));
    int rk = fq::rank(F, trial);
    if (rk > cur) {
      chosen.push_back(c);
      span = std::move(trial);
      cur = rk;
    }
  }
  require(static_cast<int>(chosen.size()) == r, Errc::NotLocallyFreeResult, "no free generators found");
  FqMatrix basis(K.rows, D);
  for (int c = 0; c < r; ++c) {
    FqMatrix v = fq::columns(K, {chosen[c]});
    for (int p = 0; p < d; ++p) {
      for (int x = 0; x < K.rows; ++x) basis.at(x, c * d + p) = v.at(x, 0);
      v = fq::mul(F, E, v);
    }
    require(v.is_zero(), Errc::NotLocallyFreeResult, "generator is not killed by eps^d");
  }
  require(fq::rank(F, basis) == D, Errc::NotLocallyFreeResult, "reflected space is not free over H_k");
  return basis;
}

struct Slot {
  int p, g, f_top, off;
};

}  // namespace

FqModule reflect_module(const FqModule& M, int k) {
  const CartanTriple& t = M.triple;
  const GF& F = M.field();
  require(k >= 0 && k < t.n, Errc::BadInput, "vertex out of range");
  const bool sink = is_sink(t, k);
  require(sink || is_source(t, k), Errc::NotSinkOrSource,
          "vertex " + std::to_string(k + 1) + " is neither a sink nor a source");
  const int dk = t.D[k];
  // W = sum over arrows at k of kH_j (x) M_j, stored as f_jk copies of M_j per arrow.
  std::vector<Slot> slots;
  int W = 0;
  for (size_t p = 0; p < t.omega.size(); ++p) {
    auto [a, b] = t.omega[p];
    if (a != k && b != k) continue;
    ArrowShape s = arrow_shape(t, static_cast<int>(p));
    int j = a == k ? b : a;
    int fjk = a == k ? s.f_ji : s.f_ij;
    for (int g = 0; g < s.g; ++g) {
      slots.push_back({static_cast<int>(p), g, fjk, W});
      W += fjk * M.dim(j);
    }
  }
  auto other = [&](int p) { return t.omega[p].first == k ? t.omega[p].second : t.omega[p].first; };
  auto fkj = [&](int p) {
    ArrowShape s = arrow_shape(t, p);
    return t.omega[p].first == k ? s.f_ij : s.f_ji;
  };
  FqMatrix EW(W, W);
  for (const Slot& sl : slots) {
    int j = other(sl.p);
    int dim = M.dim(j);
    for (int a = 0; a + 1 < sl.f_top; ++a)
      for (int x = 0; x < dim; ++x) EW.at(sl.off + (a + 1) * dim + x, sl.off + a * dim + x) = 1;
    FqMatrix wrap = power(F, eps_matrix(t.D[j], M.rank[j]), fkj(sl.p));
    for (int x = 0; x < dim; ++x)
      for (int y = 0; y < dim; ++y)
        if (wrap.at(x, y)) EW.at(sl.off + x, sl.off + (sl.f_top - 1) * dim + y) = wrap.at(x, y);
  }
  const FqMatrix Ek = eps_matrix(dk, M.rank[k]);

  CartanTriple tp = reflect_orientation(t, k);
  FqModule R;
  R.q = M.q;
  R.triple = tp;
  R.rank = M.rank;
  FqMatrix basis;
  FqMatrix coords;  // new coordinates of W (source case)
  if (sink) {
    FqMatrix out(M.dim(k), W);
    for (const Slot& sl : slots) {
      int dim = M.dim(other(sl.p));
      const FqMatrix& A = M.arrows[sl.p][sl.g];
      for (int a = 0; a < sl.f_top; ++a) {
        FqMatrix part = fq::mul(F, power(F, Ek, a), A);
        for (int x = 0; x < part.rows; ++x)
          for (int y = 0; y < dim; ++y) out.at(x, sl.off + a * dim + y) = part.at(x, y);
      }
    }
    basis = standardize(F, fq::kernel(F, out), EW, dk);
    R.rank[k] = basis.cols / dk;
  } else {
    FqMatrix in(W, M.dim(k));
    for (const Slot& sl : slots) {
      int dim = M.dim(other(sl.p));
      const FqMatrix& A = M.arrows[sl.p][sl.g];
      for (int a = 0; a < sl.f_top; ++a) {
        FqMatrix part = fq::mul(F, A, power(F, Ek, sl.f_top - 1 - a));
        for (int x = 0; x < dim; ++x)
          for (int y = 0; y < part.cols; ++y) in.at(sl.off + a * dim + x, y) = part.at(x, y);
      }
    }
    FqMatrix Q = fq::transpose(fq::kernel(F, fq::transpose(in)));
    FqMatrix right;
    require(fq::solve(F, Q, FqMatrix::identity(Q.rows), right), Errc::InvariantBreach, "quotient map is not onto");
    FqMatrix Eq = fq::mul(F, Q, fq::mul(F, EW, right));
    FqMatrix bq = standardize(F, FqMatrix::identity(Q.rows), Eq, dk);
    FqMatrix binv;
    require(fq::inverse(F, bq, binv), Errc::InvariantBreach, "quotient basis is singular");
    coords = fq::mul(F, binv, Q);
    R.rank[k] = bq.cols / dk;
  }

  for (size_t p = 0; p < tp.omega.size(); ++p) {
    auto [a, b] = tp.omega[p];
    ArrowShape s = arrow_shape(tp, static_cast<int>(p));
    if (a != k && b != k) {
      R.arrows.push_back(M.arrows[find_pair(t, a, b)]);
      continue;
    }
    int old = find_pair(t, b, a);
    std::vector<FqMatrix> arrows;
    for (const Slot& sl : slots) {
      if (sl.p != old) continue;
      int j = other(sl.p);
      int dim = M.dim(j);
      if (sink) {
        // New arrow k -> j reads the top copy of M_j.
        FqMatrix A(dim, basis.cols);
        for (int x = 0; x < dim; ++x)
          for (int y = 0; y < basis.cols; ++y) A.at(x, y) = basis.at(sl.off + (sl.f_top - 1) * dim + x, y);
        arrows.push_back(std::move(A));
      } else {
        // New arrow j -> k embeds M_j as the bottom copy.
        FqMatrix A(coords.rows, dim);
        for (int x = 0; x < coords.rows; ++x)
          for (int y = 0; y < dim; ++y) A.at(x, y) = coords.at(x, sl.off + y);
        arrows.push_back(std::move(A));
      }
    }
    require(static_cast<int>(arrows.size()) == s.g, Errc::InvariantBreach, "arrow count changed under reflection");
    R.arrows.push_back(std::move(arrows));
  }
  check_module(R);
  return R;
}

FqModule simple_module(const CartanTriple& t, int i, int q) {
  RootVec r(t.n, 0);
  r.at(i) = 1;
  return zero_module(t, r, q);
}

namespace {

FqModule reflect_checked(const FqModule& M, int k) {
  RootVec expect = simple_reflection(M.triple, k, M.rank);
  require(is_positive(expect), Errc::NegativeRank,
          "reflection at " + std::to_string(k + 1) + " leaves the positive cone");
  FqModule R = reflect_module(M, k);
  require(R.rank == expect, Errc::InvariantBreach, "reflected module has the wrong rank");
  return R;
}

FqModule sweep_minus(const FqModule& M) {
  FqModule R = M;
  for (int i = M.triple.n - 1; i >= 0; --i) R = reflect_checked(R, i);
  return R;
}

}  // namespace

FqModule preprojective_module(const CartanTriple& t, int l, int r, int q) {
  require(is_normalized(t), Errc::BadOrientation, "builders need a normalized triple");
  require(l >= 0 && l < t.n && r >= 0, Errc::BadInput, "preprojective label out of range");
  CartanTriple base = t;
  for (int i = 0; i < l; ++i) base = reflect_orientation(base, i);
  FqModule M = simple_module(base, l, q);
  for (int i = l - 1; i >= 0; --i) M = reflect_checked(M, i);
  for (int s = 0; s < r; ++s) M = sweep_minus(M);
  return M;
}

FqModule preinjective_module(const CartanTriple& t, int l, int r, int q) {
  require(is_normalized(t), Errc::BadOrientation, "builders need a normalized triple");
  require(l >= 0 && l < t.n && r >= 0, Errc::BadInput, "preinjective label out of range");
  CartanTriple base = t;
  for (int i = t.n - 1; i > l; --i) base = reflect_orientation(base, i);
  FqModule M = simple_module(base, l, q);
  for (int i = l + 1; i < t.n; ++i) M = reflect_checked(M, i);
  for (int s = 0; s < r; ++s)
    for (int i = 0; i < t.n; ++i) M = reflect_checked(M, i);
  return M;
}

FqModule module_for_label(const CartanTriple& t, const SchurRootLabel& label, int q) {
  switch (label.type) {
    case SchurRootLabel::Type::Preprojective:
      return preprojective_module(t, label.a, label.b, q);
    case SchurRootLabel::Type::Preinjective:
      return preinjective_module(t, label.a, label.b, q);
    case SchurRootLabel::Type::Tube:
      break;
  }
  TubeFamily fam = build_tubes(t);
  require(label.a >= 0 && label.a < static_cast<int>(fam.tubes.size()), Errc::BadInput, "no such tube");
  const Tube& tube = fam.tubes[label.a];
  require(label.b >= 1 && label.b < tube.period && label.c >= 0 && label.c < tube.period, Errc::BadInput,
          "tube level or slot out of range");
  const int k = fam.extended_vertex;
  std::vector<int> rest;
  for (int i = 0; i < t.n; ++i)
    if (i != k) rest.push_back(i);
  CartanTriple fin = restrict(t, rest);
  int m0 = -1;
  for (int m = 0; m < tube.period && m0 < 0; ++m)
    if (tube.at(label.b, m)[k] == 0) m0 = m;
  require(m0 >= 0, Errc::InvariantBreach, "tube level has no root in the finite part");
  RootVec target;
  for (int i : rest) target.push_back(tube.at(label.b, m0)[i]);
  for (int l = 0; l < fin.n; ++l)
    for (int r = 0;; ++r) {
      RootVec x = coxeter(fin, infinite_orbit_seed(fin, l, Side::Preprojective), r);
      if (!is_positive(x)) break;
      require(r <= 4 * t.n * t.n, Errc::InvariantBreach, "finite Coxeter orbit does not leave the positive cone");
      if (x != target) continue;
      FqModule small = preprojective_module(fin, l, r, q);
      FqModule M = zero_module(t, tube.at(label.b, m0), q);
      for (size_t p = 0; p < t.omega.size(); ++p) {
        auto [a, b] = t.omega[p];
        if (a == k || b == k) continue;
        int ia = static_cast<int>(std::find(rest.begin(), rest.end(), a) - rest.begin());
        int ib = static_cast<int>(std::find(rest.begin(), rest.end(), b) - rest.begin());
        M.arrows[p] = small.arrows[find_pair(fin, ia, ib)];
      }
      check_module(M);
      for (int s = 0; s < ((label.c - m0) % tube.period + tube.period) % tube.period; ++s) M = sweep_minus(M);
      require(M.rank == tube.at(label.b, label.c), Errc::InvariantBreach, "tube module has the wrong rank");
      return M;
    }
  fail(Errc::InvariantBreach, "finite part lacks the tube root " + to_string(tube.at(label.b, m0)));
}

std::vector<FqModule> b3tilde_diagram_modules(int q) {
  CartanTriple t = validate({{2, -2, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -2, 2}}, {1, 2, 2, 1},
                            {{0, 1}, {1, 2}, {2, 3}});
  // Pairs in order (0,1): 2 -> 1, (1,2): 3 -> 2, (2,3): 4 -> 3.
  std::vector<FqModule> out;
  {
    FqModule M = zero_module(t, {0, 1, 1, 0}, q);
    FqMatrix& a = M.arrows[1][0];
    a.at(0, 0) = 1;
    a.at(1, 1) = 1;
    out.push_back(M);
  }
  {
    FqModule M = zero_module(t, {2, 1, 2, 2}, q);
    FqMatrix& a43 = M.arrows[2][0];
    a43.at(0, 0) = 1;
    a43.at(1, 1) = 1;
    a43.at(2, 1) = 1;
    FqMatrix& a32 = M.arrows[1][0];
    a32.at(0, 0) = 1;
    a32.at(1, 1) = 1;
    FqMatrix& a21 = M.arrows[0][0];
    a21.at(0, 0) = 1;
    a21.at(1, 1) = 1;
    out.push_back(M);
  }
  {
    FqModule M = zero_module(t, {2, 2, 1, 2}, q);
    FqMatrix& a43 = M.arrows[2][0];
    a43.at(0, 0) = 1;
    a43.at(1, 1) = 1;
    FqMatrix& a32 = M.arrows[1][0];
    a32.at(0, 0) = 1;
    a32.at(1, 1) = 1;
    FqMatrix& a21 = M.arrows[0][0];
    a21.at(0, 0) = 1;
    a21.at(1, 1) = 1;
    // eps c_3 -> d_1; sending it to d_2 gives a non-rigid module.
    a21.at(0, 3) = 1;
    out.push_back(M);
  }
  for (const auto& M : out) check_module(M);
  return out;
}

namespace {

struct Candidate {
  FqMatrix basis;  // columns span N_i
  FqMatrix check;  // rows cut out N_i
};

// Free rank-e submodules of H^r over H = F_q[eps]/(eps^d) in canonical generator form.
std::vector<Candidate> free_submodules(const GF& F, int d, int r, int e, unsigned long long limit) {
  std::vector<Candidate> out;
  const int dim = d * r;
  if (e == 0) {
    out.push_back({FqMatrix(dim, 0), FqMatrix::identity(dim)});
    return out;
  }
  if (e == r) {
    out.push_back({FqMatrix::identity(dim), FqMatrix(0, dim)});
    return out;
  }
  std::vector<int> piv(e);
  std::iota(piv.begin(), piv.end(), 0);
  for (;;) {
    // Free entries: generator s at coordinate c (non-pivot); c < piv[s] needs eps | entry.
    std::vector<std::pair<int, int>> free;  // (s, c)
    std::vector<bool> is_piv(r, false);
    for (int s = 0; s < e; ++s) is_piv[piv[s]] = true;
    int nvals = 0;
    for (int s = 0; s < e; ++s)
      for (int c = 0; c < r; ++c)
        if (!is_piv[c]) {
          free.emplace_back(s, c);
          nvals += c < piv[s] ? d - 1 : d;
        }
    std::vector<uint8_t> vals(nvals, 0);
    for (;;) {
      require(out.size() < limit, Errc::TooLarge, "too many candidate submodules");
      FqMatrix B(dim, d * e);
      int pos = 0;
      std::vector<std::vector<HElem>> G(r, std::vector<HElem>(e, HElem(d, 0)));
      for (int s = 0; s < e; ++s) G[piv[s]][s][0] = 1;
      for (auto [s, c] : free) {
        int lo = c < piv[s] ? 1 : 0;
        for (int x = lo; x < d; ++x) G[c][s][x] = vals[pos++];
      }
      for (int s = 0; s < e; ++s)
        for (int p = 0; p < d; ++p)
          for (int c = 0; c < r; ++c)
            for (int x = 0; x + p < d; ++x) B.at(c * d + x + p, s * d + p) = static_cast<uint8_t>(G[c][s][x]);
      FqMatrix K = fq::transpose(fq::kernel(F, fq::transpose(B)));
      out.push_back({std::move(B), std::move(K)});
      int i = 0;
      while (i < nvals && ++vals[i] == F.q()) vals[i++] = 0;
      if (i == nvals) break;
    }
    int s = e - 1;
    while (s >= 0 && piv[s] == r - e + s) --s;
    if (s < 0) break;
    ++piv[s];
    for (int x = s + 1; x < e; ++x) piv[x] = piv[x - 1] + 1;
  }
  return out;
}

}  // namespace

unsigned long long count_submodules(const FqModule& M, const RootVec& e, unsigned long long limit) {
  const CartanTriple& t = M.triple;
  const GF& F = M.field();
  const int n = t.n;
  require(static_cast<int>(e.size()) == n, Errc::ShapeMismatch, "submodule rank length");
  for (int i = 0; i < n; ++i)
    if (e[i] < 0 || e[i] > M.rank[i]) return 0;
  std::vector<std::vector<Candidate>> cand(n);
  for (int i = 0; i < n; ++i) cand[i] = free_submodules(F, t.D[i], M.rank[i], e[i], limit);
  std::vector<int> choice(n, -1);
  unsigned long long count = 0, visited = 0;
  auto closed = [&](int v) {
    for (size_t p = 0; p < t.omega.size(); ++p) {
      auto [i, j] = t.omega[p];
      if ((i != v && j != v) || choice[i] < 0 || choice[j] < 0) continue;
      const Candidate& Ni = cand[i][choice[i]];
      const Candidate& Nj = cand[j][choice[j]];
      if (Ni.check.rows == 0 || Nj.basis.cols == 0) continue;
      for (const auto& A : M.arrows[p])
        if (!fq::mul(F, Ni.check, fq::mul(F, A, Nj.basis)).is_zero()) return false;
    }
    return true;
  };
  std::function<void(int)> dfs = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (size_t c = 0; c < cand[v].size(); ++c) {
      require(++visited < limit, Errc::TooLarge, "submodule search exceeds its budget");
      choice[v] = static_cast<int>(c);
      if (closed(v)) dfs(v + 1);
    }
    choice[v] = -1;
  };
  dfs(0);
  return count;
}

Integer interpolate_at_one(const std::vector<int>& qs, const std::vector<unsigned long long>& counts, int degree) {
  const int K = static_cast<int>(qs.size());
  require(K == static_cast<int>(counts.size()) && degree >= 0 && K >= degree + 2, Errc::InterpolationInconsistent,
          "interpolation needs degree + 2 points");
  // Newton form on the first degree + 1 points.
  const int m = degree + 1;
  std::vector<Rational> coef(m);
  for (int i = 0; i < m; ++i) coef[i] = Rational(counts[i]);
  for (int lvl = 1; lvl < m; ++lvl)
    for (int i = m - 1; i >= lvl; --i) coef[i] = (coef[i] - coef[i - 1]) / Rational(qs[i] - qs[i - lvl]);
  auto eval = [&](long long x) {
    Rational v = coef[m - 1];
    for (int i = m - 2; i >= 0; --i) v = v * Rational(x - qs[i]) + coef[i];
    return v;
  };
  for (int i = m; i < K; ++i)
    require(eval(qs[i]) == Rational(counts[i]), Errc::InterpolationInconsistent,
            "point count at q = " + std::to_string(qs[i]) + " is not on the interpolating polynomial");
  // Monomial coefficients must be nonnegative integers.
  std::vector<Rational> mono(m, Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (int i = 0; i < m; ++i) {
    for (size_t d = 0; d < basis.size(); ++d) mono[d] += coef[i] * basis[d];
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * Rational(qs[i]);
    }
    basis = std::move(next);
  }
  for (const auto& c : mono)
    require(denominator(c) == 1 && c >= 0, Errc::InterpolationInconsistent,
            "counting polynomial does not have nonnegative integer coefficients");
  Rational v = eval(1);
  return numerator(v);
}

namespace {

std::vector<RootVec> subranks(const RootVec& r) {
  std::vector<RootVec> out;
  RootVec e(r.size(), 0);
  for (;;) {
    out.push_back(e);
    size_t i = 0;
    while (i < r.size() && ++e[i] > r[i]) e[i++] = 0;
    if (i == r.size()) break;
  }
  return out;
}

int degree_bound(const CartanTriple& t, const RootVec& r, const RootVec& e) {
  int s = 0;
  for (int i = 0; i < t.n; ++i) s += t.D[i] * e[i] * (r[i] - e[i]);
  return s;
}

std::vector<int> usable_fields(const OracleOptions& opt) {
  std::vector<int> qs;
  for (int q : opt.qlist)
    if (GF::supported(q) && std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
  std::sort(qs.begin(), qs.end());
  require(qs.size() >= 2, Errc::BadInput, "the oracle needs at least two fields");
  return qs;
}

LaurentPoly assemble(const CartanTriple& t, const RootVec& rank, const std::vector<int>& qs,
                     const std::vector<std::vector<unsigned long long>>& counts) {
  std::vector<RootVec> es = subranks(rank);
  const int cap = static_cast<int>(qs.size()) - 2;
  std::vector<std::pair<IntVec, Integer>> terms;
  for (size_t x = 0; x < es.size(); ++x) {
    std::vector<unsigned long long> pts;
    for (size_t a = 0; a < qs.size(); ++a) pts.push_back(counts[a][x]);
    int deg = std::min(degree_bound(t, rank, es[x]), cap);
    Integer chi = interpolate_at_one(qs, pts, deg);
    if (chi != 0) terms.emplace_back(es[x], chi);
  }
  return LaurentPoly::from_terms(t.n, std::move(terms));
}

std::vector<unsigned long long> all_counts(const FqModule& M) {
  std::vector<unsigned long long> out;
  for (const auto& e : subranks(M.rank)) out.push_back(count_submodules(M, e));
  return out;
}

int max_degree(const CartanTriple& t, const RootVec& rank) {
  int m = 0;
  for (const auto& e : subranks(rank)) m = std::max(m, degree_bound(t, rank, e));
  return m;
}

std::vector<int> fields_for(const CartanTriple& t, const RootVec& rank, const OracleOptions& opt) {
  std::vector<int> qs = usable_fields(opt);
  size_t want = static_cast<size_t>(max_degree(t, rank)) + 2;
  // The last field is the consistency point; take the largest prime field for it.
  auto prime = std::find_if(qs.rbegin(), qs.rend(), [](int q) { return GF::get(q).p() == q; });
  int check = prime != qs.rend() ? *prime : qs.back();
  qs.erase(std::find(qs.begin(), qs.end(), check));
  if (qs.size() > want - 1) qs.resize(want - 1);
  qs.push_back(check);
  return qs;
}

void check_size(const CartanTriple& t, const RootVec& rank, const OracleOptions& opt) {
  int dim = 0;
  for (int i = 0; i < t.n; ++i) dim += t.D[i] * rank[i];
  require(dim <= opt.max_total_dim, Errc::TooLarge,
          "total dimension " + std::to_string(dim) + " exceeds the oracle bound " + std::to_string(opt.max_total_dim));
}

}  // namespace

LaurentPoly f_poly_oracle(const std::function<FqModule(int)>& family, const CartanTriple& t, const RootVec& rank,
                          const OracleOptions& opt) {
  check_size(t, rank, opt);
  std::vector<int> qs = fields_for(t, rank, opt);
  // Largest field first, so an enumeration over budget fails before the cheap fields are counted.
  std::vector<size_t> order(qs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return qs[a] > qs[b]; });
  std::vector<std::vector<unsigned long long>> counts(qs.size());
  for (size_t a : order) {
    FqModule M = family(qs[a]);
    require(M.rank == rank && M.q == qs[a], Errc::ShapeMismatch, "module family returned the wrong rank or field");
    counts[a] = all_counts(M);
  }
  return assemble(t, rank, qs, counts);
}

LaurentPoly generic_f_poly(const CartanTriple& t, const RootVec& rank, const OracleOptions& opt) {
  check_size(t, rank, opt);
  std::vector<int> qs = fields_for(t, rank, opt);
  std::vector<std::vector<unsigned long long>> counts;
  for (int q : qs) {
    std::mt19937_64 rng(opt.seed * 1000003ULL + static_cast<uint64_t>(q));
    std::map<std::vector<unsigned long long>, int> votes;
    size_t best_end = SIZE_MAX;
    int kept = 0;
    for (int round = 0; round < 4; ++round) {
      for (int s = 0; s < opt.samples; ++s) {
        FqModule M = random_module(t, rank, q, rng);
        size_t e = end_dim(M);
        if (e > best_end) continue;
        if (e < best_end) {
          best_end = e;
          votes.clear();
          kept = 0;
        }
        ++votes[all_counts(M)];
        ++kept;
      }
      int top = 0;
      for (const auto& [v, c] : votes) top = std::max(top, c);
      if (2 * top > kept) break;
    }
    const std::vector<unsigned long long>* best = nullptr;
    int top = 0;
    for (const auto& [v, c] : votes)
      if (c > top) {
        top = c;
        best = &v;
      }
    require(best != nullptr, Errc::InvariantBreach, "no generic sample drawn");
    counts.push_back(*best);
  }
  return assemble(t, rank, qs, counts);
}

}  // namespace glsca
