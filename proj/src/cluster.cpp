#include "glsca/cluster.hpp"

#include "glsca/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace glsca {

IntMatrix ExtendedExchangeMatrix::principal_part() const {
  return IntMatrix(b.begin(), b.begin() + n);
}

bool ExtendedExchangeMatrix::full_rank() const { return linalg::rank(b) == n; }

ExtendedExchangeMatrix make_matrix(const IntMatrix& b, int n) {
  ExtendedExchangeMatrix M;
  M.m = static_cast<int>(b.size());
  M.n = n;
  M.b = b;
  require(M.m >= n && n > 0, Errc::BadInput, "extended matrix needs at least n rows");
  for (const auto& row : b) require(static_cast<int>(row.size()) == n, Errc::BadInput, "row length");
  return M;
}

ExtendedExchangeMatrix principal_extension(const IntMatrix& B) {
  const int n = static_cast<int>(B.size());
  IntMatrix b = B;
  for (int i = 0; i < n; ++i) {
    IntVec row(n, 0);
    row[i] = 1;
    b.push_back(row);
  }
  return make_matrix(b, n);
}

ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& M, int k) {
  require(k >= 0 && k < M.n, Errc::BadInput, "mutation index out of range");
  ExtendedExchangeMatrix r = M;
  for (int i = 0; i < M.m; ++i)
    for (int j = 0; j < M.n; ++j) {
      if (i == k || j == k) {
        r.b[i][j] = -M.b[i][j];
        continue;
      }
      int bik = M.b[i][k], bkj = M.b[k][j];
      int prod = bik * bkj;
      if (prod > 0) r.b[i][j] = M.b[i][j] + (bik > 0 ? prod : -prod);
    }
  return r;
}

Seed initial_seed(const ExtendedExchangeMatrix& M) {
  Seed s;
  s.matrix = M;
  for (int i = 0; i < M.n; ++i) s.vars.push_back(LaurentPoly::variable(M.m, i));
  return s;
}

Seed mutate_seed(const Seed& s, int k) {
  const auto& M = s.matrix;
  require(k >= 0 && k < M.n, Errc::BadInput, "mutation index out of range");
  LaurentPoly plus = LaurentPoly::constant(M.m, 1), minus = LaurentPoly::constant(M.m, 1);
  IntVec fplus(M.m, 0), fminus(M.m, 0);
  for (int i = 0; i < M.m; ++i) {
    int b = M.b[i][k];
    if (b == 0) continue;
    if (i < M.n) {
      (b > 0 ? plus : minus) *= s.vars[i].pow(std::abs(b));
    } else {
      (b > 0 ? fplus : fminus)[i] = std::abs(b);
    }
  }
  LaurentPoly num = plus.shifted(fplus) + minus.shifted(fminus);
  Seed r;
  r.matrix = mutate_matrix(M, k);
  r.vars = s.vars;
  r.path = s.path;
  r.path.push_back(k);
  try {
    r.vars[k] = divide_exact(num, s.vars[k]);
  } catch (const Error& e) {
    if (e.code() != Errc::NotDivisible) throw;
    fail(Errc::NotLaurent, "exchange relation at " + std::to_string(k + 1) + " is not divisible");
  }
  IntVec lo = r.vars[k].min_exponents();
  for (int i = M.n; i < M.m; ++i)
    require(lo[i] >= 0, Errc::NotLaurent, "negative power of a frozen variable");
  require(r.matrix.full_rank() == M.full_rank(), Errc::InvariantBreach,
          "mutation changed the rank of the extended matrix");
  return r;
}

Seed mutate_path(const Seed& s, const std::vector<int>& path) {
  Seed r = s;
  for (int k : path) r = mutate_seed(r, k);
  return r;
}

std::vector<IntVec> h_images(const IntMatrix& B0) {
  const int n = static_cast<int>(B0.size());
  std::vector<IntVec> images(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    images[i][i] -= 1;
    for (int j = 0; j < n; ++j) images[i][j] += pos(-B0[j][i]);
  }
  return images;
}

PrincipalData principal_data(const LaurentPoly& x, const IntMatrix& B0) {
  const int n = static_cast<int>(B0.size());
  require(x.nvars() == 2 * n, Errc::ArityMismatch, "principal coefficients need 2n variables");
  std::vector<int> xs(n), ys(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), n);
  PrincipalData pd;
  pd.F = select_vars(specialize_ones(x, xs), ys);
  for (size_t t = 0; t < x.size(); ++t) {
    const int32_t* e = x.exp(t);
    IntVec g(n);
    for (int i = 0; i < n; ++i) {
      long long s = e[i];
      for (int j = 0; j < n; ++j) s -= static_cast<long long>(B0[i][j]) * e[n + j];
      g[i] = static_cast<int>(s);
    }
    if (t == 0) pd.g = g;
    else require(g == pd.g, Errc::NotHomogeneous, "variable is not homogeneous");
  }
  pd.d = d_vector(x, n);
  pd.h = tropical_eval(pd.F, h_images(B0));
  return pd;
}

IntVec tropical_denominator(const LaurentPoly& F, const ExtendedExchangeMatrix& M) {
  std::vector<IntVec> images(M.n, IntVec(M.m, 0));
  for (int i = 0; i < M.n; ++i)
    for (int j = M.n; j < M.m; ++j) images[i][j] = M.b[j][i];
  return tropical_eval(F, images);
}

LaurentPoly separation_ext(const LaurentPoly& F, const IntVec& g_ext, const ExtendedExchangeMatrix& M) {
  require(F.nvars() == M.n && static_cast<int>(g_ext.size()) == M.m, Errc::ArityMismatch,
          "separation arity");
  std::vector<IntVec> yhat(M.n, IntVec(M.m, 0));
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.m; ++j) yhat[i][j] = M.b[j][i];
  return substitute_monomial(F, yhat).shifted(g_ext);
}

LaurentPoly separation(const LaurentPoly& F, const IntVec& g, const ExtendedExchangeMatrix& M) {
  require(static_cast<int>(g.size()) == M.n, Errc::ArityMismatch, "g-vector length");
  IntVec den = tropical_denominator(F, M);
  for (int j = M.n; j < M.m; ++j)
    require(den[j] <= 0, Errc::NotLaurent, "tropical denominator has a positive exponent");
  IntVec ext(M.m, 0);
  for (int i = 0; i < M.n; ++i) ext[i] = g[i];
  for (int j = M.n; j < M.m; ++j) ext[j] = -den[j];
  return separation_ext(F, ext, M);
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) h ^= std::hash<int>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct PolyHash {
  size_t operator()(const LaurentPoly& p) const { return p.hash(); }
};

}  // namespace

ExploreResult bfs_explore(const IntMatrix& B, int depth, const std::vector<IntVec>& targets) {
  const int n = static_cast<int>(B.size());
  ExploreResult res;
  std::unordered_map<LaurentPoly, int, PolyHash> ids;
  std::vector<bool> recorded;
  auto intern = [&](const LaurentPoly& p) {
    auto [it, fresh] = ids.emplace(p, static_cast<int>(ids.size()));
    if (fresh) recorded.push_back(false);
    return it->second;
  };
  std::unordered_map<std::vector<int>, char, VecHash> seen;
  auto canonical = [&](const Seed& s) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = intern(s.vars[i]);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return id[a] < id[b]; });
    std::vector<int> key;
    for (int a : order) key.push_back(id[a]);
    for (int i = 0; i < s.matrix.m; ++i)
      for (int a : order) key.push_back(s.matrix.b[i < n ? order[i] : i][a]);
    return key;
  };
  std::set<IntVec> missing(targets.begin(), targets.end());

  struct Node {
    Seed seed;
    int last;
  };
  Seed s0 = initial_seed(principal_extension(B));
  std::vector<Node> frontier{{s0, -1}};
  seen.emplace(canonical(s0), 0);
  for (int i = 0; i < n; ++i) recorded[ids.at(s0.vars[i])] = true;
  res.seeds = 1;

  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int k = 0; k < n; ++k) {
        if (k == node.last) continue;
        Seed s = mutate_seed(node.seed, k);
        ++res.mutations;
        if (!seen.emplace(canonical(s), 0).second) continue;
        ++res.seeds;
        int id = ids.at(s.vars[k]);
        if (!recorded[id]) {
          recorded[id] = true;
          PrincipalData pd = principal_data(s.vars[k], B);
          auto it = res.by_d.find(pd.d);
          if (it == res.by_d.end()) {
            missing.erase(pd.d);
            res.by_d.emplace(pd.d, ExploredVariable{s.vars[k], pd, s.path});
          } else {
            require(it->second.x == s.vars[k], Errc::InvariantBreach,
                    "two cluster variables share the d-vector " + to_string(pd.d));
          }
        }
        next.push_back({std::move(s), k});
      }
      if (!targets.empty() && missing.empty()) return res;
    }
    frontier = std::move(next);
  }
  return res;
}

MonomialSub y_mutation_sub(const IntMatrix& B, int k) {
  const int n = static_cast<int>(B.size());
  MonomialSub sub;
  sub.factor = LaurentPoly::constant(n, 1) + LaurentPoly::variable(n, k);
  sub.images.assign(n, IntVec(n, 0));
  sub.factor_powers.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      sub.images[i][k] = -1;
      continue;
    }
    sub.images[i][i] = 1;
    sub.images[i][k] = pos(B[k][i]);
    sub.factor_powers[i] = -B[k][i];
  }
  return sub;
}

CheckReport dwz_recurrence_check(const IntMatrix& B, int k, const PrincipalData& t0,
                                 const PrincipalData& t1) {
  const int n = static_cast<int>(B.size());
  CheckReport rep;
  auto bad = [&](const std::string& what) {
    if (rep.ok) rep.failed = what;
    rep.ok = false;
  };
  for (int i = 0; i < n; ++i) {
    long long expect = i == k ? -t0.g[k]
                              : t0.g[i] + static_cast<long long>(pos(B[i][k])) * t0.g[k] -
                                    static_cast<long long>(B[i][k]) * t0.h[k];
    if (t1.g[i] != expect) bad("g-vector rule at " + std::to_string(i + 1));
  }
  if (t0.g[k] != t0.h[k] - t1.h[k]) bad("g_k = h_k - h'_k");
  LaurentPoly factor = LaurentPoly::constant(n, 1) + LaurentPoly::variable(n, k);
  FactoredPoly lhs{t0.F, factor, t0.h[k]};
  FactoredPoly rhs = substitute_factored(t1.F, y_mutation_sub(B, k));
  IntVec shift(n, 0);
  shift[k] = -t1.h[k];
  rhs.num = rhs.num.shifted(shift);
  rhs.power += t1.h[k];
  if (!factored_equal(lhs, rhs)) bad("F-polynomial identity");
  return rep;
}

}  // namespace glsca
