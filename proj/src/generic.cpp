#include "glsca/generic.hpp"

#include "glsca/error.hpp"

#include <algorithm>
#include <numeric>

namespace glsca {

namespace {

bool leq(const RootVec& a, const RootVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int height(const RootVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

}  // namespace

GenericBasis::GenericBasis(const CartanTriple& t, LaurentPoly f_eta, int q) : t_(t), f_eta_(std::move(f_eta)), q_(q) {
  require(t.kind == Kind::Affine, Errc::NotAffine, "generic bases are implemented for affine type only");
  require(is_normalized(t), Errc::BadOrientation, "triple must be normalized");
  require(f_eta_.nvars() == t.n && f_eta_.constant_term() == 1, Errc::BadInput,
          "null-root F-polynomial must have n variables and constant term 1");
  GF::get(q);
  eta_ = null_root(t);
  if (t.n >= 3) {
    TubeFamily fam = build_tubes(t);
    auto tubes = build_tube_data(t, fam);
    for (const auto& td : tubes)
      for (size_t L = 0; L < td.data.size(); ++L)
        for (size_t m = 0; m < td.data[L].size(); ++m)
          data_.emplace(SchurRootLabel::tube(td.tube, static_cast<int>(L) + 1, static_cast<int>(m)).str(),
                        td.data[L][m]);
  }
}

void GenericBasis::ensure_roots(const RootVec& bound) {
  auto fits = [&](int d) {
    for (int l = 0; l < t_.n; ++l) {
      RootVec a = coxeter(t_, infinite_orbit_seed(t_, l, Side::Preprojective), d);
      RootVec b = coxeter(t_, infinite_orbit_seed(t_, l, Side::Preinjective), -d);
      if (leq(a, bound) || leq(b, bound)) return true;
    }
    return false;
  };
  int last = 0;
  for (int d = 0; d <= last + 2 * t_.n + 2; ++d)
    if (fits(d)) last = d;
  if (last <= depth_) return;
  depth_ = last;
  roots_ = enumerate_real_schur(t_, depth_);
}

const CCDatum& GenericBasis::datum(const LabeledRoot& a) {
  std::string key = a.label.str();
  auto it = data_.find(key);
  if (it != data_.end()) return it->second;
  return data_.emplace(key, build_for_label(t_, a.label)).first->second;
}

const FqModule& GenericBasis::module(const LabeledRoot& a) {
  std::string key = a.label.str();
  auto it = modules_.find(key);
  if (it != modules_.end()) return it->second;
  FqModule M = module_for_label(t_, a.label, q_);
  require(M.rank == a.root, Errc::InvariantBreach, "explicit module has the wrong rank");
  return modules_.emplace(key, std::move(M)).first->second;
}

bool GenericBasis::compatible(const LabeledRoot& a, const LabeledRoot& b) {
  std::string sa = a.label.str(), sb = b.label.str();
  std::pair<std::string, std::string> key = sa < sb ? std::make_pair(sa, sb) : std::make_pair(sb, sa);
  auto it = compat_.find(key);
  if (it != compat_.end()) return it->second;
  const FqModule& M = module(a);
  const FqModule& N = module(b);
  ext_tests_ += 2;
  bool ok = ext1_dim(M, N) == 0 && ext1_dim(N, M) == 0;
  compat_.emplace(key, ok);
  return ok;
}

const CanonicalDecomposition& GenericBasis::decompose(const RootVec& r) {
  require(static_cast<int>(r.size()) == t_.n, Errc::ArityMismatch, "rank vector length");
  for (int x : r) require(x >= 0, Errc::BadInput, "rank vector must be nonnegative");
  auto cached = decomp_.find(r);
  if (cached != decomp_.end()) return cached->second;

  int mmax = std::numeric_limits<int>::max();
  for (int i = 0; i < t_.n; ++i) mmax = std::min(mmax, r[i] / eta_[i]);
  for (int m = mmax; m >= 0; --m) {
    RootVec s = r;
    for (int i = 0; i < t_.n; ++i) s[i] -= m * eta_[i];
    std::vector<CanonicalDecomposition> found;
    if (height(s) == 0) {
      found.push_back({m, {}});
    } else {
      ensure_roots(s);
      std::vector<LabeledRoot> cand;
      for (const auto& lr : roots_)
        if (leq(lr.root, s) && (m == 0 || lr.label.type == SchurRootLabel::Type::Tube)) cand.push_back(lr);
      std::stable_sort(cand.begin(), cand.end(),
                       [](const LabeledRoot& x, const LabeledRoot& y) { return height(x.root) > height(y.root); });
      std::vector<std::pair<int, int>> chosen;
      auto rec = [&](auto&& self, size_t i, RootVec rem) -> void {
        if (found.size() > 1) return;
        if (height(rem) == 0) {
          CanonicalDecomposition d{m, {}};
          for (auto [c, a] : chosen) d.parts.emplace_back(cand[c], a);
          found.push_back(std::move(d));
          return;
        }
        if (i == cand.size()) return;
        self(self, i + 1, rem);
        if (!leq(cand[i].root, rem)) return;
        if (!compatible(cand[i], cand[i])) return;
        for (auto [c, a] : chosen)
          if (!compatible(cand[c], cand[i])) return;
        RootVec left = rem;
        for (int a = 1;; ++a) {
          for (int j = 0; j < t_.n; ++j) left[j] -= cand[i].root[j];
          if (!leq(RootVec(t_.n, 0), left)) break;
          chosen.emplace_back(static_cast<int>(i), a);
          self(self, i + 1, left);
          chosen.pop_back();
        }
      };
      rec(rec, 0, s);
    }
    if (found.empty()) continue;
    require(found.size() == 1, Errc::InvariantBreach, "canonical decomposition of " + to_string(r) + " is not unique");
    return decomp_.emplace(r, std::move(found.front())).first->second;
  }
  fail(Errc::DecompositionNotFound, "no canonical decomposition found for " + to_string(r) + " (roots to depth " +
                                        std::to_string(depth_) + ")");
}

LaurentPoly GenericBasis::generic_f(const RootVec& r) {
  auto it = fpoly_.find(r);
  if (it != fpoly_.end()) return it->second;
  const CanonicalDecomposition& d = decompose(r);
  LaurentPoly F = f_eta_.pow(d.m);
  for (const auto& [lr, a] : d.parts) F *= datum(lr).F.pow(a);
  fpoly_.emplace(r, F);
  return F;
}

GenericCC GenericBasis::generic_cc(const IntVec& g_ext, const ExtendedExchangeMatrix& M) {
  require(M.n == t_.n && M.principal_part() == t_.B, Errc::ArityMismatch, "extended matrix does not extend B");
  require(static_cast<int>(g_ext.size()) == M.m, Errc::ArityMismatch, "extended g-vector length");
  GenericCC out;
  out.g_ext = g_ext;
  out.v = rank_from_g(t_, IntVec(g_ext.begin(), g_ext.begin() + t_.n));
  out.F = generic_f(positive_part(out.v));
  out.X = separation_ext(out.F, g_ext, M);
  return out;
}

CanonicalDecomposition canonical_decomposition(const CartanTriple& t, const RootVec& r) {
  GenericBasis basis(t, LaurentPoly::constant(t.n, 1));
  return basis.decompose(r);
}

GenericCC generic_cc(const CartanTriple& t, const IntVec& g_ext, const ExtendedExchangeMatrix& M,
                     const LaurentPoly& f_eta) {
  GenericBasis basis(t, f_eta);
  return basis.generic_cc(g_ext, M);
}

MonomialSub exchange_sub(const ExtendedExchangeMatrix& M, int k) {
  require(k >= 0 && k < M.n, Errc::BadInput, "mutation index out of range");
  MonomialSub sub;
  sub.images.assign(M.m, IntVec(M.m, 0));
  sub.factor_powers.assign(M.m, 0);
  IntVec col(M.m, 0);
  for (int j = 0; j < M.m; ++j) {
    sub.images[j][j] = 1;
    col[j] = M.b[j][k];
  }
  sub.images[k][k] = -1;
  for (int j = 0; j < M.m; ++j) sub.images[k][j] += pos(-M.b[j][k]);
  sub.factor_powers[k] = 1;
  sub.factor = LaurentPoly::constant(M.m, 1) + LaurentPoly::monomial(M.m, col);
  return sub;
}

namespace {

bool pointed_with(const LaurentPoly& X, const IntVec& g_ext, const linalg::FullRankSolver& solver) {
  const int m = static_cast<int>(g_ext.size());
  require(X.nvars() == m, Errc::ArityMismatch, "pointedness arity");
  IntVec neg(m), c(solver.cols());
  for (int i = 0; i < m; ++i) neg[i] = -g_ext[i];
  LaurentPoly P = X.shifted(neg);
  if (P.constant_term() != 1) return false;
  for (size_t s = 0; s < P.size(); ++s) {
    if (!solver.solve(P.exp(s), c.data())) return false;
    for (int x : c)
      if (x < 0) return false;
  }
  return true;
}

}  // namespace

bool is_pointed(const LaurentPoly& X, const IntVec& g_ext, const ExtendedExchangeMatrix& M) {
  require(M.full_rank(), Errc::RankDeficient, "pointedness needs a full-rank extended matrix");
  require(static_cast<int>(g_ext.size()) == M.m, Errc::ArityMismatch, "pointedness arity");
  return pointed_with(X, g_ext, linalg::FullRankSolver(M.b));
}

SourceSequence::SourceSequence(const ExtendedExchangeMatrix& M) {
  require(M.full_rank(), Errc::RankDeficient, "compatibly pointed check needs a full-rank extended matrix");
  seeds_.push_back(M);
  for (int s = 0; s < M.n; ++s) {
    const int k = M.n - 1 - s;
    subs_.push_back(exchange_sub(seeds_.back(), k));
    seeds_.push_back(mutate_matrix(seeds_.back(), k));
  }
  for (const auto& S : seeds_) solvers_.emplace_back(S.b);
}

PointedWalk SourceSequence::check(const LaurentPoly& X, const IntVec& g_ext) const {
  const int n = seeds_.front().n;
  require(static_cast<int>(g_ext.size()) == seeds_.front().m, Errc::ArityMismatch, "extended g-vector length");
  PointedWalk w;
  IntVec g = g_ext;
  LaurentPoly Xs = X;
  for (int s = 0;; ++s) {
    w.g.push_back(g);
    if (!pointed_with(Xs, g, solvers_[s])) {
      w.ok = false;
      w.failed_seed = s;
      w.failed = "not pointed at " + to_string(g);
      return w;
    }
    if (s == n) break;
    try {
      Xs = substitute(Xs, subs_[s]);
    } catch (const Error& e) {
      if (e.code() != Errc::NotDivisible) throw;
      w.ok = false;
      w.failed_seed = s + 1;
      w.failed = "not Laurent in the next cluster";
      return w;
    }
    g = t_map(g, seeds_[s], n - 1 - s);
  }
  return w;
}

PointedWalk compatibly_pointed_check(const LaurentPoly& X, const IntVec& g_ext, const ExtendedExchangeMatrix& M) {
  return SourceSequence(M).check(X, g_ext);
}

PointedWalk compatibly_pointed_check(GenericBasis& basis, const IntVec& g_ext, const ExtendedExchangeMatrix& M) {
  GenericCC x = basis.generic_cc(g_ext, M);
  return compatibly_pointed_check(x.X, g_ext, M);
}

}  // namespace glsca
