#include "glsca/ccmod.hpp"

#include "glsca/error.hpp"

#include <algorithm>
#include <set>

namespace glsca {

namespace {

RootVec unit(int n, int k) {
  RootVec e(n, 0);
  e[k] = 1;
  return e;
}

void note(ReflectionLog* log, size_t identities, const std::string& what) {
  if (!log) return;
  log->identities += identities;
  if (log->keep_trace) log->trace.push_back(what);
}

void check(bool ok, const std::string& what) {
  require(ok, Errc::InvariantBreach, "reflection identity failed: " + what);
}

bool is_f_polynomial(const LaurentPoly& F) {
  if (F.is_zero() || F.constant_term() != 1) return false;
  for (int e : F.min_exponents())
    if (e < 0) return false;
  return true;
}

}  // namespace

IntVec positive_part(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = pos(v[i]);
  return r;
}

IntVec negative_part(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = pos(-v[i]);
  return r;
}

IntVec g_from_rank(const CartanTriple& t, const RootVec& m) {
  require(static_cast<int>(m.size()) == t.n, Errc::ArityMismatch, "rank vector length");
  IntVec g(t.n);
  for (int i = 0; i < t.n; ++i) {
    long long s = -m[i];
    for (int j = 0; j < t.n; ++j) s += static_cast<long long>(pos(-t.B[i][j])) * m[j];
    g[i] = static_cast<int>(s);
  }
  return g;
}

std::vector<int> sink_order(const CartanTriple& t) {
  std::vector<int> order;
  std::vector<bool> removed(t.n, false);
  for (int step = 0; step < t.n; ++step) {
    int pick = -1;
    for (int k = 0; k < t.n && pick < 0; ++k) {
      if (removed[k]) continue;
      bool sink = true;
      for (auto [i, j] : t.omega)
        if (j == k && !removed[i]) sink = false;
      if (sink) pick = k;
    }
    require(pick >= 0, Errc::BadOrientation, "orientation has a cycle");
    removed[pick] = true;
    order.push_back(pick);
  }
  return order;
}

IntVec rank_from_g(const CartanTriple& t, const IntVec& g) {
  require(static_cast<int>(g.size()) == t.n, Errc::ArityMismatch, "g-vector length");
  IntVec v(t.n, 0);
  std::vector<bool> done(t.n, false);
  for (int k : sink_order(t)) {
    long long s = -g[k];
    for (int j = 0; j < t.n; ++j) {
      if (t.B[k][j] >= 0) continue;
      require(done[j], Errc::InvariantBreach, "sink order visits a successor late");
      s += static_cast<long long>(-t.B[k][j]) * pos(v[j]);
    }
    v[k] = static_cast<int>(s);
    done[k] = true;
  }
  return v;
}

CCDatum reflect_ccdatum(const CCDatum& d, int k, ReflectionLog* log) {
  const CartanTriple& t = d.triple;
  require(k >= 0 && k < t.n, Errc::BadInput, "vertex out of range");
  const bool sink = is_sink(t, k);
  require(sink || is_source(t, k), Errc::NotSinkOrSource,
          "vertex " + std::to_string(k + 1) + " is neither a sink nor a source");
  require(d.rank != unit(t.n, k), Errc::NegativeRank,
          "E_" + std::to_string(k + 1) + " is annihilated by the reflection at " + std::to_string(k + 1));
  CCDatum r;
  r.triple = reflect_orientation(t, k);
  r.rank = simple_reflection(t, k, d.rank);
  r.label = d.label;
  for (int x : r.rank)
    require(x >= 0, Errc::NegativeRank, "reflected rank vector " + to_string(r.rank) + " is not positive");

  const int hM = sink ? -d.rank[k] : 0;
  const int hMp = sink ? 0 : -r.rank[k];
  check(tropical_eval(d.F, h_images(t.B))[k] == hM, "h_k of the module");

  const int n = t.n;
  FactoredPoly fp = substitute_factored(d.F, y_mutation_sub(r.triple.B, k));
  IntVec shift(n, 0);
  shift[k] = -hM;
  fp.num = fp.num.shifted(shift);
  fp.power += hM - hMp;
  try {
    r.F = resolve(fp);
  } catch (const Error& e) {
    if (e.code() != Errc::NotDivisible) throw;
    fail(Errc::InvariantBreach, "reflected F-polynomial is not a polynomial");
  }
  check(is_f_polynomial(r.F), "reflected F is a polynomial with constant term 1");

  r.g.assign(n, 0);
  for (int i = 0; i < n; ++i)
    r.g[i] = i == k ? -d.g[k] : d.g[i] + pos(t.B[i][k]) * d.g[k] - t.B[i][k] * hM;
  check(r.g == g_from_rank(r.triple, r.rank), "g-vector rule agrees with the rank formula");
  check(tropical_eval(r.F, h_images(r.triple.B))[k] == hMp, "h_k of the reflected module");
  check(hM * hMp == 0, "h_k(M) h_k(M') = 0");
  check(d.g[k] == hM - hMp, "g_k = h_k(M) - h_k(M')");
  if (log) ++log->reflections;
  note(log, 6, std::string(sink ? "F+" : "F-") + std::to_string(k + 1) + " " + to_string(d.rank) + " -> " +
                   to_string(r.rank));
  return r;
}

namespace {

CCDatum simple_datum(const CartanTriple& t, int l) {
  CCDatum d;
  d.triple = t;
  d.rank = unit(t.n, l);
  d.F = LaurentPoly::constant(t.n, 1) + LaurentPoly::variable(t.n, l);
  d.g = g_from_rank(t, d.rank);
  return d;
}

}  // namespace

CCDatum build_preprojective(const CartanTriple& t, int l, int r, ReflectionLog* log) {
  require(is_normalized(t), Errc::BadOrientation, "builders need a normalized triple");
  require(l >= 0 && l < t.n && r >= 0, Errc::BadInput, "preprojective label out of range");
  CartanTriple base = t;
  for (int i = 0; i < l; ++i) base = reflect_orientation(base, i);
  require(is_sink(base, l), Errc::InvariantBreach, "base vertex is not a sink");
  CCDatum d = simple_datum(base, l);
  for (int i = l - 1; i >= 0; --i) d = reflect_ccdatum(d, i, log);
  for (int s = 0; s < r; ++s)
    for (int i = t.n - 1; i >= 0; --i) d = reflect_ccdatum(d, i, log);
  require(d.triple.omega == t.omega, Errc::InvariantBreach, "builder did not return to the orientation");
  require(d.rank == coxeter(t, infinite_orbit_seed(t, l, Side::Preprojective), r), Errc::InvariantBreach,
          "preprojective rank vector mismatch");
  d.label = SchurRootLabel::preprojective(l, r).str();
  return d;
}

CCDatum build_preinjective(const CartanTriple& t, int l, int r, ReflectionLog* log) {
  require(is_normalized(t), Errc::BadOrientation, "builders need a normalized triple");
  require(l >= 0 && l < t.n && r >= 0, Errc::BadInput, "preinjective label out of range");
  CartanTriple base = t;
  for (int i = t.n - 1; i > l; --i) base = reflect_orientation(base, i);
  require(is_source(base, l), Errc::InvariantBreach, "base vertex is not a source");
  CCDatum d = simple_datum(base, l);
  for (int i = l + 1; i < t.n; ++i) d = reflect_ccdatum(d, i, log);
  for (int s = 0; s < r; ++s)
    for (int i = 0; i < t.n; ++i) d = reflect_ccdatum(d, i, log);
  require(d.triple.omega == t.omega, Errc::InvariantBreach, "builder did not return to the orientation");
  require(d.rank == coxeter(t, infinite_orbit_seed(t, l, Side::Preinjective), -r), Errc::InvariantBreach,
          "preinjective rank vector mismatch");
  d.label = SchurRootLabel::preinjective(l, r).str();
  return d;
}

namespace {

CCDatum sweep_minus(const CCDatum& d, ReflectionLog* log) {
  CCDatum r = d;
  for (int i = d.triple.n - 1; i >= 0; --i) r = reflect_ccdatum(r, i, log);
  return r;
}

}  // namespace

std::vector<TubeData> build_tube_data(const CartanTriple& t, const TubeFamily& tubes, ReflectionLog* log) {
  require(is_normalized(t), Errc::BadOrientation, "builders need a normalized triple");
  std::vector<TubeData> out;
  if (tubes.tubes.empty()) return out;
  const int k = tubes.extended_vertex;
  std::vector<int> rest;
  for (int i = 0; i < t.n; ++i)
    if (i != k) rest.push_back(i);
  CartanTriple fin = restrict(t, rest);
  require(fin.kind == Kind::Finite, Errc::BadExtendedVertex, "complement of the extending vertex is not finite");

  // Every indecomposable rigid module of the finite part lies in a preprojective sweep.
  std::map<RootVec, CCDatum> finite;
  for (int l = 0; l < fin.n; ++l)
    for (int r = 0;; ++r) {
      CCDatum d;
      try {
        d = build_preprojective(fin, l, r, log);
      } catch (const Error& e) {
        if (e.code() != Errc::NegativeRank) throw;
        break;
      }
      CCDatum full;
      full.triple = t;
      full.rank.assign(t.n, 0);
      for (int a = 0; a < fin.n; ++a) full.rank[rest[a]] = d.rank[a];
      full.F = embed_vars(d.F, t.n, rest);
      full.g = g_from_rank(t, full.rank);
      finite.emplace(full.rank, full);
      require(r <= 4 * t.n * t.n, Errc::InvariantBreach, "finite preprojective sweep does not terminate");
    }

  for (size_t ti = 0; ti < tubes.tubes.size(); ++ti) {
    const Tube& tube = tubes.tubes[ti];
    const int p = tube.period;
    TubeData td;
    td.tube = static_cast<int>(ti);
    td.period = p;
    for (int L = 1; L < p; ++L) {
      int m0 = -1;
      for (int m = 0; m < p && m0 < 0; ++m)
        if (tube.at(L, m)[k] == 0) m0 = m;
      require(m0 >= 0, Errc::InvariantBreach, "tube level has no root in the finite part");
      auto it = finite.find(tube.at(L, m0));
      require(it != finite.end(), Errc::InvariantBreach, "finite part lacks the tube root " + to_string(tube.at(L, m0)));
      std::vector<CCDatum> level(p);
      CCDatum cur = it->second;
      for (int s = 0; s < p; ++s) {
        int m = (m0 + s) % p;
        require(cur.rank == tube.at(L, m), Errc::InvariantBreach, "Coxeter sweep left the tube");
        auto f = finite.find(cur.rank);
        if (f != finite.end())
          require(f->second.F == cur.F && f->second.g == cur.g, Errc::InvariantBreach,
                  "tube datum disagrees with the finite part at " + to_string(cur.rank));
        cur.label = SchurRootLabel::tube(static_cast<int>(ti), L, m).str();
        level[m] = cur;
        cur = sweep_minus(cur, log);
      }
      require(cur.rank == it->second.rank && cur.F == it->second.F && cur.g == it->second.g,
              Errc::InvariantBreach, "tube datum is not periodic");
      td.data.push_back(std::move(level));
    }
    out.push_back(std::move(td));
  }
  return out;
}

CCDatum build_for_label(const CartanTriple& t, const SchurRootLabel& label, ReflectionLog* log) {
  switch (label.type) {
    case SchurRootLabel::Type::Preprojective:
      return build_preprojective(t, label.a, label.b, log);
    case SchurRootLabel::Type::Preinjective:
      return build_preinjective(t, label.a, label.b, log);
    case SchurRootLabel::Type::Tube: {
      TubeFamily fam = build_tubes(t);
      require(label.a >= 0 && label.a < static_cast<int>(fam.tubes.size()), Errc::BadInput, "no such tube");
      int p = fam.tubes[label.a].period;
      require(label.b >= 1 && label.b < p && label.c >= 0 && label.c < p, Errc::BadInput,
              "tube level or slot out of range");
      auto data = build_tube_data(t, fam, log);
      return data[label.a].data[label.b - 1][label.c];
    }
  }
  fail(Errc::BadInput, "unknown label");
}

LaurentPoly cc_function(const CCDatum& d, const ExtendedExchangeMatrix& M) {
  require(M.n == d.triple.n && M.principal_part() == d.triple.B, Errc::ArityMismatch,
          "extended matrix does not extend B of the datum");
  return separation(d.F, d.g, M);
}

LaurentPoly cc_function_literal(const CCDatum& d) {
  const CartanTriple& t = d.triple;
  const int n = t.n;
  std::vector<std::pair<IntVec, Integer>> terms;
  for (size_t s = 0; s < d.F.size(); ++s) {
    const int32_t* r = d.F.exp(s);
    IntVec e(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      long long x = -d.rank[i];
      for (int j = 0; j < n; ++j)
        x += static_cast<long long>(pos(-t.B[i][j])) * d.rank[j] + static_cast<long long>(t.B[i][j]) * r[j];
      e[i] = static_cast<int>(x);
      e[n + i] = r[i];
    }
    terms.emplace_back(std::move(e), d.F.coef(s));
  }
  return LaurentPoly::from_terms(2 * n, std::move(terms));
}

LaurentPoly cluster_monomial_cc(const std::vector<std::pair<CCDatum, int>>& summands, const IntVec& a,
                                const ExtendedExchangeMatrix& M) {
  require(static_cast<int>(a.size()) == M.n, Errc::ArityMismatch, "initial exponent vector length");
  IntVec e(M.m, 0);
  for (int i = 0; i < M.n; ++i) {
    require(a[i] >= 0, Errc::BadInput, "initial exponents must be nonnegative");
    e[i] = a[i];
  }
  LaurentPoly x = LaurentPoly::monomial(M.m, e);
  for (const auto& [d, mult] : summands) {
    require(mult >= 0, Errc::BadInput, "multiplicities must be nonnegative");
    x *= cc_function(d, M).pow(mult);
  }
  return x;
}

IntVec decorated_reflect(const IntVec& v, const CartanTriple& t, int k) {
  require(static_cast<int>(v.size()) == t.n, Errc::ArityMismatch, "decorated vector length");
  require(is_sink(t, k), Errc::NotSinkOrSource, "decorated reflection needs a sink");
  IntVec r = v;
  long long s = -v[k];
  for (int j = 0; j < t.n; ++j) s += static_cast<long long>(pos(t.B[k][j])) * pos(v[j]);
  r[k] = static_cast<int>(s);
  return r;
}

IntVec t_map(const IntVec& g, const ExtendedExchangeMatrix& M, int k) {
  require(static_cast<int>(g.size()) == M.m, Errc::ArityMismatch, "extended g-vector length");
  require(k >= 0 && k < M.n, Errc::BadInput, "mutation index out of range");
  IntVec r(M.m);
  for (int i = 0; i < M.m; ++i) {
    if (i == k) {
      r[i] = -g[k];
      continue;
    }
    int b = g[k] <= 0 ? pos(-M.b[i][k]) : pos(M.b[i][k]);
    r[i] = g[i] + b * g[k];
  }
  return r;
}

CheckReport generic_reflect_check(const IntVec& v, const CartanTriple& t, int k, const LaurentPoly& Fv,
                                  const LaurentPoly& Fvp) {
  CheckReport rep;
  const int n = t.n;
  require(is_sink(t, k), Errc::NotSinkOrSource, "generic reflection needs a sink");
  LaurentPoly factor = LaurentPoly::constant(n, 1) + LaurentPoly::variable(n, k);
  FactoredPoly lhs{Fv, factor, -pos(v[k])};
  MonomialSub sub = y_mutation_sub(t.B, k);
  FactoredPoly rhs = substitute_factored(Fvp, sub);
  // 1 + y_k' = 1 + y_k^{-1} = y_k^{-1} (1 + y_k).
  int e = -pos(-v[k]);
  IntVec shift(n, 0);
  shift[k] = -e;
  rhs.num = rhs.num.shifted(shift);
  rhs.power += e;
  if (!factored_equal(lhs, rhs)) {
    rep.ok = false;
    rep.failed = "generic F-polynomial reflection identity";
  }
  return rep;
}

}  // namespace glsca
