#include "glsca/rootsys.hpp"

#include "glsca/error.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <set>

namespace glsca {

long long bilinear(const CartanTriple& t, const RootVec& a, const RootVec& b) {
  long long s = 0;
  for (int i = 0; i < t.n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < t.n; ++j)
      s += static_cast<long long>(a[i]) * b[j] * t.D[i] * t.C[i][j];
  }
  return s;
}

RootVec simple_reflection(const CartanTriple& t, int i, const RootVec& v) {
  long long coef = 0;
  for (int j = 0; j < t.n; ++j) coef += static_cast<long long>(t.C[i][j]) * v[j];
  RootVec r = v;
  r[i] -= static_cast<int>(coef);
  return r;
}

RootVec coxeter(const CartanTriple& t, const RootVec& v, int power) {
  require(is_normalized(t), Errc::BadOrientation, "Coxeter element needs a normalized triple");
  RootVec r = v;
  if (power >= 0) {
    for (int p = 0; p < power; ++p)
      for (int i = t.n - 1; i >= 0; --i) r = simple_reflection(t, i, r);
  } else {
    for (int p = 0; p < -power; ++p)
      for (int i = 0; i < t.n; ++i) r = simple_reflection(t, i, r);
  }
  return r;
}

RootVec infinite_orbit_seed(const CartanTriple& t, int l, Side side) {
  require(l >= 0 && l < t.n, Errc::BadInput, "vertex out of range");
  RootVec r(t.n, 0);
  r[l] = 1;
  if (side == Side::Preprojective) {
    for (int i = l - 1; i >= 0; --i) r = simple_reflection(t, i, r);
  } else {
    for (int i = l + 1; i < t.n; ++i) r = simple_reflection(t, i, r);
  }
  return r;
}

OrbitKind orbit_kind(const CartanTriple& t, const RootVec& v) {
  RootVec r = v;
  for (int p = 1; p <= t.n; ++p) {
    r = coxeter(t, r, 1);
    if (r == v) return {true, p};
  }
  return {false, 0};
}

bool is_positive(const RootVec& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

std::vector<RootVec> finite_positive_roots(const CartanTriple& t, const std::vector<int>& vertices) {
  require(restrict(t, vertices).kind == Kind::Finite, Errc::BadExtendedVertex,
          "vertex subset is not of finite type");
  std::set<RootVec> seen;
  std::deque<RootVec> queue;
  for (int j : vertices) {
    RootVec a(t.n, 0);
    a[j] = 1;
    seen.insert(a);
    queue.push_back(a);
  }
  constexpr size_t kGuard = 100000;
  while (!queue.empty()) {
    RootVec v = queue.front();
    queue.pop_front();
    for (int i : vertices) {
      RootVec w = simple_reflection(t, i, v);
      if (!is_positive(w) || seen.count(w)) continue;
      require(seen.size() < kGuard, Errc::InvariantBreach, "finite root system is too large");
      seen.insert(w);
      queue.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

const RootVec& Tube::at(int level, int slot) const {
  int m = ((slot % period) + period) % period;
  return levels.at(level - 1).at(m);
}

bool is_admissible_vertex(const CartanTriple& t, int k) {
  if (k < 0 || k >= t.n || t.kind != Kind::Affine || null_root(t)[k] != 1) return false;
  std::vector<int> rest;
  for (int i = 0; i < t.n; ++i)
    if (i != k) rest.push_back(i);
  if (restrict(t, rest).kind != Kind::Finite) return false;
  std::vector<bool> seen(t.n, false);
  std::vector<int> stack{rest[0]};
  seen[rest[0]] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : rest)
      if (!seen[v] && t.C[u][v] != 0) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == static_cast<int>(rest.size());
}

int first_admissible_vertex(const CartanTriple& t) {
  for (int k = 0; k < t.n; ++k)
    if (is_admissible_vertex(t, k)) return k;
  fail(Errc::BadExtendedVertex, "no extending vertex found");
}

namespace {

RootVec add(const RootVec& a, const RootVec& b, int sign = 1) {
  RootVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += sign * b[i];
  return r;
}

// Orders one component of simple roots as alpha_1..alpha_{d-1} with c(alpha_m) = alpha_{m+1}.
std::vector<RootVec> order_chain(const CartanTriple& t, const std::vector<RootVec>& comp) {
  std::set<RootVec> members(comp.begin(), comp.end());
  for (const auto& start : comp) {
    std::vector<RootVec> chain{start};
    while (chain.size() < comp.size()) {
      RootVec next = coxeter(t, chain.back(), 1);
      if (!members.count(next)) break;
      chain.push_back(next);
    }
    if (chain.size() == comp.size() &&
        std::set<RootVec>(chain.begin(), chain.end()).size() == comp.size())
      return chain;
  }
  fail(Errc::InvariantBreach, "simple roots of a tube are not a Coxeter chain");
}

}  // namespace

TubeFamily build_tubes(const CartanTriple& t, int k) {
  require(t.kind == Kind::Affine, Errc::NotAffine, "tubes are only defined in affine type");
  TubeFamily fam;
  if (t.n == 2) return fam;
  if (k < 0) k = first_admissible_vertex(t);
  require(is_admissible_vertex(t, k), Errc::BadExtendedVertex,
          "vertex " + std::to_string(k + 1) +
              " is not extending: its complement must be connected of finite type and eta_k = 1");
  fam.extended_vertex = k;

  std::vector<int> rest;
  for (int i = 0; i < t.n; ++i)
    if (i != k) rest.push_back(i);
  std::vector<RootVec> ups;
  for (auto& r : finite_positive_roots(t, rest))
    if (orbit_kind(t, r).finite) ups.push_back(r);

  std::set<RootVec> upset(ups.begin(), ups.end());
  std::vector<RootVec> simples;
  for (const auto& r : ups) {
    bool decomposable = false;
    for (const auto& s : ups) {
      if (s == r) continue;
      RootVec diff = add(r, s, -1);
      if (is_positive(diff) && upset.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(r);
  }

  // Components of the adjacency graph given by nonzero pairing.
  const int s = static_cast<int>(simples.size());
  std::vector<int> comp(s, -1);
  int ncomp = 0;
  for (int a = 0; a < s; ++a) {
    if (comp[a] >= 0) continue;
    std::vector<int> stack{a};
    comp[a] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < s; ++v)
        if (comp[v] < 0 && bilinear(t, simples[u], simples[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  int total = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<RootVec> members;
    for (int a = 0; a < s; ++a)
      if (comp[a] == c) members.push_back(simples[a]);
    // A path with equal norms and adjacent pairing -norm/2.
    long long norm = bilinear(t, members[0], members[0]);
    int edges = 0;
    for (size_t a = 0; a < members.size(); ++a) {
      require(bilinear(t, members[a], members[a]) == norm, Errc::InvariantBreach,
              "tube simple roots have unequal norms");
      int deg = 0;
      for (size_t b = 0; b < members.size(); ++b) {
        if (a == b) continue;
        long long p = bilinear(t, members[a], members[b]);
        if (p == 0) continue;
        require(2 * p == -norm, Errc::InvariantBreach, "tube simple roots are not of type A");
        ++deg;
      }
      require(deg <= 2, Errc::InvariantBreach, "tube simple roots do not form a path");
      edges += deg;
    }
    require(edges / 2 == static_cast<int>(members.size()) - 1, Errc::InvariantBreach,
            "tube simple roots do not form a path");

    std::vector<RootVec> chain = order_chain(t, members);
    Tube tube;
    tube.period = static_cast<int>(chain.size()) + 1;
    const int d = tube.period;
    std::vector<RootVec> bottom(d);
    bottom[0] = coxeter(t, chain.back(), 1);
    for (int m = 1; m < d; ++m) bottom[m] = chain[m - 1];
    tube.levels.push_back(bottom);
    std::vector<RootVec> zero(d, RootVec(t.n, 0));
    for (int L = 1; L < d - 1; ++L) {
      const auto& cur = tube.levels[L - 1];
      const auto& prev = L >= 2 ? tube.levels[L - 2] : zero;
      std::vector<RootVec> next(d);
      for (int m = 0; m < d; ++m)
        next[m] = add(add(cur[m], cur[(m + 1) % d]), prev[(m + 1) % d], -1);
      tube.levels.push_back(next);
    }
    for (int L = 1; L < d; ++L)
      for (int m = 0; m < d; ++m) {
        const RootVec& r = tube.at(L, m);
        require(is_positive(r), Errc::InvariantBreach, "tube root is not positive");
        require(coxeter(t, r, 1) == tube.at(L, m + 1), Errc::InvariantBreach,
                "Coxeter element does not rotate the tube");
      }
    total += d - 1;
    fam.tubes.push_back(std::move(tube));
  }
  require(total == t.n - 2, Errc::InvariantBreach, "tube ranks do not add up to n - 2");
  return fam;
}

std::string SchurRootLabel::str() const {
  switch (type) {
    case Type::Preprojective:
      return "P(" + std::to_string(a + 1) + "," + std::to_string(b) + ")";
    case Type::Preinjective:
      return "I(" + std::to_string(a + 1) + "," + std::to_string(b) + ")";
    case Type::Tube:
      return "T(" + std::to_string(a + 1) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }
  return "?";
}

SchurRootLabel SchurRootLabel::parse(const std::string& s) {
  static const std::regex re2(R"(\s*([PI])\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  static const std::regex re3(R"(\s*T\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(s, m, re2)) {
    int l = std::stoi(m[2]) - 1;
    int r = std::stoi(m[3]);
    require(l >= 0, Errc::BadInput, "vertices are 1-based");
    return m[1] == "P" ? preprojective(l, r) : preinjective(l, r);
  }
  if (std::regex_match(s, m, re3)) {
    int i = std::stoi(m[1]) - 1;
    require(i >= 0, Errc::BadInput, "tube indices are 1-based");
    return tube(i, std::stoi(m[2]), std::stoi(m[3]));
  }
  fail(Errc::BadInput, "cannot parse root label '" + s + "'");
}

std::vector<LabeledRoot> enumerate_real_schur(const CartanTriple& t, int depth) {
  require(t.kind == Kind::Affine, Errc::NotAffine,
          "real Schur root enumeration is only supported in affine type");
  require(depth >= 0, Errc::BadInput, "depth must be nonnegative");
  std::vector<LabeledRoot> out;
  std::set<RootVec> seen;
  auto push = [&](const RootVec& r, const SchurRootLabel& l) {
    require(is_positive(r), Errc::InvariantBreach, "enumerated root is not positive");
    if (seen.insert(r).second) out.push_back({r, l});
  };
  for (int r = 0; r <= depth; ++r)
    for (int l = 0; l < t.n; ++l)
      push(coxeter(t, infinite_orbit_seed(t, l, Side::Preprojective), r),
           SchurRootLabel::preprojective(l, r));
  for (int r = 0; r <= depth; ++r)
    for (int l = 0; l < t.n; ++l)
      push(coxeter(t, infinite_orbit_seed(t, l, Side::Preinjective), -r),
           SchurRootLabel::preinjective(l, r));
  TubeFamily fam = build_tubes(t);
  for (size_t i = 0; i < fam.tubes.size(); ++i) {
    const Tube& tube = fam.tubes[i];
    for (int L = 1; L < tube.period; ++L)
      for (int m = 0; m < tube.period; ++m)
        push(tube.at(L, m), SchurRootLabel::tube(static_cast<int>(i), L, m));
  }
  return out;
}

}  // namespace glsca
