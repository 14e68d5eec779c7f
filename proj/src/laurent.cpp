#include "glsca/laurent.hpp"

#include "glsca/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace glsca {

using Key = unsigned __int128;

class LaurentBuilder {
 public:
  explicit LaurentBuilder(int nvars) : p_(nvars) {}
  void reserve(size_t n) {
    p_.exps_.reserve(n * p_.nvars_);
    p_.coefs_.reserve(n);
  }
  void push(const int32_t* e, Integer c) {
    if (c == 0) return;
    p_.exps_.insert(p_.exps_.end(), e, e + p_.nvars_);
    p_.coefs_.push_back(std::move(c));
  }
  // Appends to the last term if the exponent matches it.
  void push_merge(const int32_t* e, Integer c) {
    size_t n = p_.coefs_.size();
    if (n > 0 && std::equal(e, e + p_.nvars_, p_.exp(n - 1))) {
      p_.coefs_.back() += c;
      if (p_.coefs_.back() == 0) {
        p_.coefs_.pop_back();
        p_.exps_.resize(p_.exps_.size() - p_.nvars_);
      }
      return;
    }
    push(e, std::move(c));
  }
  LaurentPoly take() { return std::move(p_); }
  static void reverse(LaurentPoly& p) {
    const int nv = p.nvars_;
    const size_t n = p.coefs_.size();
    std::reverse(p.coefs_.begin(), p.coefs_.end());
    for (size_t a = 0, b = n ? n - 1 : 0; a < b; ++a, --b)
      std::swap_ranges(p.exps_.begin() + a * nv, p.exps_.begin() + (a + 1) * nv,
                       p.exps_.begin() + b * nv);
  }

 private:
  LaurentPoly p_;
};

namespace {

int bitlen(unsigned long long x) {
  int b = 0;
  while (x) {
    ++b;
    x >>= 1;
  }
  return b;
}

// Packs exponent vectors with per-variable fields so that lex order equals key order
// and adding two packed keys adds exponents without carries.
struct Packer {
  int nv = 0;
  std::vector<int> shift;
  std::vector<Key> mask;
  bool ok = true;

  explicit Packer(const IntVec& range) : nv(static_cast<int>(range.size())), shift(nv), mask(nv) {
    int total = 0;
    for (int v = nv - 1; v >= 0; --v) {
      int bits = bitlen(static_cast<unsigned long long>(range[v]));
      shift[v] = total;
      mask[v] = bits ? ((Key(1) << bits) - 1) : 0;
      total += bits;
    }
    ok = total <= 127;
  }
  Key encode(const int32_t* e, const int32_t* off) const {
    Key k = 0;
    for (int v = 0; v < nv; ++v) k |= Key(static_cast<uint32_t>(e[v] - off[v])) << shift[v];
    return k;
  }
  void decode(Key k, const int32_t* base, int32_t* out) const {
    for (int v = 0; v < nv; ++v) out[v] = base[v] + static_cast<int32_t>((k >> shift[v]) & mask[v]);
  }
};

Integer from_i128(__int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : x;
  Integer r = static_cast<unsigned long long>(u >> 64);
  r <<= 64;
  r += static_cast<unsigned long long>(u);
  return neg ? Integer(-r) : r;
}

int max_coef_bits(const LaurentPoly& p) {
  size_t b = 0;
  for (size_t t = 0; t < p.size(); ++t) {
    const Integer& c = p.coef(t);
    if (c != 0) b = std::max<size_t>(b, boost::multiprecision::msb(boost::multiprecision::abs(c)) + 1);
  }
  return static_cast<int>(b);
}

int lex_cmp(const int32_t* a, const int32_t* b, int nv) {
  for (int v = 0; v < nv; ++v)
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  return 0;
}

void check_arity(const LaurentPoly& a, const LaurentPoly& b) {
  require(a.nvars() == b.nvars(), Errc::ArityMismatch,
          "polynomials have " + std::to_string(a.nvars()) + " and " + std::to_string(b.nvars()) +
              " variables");
}

LaurentPoly mul_generic(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<IntVec, Integer> acc;
  const int nv = a.nvars();
  IntVec e(nv);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      for (int v = 0; v < nv; ++v) e[v] = a.exp(i)[v] + b.exp(j)[v];
      acc[e] += a.coef(i) * b.coef(j);
    }
  std::vector<std::pair<IntVec, Integer>> terms(acc.begin(), acc.end());
  return LaurentPoly::from_terms(nv, std::move(terms));
}

LaurentPoly divide_generic(const LaurentPoly& p, const LaurentPoly& q) {
  const int nv = p.nvars();
  std::map<IntVec, Integer> rem;
  for (size_t t = 0; t < p.size(); ++t) rem[p.exponent(t)] = p.coef(t);
  const size_t lead = q.size() - 1;
  IntVec lq = q.exponent(lead);
  IntVec lo_box(nv), hi_box(nv);
  IntVec lo_p = p.min_exponents(), hi_p = p.max_exponents();
  IntVec lo_q = q.min_exponents(), hi_q = q.max_exponents();
  for (int v = 0; v < nv; ++v) {
    lo_box[v] = lo_p[v] - lo_q[v];
    hi_box[v] = hi_p[v] - hi_q[v];
  }
  std::vector<std::pair<IntVec, Integer>> quot;
  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    IntVec e = it->first;
    for (int v = 0; v < nv; ++v) {
      e[v] -= lq[v];
      if (e[v] < lo_box[v] || e[v] > hi_box[v]) fail(Errc::NotDivisible, "remainder is nonzero");
    }
    if (it->second % q.coef(lead) != 0) fail(Errc::NotDivisible, "leading coefficient does not divide");
    Integer c = it->second / q.coef(lead);
    for (size_t t = 0; t < q.size(); ++t) {
      IntVec f = q.exponent(t);
      for (int v = 0; v < nv; ++v) f[v] += e[v];
      auto& slot = rem[f];
      slot -= c * q.coef(t);
      if (slot == 0) rem.erase(f);
    }
    quot.emplace_back(e, c);
  }
  return LaurentPoly::from_terms(nv, std::move(quot));
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const Integer& c) {
  return monomial(nvars, IntVec(nvars, 0), c);
}

LaurentPoly LaurentPoly::monomial(int nvars, const IntVec& exp, const Integer& c) {
  require(static_cast<int>(exp.size()) == nvars, Errc::ArityMismatch, "exponent length");
  LaurentBuilder b(nvars);
  std::vector<int32_t> e(exp.begin(), exp.end());
  b.push(e.data(), c);
  return b.take();
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
  IntVec e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, e);
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<std::pair<IntVec, Integer>> terms) {
  for (auto& t : terms)
    require(static_cast<int>(t.first.size()) == nvars, Errc::ArityMismatch, "exponent length");
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  LaurentBuilder b(nvars);
  b.reserve(terms.size());
  std::vector<int32_t> e(nvars);
  for (auto& t : terms) {
    std::copy(t.first.begin(), t.first.end(), e.begin());
    b.push_merge(e.data(), std::move(t.second));
  }
  return b.take();
}

Integer LaurentPoly::coefficient(const IntVec& e) const {
  size_t lo = 0, hi = size();
  std::vector<int32_t> key(e.begin(), e.end());
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    int c = lex_cmp(exp(mid), key.data(), nvars_);
    if (c == 0) return coefs_[mid];
    if (c < 0) lo = mid + 1;
    else hi = mid;
  }
  return 0;
}

Integer LaurentPoly::constant_term() const { return coefficient(IntVec(nvars_, 0)); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coefs_) c = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  check_arity(a, b);
  const int nv = a.nvars();
  LaurentBuilder out(nv);
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? 1 : j == b.size() ? -1 : lex_cmp(a.exp(i), b.exp(j), nv);
    if (c < 0) {
      out.push(a.exp(i), a.coef(i));
      ++i;
    } else if (c > 0) {
      out.push(b.exp(j), b.coef(j));
      ++j;
    } else {
      out.push(a.exp(i), a.coef(i) + b.coef(j));
      ++i;
      ++j;
    }
  }
  return out.take();
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  check_arity(x, y);
  const int nv = x.nvars();
  if (x.is_zero() || y.is_zero()) return LaurentPoly(nv);
  const LaurentPoly& a = x.size() <= y.size() ? x : y;
  const LaurentPoly& b = x.size() <= y.size() ? y : x;
  if (a.size() == 1) {
    LaurentPoly r = b.shifted(a.exponent(0));
    return a.coef(0) == 1 ? r : r.scaled(a.coef(0));
  }
  IntVec lo_a = a.min_exponents(), hi_a = a.max_exponents();
  IntVec lo_b = b.min_exponents(), hi_b = b.max_exponents();
  IntVec range(nv);
  std::vector<int32_t> oa(nv), ob(nv), base(nv);
  for (int v = 0; v < nv; ++v) {
    range[v] = hi_a[v] - lo_a[v] + hi_b[v] - lo_b[v];
    oa[v] = lo_a[v];
    ob[v] = lo_b[v];
    base[v] = lo_a[v] + lo_b[v];
  }
  Packer pk(range);
  if (!pk.ok) return mul_generic(a, b);

  std::vector<Key> ka(a.size()), kb(b.size());
  for (size_t i = 0; i < a.size(); ++i) ka[i] = pk.encode(a.exp(i), oa.data());
  for (size_t j = 0; j < b.size(); ++j) kb[j] = pk.encode(b.exp(j), ob.data());

  struct Entry {
    Key key;
    uint32_t i, j;
  };
  auto cmp = [](const Entry& u, const Entry& v) { return u.key > v.key; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  for (uint32_t i = 0; i < a.size(); ++i) heap.push({ka[i] + kb[0], i, 0});

  const int bits = max_coef_bits(a) + max_coef_bits(b) + bitlen(a.size()) + 1;
  const bool fast = max_coef_bits(a) <= 62 && max_coef_bits(b) <= 62 && bits <= 126;
  std::vector<long long> ca, cb;
  if (fast) {
    for (size_t i = 0; i < a.size(); ++i) ca.push_back(a.coef(i).convert_to<long long>());
    for (size_t j = 0; j < b.size(); ++j) cb.push_back(b.coef(j).convert_to<long long>());
  }

  LaurentBuilder out(nv);
  std::vector<int32_t> e(nv);
  while (!heap.empty()) {
    Key k = heap.top().key;
    __int128 small = 0;
    Integer big = 0;
    while (!heap.empty() && heap.top().key == k) {
      Entry t = heap.top();
      heap.pop();
      if (fast) small += static_cast<__int128>(ca[t.i]) * cb[t.j];
      else big += a.coef(t.i) * b.coef(t.j);
      if (t.j + 1 < b.size()) heap.push({ka[t.i] + kb[t.j + 1], t.i, t.j + 1});
    }
    pk.decode(k, base.data(), e.data());
    if (fast) {
      if (small != 0) out.push(e.data(), from_i128(small));
    } else {
      out.push(e.data(), std::move(big));
    }
  }
  return out.take();
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return LaurentPoly(nvars_);
  LaurentPoly r = *this;
  for (auto& x : r.coefs_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const IntVec& delta) const {
  require(static_cast<int>(delta.size()) == nvars_, Errc::ArityMismatch, "shift length");
  LaurentPoly r = *this;
  for (size_t t = 0; t < size(); ++t)
    for (int v = 0; v < nvars_; ++v) r.exps_[t * nvars_ + v] += delta[v];
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  require(k >= 0, Errc::BadInput, "negative power of a polynomial");
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.exps_ != b.exps_) return a.exps_ < b.exps_;
  return a.coefs_ < b.coefs_;
}

size_t LaurentPoly::hash() const {
  size_t h = std::hash<int>()(nvars_);
  auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int32_t e : exps_) mix(std::hash<int32_t>()(e));
  for (const auto& c : coefs_) mix(std::hash<long long>()(static_cast<long long>(c % 1000000007)));
  return h;
}

IntVec LaurentPoly::min_exponents() const {
  if (is_zero()) return {};
  IntVec m(exp(0), exp(0) + nvars_);
  for (size_t t = 1; t < size(); ++t)
    for (int v = 0; v < nvars_; ++v) m[v] = std::min<int>(m[v], exp(t)[v]);
  return m;
}

IntVec LaurentPoly::max_exponents() const {
  if (is_zero()) return {};
  IntVec m(exp(0), exp(0) + nvars_);
  for (size_t t = 1; t < size(); ++t)
    for (int v = 0; v < nvars_; ++v) m[v] = std::max<int>(m[v], exp(t)[v]);
  return m;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t t = 0; t < size(); ++t) {
    Integer c = coefs_[t];
    if (t > 0) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Integer ac = c < 0 ? Integer(-c) : c;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      int e = exp(t)[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v + 1);
      if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    if (mono.empty()) os << ac;
    else if (ac == 1) os << mono;
    else os << ac << "*" << mono;
  }
  return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  check_arity(p, q);
  require(!q.is_zero(), Errc::NotDivisible, "division by zero");
  const int nv = p.nvars();
  if (p.is_zero()) return LaurentPoly(nv);
  if (q.size() == 1) {
    IntVec neg = q.exponent(0);
    for (int& x : neg) x = -x;
    LaurentPoly r = p.shifted(neg);
    if (q.coef(0) == 1) return r;
    std::vector<std::pair<IntVec, Integer>> terms;
    for (size_t t = 0; t < r.size(); ++t) {
      if (r.coef(t) % q.coef(0) != 0) fail(Errc::NotDivisible, "coefficient does not divide");
      terms.emplace_back(r.exponent(t), r.coef(t) / q.coef(0));
    }
    return LaurentPoly::from_terms(nv, std::move(terms));
  }
  IntVec lo_p = p.min_exponents(), hi_p = p.max_exponents();
  IntVec lo_q = q.min_exponents(), hi_q = q.max_exponents();
  IntVec range(nv);
  std::vector<int32_t> op(nv), oq(nv), oquot(nv), lo_box(nv), hi_box(nv);
  for (int v = 0; v < nv; ++v) {
    range[v] = hi_p[v] - lo_p[v];
    if (hi_q[v] - lo_q[v] > range[v]) fail(Errc::NotDivisible, "divisor is wider than dividend");
    op[v] = lo_p[v];
    oq[v] = lo_q[v];
    lo_box[v] = lo_p[v] - lo_q[v];
    hi_box[v] = hi_p[v] - hi_q[v];
    oquot[v] = lo_box[v];
  }
  Packer pk(range);
  if (!pk.ok) return divide_generic(p, q);

  const size_t lead = q.size() - 1;
  const Integer& lc = q.coef(lead);
  std::vector<Key> kq(q.size());
  for (size_t i = 0; i < q.size(); ++i) kq[i] = pk.encode(q.exp(i), oq.data());

  // Quotient heap: one entry per quotient term j, walking q downward from below its lead.
  struct Entry {
    Key key;
    uint32_t i, j;
  };
  auto cmp = [](const Entry& u, const Entry& v) { return u.key < v.key; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);

  std::vector<Key> kquot;
  std::vector<Integer> cquot;
  std::vector<int32_t> equot;
  std::vector<int32_t> e(nv), f(nv);
  size_t pi = p.size();  // next p term to consume is pi - 1
  std::vector<Key> kp(p.size());
  for (size_t t = 0; t < p.size(); ++t) kp[t] = pk.encode(p.exp(t), op.data());

  while (pi > 0 || !heap.empty()) {
    Key k;
    if (pi > 0 && (heap.empty() || kp[pi - 1] >= heap.top().key)) k = kp[pi - 1];
    else k = heap.top().key;
    Integer c = 0;
    if (pi > 0 && kp[pi - 1] == k) {
      c = p.coef(pi - 1);
      --pi;
    }
    while (!heap.empty() && heap.top().key == k) {
      Entry t = heap.top();
      heap.pop();
      c -= q.coef(t.i) * cquot[t.j];
      if (t.i > 0) heap.push({kq[t.i - 1] + kquot[t.j], t.i - 1, t.j});
    }
    if (c == 0) continue;
    pk.decode(k, op.data(), e.data());
    for (int v = 0; v < nv; ++v) {
      f[v] = e[v] - q.exp(lead)[v];
      if (f[v] < lo_box[v] || f[v] > hi_box[v]) fail(Errc::NotDivisible, "remainder is nonzero");
    }
    if (c % lc != 0) fail(Errc::NotDivisible, "leading coefficient does not divide");
    uint32_t j = static_cast<uint32_t>(cquot.size());
    kquot.push_back(pk.encode(f.data(), oquot.data()));
    cquot.push_back(c / lc);
    equot.insert(equot.end(), f.begin(), f.end());
    if (lead > 0) heap.push({kq[lead - 1] + kquot[j], static_cast<uint32_t>(lead - 1), j});
  }

  LaurentBuilder out(nv);
  out.reserve(cquot.size());
  for (size_t j = cquot.size(); j-- > 0;) out.push(equot.data() + j * nv, std::move(cquot[j]));
  return out.take();
}

LaurentPoly specialize_ones(const LaurentPoly& p, const std::vector<int>& vars) {
  std::vector<std::pair<IntVec, Integer>> terms;
  terms.reserve(p.size());
  for (size_t t = 0; t < p.size(); ++t) {
    IntVec e = p.exponent(t);
    for (int v : vars) e[v] = 0;
    terms.emplace_back(std::move(e), p.coef(t));
  }
  return LaurentPoly::from_terms(p.nvars(), std::move(terms));
}

LaurentPoly select_vars(const LaurentPoly& p, const std::vector<int>& vars) {
  std::vector<bool> kept(p.nvars(), false);
  for (int v : vars) kept[v] = true;
  std::vector<std::pair<IntVec, Integer>> terms;
  terms.reserve(p.size());
  for (size_t t = 0; t < p.size(); ++t) {
    for (int v = 0; v < p.nvars(); ++v)
      require(kept[v] || p.exp(t)[v] == 0, Errc::InvariantBreach, "dropped variable occurs");
    IntVec e;
    for (int v : vars) e.push_back(p.exp(t)[v]);
    terms.emplace_back(std::move(e), p.coef(t));
  }
  return LaurentPoly::from_terms(static_cast<int>(vars.size()), std::move(terms));
}

LaurentPoly embed_vars(const LaurentPoly& p, int nvars, const std::vector<int>& where) {
  std::vector<std::pair<IntVec, Integer>> terms;
  terms.reserve(p.size());
  for (size_t t = 0; t < p.size(); ++t) {
    IntVec e(nvars, 0);
    for (int v = 0; v < p.nvars(); ++v) e[where[v]] += p.exp(t)[v];
    terms.emplace_back(std::move(e), p.coef(t));
  }
  return LaurentPoly::from_terms(nvars, std::move(terms));
}

LaurentPoly substitute_monomial(const LaurentPoly& p, const std::vector<IntVec>& images) {
  require(static_cast<int>(images.size()) == p.nvars(), Errc::ArityMismatch, "image count");
  const int m = images.empty() ? 0 : static_cast<int>(images[0].size());
  std::vector<std::pair<IntVec, Integer>> terms;
  terms.reserve(p.size());
  for (size_t t = 0; t < p.size(); ++t) {
    IntVec e(m, 0);
    for (int v = 0; v < p.nvars(); ++v) {
      int a = p.exp(t)[v];
      if (a == 0) continue;
      for (int w = 0; w < m; ++w) e[w] += a * images[v][w];
    }
    terms.emplace_back(std::move(e), p.coef(t));
  }
  return LaurentPoly::from_terms(m, std::move(terms));
}

FactoredPoly substitute_factored(const LaurentPoly& p, const MonomialSub& sub) {
  require(static_cast<int>(sub.images.size()) == p.nvars() &&
              static_cast<int>(sub.factor_powers.size()) == p.nvars(),
          Errc::ArityMismatch, "substitution arity");
  const int m = sub.target_nvars();
  std::map<int, std::vector<std::pair<IntVec, Integer>>> groups;
  for (size_t t = 0; t < p.size(); ++t) {
    IntVec e(m, 0);
    int k = 0;
    for (int v = 0; v < p.nvars(); ++v) {
      int a = p.exp(t)[v];
      if (a == 0) continue;
      for (int w = 0; w < m; ++w) e[w] += a * sub.images[v][w];
      k += a * sub.factor_powers[v];
    }
    groups[k].emplace_back(std::move(e), p.coef(t));
  }
  FactoredPoly out{LaurentPoly(m), sub.factor, 0};
  if (groups.empty()) return out;
  const int kmin = groups.begin()->first;
  const int kmax = groups.rbegin()->first;
  // Horner in the factor from the highest power down.
  LaurentPoly acc(m);
  for (int k = kmax; k >= kmin; --k) {
    if (k != kmax) acc = acc * sub.factor;
    auto it = groups.find(k);
    if (it != groups.end()) acc += LaurentPoly::from_terms(m, std::move(it->second));
  }
  out.num = std::move(acc);
  out.power = kmin;
  return out;
}

LaurentPoly resolve(const FactoredPoly& f) {
  if (f.power >= 0) return f.power == 0 ? f.num : f.num * f.factor.pow(f.power);
  LaurentPoly r = f.num;
  for (int i = 0; i < -f.power; ++i) r = divide_exact(r, f.factor);
  return r;
}

LaurentPoly substitute(const LaurentPoly& p, const MonomialSub& sub) {
  return resolve(substitute_factored(p, sub));
}

bool factored_equal(const FactoredPoly& a, const FactoredPoly& b) {
  require(a.factor == b.factor, Errc::InvariantBreach, "factored values use different factors");
  const int lo = std::min(a.power, b.power);
  LaurentPoly x = a.power > lo ? a.num * a.factor.pow(a.power - lo) : a.num;
  LaurentPoly y = b.power > lo ? b.num * b.factor.pow(b.power - lo) : b.num;
  return x == y;
}

IntVec tropical_eval(const LaurentPoly& p, const std::vector<IntVec>& images) {
  require(static_cast<int>(images.size()) == p.nvars(), Errc::ArityMismatch, "image count");
  const int m = images.empty() ? 0 : static_cast<int>(images[0].size());
  IntVec best;
  for (size_t t = 0; t < p.size(); ++t) {
    IntVec e(m, 0);
    for (int v = 0; v < p.nvars(); ++v) {
      int a = p.exp(t)[v];
      if (a == 0) continue;
      for (int w = 0; w < m; ++w) e[w] += a * images[v][w];
    }
    if (t == 0) best = e;
    else
      for (int w = 0; w < m; ++w) best[w] = std::min(best[w], e[w]);
  }
  if (best.empty()) best.assign(m, 0);
  return best;
}

IntVec d_vector(const LaurentPoly& p, int nmut) {
  IntVec d(nmut, 0);
  if (p.is_zero()) return d;
  IntVec lo = p.min_exponents();
  for (int v = 0; v < nmut; ++v) d[v] = -lo[v];
  return d;
}

std::vector<IntVec> newton_support(const LaurentPoly& p) {
  std::vector<IntVec> s;
  for (size_t t = 0; t < p.size(); ++t) s.push_back(p.exponent(t));
  return s;
}

}  // namespace glsca
