#include "glsca/ccmod.hpp"
#include "glsca/cluster.hpp"
#include "glsca/error.hpp"
#include "glsca/fixtures.hpp"
#include "glsca/generic.hpp"
#include "glsca/modrep.hpp"
#include "glsca/rootsys.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace glsca;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string fixture;
  std::string input;
  std::string json_out;
  uint64_t seed = 1;
  int depth = 2;
  std::string qlist = "2,3,4,5,7,8,9";
  std::string root;
  std::string path;
  std::string gvec;
  std::string rank;
  std::string module;
  std::string f_eta;
  int oracle_dim = 10;
  int explicit_q = 5;
  bool grassmannian = false;
  bool generic = false;
};

IntVec parse_ints(const std::string& s, const std::string& what) {
  IntVec v;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" ()[]"), b = tok.find_last_not_of(" ()[]");
    if (a == std::string::npos) continue;
    try {
      size_t used = 0;
      std::string t = tok.substr(a, b - a + 1);
      v.push_back(std::stoi(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw UsageError("cannot parse " + what + " '" + s + "': expected comma-separated integers");
    }
  }
  return v;
}

/// The working triple is normalized; vectors are converted to and from the input labeling.
struct Input {
  CartanTriple original;
  CartanTriple t;
  std::vector<int> perm;  // perm[new] = old
  std::string name;

  IntVec to_new(const IntVec& v) const {
    if (static_cast<int>(v.size()) != t.n) throw UsageError("vector has length " + std::to_string(v.size()) +
                                                            ", expected " + std::to_string(t.n));
    IntVec r(t.n);
    for (int i = 0; i < t.n; ++i) r[i] = v[perm[i]];
    return r;
  }
  IntVec to_old(const IntVec& v) const {
    IntVec r(v.size());
    const int blocks = static_cast<int>(v.size()) / t.n;
    for (int b = 0; b < blocks; ++b)
      for (int i = 0; i < t.n; ++i) r[b * t.n + perm[i]] = v[b * t.n + i];
    for (size_t i = static_cast<size_t>(blocks) * t.n; i < v.size(); ++i) r[i] = v[i];
    return r;
  }
  LaurentPoly to_old(const LaurentPoly& p) const {
    std::vector<int> where(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) where[i] = i;
    for (int b = 0; (b + 1) * t.n <= p.nvars(); ++b)
      for (int i = 0; i < t.n; ++i) where[b * t.n + i] = b * t.n + perm[i];
    return embed_vars(p, p.nvars(), where);
  }
};

CartanTriple triple_from_json(const json& j) {
  try {
    IntMatrix C = j.at("cartan").get<IntMatrix>();
    IntVec D = j.at("symmetrizer").get<IntVec>();
    std::vector<std::pair<int, int>> omega;
    for (const auto& p : j.at("orientation")) {
      auto v = p.get<IntVec>();
      if (v.size() != 2) throw UsageError("orientation entries must be pairs [i, j]");
      omega.emplace_back(v[0] - 1, v[1] - 1);
    }
    return validate(C, D, omega);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed triple JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("invalid JSON in '" + path + "': " + e.what());
  }
}

Input load_input(const Options& o) {
  if (o.fixture.empty() == o.input.empty()) throw UsageError("give exactly one of --fixture NAME or --input FILE");
  Input in;
  if (!o.fixture.empty()) {
    in.original = fixture(o.fixture);
    in.name = o.fixture;
  } else {
    in.original = triple_from_json(read_json_file(o.input));
    in.name = o.input;
  }
  Normalized nz = normalize(in.original);
  in.t = nz.triple;
  in.perm = nz.perm;
  return in;
}

std::vector<std::string> names(const std::string& base, int n) {
  std::vector<std::string> r;
  for (int i = 0; i < n; ++i) r.push_back(base + std::to_string(i + 1));
  return r;
}

json poly_json(const LaurentPoly& p, const std::vector<std::string>& vars) {
  json terms = json::array();
  for (size_t s = 0; s < p.size(); ++s) terms.push_back({p.exponent(s), p.coef(s).str()});
  return {{"text", p.str(vars)}, {"terms", terms}};
}

std::vector<std::string> x_names(int n, int m) {
  auto v = names("x", n);
  for (int j = n; j < m; ++j) v.push_back("y" + std::to_string(j - n + 1));
  return v;
}

json triple_json(const Input& in) {
  const CartanTriple& t = in.original;
  json omega = json::array();
  for (auto [i, j] : t.omega) omega.push_back({i + 1, j + 1});
  json perm = json::array();
  for (int p : in.perm) perm.push_back(p + 1);
  json out = {{"name", in.name}, {"n", t.n},   {"cartan", t.C},         {"symmetrizer", t.D},
              {"orientation", omega}, {"B", t.B}, {"kind", kind_name(t.kind)}, {"relabeling", perm}};
  return out;
}

LaurentPoly poly_from_json(const json& j, int nvars) {
  std::vector<std::pair<IntVec, Integer>> terms;
  try {
    for (const auto& term : j) {
      IntVec e = term.at(0).get<IntVec>();
      if (static_cast<int>(e.size()) != nvars) throw UsageError("polynomial exponent has the wrong length");
      Integer c(term.at(1).is_string() ? term.at(1).get<std::string>() : std::to_string(term.at(1).get<long long>()));
      terms.emplace_back(e, c);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("polynomial must be a list of [exponent, coefficient] pairs: ") + e.what());
  }
  return LaurentPoly::from_terms(nvars, std::move(terms));
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opt;
  opt.qlist = parse_ints(o.qlist, "--qlist");
  for (int q : opt.qlist)
    if (!GF::supported(q)) throw UsageError("unsupported field size " + std::to_string(q) + " in --qlist");
  opt.seed = o.seed;
  opt.max_total_dim = o.oracle_dim;
  return opt;
}

int total_dim(const CartanTriple& t, const RootVec& r) {
  int s = 0;
  for (int i = 0; i < t.n; ++i) s += t.D[i] * r[i];
  return s;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Result {
  json report;
  bool ok = true;
};

Result cmd_classify(const Input& in) {
  Result r;
  r.report = triple_json(in);
  if (in.t.kind == Kind::Affine) {
    r.report["null_root"] = in.to_old(null_root(in.t));
    json adm = json::array();
    for (int k = 0; k < in.t.n; ++k)
      if (is_admissible_vertex(in.t, k)) adm.push_back(in.perm[k] + 1);
    r.report["admissible_extended_vertices"] = adm;
  }
  std::cerr << in.name << ": " << kind_name(in.t.kind) << " type, rank " << in.t.n << "\n";
  return r;
}

Result cmd_roots(const Input& in, const Options& o) {
  Result r;
  json roots = json::array();
  auto list = enumerate_real_schur(in.t, o.depth);
  for (const auto& lr : list) roots.push_back({{"label", lr.label.str()}, {"root", in.to_old(lr.root)}});
  json tubes = json::array();
  if (in.t.n >= 3) {
    TubeFamily fam = build_tubes(in.t);
    for (const auto& tube : fam.tubes) {
      json levels = json::array();
      for (const auto& lvl : tube.levels) {
        json row = json::array();
        for (const auto& x : lvl) row.push_back(in.to_old(x));
        levels.push_back(row);
      }
      tubes.push_back({{"period", tube.period}, {"levels", levels}});
    }
  }
  r.report = {{"triple", triple_json(in)}, {"depth", o.depth}, {"roots", roots}, {"tubes", tubes}};
  std::cerr << list.size() << " real Schur roots to depth " << o.depth << ", " << tubes.size() << " tube(s)\n";
  return r;
}

json datum_json(const Input& in, const CCDatum& d) {
  auto M = principal_extension(d.triple.B);
  return {{"label", d.label},
          {"rank", in.to_old(d.rank)},
          {"g", in.to_old(d.g)},
          {"F", poly_json(in.to_old(d.F), names("y", in.t.n))},
          {"cc_function", poly_json(in.to_old(cc_function(d, M)), x_names(in.t.n, 2 * in.t.n))}};
}

Result cmd_ccvar(const Input& in, const Options& o) {
  Result r;
  if (o.root.empty() == o.path.empty()) throw UsageError("ccvar needs exactly one of --root LABEL or --path 1,2,...");
  if (!o.root.empty()) {
    SchurRootLabel label = SchurRootLabel::parse(o.root);
    CCDatum d = build_for_label(in.t, label);
    r.report = datum_json(in, d);
    std::cerr << label.str() << ": rank " << to_string(in.to_old(d.rank)) << "\n";
    return r;
  }
  IntVec path = parse_ints(o.path, "--path");
  if (path.empty()) throw UsageError("--path must name at least one vertex");
  std::vector<int> p;
  for (int k : path) {
    if (k < 1 || k > in.t.n) throw UsageError("path vertex " + std::to_string(k) + " out of range");
    int kn = static_cast<int>(std::find(in.perm.begin(), in.perm.end(), k - 1) - in.perm.begin());
    p.push_back(kn);
  }
  auto M = principal_extension(in.t.B);
  Seed s = mutate_path(initial_seed(M), p);
  const LaurentPoly& x = s.vars[p.back()];
  PrincipalData pd = principal_data(x, in.t.B);
  r.report = {{"path", path},
              {"x", poly_json(in.to_old(x), x_names(in.t.n, 2 * in.t.n))},
              {"F", poly_json(in.to_old(pd.F), names("y", in.t.n))},
              {"g", in.to_old(pd.g)},
              {"d", in.to_old(pd.d)},
              {"h", in.to_old(pd.h)}};
  if (in.t.kind == Kind::Affine && is_positive(pd.d)) {
    for (const auto& lr : enumerate_real_schur(in.t, 12)) {
      if (lr.root != pd.d) continue;
      CCDatum d = build_for_label(in.t, lr.label);
      bool eq = cc_function(d, M) == x;
      r.report["label"] = lr.label.str();
      r.report["matches_cc_function"] = eq;
      r.ok = eq;
      break;
    }
  }
  std::cerr << "d-vector " << to_string(in.to_old(pd.d)) << (r.ok ? "" : " MISMATCH") << "\n";
  return r;
}

Result cmd_explore(const Input& in, const Options& o) {
  Result r;
  ExploreResult ex = bfs_explore(in.t.B, o.depth);
  json vars = json::array();
  for (const auto& [d, v] : ex.by_d) {
    json path = json::array();
    for (int k : v.path) path.push_back(in.perm[k] + 1);
    vars.push_back({{"d", in.to_old(d)},
                    {"g", in.to_old(v.data.g)},
                    {"F", poly_json(in.to_old(v.data.F), names("y", in.t.n))},
                    {"path", path}});
  }
  r.report = {{"depth", o.depth}, {"seeds", ex.seeds}, {"mutations", ex.mutations}, {"variables", vars}};
  std::cerr << ex.by_d.size() << " variables in " << ex.seeds << " seeds\n";
  return r;
}

Result cmd_verify(const Input& in, const Options& o) {
  Result r;
  require(in.t.kind == Kind::Affine, Errc::NotAffine, "verify sweeps are implemented for affine type only");
  OracleOptions opt = oracle_options(o);
  auto roots = enumerate_real_schur(in.t, o.depth);
  std::vector<IntVec> targets;
  for (const auto& lr : roots) targets.push_back(lr.root);
  auto t0 = std::chrono::steady_clock::now();
  ExploreResult ex = bfs_explore(in.t.B, 8 * in.t.n + 4 * o.depth, targets);
  const double explore_ms = ms_since(t0);
  auto M = principal_extension(in.t.B);
  ReflectionLog log;
  json records = json::array();
  size_t equal = 0, oracle_runs = 0, oracle_equal = 0, oracle_skipped = 0;
  for (const auto& lr : roots) {
    auto t1 = std::chrono::steady_clock::now();
    CCDatum d = build_for_label(in.t, lr.label, &log);
    json rec = {{"label", lr.label.str()}, {"rank", in.to_old(lr.root)}};
    rec["F_module"] = in.to_old(d.F).str(names("y", in.t.n));
    rec["g_module"] = in.to_old(d.g);
    bool eq = false;
    auto it = ex.by_d.find(lr.root);
    if (it != ex.by_d.end()) {
      rec["F_cluster"] = in.to_old(it->second.data.F).str(names("y", in.t.n));
      rec["g_cluster"] = in.to_old(it->second.data.g);
      eq = cc_function(d, M) == it->second.x && d.F == it->second.data.F && d.g == it->second.data.g;
    } else {
      rec["F_cluster"] = nullptr;
    }
    rec["equal"] = eq;
    if (o.oracle_dim > 0 && total_dim(in.t, lr.root) <= o.oracle_dim) {
      try {
        LaurentPoly F =
            f_poly_oracle([&](int q) { return module_for_label(in.t, lr.label, q); }, in.t, lr.root, opt);
        rec["oracle_equal"] = F == d.F;
        ++oracle_runs;
        if (F == d.F) ++oracle_equal;
        else eq = false;
      } catch (const Error& e) {
        if (e.code() != Errc::TooLarge) throw;
        rec["oracle_equal"] = "skipped: submodule enumeration budget";
        ++oracle_skipped;
      }
    }
    rec["ms"] = ms_since(t1);
    if (eq) ++equal;
    records.push_back(rec);
  }
  r.ok = equal == roots.size();
  r.report = {{"triple", triple_json(in)},
              {"config", {{"depth", o.depth}, {"qlist", opt.qlist}, {"oracle_dim", o.oracle_dim}, {"seed", o.seed}}},
              {"records", records},
              {"summary",
               {{"roots", roots.size()},
                {"equal", equal},
                {"oracle_comparisons", oracle_runs},
                {"oracle_equal", oracle_equal},
                {"oracle_skipped", oracle_skipped},
                {"reflections", log.reflections},
                {"reflection_identities", log.identities},
                {"explore_ms", explore_ms}}}};
  std::cerr << equal << "/" << roots.size() << " roots equal, " << oracle_equal << "/" << oracle_runs
            << " oracle comparisons equal, " << log.identities << " reflection identities\n";
  return r;
}

LaurentPoly resolve_f_eta(const Input& in, const Options& o, json& report) {
  if (!o.f_eta.empty()) {
    LaurentPoly F = poly_from_json(json::parse(o.f_eta), in.t.n);
    std::vector<int> inv(in.t.n);
    for (int i = 0; i < in.t.n; ++i) inv[in.perm[i]] = i;
    report["f_eta_source"] = "user";
    return embed_vars(F, in.t.n, inv);
  }
  OracleOptions opt = oracle_options(o);
  opt.max_total_dim = std::max(opt.max_total_dim, total_dim(in.t, null_root(in.t)));
  report["f_eta_source"] = "sampled";
  return generic_f_poly(in.t, null_root(in.t), opt);
}

Result cmd_generic(const Input& in, const Options& o) {
  Result r;
  if (o.gvec.empty()) throw UsageError("generic needs --gvec");
  IntVec g = parse_ints(o.gvec, "--gvec");
  const int n = in.t.n;
  if (static_cast<int>(g.size()) != n && static_cast<int>(g.size()) != 2 * n)
    throw UsageError("--gvec must have n entries (no coefficients) or 2n entries (principal coefficients)");
  IntVec gn(g.size());
  for (size_t b = 0; b < g.size(); b += n) {
    IntVec part = in.to_new(IntVec(g.begin() + b, g.begin() + b + n));
    std::copy(part.begin(), part.end(), gn.begin() + b);
  }
  json rep = {{"triple", triple_json(in)}, {"seed", o.seed}};
  GenericBasis basis(in.t, resolve_f_eta(in, o, rep), o.explicit_q);
  ExtendedExchangeMatrix M = static_cast<int>(g.size()) == n ? make_matrix(in.t.B, n) : principal_extension(in.t.B);
  GenericCC x = basis.generic_cc(gn, M);
  const CanonicalDecomposition& dec = basis.decompose(positive_part(x.v));
  json parts = json::array();
  for (const auto& [lr, a] : dec.parts)
    parts.push_back({{"label", lr.label.str()}, {"root", in.to_old(lr.root)}, {"multiplicity", a}});
  rep["g_ext"] = g;
  rep["v"] = in.to_old(x.v);
  rep["decomposition"] = {{"m", dec.m}, {"parts", parts}};
  rep["f_eta"] = poly_json(in.to_old(basis.f_eta()), names("y", n));
  rep["F"] = poly_json(in.to_old(x.F), names("y", n));
  rep["X"] = poly_json(in.to_old(x.X), x_names(n, M.m));
  if (M.full_rank()) {
    PointedWalk w = compatibly_pointed_check(x.X, gn, M);
    json gs = json::array();
    for (const auto& v : w.g) gs.push_back(in.to_old(v));
    rep["compatibly_pointed"] = {{"ok", w.ok}, {"failed_seed", w.failed_seed}, {"reason", w.failed}, {"g", gs}};
    r.ok = w.ok;
  } else {
    rep["compatibly_pointed"] = nullptr;
  }
  r.report = rep;
  std::cerr << "v = " << to_string(in.to_old(x.v)) << ", " << x.X.size() << " terms"
            << (r.ok ? "" : ", compatibly pointed check FAILED") << "\n";
  return r;
}

Result cmd_decompose(const Input& in, const Options& o) {
  Result r;
  if (o.rank.empty()) throw UsageError("decompose needs --rank");
  RootVec rank = in.to_new(parse_ints(o.rank, "--rank"));
  GenericBasis basis(in.t, LaurentPoly::constant(in.t.n, 1), o.explicit_q);
  const CanonicalDecomposition& d = basis.decompose(rank);
  json parts = json::array();
  for (const auto& [lr, a] : d.parts)
    parts.push_back({{"label", lr.label.str()}, {"root", in.to_old(lr.root)}, {"multiplicity", a}});
  r.report = {{"m", d.m}, {"parts", parts}, {"ext_tests", basis.ext_tests()}};
  std::cerr << "m = " << d.m << ", " << d.parts.size() << " rigid part(s)\n";
  return r;
}

uint8_t to_field(const GF& F, long long a) {
  uint8_t x = 0;
  long long k = ((a % F.p()) + F.p()) % F.p();
  for (long long i = 0; i < k; ++i) x = F.add(x, 1);
  return x;
}

Result cmd_oracle(const Input& in, const Options& o) {
  Result r;
  OracleOptions opt = oracle_options(o);
  const int given = !o.module.empty() + !o.root.empty() + o.generic;
  if (given != 1) throw UsageError("oracle needs exactly one of --module FILE, --root LABEL or --generic --rank R");
  std::function<FqModule(int)> family;
  RootVec rank;
  std::optional<LaurentPoly> expected;
  if (!o.module.empty()) {
    json j = read_json_file(o.module);
    std::vector<std::vector<std::vector<IntVec>>> raw;
    try {
      rank = in.to_new(j.at("rank").get<IntVec>());
      raw = j.at("structure").get<decltype(raw)>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed module JSON: ") + e.what());
    }
    if (!is_normalized(in.original)) throw UsageError("module files need a normalized triple (pairs (i,j) with i < j)");
    family = [&, raw](int q) {
      const GF& F = GF::get(q);
      std::vector<HMatrix> S;
      for (const auto& m : raw) {
        HMatrix h;
        for (const auto& row : m) {
          std::vector<HElem> hr;
          for (const auto& e : row) {
            HElem x;
            for (int c : e) x.push_back(to_field(F, c));
            hr.push_back(x);
          }
          h.push_back(hr);
        }
        S.push_back(h);
      }
      return make_module(in.t, rank, S, q);
    };
  } else if (!o.root.empty()) {
    SchurRootLabel label = SchurRootLabel::parse(o.root);
    CCDatum d = build_for_label(in.t, label);
    rank = d.rank;
    expected = d.F;
    family = [&, label](int q) { return module_for_label(in.t, label, q); };
  } else {
    if (o.rank.empty()) throw UsageError("--generic needs --rank");
    rank = in.to_new(parse_ints(o.rank, "--rank"));
  }
  LaurentPoly F = o.generic ? generic_f_poly(in.t, rank, opt) : f_poly_oracle(family, in.t, rank, opt);
  r.report = {{"rank", in.to_old(rank)},
              {"F", poly_json(in.to_old(F), names("y", in.t.n))},
              {"qlist", opt.qlist},
              {"seed", o.seed}};
  if (o.grassmannian && family) {
    json counts = json::object();
    for (int q : opt.qlist) {
      FqModule Mq = family(q);
      json per = json::array();
      RootVec e(rank.size(), 0);
      for (;;) {
        per.push_back({{"e", in.to_old(e)}, {"count", count_submodules(Mq, e)}});
        size_t i = 0;
        while (i < e.size() && ++e[i] > rank[i]) e[i++] = 0;
        if (i == e.size()) break;
      }
      counts[std::to_string(q)] = per;
    }
    r.report["grassmannian_counts"] = counts;
  }
  if (expected) {
    r.ok = F == *expected;
    r.report["recurrence_F"] = poly_json(in.to_old(*expected), names("y", in.t.n));
    r.report["equal"] = r.ok;
  }
  std::cerr << "F = " << in.to_old(F).str(names("y", in.t.n)) << (r.ok ? "" : "  (differs from the recurrence)")
            << "\n";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GLS algebras, cluster variables and generic bases of affine type"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--fixture", o.fixture, "built-in triple: b3tilde, kronecker, a2tilde, c2tilde, a12");
    s->add_option("--input", o.input, "triple JSON {cartan, symmetrizer, orientation}, 1-based pairs");
    s->add_option("--json", o.json_out, "also write the JSON report to this file");
    s->add_option("--seed", o.seed, "seed of the random generator");
  };
  auto* classify = app.add_subcommand("classify", "validate and classify a triple");
  auto* roots = app.add_subcommand("roots", "real Schur roots and tubes");
  auto* ccvar = app.add_subcommand("ccvar", "CC data of a root label or a cluster variable of a mutation path");
  auto* explore = app.add_subcommand("explore", "breadth-first search of cluster variables");
  auto* verify = app.add_subcommand("verify", "compare CC functions, cluster variables and the point-count oracle");
  auto* generic = app.add_subcommand("generic", "generic CC function of an extended g-vector");
  auto* decompose = app.add_subcommand("decompose", "canonical decomposition of a rank vector");
  auto* oracle = app.add_subcommand("oracle", "F-polynomial from quiver Grassmannian point counts");
  for (auto* s : {classify, roots, ccvar, explore, verify, generic, decompose, oracle}) common(s);
  for (auto* s : {roots, explore, verify}) s->add_option("--depth", o.depth, "orbit or mutation depth");
  for (auto* s : {verify, generic, oracle}) s->add_option("--qlist", o.qlist, "fields for point counts, e.g. 2,3,5");
  ccvar->add_option("--root", o.root, "label P(l,r), I(l,r) or T(i,level,slot), 1-based");
  ccvar->add_option("--path", o.path, "mutation path from the initial seed, e.g. 1,2,1");
  verify->add_option("--oracle-dim", o.oracle_dim, "largest total dimension sent to the oracle (0 disables)");
  generic->add_option("--gvec", o.gvec, "extended g-vector, n or 2n entries");
  generic->add_option("--f-eta", o.f_eta, "null-root F-polynomial as JSON [[exponent, coefficient], ...]");
  for (auto* s : {generic, decompose}) s->add_option("--ext-field", o.explicit_q, "field of the Ext tests");
  decompose->add_option("--rank", o.rank, "rank vector");
  oracle->add_option("--module", o.module, "module JSON {rank, structure}");
  oracle->add_option("--root", o.root, "use the explicit module of this root label");
  oracle->add_option("--rank", o.rank, "rank vector for --generic");
  oracle->add_flag("--generic", o.generic, "sample random modules of the given rank");
  oracle->add_flag("--grassmannian", o.grassmannian, "also print the submodule counts per field");
  oracle->add_option("--max-dim", o.oracle_dim, "largest total dimension accepted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    Input in = load_input(o);
    Result r;
    if (*classify) r = cmd_classify(in);
    else if (*roots) r = cmd_roots(in, o);
    else if (*ccvar) r = cmd_ccvar(in, o);
    else if (*explore) r = cmd_explore(in, o);
    else if (*verify) r = cmd_verify(in, o);
    else if (*generic) r = cmd_generic(in, o);
    else if (*decompose) r = cmd_decompose(in, o);
    else r = cmd_oracle(in, o);
    r.report["ok"] = r.ok;
    std::cout << r.report.dump(2) << "\n";
    if (!o.json_out.empty()) {
      std::ofstream out(o.json_out);
      if (!out) throw UsageError("cannot write '" + o.json_out + "'");
      out << r.report.dump(2) << "\n";
    }
    return r.ok ? 0 : kExitMismatch;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInput : kExitInternal;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
