#include "modrep/suite.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>

#include "json.hpp"

namespace modrep {

namespace {

using json = nlohmann::json;

struct PermFamily {
  std::size_t points;
  std::vector<std::vector<std::vector<std::size_t>>> gens;  // each generator as cycles
};

const std::map<std::string, PermFamily>& perm_families() {
  static const std::map<std::string, PermFamily> fam{
      {"C1", {1, {}}},
      {"C2", {2, {{{0, 1}}}}},
      {"C3", {3, {{{0, 1, 2}}}}},
      {"C4", {4, {{{0, 1, 2, 3}}}}},
      {"S3", {3, {{{0, 1, 2}}, {{0, 1}}}}},
      {"S4", {4, {{{0, 1, 2, 3}}, {{0, 1}}}}},
      {"A4", {4, {{{0, 1, 2}}, {{1, 2, 3}}}}},
      {"V4", {4, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}}},
      {"D8", {4, {{{0, 1, 2, 3}}, {{0, 2}}}}},
      {"C3xS3", {6, {{{0, 1, 2}}, {{0, 1}}, {{3, 4, 5}}}}},
  };
  return fam;
}

std::vector<std::size_t> from_cycles(const std::vector<std::vector<std::size_t>>& cycles, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) perm[c[i]] = c[(i + 1) % c.size()];
  return perm;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

// Entries are integers (reduced mod p) or coefficient lists in the power
// basis of the field's modulus.
Matrix matrix_from_json(const FieldPtr& f, const json& rows) {
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::InvalidInput, "matrix must be a non-empty list of rows");
  const std::size_t n = rows.size();
  Matrix m(f, n, rows[0].size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m.cols()) throw Error(ErrorKind::InvalidInput, "ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const json& e = rows[i][j];
      if (e.is_number_integer()) {
        m(i, j) = f->from_int(e.get<std::int64_t>());
      } else if (e.is_array()) {
        std::vector<std::uint32_t> c;
        for (const auto& x : e) c.push_back(f->from_int(x.get<std::int64_t>()));
        c.resize(f->k(), 0);
        m(i, j) = f->from_coeffs(c);
      } else {
        throw Error(ErrorKind::InvalidInput, "matrix entries must be integers or coefficient lists");
      }
    }
  }
  return m;
}

std::string key_of(const SuiteSpec& s, const MeataxeOptions& o) {
  return s.g + "|" + s.n + "|" + std::to_string(s.p) + "|" + std::to_string(o.seed) + "|" + std::to_string(o.budget) +
         "|" + std::to_string(o.max_word);
}

// Pairs and contexts are shared between the drivers within a process.
struct CachedPair {
  GroupPair pair;
  CliffordContext ctx;
};

CachedPair cached_pair(const SuiteSpec& spec, const MeataxeOptions& opts) {
  static std::mutex mu;
  static std::map<std::string, CachedPair> cache;
  const std::string key = key_of(spec, opts);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  CachedPair c;
  c.pair = make_group_pair(spec.g, spec.n, spec.p);
  c.ctx = make_clifford_context(c.pair.g, c.pair.n, spec.p, opts);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(c)).first->second;
}

Check make_check(std::string clause, bool passed, std::string detail = {}) {
  return Check{std::move(clause), passed, std::move(detail)};
}

std::string num(std::size_t x) { return std::to_string(x); }

std::string pair_label(const SuiteSpec& s) { return s.g + "/" + s.n + " p=" + std::to_string(s.p); }

}  // namespace

GroupPtr make_group(const std::string& desc, std::uint32_t p, std::size_t degree) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (desc == "SL2") return make_SL2(p);
  if (desc == "GL2") return make_GL2(p);
  if (desc.rfind("file:", 0) == 0) {
    const std::string path = desc.substr(5);
    const json j = read_json(path);
    const json& gens = j.is_object() ? j.at("generators") : j;
    const std::uint32_t fp = j.is_object() && j.contains("p") ? j.at("p").get<std::uint32_t>() : p;
    if (fp != p) throw Error(ErrorKind::IncompatibleFields, path + " is over F_" + std::to_string(fp));
    const FieldPtr f = make_field(p, 1);
    std::vector<Matrix> mats;
    for (const auto& g : gens) mats.push_back(matrix_from_json(f, g));
    if (mats.empty()) throw Error(ErrorKind::InvalidInput, path + ": no generators");
    const std::string name = j.is_object() && j.contains("name") ? j.at("name").get<std::string>() : path;
    return Group::generate(mats, name);
  }
  const auto& fam = perm_families();
  auto it = fam.find(desc);
  if (it == fam.end()) throw Error(ErrorKind::InvalidInput, "unknown group '" + desc + "'");
  const std::size_t n = std::max(it->second.points, degree);
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& g : it->second.gens) perms.push_back(from_cycles(g, n));
  return make_from_permutations(perms, n, p, desc);
}

GroupPair make_group_pair(const std::string& g_desc, const std::string& n_desc, std::uint32_t p) {
  GroupPair pair;
  pair.p = p;
  pair.g = make_group(g_desc, p);
  pair.n = n_desc == g_desc ? pair.g : make_group(n_desc, p, pair.g->degree());
  if (!is_subgroup(*pair.g, *pair.n)) throw Error(ErrorKind::NotASubgroup, n_desc + " in " + g_desc);
  if (!is_normal(*pair.g, *pair.n)) throw Error(ErrorKind::NotNormal, n_desc + " is not normal in " + g_desc);
  pair.label = g_desc + "/" + n_desc + " p=" + std::to_string(p);
  return pair;
}

const std::vector<SuiteSpec>& suite_pairs() {
  static const std::vector<SuiteSpec> pairs{
      {"GL2", "SL2", 3}, {"GL2", "SL2", 5}, {"S4", "A4", 2},      {"A4", "V4", 2},
      {"A4", "V4", 3},   {"D8", "C4", 2},   {"C3xS3", "S3", 3},
  };
  return pairs;
}

Representation make_representation(const std::string& desc, const GroupPtr& g, std::uint32_t p, bool allow_reducible,
                                   const std::vector<Representation>* irreducibles) {
  auto parts = [&](std::size_t expected) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= desc.size(); ++i) {
      if (i == desc.size() || desc[i] == ':') {
        out.push_back(desc.substr(start, i - start));
        start = i + 1;
      }
    }
    if (out.size() != expected) throw Error(ErrorKind::InvalidInput, "malformed representation '" + desc + "'");
    return out;
  };
  auto to_uint = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
      throw Error(ErrorKind::InvalidInput, "expected a non-negative integer in '" + desc + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  if (desc == "trivial") return trivial_rep(g, make_field(p, 1));
  if (desc == "natural") {
    if (g->field()->p() != p) throw Error(ErrorKind::IncompatibleFields, "natural module is not in characteristic p");
    return natural_rep(g, g->field());
  }
  if (desc.rfind("polkr:", 0) == 0) {
    const auto v = parts(3);
    if (g != make_GL2(p)) throw Error(ErrorKind::GroupMismatch, "polkr needs the group GL2");
    return pol_k_r(p, to_uint(v[1]), to_uint(v[2]), allow_reducible);
  }
  if (desc.rfind("polk:", 0) == 0) {
    const auto v = parts(2);
    if (g != make_SL2(p)) throw Error(ErrorKind::GroupMismatch, "polk needs the group SL2");
    return pol_k(p, to_uint(v[1]), allow_reducible);
  }
  if (desc.rfind("irr:", 0) == 0) {
    const auto v = parts(2);
    if (!irreducibles) throw Error(ErrorKind::InvalidInput, "irr:<i> needs an enumerated list");
    const unsigned i = to_uint(v[1]);
    if (i >= irreducibles->size()) throw Error(ErrorKind::InvalidInput, "only " + num(irreducibles->size()) + " irreducibles");
    return (*irreducibles)[i];
  }
  if (desc.rfind("file:", 0) == 0) {
    const std::string path = desc.substr(5);
    const json j = read_json(path);
    const std::uint32_t fp = j.value("p", p);
    if (fp != p) throw Error(ErrorKind::IncompatibleFields, path + " is in characteristic " + std::to_string(fp));
    const unsigned k = j.value("k", 1u);
    const FieldPtr f = ladder_field(p, k);
    std::vector<Matrix> gens;
    for (const auto& m : j.at("generators")) gens.push_back(matrix_from_json(f, m));
    return Representation::from_generator_images(g, f, std::move(gens), j.value("label", path));
  }
  throw Error(ErrorKind::InvalidInput, "unknown representation '" + desc + "'");
}

// ---------------------------------------------------------------------------

bool PairVerification::passed() const {
  return all_passed(checks) && std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

PairVerification verify_pair(const SuiteSpec& spec, const MeataxeOptions& opts) {
  auto cached = cached_pair(spec, opts);
  PairVerification v;
  v.pair = cached.pair;
  v.ctx = std::move(cached.ctx);
  CliffordContext& ctx = v.ctx;
  v.orbit_reps = orbit_representatives(ctx);
  for (std::size_t i = 0; i < ctx.irr_n.size(); ++i) v.reports.push_back(clifford_correspondence(ctx.irr_n[i], ctx));

  // Reciprocity in both directions on every (theta, sigma).
  bool nak = true;
  std::string nak_detail;
  for (const auto& sigma : ctx.irr_n) {
    const Representation ind = induce(sigma, ctx.g);
    for (const auto& theta : ctx.irr_g) {
      const Representation res = restrict(theta, ctx.n);
      const auto a = hom_dim(theta, ind), b = hom_dim(res, sigma);
      const auto c = hom_dim(ind, theta), d = hom_dim(sigma, res);
      if (a != b || c != d) {
        nak = false;
        nak_detail += theta.label() + "/" + sigma.label() + " ";
      }
    }
  }
  v.checks.push_back(make_check("reciprocity", nak,
                                nak ? num(ctx.irr_g.size() * ctx.irr_n.size()) + " pairs" : "fails for " + nak_detail));

  // G-hat(sigma) over orbit representatives partitions G-hat.
  std::vector<std::size_t> hits(ctx.irr_g.size(), 0);
  for (std::size_t r : v.orbit_reps)
    for (std::size_t t : v.reports[r].ghat) ++hits[t];
  const bool partition = std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
  v.checks.push_back(make_check("partition", partition,
                                num(v.orbit_reps.size()) + " orbits, " + num(ctx.irr_g.size()) + " irreducibles of G"));

  v.notes.push_back(ctx.n->name() + " has " + num(ctx.irr_n.size()) + " irreducibles, " + ctx.g->name() + " has " +
                    num(ctx.irr_g.size()) + ", over " + ctx.field->name());
  return v;
}

GreenVerification verify_green(const SuiteSpec& spec, const MeataxeOptions& opts) {
  auto cached = cached_pair(spec, opts);
  const CliffordContext& ctx = cached.ctx;
  GreenVerification out;
  for (const auto& sigma : ctx.irr_n) {
    std::optional<Representation> theta;
    for (const auto& t : ctx.irr_g) {
      if (t.degree() == sigma.degree() && isomorphic(restrict(t, ctx.n), sigma, opts.seed)) {
        theta = t;
        break;
      }
    }
    out.sigma_labels.push_back(sigma.label());
    if (!theta) {
      out.checks.push_back(make_check("green-extension-exists[" + sigma.label() + "]", false, "no theta restricts to sigma"));
      continue;
    }
    auto rec = green_verify(ctx.g, ctx.n, *theta, ctx.p, ctx.irr_g, opts);
    for (const auto& c : rec.checks) out.checks.push_back(make_check(c.clause + "[" + sigma.label() + "]", c.passed, c.detail));
    out.records.push_back(std::move(rec));
  }
  return out;
}

ExtensionLog run_extension_experiments(const MeataxeOptions& opts) {
  ExtensionLog log;
  for (const auto& spec : suite_pairs()) {
    auto cached = cached_pair(spec, opts);
    const CliffordContext& ctx = cached.ctx;
    for (const auto& sigma : ctx.irr_n) {
      for (auto which : {ExtensionCase::CyclicQuotient, ExtensionCase::CoprimeIndex}) {
        try {
          const auto r = extension_search(sigma, ctx, which);
          ++log.attempted;
          if (r.theta) ++log.found;
          log.lines.push_back("p=" + std::to_string(spec.p) + ": " + r.log);
          log.outcomes.push_back(r.theta.has_value());
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::HypothesisViolation) throw;
        }
      }
    }
  }
  return log;
}

// ---------------------------------------------------------------------------

bool SuiteSummary::passed() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); });
}

SuiteSummary run_suite(const std::string& which, const MeataxeOptions& opts) {
  if (which != "paper" && which != "quick") throw Error(ErrorKind::InvalidInput, "unknown suite '" + which + "'");
  const bool quick = which == "quick";
  SuiteSummary s;
  s.suite = which;

  const auto tables = emit_paper_tables(opts);
  s.entries.push_back({"tables",
                       {make_check("table-1", tables.cmp1.matches, num(tables.cmp1.diffs.size()) + " differing cells"),
                        make_check("table-2", tables.cmp2.matches,
                                   num(tables.cmp2.diffs.size()) + " differing cells" +
                                       (tables.cmp2.galois_twist ? ", Galois-conjugate rows exchanged" : "")),
                        make_check("induction-identities", tables.induction_ok, "")}});

  for (std::uint32_t p : quick ? std::vector<std::uint32_t>{3} : std::vector<std::uint32_t>{3, 5}) {
    s.entries.push_back({"polynomial-family p=" + std::to_string(p), verify_section2(p, opts).checks});
  }

  for (const auto& spec : suite_pairs()) {
    if (quick && !(spec.g == "GL2" && spec.p == 3)) continue;
    auto v = verify_pair(spec, opts);
    SuiteEntry e{"clifford " + pair_label(spec), v.checks};
    for (std::size_t i = 0; i < v.reports.size(); ++i) {
      for (const auto& c : v.reports[i].checks) {
        e.checks.push_back(make_check(c.clause + "[" + v.reports[i].sigma_label + "]", c.passed, c.detail));
      }
    }
    for (auto& n : v.notes) s.notes.push_back(pair_label(spec) + ": " + n);
    s.entries.push_back(std::move(e));
  }
  if (quick) return s;

  const SuiteSpec green{"C3xS3", "S3", 3};
  s.entries.push_back({"green " + pair_label(green), verify_green(green, opts).checks});

  const auto ext = run_extension_experiments(opts);
  SuiteEntry experiments{"extension-experiments", {}};
  for (std::size_t i = 0; i < ext.lines.size(); ++i) {
    experiments.checks.push_back(make_check("extension-found", ext.outcomes[i], ext.lines[i]));
  }
  if (ext.lines.empty()) experiments.checks.push_back(make_check("extension-found", false, "no sigma met a hypothesis"));
  s.entries.push_back(std::move(experiments));
  return s;
}

}  // namespace modrep
