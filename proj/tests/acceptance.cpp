// Acceptance criteria 1-12. One line per criterion:
//   PASS|FAIL  <n>  <name>  <seconds>s/<limit>s  <detail>
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "modrep/cli.hpp"
#include "modrep/report.hpp"

using namespace modrep;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitTable1 = 5;
constexpr double kLimitTable2 = 10;
constexpr double kLimitInduction = 10;
constexpr double kLimitPolFamily = 60;
constexpr double kLimitTwisted = 120;
constexpr double kLimitIdentities = 60;
constexpr double kLimitPairSuite = 300;
constexpr double kLimitDefault = 300;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

int failures = 0;

void criterion(int n, const std::string& name, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit) o.require(false, "time limit exceeded");
  if (!o.passed) ++failures;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs/%.0fs", secs, limit);
  std::cout << (o.passed ? "PASS" : "FAIL") << "  " << n << "  " << name << "  " << buf;
  if (!o.detail.empty()) std::cout << "  " << o.detail;
  std::cout << std::endl;
}

std::vector<std::int64_t> int_row(const BrauerCharacter& chi, const std::vector<std::size_t>& cols) {
  std::vector<std::int64_t> out;
  for (auto c : cols) {
    const auto v = chi.values[c].as_integer();
    out.push_back(v ? *v : INT64_MIN);
  }
  return out;
}

std::size_t column(const BrauerTable& t, const std::string& name) {
  auto it = std::find(t.class_names.begin(), t.class_names.end(), name);
  if (it == t.class_names.end()) throw Error(ErrorKind::TableMismatch, "no class " + name);
  return static_cast<std::size_t>(it - t.class_names.begin());
}

bool same_irreducible(const Representation& a, const Representation& b) {
  auto [x, y] = common_field(a, b);
  return x.degree() == y.degree() && hom_dim(x, y) > 0;
}

// Pairs named by the criteria; the suite adds (GL2,SL2,5) and (A4,V4,3).
const std::vector<SuiteSpec>& criterion_pairs() {
  static const std::vector<SuiteSpec> pairs{
      {"GL2", "SL2", 3}, {"S4", "A4", 2}, {"A4", "V4", 2}, {"D8", "C4", 2}, {"C3xS3", "S3", 3},
  };
  return pairs;
}

const std::vector<PairVerification>& pair_results() {
  static const std::vector<PairVerification> results = [] {
    std::vector<PairVerification> out;
    for (const auto& s : suite_pairs()) out.push_back(verify_pair(s));
    return out;
  }();
  return results;
}

bool is_criterion_pair(const SuiteSpec& s) {
  const auto& c = criterion_pairs();
  return std::any_of(c.begin(), c.end(), [&](const SuiteSpec& x) { return x.g == s.g && x.n == s.n && x.p == s.p; });
}

// Every named clause on every report of the selected pairs.
Outcome clauses_hold(const std::set<std::string>& clauses, bool only_criterion_pairs) {
  Outcome o;
  std::size_t seen = 0;
  const auto& specs = suite_pairs();
  const auto& results = pair_results();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (only_criterion_pairs && !is_criterion_pair(specs[i])) continue;
    for (const auto& rep : results[i].reports) {
      for (const auto& c : rep.checks) {
        if (!clauses.count(c.clause)) continue;
        ++seen;
        o.require(c.passed, results[i].pair.label + " " + rep.sigma_label + " " + c.clause + ": " + c.detail);
      }
    }
  }
  o.require(seen > 0, "no clauses evaluated");
  if (o.passed) o.detail = std::to_string(seen) + " clause instances";
  return o;
}

}  // namespace

int main() {
  std::cout << "acceptance criteria (seed 1, Meataxe budget 200)" << std::endl;

  criterion(1, "table-SL2(3)", kLimitTable1, [] {
    Outcome o;
    std::ostringstream out, err;
    o.require(run_cli({"table", "--group", "SL2", "--p", "3", "--expect", "paper"}, out, err) == kExitPass,
              "CLI exit code");
    const auto t = brauer_table(make_SL2(3), 3);
    o.require(t.rows.size() == 3, "row count");
    const std::vector<std::size_t> cols{column(t, "I2"), column(t, "-I2"), column(t, "c4(w^2)")};
    const std::vector<std::vector<std::int64_t>> expect{{1, 1, 1}, {2, -2, 0}, {3, 3, -1}};
    for (std::size_t i = 0; i < 3 && i < t.rows.size(); ++i) {
      o.require(int_row(t.rows[i], cols) == expect[i], "row " + std::to_string(i));
    }
    std::vector<std::size_t> sizes, orders;
    for (auto c : cols) {
      sizes.push_back(t.sizes[c]);
      orders.push_back(t.orders[c]);
    }
    o.require(sizes == std::vector<std::size_t>{1, 1, 6}, "class sizes");
    o.require(orders == std::vector<std::size_t>{1, 2, 4}, "element orders");
    return o;
  });

  criterion(2, "table-GL2(3)", kLimitTable2, [] {
    Outcome o;
    const auto t = brauer_table(make_GL2(3), 3);
    std::vector<std::size_t> degrees;
    for (const auto& r : t.rows) degrees.push_back(r.degree);
    o.require(degrees == std::vector<std::size_t>{1, 1, 2, 2, 3, 3}, "degrees");
    // Published columns: I2, -I2, c3(1,-1), c4(z), c4(-z), c4(z^2).
    const std::vector<std::size_t> cols{column(t, "I2"),    column(t, "-I2"),     column(t, "c3(1,-1)"),
                                        column(t, "c4(w)"), column(t, "c4(w^5)"), column(t, "c4(w^2)")};
    const CyclotomicInt s = CyclotomicInt::root(8, 1) + CyclotomicInt::root(8, 3);
    const auto I = [](std::int64_t v) { return CyclotomicInt::integer(v, 8); };
    const std::vector<std::vector<CyclotomicInt>> expect{
        {I(1), I(1), I(1), I(1), I(1), I(1)},     {I(1), I(1), I(-1), I(-1), I(-1), I(1)},
        {I(2), I(-2), I(0), s, -s, I(0)},         {I(2), I(-2), I(0), -s, s, I(0)},
        {I(3), I(3), I(1), I(-1), I(-1), I(-1)},  {I(3), I(3), I(-1), I(1), I(1), I(-1)},
    };
    std::vector<std::vector<CyclotomicInt>> got;
    for (const auto& r : t.rows) {
      std::vector<CyclotomicInt> row;
      for (auto c : cols) row.push_back(r.values[c]);
      got.push_back(row);
    }
    // Rational rows exactly, the two irrational rows as a multiset.
    for (std::size_t i : {0u, 1u, 4u, 5u}) o.require(i < got.size() && got[i] == expect[i], "row " + std::to_string(i));
    const bool exact = got.size() == 6 && got[2] == expect[2] && got[3] == expect[3];
    const bool swapped = got.size() == 6 && got[2] == expect[3] && got[3] == expect[2];
    o.require(exact || swapped, "irrational rows");
    const auto cmp = compare_with_paper(t, 2);
    o.require(cmp.matches, "table comparison");
    o.detail = exact ? "exact row order" : (swapped ? "Galois-conjugate rows exchanged" : o.detail);
    return o;
  });

  criterion(3, "induction-SL2(3)-to-GL2(3)", kLimitInduction, [] {
    Outcome o;
    const auto gl = make_GL2(3);
    for (unsigned k = 0; k < 3; ++k) {
      const auto cf = composition_factors(induce(pol_k(3, k), gl));
      o.require(cf.distinct() == 2 && cf.count() == 2, "k=" + std::to_string(k) + " factor count");
      for (unsigned r = 0; r < 2; ++r) {
        o.require(cf.multiplicity_of(pol_k_r(3, k, r)) == 1,
                  "k=" + std::to_string(k) + " theta_" + std::to_string(k) + "," + std::to_string(r));
      }
    }
    return o;
  });

  criterion(4, "Pol_k-irreducible-distinct-complete p=3,5,7", kLimitPolFamily, [] {
    Outcome o;
    for (std::uint32_t p : {3u, 5u, 7u}) {
      std::vector<Representation> fam;
      for (unsigned k = 0; k < p; ++k) {
        fam.push_back(pol_k(p, k));
        o.require(is_irreducible(fam.back()).irreducible, "Pol_" + std::to_string(k) + " p=" + std::to_string(p));
      }
      for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b)
          o.require(!same_irreducible(fam[a], fam[b]), "isomorphic pair at p=" + std::to_string(p));
      o.require(p_regular_classes(*make_SL2(p), p).size() == p, "p-regular class count at p=" + std::to_string(p));
    }
    return o;
  });

  criterion(5, "Pol_k(r)-irreducible-distinct-exhaustive p=3,5", kLimitTwisted, [] {
    Outcome o;
    for (std::uint32_t p : {3u, 5u}) {
      std::vector<Representation> fam;
      for (unsigned k = 0; k < p; ++k)
        for (unsigned r = 0; r + 1 < p; ++r) {
          fam.push_back(pol_k_r(p, k, r));
          o.require(is_irreducible(fam.back()).irreducible, fam.back().label());
        }
      o.require(fam.size() == p * (p - 1), "family size");
      for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b)
          o.require(!same_irreducible(fam[a], fam[b]), fam[a].label() + " ~ " + fam[b].label());
      const auto irr = enumerate_irreducibles(make_GL2(p), p);
      o.require(irr.size() == fam.size(), "tensor closure found " + std::to_string(irr.size()));
      for (const auto& x : irr) {
        const bool hit = std::any_of(fam.begin(), fam.end(), [&](const auto& y) { return same_irreducible(x, y); });
        o.require(hit, x.label() + " not in the family");
      }
    }
    return o;
  });

  criterion(6, "restriction-induction-identities p=3,5", kLimitIdentities, [] {
    Outcome o;
    for (std::uint32_t p : {3u, 5u}) {
      const auto gl = make_GL2(p), sl = make_SL2(p);
      for (unsigned k = 0; k < p; ++k) {
        const auto s = pol_k(p, k);
        const auto ind = induce(s, gl);
        const std::string tag = " p=" + std::to_string(p) + " k=" + std::to_string(k);
        o.require(multiplicity_in_semisimple(s, restrict(ind, sl)) == p - 1, "Res Ind multiplicity" + tag);
        for (unsigned r = 0; r + 1 < p; ++r) {
          o.require(restrict(pol_k_r(p, k, r), sl).images() == s.images(), "Res Pol_k(r)" + tag);
        }
        const auto cf = composition_factors(ind);
        o.require(cf.distinct() == p - 1 && cf.count() == p - 1, "Ind factor count" + tag);
        for (unsigned r = 0; r + 1 < p; ++r) o.require(cf.multiplicity_of(pol_k_r(p, k, r)) == 1, "Ind factor" + tag);
      }
    }
    return o;
  });

  criterion(7, "restriction-and-Res-Ind-on-suite-pairs", kLimitPairSuite, [] {
    return clauses_hold({"orbit-distinct", "res-ind-orbit", "res-ind-multiplicity", "res-ind-socle", "end-dim",
                         "ghat-readings-agree", "restriction-single-orbit"},
                        true);
  });

  criterion(8, "correspondence-on-suite-pairs", kLimitDefault, [] {
    return clauses_hold({"correspondence-irreducible", "correspondence-into-ghat", "correspondence-injective",
                         "correspondence-surjective", "inertia-index-phi", "inertia-index-induced",
                         "res-phi-multiple"},
                        true);
  });

  criterion(9, "induced-irreducible-iff-inertia-trivial", kLimitDefault, [] {
    Outcome o;
    // Literal clause: a nontrivial irreducible of V4 inside A4 at p = 2.
    const auto pair = make_group_pair("A4", "V4", 2);
    const auto ctx = make_clifford_context(pair.g, pair.n, 2);
    std::vector<const Representation*> nontrivial;
    for (const auto& s : ctx.irr_n) {
      bool trivial = true;
      for (const auto& m : s.images()) trivial = trivial && m.is_identity();
      if (!trivial) nontrivial.push_back(&s);
    }
    if (nontrivial.empty()) {
      o.require(false, "V4 has " + std::to_string(ctx.irr_n.size()) +
                           " irreducible over " + ctx.field->name() +
                           " (a 2-group in characteristic 2), so no nontrivial sigma exists");
    }
    for (const auto* s : nontrivial) {
      const auto rec = induced_irreducibility_check(*s, ctx.g);
      o.require(rec.inertia_is_n && rec.induced_irreducible, "literal case " + s->label());
    }
    // The same statement where it is attainable: sign characters of V4 at p = 3.
    const auto p3 = make_group_pair("A4", "V4", 3);
    const auto c3 = make_clifford_context(p3.g, p3.n, 3);
    std::size_t i_equals_n = 0;
    for (const auto& s : c3.irr_n) {
      const auto rec = induced_irreducibility_check(s, c3.g);
      if (rec.inertia_is_n) {
        ++i_equals_n;
        o.require(rec.induced_irreducible, "p=3 " + s.label());
      }
    }
    o.require(i_equals_n == 3, "expected 3 sigma with I = N at p=3");
    // Biconditional on every suite sigma, both sides computed separately.
    const auto bic = clauses_hold({"induced-irreducible-iff-inertia-trivial"}, false);
    o.require(bic.passed, bic.detail);
    if (!o.passed) o.detail += " | supplementary: I = N at p=3 gives irreducible Ind for all 3 sign characters; " +
                               std::string("biconditional ") + (bic.passed ? "holds on every suite sigma" : "fails");
    return o;
  });

  criterion(10, "green-C3xS3-over-S3", kLimitDefault, [] {
    Outcome o;
    const auto g = verify_green({"C3xS3", "S3", 3});
    o.require(g.sigma_labels.size() == 2, "sigma count");
    o.require(g.records.size() == 2, "extensions found");
    for (const auto& c : g.checks) o.require(c.passed, c.clause + ": " + c.detail);
    for (const auto& r : g.records) o.require(r.index == 3, "index");
    return o;
  });

  criterion(11, "extension-experiments", kLimitDefault, [] {
    Outcome o;
    const auto log = run_extension_experiments();
    o.require(log.attempted > 0, "no sigma met a hypothesis");
    for (std::size_t i = 0; i < log.lines.size(); ++i) o.require(log.outcomes[i], log.lines[i]);
    if (o.passed) o.detail = std::to_string(log.found) + "/" + std::to_string(log.attempted) + " extensions found";
    return o;
  });

  criterion(12, "reciprocity-degrees-orbit-stabilizer-determinism", kLimitDefault, [] {
    Outcome o;
    for (const auto& v : pair_results()) {
      for (const auto& c : v.checks) {
        if (c.clause == "reciprocity") o.require(c.passed, v.pair.label + ": " + c.detail);
      }
    }
    const auto acc = clauses_hold({"degree-accounting", "degree-identity", "restriction-degree", "orbit-stabilizer"},
                                  false);
    o.require(acc.passed, acc.detail);
    std::ostringstream a, b, e1, e2;
    run_cli({"verify", "--suite", "quick", "--format", "json", "--seed", "7"}, a, e1);
    run_cli({"verify", "--suite", "quick", "--format", "json", "--seed", "7"}, b, e2);
    o.require(!a.str().empty() && a.str() == b.str(), "JSON differs between equal-seed runs");
    std::ostringstream t1, t2;
    run_cli({"table", "--group", "GL2", "--p", "5", "--format", "json"}, t1, e1);
    run_cli({"table", "--group", "GL2", "--p", "5", "--format", "json"}, t2, e2);
    o.require(t1.str() == t2.str(), "table JSON differs");
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
