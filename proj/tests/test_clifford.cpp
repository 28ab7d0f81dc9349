#include <algorithm>

#include "doctest.h"
#include "modrep/suite.hpp"

using namespace modrep;

namespace {

const Check* find_check(const std::vector<Check>& cs, const std::string& clause) {
  for (const auto& c : cs)
    if (c.clause == clause) return &c;
  return nullptr;
}

// The nontrivial sign characters of V4 over F_3, built by hand.
std::vector<Representation> v4_signs(const GroupPtr& v4) {
  const auto f = make_field(3, 1);
  auto one = [&](std::int64_t s) { return Matrix::from_ints(f, {{s}}); };
  return {Representation::from_generator_images(v4, f, {one(-1), one(1)}, "chi_a"),
          Representation::from_generator_images(v4, f, {one(1), one(-1)}, "chi_b"),
          Representation::from_generator_images(v4, f, {one(-1), one(-1)}, "chi_c")};
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("inertia of the polynomial family is all of GL2") {
  for (std::uint32_t p : {3u, 5u}) {
    const auto gl = make_GL2(p);
    for (unsigned k = 0; k < p; ++k) {
      const auto in = inertia_group(pol_k(p, k), gl);
      CHECK(in.inertia == gl);
      CHECK(in.d == p - 1);
      CHECK(in.orbit.size() == 1);
    }
  }
}

TEST_CASE("naive and coset-based inertia agree") {
  const auto a4 = make_group("A4", 3), v4 = make_group("V4", 3, 4);
  for (const auto& s : v4_signs(v4)) {
    const auto fast = inertia_group(s, a4);
    const auto slow = inertia_group(s, a4, true);
    CHECK(fast.inertia->size() == slow.inertia->size());
    CHECK(fast.inertia->size() == 4);
    CHECK(fast.orbit.size() == 3);
  }
  const auto triv = trivial_rep(v4, make_field(3, 1));
  CHECK(inertia_group(triv, a4).inertia == a4);
}

TEST_CASE("Res Ind decomposition over an orbit of sign characters") {
  const auto a4 = make_group("A4", 3), v4 = make_group("V4", 3, 4);
  const auto signs = v4_signs(v4);
  const auto rec = res_ind_decompose(signs[0], a4);
  CHECK(all_passed(rec.checks));
  CHECK(rec.inertia.d == 1);
  CHECK(rec.end_dim == 1);
  // Oracle: the three hand-built characters each occur once in Res Ind.
  const auto ri = restrict(rec.induced, v4);
  for (const auto& s : signs) CHECK(multiplicity_in_semisimple(s, ri) == 1);
  CHECK(is_irreducible(rec.induced).irreducible);
}

TEST_CASE("Res Ind of Pol_k is p-1 copies") {
  const auto gl = make_GL2(5);
  const auto rec = res_ind_decompose(pol_k(5, 2), gl);
  CHECK(all_passed(rec.checks));
  CHECK(rec.inertia.d == 4);
  CHECK(rec.end_dim == 4);
  REQUIRE(rec.orbit_multiplicity.size() == 1);
  CHECK(rec.orbit_multiplicity[0] == 4);
}

TEST_CASE("N = G gives the identity statements") {
  const auto s3 = make_group("S3", 5);
  const auto ctx_pair = make_group_pair("S3", "S3", 5);
  CHECK(ctx_pair.g == ctx_pair.n);
  const auto triv = trivial_rep(s3, make_field(5, 1));
  const auto rec = res_ind_decompose(triv, s3);
  CHECK(rec.inertia.d == 1);
  CHECK(all_passed(rec.checks));
  auto ctx = make_clifford_context(s3, s3, 5);
  for (const auto& sigma : ctx.irr_n) {
    const auto rep = clifford_correspondence(sigma, ctx);
    CHECK(rep.passed());
    REQUIRE(rep.correspondence.size() == 1);
    CHECK(isomorphic_irreducibles(rep.correspondence[0].induced, sigma));
  }
}

TEST_CASE("restriction of Pol_k(r) is Pol_k with ell 1") {
  const auto gl = make_GL2(3);
  for (unsigned k = 0; k < 3; ++k) {
    const auto in = inertia_group(pol_k(3, k), gl);
    for (unsigned r = 0; r < 2; ++r) {
      const auto rec = clifford_restrict(pol_k_r(3, k, r), in);
      CHECK(all_passed(rec.checks));
      CHECK(rec.ell == 1);
    }
  }
  // A restriction outside the orbit is reported.
  const auto in0 = inertia_group(pol_k(3, 0), gl);
  CHECK(kind_of([&] { clifford_restrict(pol_k_r(3, 2, 0), in0); }) == ErrorKind::OrbitMismatch);
}

TEST_CASE("induced irreducibility criterion") {
  const auto a4 = make_group("A4", 3), v4 = make_group("V4", 3, 4);
  const auto rec = induced_irreducibility_check(v4_signs(v4)[1], a4);
  CHECK(rec.inertia_is_n);
  CHECK(rec.induced_irreducible);
  CHECK(all_passed(rec.checks));
  const auto gl = make_GL2(5);
  const auto r2 = induced_irreducibility_check(pol_k(5, 3), gl);
  CHECK(!r2.inertia_is_n);
  CHECK(!r2.induced_irreducible);
  const auto r3 = induced_irreducibility_check(trivial_rep(v4, make_field(3, 1)), a4);
  CHECK(!r3.induced_irreducible);
}

TEST_CASE("correspondence for GL2(3) over SL2(3)") {
  const auto pair = make_group_pair("GL2", "SL2", 3);
  auto ctx = make_clifford_context(pair.g, pair.n, 3);
  for (unsigned k = 0; k < 3; ++k) {
    const auto rep = clifford_correspondence(pol_k(3, k), ctx);
    CHECK(rep.passed());
    CHECK(rep.ghat.size() == 2);
    REQUIRE(rep.correspondence.size() == 2);
    for (const auto& e : rep.correspondence) CHECK(e.m == 1);
    // G-hat is {Pol_k(0), Pol_k(1)}.
    for (unsigned r = 0; r < 2; ++r) {
      const auto th = rebase(pol_k_r(3, k, r), ctx.field);
      const bool found = std::any_of(rep.ghat.begin(), rep.ghat.end(),
                                     [&](std::size_t i) { return isomorphic_irreducibles(ctx.irr_g[i], th); });
      CHECK(found);
    }
  }
}

TEST_CASE("correspondence for GL2(5) over SL2(5)") {
  const auto pair = make_group_pair("GL2", "SL2", 5);
  auto ctx = make_clifford_context(pair.g, pair.n, 5);
  const auto rep = clifford_correspondence(pol_k(5, 3), ctx);
  CHECK(rep.passed());
  CHECK(rep.correspondence.size() == 4);
}

TEST_CASE("reciprocity holds on a suite pair") {
  const auto pair = make_group_pair("S4", "A4", 2);
  const auto ctx = make_clifford_context(pair.g, pair.n, 2);
  for (const auto& sigma : ctx.irr_n) {
    const auto ind = induce(sigma, ctx.g);
    for (const auto& theta : ctx.irr_g) {
      const auto res = restrict(theta, ctx.n);
      CHECK(hom_dim(theta, ind) == hom_dim(res, sigma));
      CHECK(hom_dim(ind, theta) == hom_dim(sigma, res));
    }
  }
}

TEST_CASE("head multiplicity and composition multiplicity differ for S4 over A4 at p=2") {
  const auto pair = make_group_pair("S4", "A4", 2);
  auto ctx = make_clifford_context(pair.g, pair.n, 2);
  const auto rep = clifford_correspondence(ctx.irr_n[0], ctx);
  CHECK(rep.passed());
  REQUIRE(rep.correspondence.size() == 1);
  CHECK(rep.correspondence[0].m == 1);
  CHECK(rep.correspondence[0].composition_multiplicity == 2);
}

TEST_CASE("Green's theorem on C3xS3 over S3") {
  const auto pair = make_group_pair("C3xS3", "S3", 3);
  const auto ctx = make_clifford_context(pair.g, pair.n, 3);
  REQUIRE(ctx.irr_n.size() == 2);
  for (const auto& sigma : ctx.irr_n) {
    const Representation* theta = nullptr;
    for (const auto& t : ctx.irr_g)
      if (isomorphic(restrict(t, ctx.n), sigma)) theta = &t;
    REQUIRE(theta);
    const auto rec = green_verify(ctx.g, ctx.n, *theta, 3, ctx.irr_g);
    CHECK(rec.passed());
    CHECK(rec.index == 3);
    // Oracle: composition factors of the degree-3 induced module directly.
    const auto cf = composition_factors(induce(sigma, ctx.g));
    REQUIRE(cf.distinct() == 1);
    CHECK(cf.factors[0].second == 3);
    CHECK(isomorphic_irreducibles(cf.factors[0].first, *theta));
  }
  const auto s4 = make_group("S4", 3), a4 = make_group("A4", 3, 4);
  const auto t = trivial_rep(s4, make_field(3, 1));
  CHECK(kind_of([&] { green_verify(s4, a4, t, 3, {t}); }) == ErrorKind::HypothesisViolation);
}

TEST_CASE("extension experiments") {
  const auto pair = make_group_pair("GL2", "SL2", 5);
  const auto ctx = make_clifford_context(pair.g, pair.n, 5);
  for (unsigned k = 0; k < 5; ++k) {
    const auto r = extension_search(pol_k(5, k), ctx, ExtensionCase::CyclicQuotient);
    REQUIRE(r.theta);
    CHECK(isomorphic(restrict(*r.theta, ctx.n), rebase(pol_k(5, k), ctx.field)));
  }
  const auto p3 = make_group_pair("GL2", "SL2", 3);
  const auto c3 = make_clifford_context(p3.g, p3.n, 3);
  CHECK(kind_of([&] { extension_search(pol_k(3, 1), c3, ExtensionCase::CoprimeIndex); }) ==
        ErrorKind::HypothesisViolation);
}

TEST_CASE("non-normal subgroups are rejected") {
  CHECK(kind_of([] { make_group_pair("S3", "C2", 3); }) == ErrorKind::NotNormal);
  const auto s3 = make_group("S3", 3), c2 = make_group("C2", 3, 3);
  CHECK(kind_of([&] { make_clifford_context(s3, c2, 3); }) == ErrorKind::NotNormal);
}

TEST_CASE("orbit representatives partition G-hat") {
  const auto v = verify_pair({"A4", "V4", 3});
  CHECK(v.passed());
  CHECK(v.orbit_reps.size() == 2);
  const Check* c = find_check(v.checks, "partition");
  REQUIRE(c);
  CHECK(c->passed);
}

}  // TEST_SUITE
