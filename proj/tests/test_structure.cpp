#include "doctest.h"
#include "modrep/structure.hpp"
#include "modrep/suite.hpp"
#include "oracles.hpp"

using namespace modrep;

TEST_SUITE("structure") {

TEST_CASE("End of an absolutely irreducible module is the scalars") {
  for (unsigned k = 0; k < 5; ++k) CHECK(hom_dim(pol_k(5, k), pol_k(5, k)) == 1);
}

TEST_CASE("Hom between distinct irreducibles vanishes") {
  const auto a = pol_k(3, 1), b = pol_k(3, 2);
  CHECK(hom_dim(a, b) == 0);
  // Oracle: the same linear system T A(g) = B(g) T solved naively.
  const auto& g = a.group();
  oracle::IntMatrix sys;
  const std::size_t n = a.degree(), m = b.degree();
  for (auto gi : g->gens()) {
    const Matrix& A = a.image(gi);
    const Matrix& B = b.image(gi);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<long long> row(m * n, 0);
        for (std::size_t t = 0; t < n; ++t) row[i * n + t] += A(t, j);
        for (std::size_t t = 0; t < m; ++t) row[t * n + j] -= B(i, t);
        for (auto& x : row) x = oracle::md(x, 3);
        sys.push_back(row);
      }
  }
  CHECK(m * n - oracle::rank(sys, 3) == 0);
}

TEST_CASE("every Hom basis element intertwines") {
  const auto gl = make_GL2(3), sl = make_SL2(3);
  const auto ind = induce(pol_k(3, 1), gl);
  const auto hs = hom_space(ind, ind);
  CHECK(hs.dim() == 2);
  for (const auto& t : hs.basis)
    for (std::size_t g = 0; g < gl->size(); g += 3) CHECK(t * ind.image(g) == ind.image(g) * t);
}

TEST_CASE("one-dimensional modules are irreducible") {
  CHECK(is_irreducible(pol_k_r(5, 0, 3)).irreducible);
}

TEST_CASE("Pol_k is irreducible for k < p") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned k = 0; k < p; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      const auto r = is_irreducible(pol_k(p, k));
      CHECK(r.irreducible);
    }
}

TEST_CASE("Pol_p is reducible with the Frobenius-twist submodule") {
  for (std::uint32_t p : {3u, 5u}) {
    const auto rho = pol_k(p, p, true);
    const auto r = is_irreducible(rho);
    CHECK(!r.irreducible);
    CHECK(r.invariant_subspace.rows() > 0);
    CHECK(r.invariant_subspace.rows() < p + 1);
    // x^p and y^p span an invariant plane: spin of x^p stays inside it.
    std::vector<Elem> xp(p + 1, 0);
    xp[0] = 1;
    const Matrix s = spin(rho, {xp});
    CHECK(s.rows() == 2);
    for (std::size_t j = 1; j < p; ++j) {
      CHECK(s(0, j) == 0);
      CHECK(s(1, j) == 0);
    }
  }
}

TEST_CASE("composition factors") {
  const auto p = pol_k(5, 2);
  const auto cf = composition_factors(p);
  REQUIRE(cf.distinct() == 1);
  CHECK(cf.factors[0].second == 1);

  const auto gl = make_GL2(3);
  const auto ind = induce(pol_k(3, 1), gl);
  const auto cf2 = composition_factors(ind);
  CHECK(cf2.distinct() == 2);
  CHECK(cf2.multiplicity_of(pol_k_r(3, 1, 0)) == 1);
  CHECK(cf2.multiplicity_of(pol_k_r(3, 1, 1)) == 1);
  CHECK(cf2.total_degree == 4);

  const auto c3 = make_group("C3", 3);
  const auto cf3 = composition_factors(regular(c3, make_field(3, 1)));
  REQUIRE(cf3.distinct() == 1);
  CHECK(cf3.factors[0].second == 3);
  CHECK(cf3.factors[0].first.degree() == 1);
}

TEST_CASE("multiplicities in semisimple modules") {
  const auto s = pol_k(5, 3);
  CHECK(multiplicity_in_semisimple(s, direct_sum(s, s)) == 2);
  for (std::uint32_t p : {3u, 5u}) {
    const auto gl = make_GL2(p), sl = make_SL2(p);
    for (unsigned k = 0; k < p; ++k) {
      const auto ri = restrict(induce(pol_k(p, k), gl), sl);
      CHECK(multiplicity_in_semisimple(pol_k(p, k), ri) == p - 1);
    }
  }
  const auto sl = make_SL2(3);
  CHECK(multiplicity_in_semisimple(pol_k(3, 0), restrict(pol_k_r(3, 2, 0), sl)) == 0);
}

TEST_CASE("splitting fields") {
  std::vector<Representation> fam;
  for (unsigned k = 0; k < 5; ++k) fam.push_back(pol_k(5, k));
  CHECK(ensure_splitting_field(fam).field->k() == 1);
  CHECK(ensure_splitting_field({trivial_rep(make_SL2(3), make_field(3, 1))}).field->k() == 1);
  // The 2-dim irreducibles of GL2(3) are realized over F_3 already.
  for (unsigned r = 0; r < 2; ++r) CHECK(hom_dim(pol_k_r(3, 1, r), pol_k_r(3, 1, r)) == 1);
  // A 3-cycle over F_2 acting on the augmentation module needs F_4.
  const auto c3 = make_group("C3", 2);
  const auto sf = ensure_splitting_field({regular(c3, make_field(2, 1))});
  CHECK(sf.field->k() == 2);
}

TEST_CASE("isomorphism of arbitrary modules") {
  const auto a = pol_k(5, 1), b = pol_k(5, 2);
  CHECK(isomorphic(direct_sum(a, b), direct_sum(b, a)));
  CHECK(!isomorphic(direct_sum(a, a), direct_sum(b, trivial_rep(a.group(), a.field()))));
}

TEST_CASE("seed changes do not change verdicts") {
  for (std::uint64_t seed : {1ULL, 2ULL, 12345ULL}) {
    MeataxeOptions o;
    o.seed = seed;
    CHECK(is_irreducible(pol_k(7, 4), o).irreducible);
    CHECK(!is_irreducible(pol_k(3, 4, true), o).irreducible);
  }
}

}  // TEST_SUITE
