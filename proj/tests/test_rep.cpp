#include "doctest.h"
#include "modrep/structure.hpp"
#include "modrep/suite.hpp"

using namespace modrep;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;  // nothing thrown; tests compare against a different kind
}

}  // namespace

TEST_SUITE("rep") {

TEST_CASE("trivial and natural representations") {
  const auto sl = make_SL2(3);
  const auto f = make_field(3, 1);
  const auto gens = sl->gen_matrices();
  std::vector<Matrix> ones(gens.size(), Matrix::identity(f, 1));
  const auto t = Representation::from_generator_images(sl, f, ones, "triv");
  CHECK(t.degree() == 1);
  for (std::size_t i = 0; i < sl->size(); ++i) CHECK(t.image(i).is_identity());
  const auto nat = Representation::from_generator_images(sl, f, gens, "nat");
  for (std::size_t i = 0; i < sl->size(); ++i) CHECK(nat.image(i) == sl->element(i));
  CHECK(nat.is_homomorphism(true));
}

TEST_CASE("a generator of order 4 cannot map to an element of order 3") {
  const auto s4 = make_group("S4", 3);
  const auto f = make_field(3, 1);
  // Generators are the 4-cycle and a transposition.
  const Matrix order3 = Matrix::from_ints(f, {{1, 1}, {0, 1}});
  std::vector<Matrix> imgs{order3, Matrix::identity(f, 2)};
  CHECK(kind_of([&] { Representation::from_generator_images(s4, f, imgs, "bad"); }) == ErrorKind::NotAHomomorphism);
}

TEST_CASE("restriction") {
  const auto gl = make_GL2(3), sl = make_SL2(3);
  const auto f = make_field(3, 1);
  const auto nat = natural_rep(gl, f);
  CHECK(restrict(nat, gl).images() == nat.images());
  const auto r = restrict(trivial_rep(gl, f), sl);
  for (std::size_t i = 0; i < sl->size(); ++i) CHECK(r.image(i).is_identity());
  for (unsigned k = 0; k < 3; ++k) {
    for (unsigned s = 0; s < 2; ++s) CHECK(restrict(pol_k_r(3, k, s), sl).images() == pol_k(3, k).images());
  }
}

TEST_CASE("induction") {
  const auto gl = make_GL2(3), sl = make_SL2(3);
  const auto f = make_field(3, 1);
  const auto ind = induce(trivial_rep(sl, f), gl);
  CHECK(ind.degree() == 2);
  // Permutation action on G/N: every image is a permutation matrix.
  for (const auto& m : ind.images()) {
    for (std::size_t i = 0; i < 2; ++i) {
      int ones = 0;
      for (std::size_t j = 0; j < 2; ++j) ones += m(i, j) == 1 ? 1 : (m(i, j) == 0 ? 0 : 100);
      CHECK(ones == 1);
    }
  }
  CHECK(ind.is_homomorphism(true));
  const auto i1 = induce(pol_k(3, 1), gl);
  CHECK(i1.degree() == 4);
  const auto cf = composition_factors(i1);
  CHECK(cf.distinct() == 2);
  CHECK(cf.multiplicity_of(pol_k_r(3, 1, 0)) == 1);
  CHECK(cf.multiplicity_of(pol_k_r(3, 1, 1)) == 1);
  const auto s4 = make_group("S4", 2), a4 = make_group("A4", 2, 4);
  CHECK(induce(natural_rep(a4, make_field(2, 1)), s4).degree() == 8);
}

TEST_CASE("conjugation") {
  const auto gl = make_GL2(3), sl = make_SL2(3);
  const auto s = pol_k(3, 2);
  for (std::size_t i = 0; i < sl->size(); i += 5) {
    CHECK(isomorphic_irreducibles(conjugate(s, sl->element(i)), s));
  }
  CHECK(conjugate(s, gl->element(0)).images() == s.images());
  for (std::size_t a = 1; a < gl->size(); a += 7) {
    for (std::size_t b = 2; b < gl->size(); b += 11) {
      const Matrix& g1 = gl->element(a);
      const Matrix& g2 = gl->element(b);
      CHECK(conjugate(conjugate(s, g2), g1).images() == conjugate(s, g1 * g2).images());
    }
  }
}

TEST_CASE("tensor products") {
  const auto gl = make_GL2(3);
  const auto f = make_field(3, 1);
  const auto p2 = pol_k_r(3, 2, 0);
  CHECK(tensor(p2, trivial_rep(gl, f)).images() == p2.images());
  // Pol_k (x) det^r = Pol_k(r).
  const auto det = pol_k_r(3, 0, 1);
  for (unsigned k = 0; k < 3; ++k) CHECK(tensor(pol_k_r(3, k, 0), det).images() == pol_k_r(3, k, 1).images());
  CHECK(tensor(pol_k_r(3, 1, 0), p2).degree() == 6);
}

TEST_CASE("inflation") {
  const auto gl = make_GL2(3), sl = make_SL2(3);
  const auto q = quotient(gl, sl);
  const auto f = make_field(3, 1);
  const auto inf = inflate(trivial_rep(q.group, f), q);
  for (const auto& m : inf.images()) CHECK(m.is_identity());

  const auto g = make_group("C3xS3", 3);
  const auto n = make_group("S3", 3, 6);
  const auto q2 = quotient(g, n);
  const auto reg = regular(q2.group, f);
  const auto psi = trivial_rep(q2.group, f);
  const auto sum = direct_sum(psi, reg);
  CHECK(inflate(sum, q2).images() == direct_sum(inflate(psi, q2), inflate(reg, q2)).images());
  CHECK(is_irreducible(inflate(psi, q2)).irreducible);

  // An irreducible of a quotient stays irreducible after inflation.
  const auto a4 = make_group("A4", 2), v4 = make_group("V4", 2, 4);
  const auto q3 = quotient(a4, v4);
  for (const auto& r : enumerate_irreducibles(q3.group, 2)) CHECK(is_irreducible(inflate(r, q3)).irreducible);
}

TEST_CASE("regular representation") {
  const auto f = make_field(3, 1);
  const auto one = make_group("C1", 3);
  CHECK(regular(one, f).degree() == 1);
  const auto c2 = make_group("C2", 3);
  const auto r = regular(c2, f);
  CHECK(r.degree() == 2);
  CHECK(r.image(1) == Matrix::from_ints(f, {{0, 1}, {1, 0}}));
  // A p-group in characteristic p: only the trivial factor, |G| times.
  const auto d8 = make_group("D8", 2);
  const auto cf = composition_factors(regular(d8, make_field(2, 1)));
  CHECK(cf.distinct() == 1);
  CHECK(cf.factors[0].second == 8);
  CHECK(cf.factors[0].first.degree() == 1);
}

TEST_CASE("dual and rebase") {
  const auto p = pol_k(5, 3);
  const auto d = dual(p);
  CHECK(d.is_homomorphism());
  CHECK(isomorphic_irreducibles(d, p));  // self-dual for SL2
  const auto big = make_field(5, 2);
  const auto r = rebase(p, big);
  CHECK(r.field()->same_as(*big));
  CHECK(r.is_homomorphism());
}

}  // TEST_SUITE
