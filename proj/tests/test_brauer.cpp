#include <cmath>

#include "doctest.h"
#include "modrep/suite.hpp"
#include "oracles.hpp"

using namespace modrep;

namespace {

oracle::NaiveField naive_sq(std::uint32_t p) {
  const auto f = make_field(p, 2);
  return {p, oracle::Poly(f->modulus().begin(), f->modulus().end())};
}

oracle::IntMatrix to_int(const Matrix& m) {
  oracle::IntMatrix r(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

CyclotomicInt sqrt_m2() { return CyclotomicInt::root(8, 1) + CyclotomicInt::root(8, 3); }

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<std::int64_t>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(euler_phi(24) == 8);
}

TEST_CASE("arithmetic agrees with complex evaluation") {
  for (std::uint64_t m : {3ULL, 5ULL, 8ULL, 12ULL, 15ULL}) {
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(m); a += 2) {
      for (std::int64_t b = 1; b < static_cast<std::int64_t>(m); b += 3) {
        const auto x = CyclotomicInt::root(m, a) + CyclotomicInt::integer(2, m);
        const auto y = CyclotomicInt::root(m, b) - CyclotomicInt::root(m, a + b);
        CHECK(close((x * y).to_complex(), x.to_complex() * y.to_complex()));
        CHECK(close((x + y).to_complex(), x.to_complex() + y.to_complex()));
      }
    }
  }
}

TEST_CASE("sums of all m-th roots vanish and equality crosses conductors") {
  CyclotomicInt s(12);
  for (int e = 0; e < 12; ++e) s += CyclotomicInt::root(12, e);
  CHECK(s.as_integer() == 0);
  CHECK(CyclotomicInt::root(4, 1) == CyclotomicInt::root(8, 2));
  CHECK(CyclotomicInt::integer(3) == CyclotomicInt::integer(3, 8));
  CHECK(!(CyclotomicInt::root(8, 1) == CyclotomicInt::root(8, 3)));
}

TEST_CASE("display forms") {
  CHECK(CyclotomicInt::integer(-2, 8).display() == "-2");
  CHECK(sqrt_m2().display() == "√2·i");
  CHECK((-sqrt_m2()).display() == "-√2·i");
  CHECK(close(sqrt_m2().to_complex(), {0, std::sqrt(2.0)}));
  CHECK(sqrt_m2().zeta_string() == "z8^1+z8^3");
}

}  // TEST_SUITE

TEST_SUITE("brauer") {

TEST_CASE("lifting eigenvalues") {
  const auto f = make_field(3, 2);
  const auto id = lift_eigenvalues(Matrix::identity(f, 3), 1);
  CHECK(id.size() == 3);
  for (const auto& z : id) CHECK(z.as_integer() == 1);

  const auto sl = make_SL2(3);
  const auto s1 = pol_k(3, 1);
  for (std::size_t i = 0; i < sl->size(); ++i) {
    if (sl->element(i) == Matrix::identity(sl->field(), 2).scaled(2)) {
      const auto ev = lift_eigenvalues(rebase(s1, f).image(i), 2);
      CHECK(ev.size() == 2);
      CyclotomicInt sum(2);
      for (const auto& z : ev) {
        CHECK(z.as_integer() == -1);
        sum += z;
      }
      CHECK(sum.as_integer() == -2);
    }
  }
}

TEST_CASE("order-8 class in the 2-dim module lifts to zeta8 and zeta8^3") {
  const auto gl = make_GL2(3);
  const auto names = class_names(*gl);
  const auto f = make_field(3, 2);
  const auto th = rebase(pol_k_r(3, 1, 0), f);
  for (std::size_t c = 0; c < gl->classes().size(); ++c) {
    if (names[c] != "c4(w)") continue;
    const auto ev = lift_eigenvalues(th.image(gl->classes()[c].rep), 8);
    REQUIRE(ev.size() == 2);
    const bool a = ev[0] == CyclotomicInt::root(8, 1) && ev[1] == CyclotomicInt::root(8, 3);
    const bool b = ev[0] == CyclotomicInt::root(8, 3) && ev[1] == CyclotomicInt::root(8, 1);
    CHECK((a || b));
    CHECK(ev[0] + ev[1] == sqrt_m2());
  }
}

TEST_CASE("characters of the polynomial family match the eigenvalue oracle") {
  for (std::uint32_t p : {3u, 5u}) {
    const auto nf = naive_sq(p);
    const auto gl = make_GL2(p);
    for (unsigned k = 0; k < p; ++k) {
      for (unsigned r = 0; r + 1 < p; ++r) {
        const auto chi = brauer_character(pol_k_r(p, k, r));
        for (std::size_t i = 0; i < chi.classes.size(); ++i) {
          const auto& g = gl->element(gl->classes()[chi.classes[i]].rep);
          CAPTURE(p);
          CAPTURE(k);
          CAPTURE(r);
          CHECK(close(chi.values[i].to_complex(), oracle::pol_character(nf, to_int(g), k, r)));
        }
      }
    }
  }
}

TEST_CASE("trivial characters") {
  const auto chi = brauer_character(trivial_rep(make_GL2(5), make_field(5, 1)));
  for (const auto& v : chi.values) CHECK(v.as_integer() == 1);
  const auto one = make_group("C1", 2);
  const auto t = brauer_table(one, 2);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].values.size() == 1);
  CHECK(t.rows[0].values[0].as_integer() == 1);
}

TEST_CASE("rows of the small tables") {
  const auto t1 = brauer_table(make_SL2(3), 3);
  REQUIRE(t1.rows.size() == 3);
  std::vector<std::int64_t> row2;
  for (const auto& v : t1.rows[2].values) row2.push_back(*v.as_integer());
  CHECK(row2 == std::vector<std::int64_t>{3, 3, -1});
  std::vector<std::int64_t> row0;
  for (const auto& v : t1.rows[0].values) row0.push_back(*v.as_integer());
  CHECK(row0 == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("degrees of enumerated irreducibles") {
  auto degrees = [](const std::vector<Representation>& v) {
    std::vector<std::size_t> d;
    for (const auto& r : v) d.push_back(r.degree());
    return d;
  };
  CHECK(degrees(enumerate_irreducibles(make_SL2(3), 3)) == std::vector<std::size_t>{1, 2, 3});
  CHECK(degrees(enumerate_irreducibles(make_GL2(3), 3)) == std::vector<std::size_t>{1, 1, 2, 2, 3, 3});
  CHECK(degrees(enumerate_irreducibles(make_SL2(5), 5)) == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(degrees(enumerate_irreducibles(make_group("S4", 2), 2)) == std::vector<std::size_t>{1, 2});
  CHECK(degrees(enumerate_irreducibles(make_group("A4", 2), 2)) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("character keys") {
  const auto t = brauer_table(make_SL2(3), 3);
  CHECK(character_key(t.rows[1]) == character_key(brauer_character(pol_k(3, 1))));
  CHECK(character_key(t.rows[1]) != character_key(t.rows[2]));
  MeataxeOptions o;
  o.seed = 77;
  const auto t2 = brauer_table(make_SL2(3), 3, o);
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(character_key(t.rows[i]) == character_key(t2.rows[i]));
}

TEST_CASE("class names of GL2(3)") {
  const auto t = brauer_table(make_GL2(3), 3);
  CHECK(t.class_names == std::vector<std::string>{"I2", "-I2", "c3(1,-1)", "c4(w^2)", "c4(w)", "c4(w^5)"});
  CHECK(t.orders == std::vector<std::uint64_t>{1, 2, 2, 4, 8, 8});
  CHECK(t.sizes == std::vector<std::size_t>{1, 1, 12, 6, 6, 6});
}

}  // TEST_SUITE
