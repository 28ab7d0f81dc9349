#include <algorithm>
#include <set>

#include "doctest.h"
#include "modrep/brauer.hpp"
#include "modrep/suite.hpp"
#include "oracles.hpp"

using namespace modrep;

TEST_SUITE("group") {

TEST_CASE("orders of SL2 and GL2 by enumeration") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    CAPTURE(p);
    CHECK(make_SL2(p)->size() == p * (p * p - 1));
    CHECK(make_GL2(p)->size() == (p * p - 1) * (p * p - p));
  }
  CHECK(make_SL2(5)->size() == 120);
  CHECK(make_GL2(5)->size() == 480);
}

TEST_CASE("identity alone generates the trivial group") {
  const auto f = make_field(3, 1);
  const auto g = Group::generate({Matrix::identity(f, 2)}, "1");
  CHECK(g->size() == 1);
  CHECK(g->classes().size() == 1);
}

TEST_CASE("permutation groups agree with a naive closure") {
  const std::vector<std::vector<int>> s4{{1, 2, 3, 0}, {1, 0, 2, 3}};
  CHECK(oracle::permutation_group_order(s4) == 24);
  CHECK(make_from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, 4, 2, "S4")->size() == 24);
  CHECK(make_group("C3xS3", 3)->size() == oracle::permutation_group_order({{1, 2, 0, 3, 4, 5},
                                                                          {1, 0, 2, 3, 4, 5},
                                                                          {0, 1, 2, 4, 5, 3}}));
  CHECK(make_group("A4", 2)->size() == 12);
  CHECK(make_group("V4", 2)->size() == 4);
  CHECK(make_group("D8", 2)->size() == 8);
}

TEST_CASE("conjugacy classes partition the group") {
  for (const auto& g : {make_GL2(3), make_SL2(5), make_group("S4", 2)}) {
    std::size_t total = 0;
    std::set<std::size_t> seen;
    for (const auto& c : g->classes()) {
      total += c.members.size();
      for (auto m : c.members) seen.insert(m);
      CHECK(g->size() % c.members.size() == 0);
      CHECK(std::find(c.members.begin(), c.members.end(), c.rep) != c.members.end());
    }
    CHECK(total == g->size());
    CHECK(seen.size() == g->size());
  }
}

TEST_CASE("abelian groups have singleton classes") {
  const auto g = make_group("V4", 3);
  CHECK(g->is_abelian());
  for (const auto& c : g->classes()) CHECK(c.members.size() == 1);
}

TEST_CASE("class sizes of the small tables") {
  const auto sl = make_SL2(3);
  const auto names = class_names(*sl);
  bool seen_c4 = false;
  for (std::size_t c = 0; c < sl->classes().size(); ++c) {
    if (names[c] == "c4(w^2)") {
      CHECK(sl->classes()[c].members.size() == 6);
      seen_c4 = true;
    }
  }
  CHECK(seen_c4);

  const auto gl = make_GL2(3);
  const auto gnames = class_names(*gl);
  for (std::size_t c = 0; c < gl->classes().size(); ++c) {
    if (gnames[c] == "c3(1,-1)") CHECK(gl->classes()[c].members.size() == 12);
  }
}

TEST_CASE("p-regular classes") {
  CHECK(p_regular_classes(*make_SL2(3), 3).size() == 3);
  CHECK(p_regular_classes(*make_GL2(3), 3).size() == 6);
  for (const auto& g : {make_group("D8", 2), make_group("V4", 2), make_group("C4", 2)}) {
    CHECK(p_regular_classes(*g, 2).size() == 1);
  }
}

TEST_CASE("normality") {
  CHECK(is_normal(*make_GL2(3), *make_SL2(3)));
  const auto g = make_group("S4", 3);
  CHECK(is_normal(*g, *g));
  const auto s3 = make_group("S3", 5);
  const auto two = make_group("C2", 5, 3);
  CHECK(is_subgroup(*s3, *two));
  CHECK(!is_normal(*s3, *two));
  // Oracle: some conjugate of the transposition leaves the subgroup.
  const Matrix t = two->element(1);
  bool escapes = false;
  for (const auto& x : s3->elements()) escapes = escapes || !two->contains(x * t * x.inverse());
  CHECK(escapes);
}

TEST_CASE("coset representatives") {
  const auto gl = make_GL2(3), sl = make_SL2(3);
  const auto c = coset_reps(gl, sl);
  CHECK(c.index() == 2);
  CHECK(c.reps[0] == 0);
  CHECK(coset_reps(gl, gl).index() == 1);
  const auto one = make_group("C1", 3, 4);
  const auto s4 = make_group("S4", 3);
  CHECK(coset_reps(s4, one).index() == 24);
  // Every element is rep * h for the recorded h.
  for (std::size_t g = 0; g < gl->size(); ++g) {
    const Matrix& r = gl->element(c.reps[c.coset_of[g]]);
    CHECK(r * sl->element(c.sub_part[g]) == gl->element(g));
  }
}

TEST_CASE("quotients") {
  const auto gl = make_GL2(3), sl = make_SL2(3);
  const auto q = quotient(gl, sl);
  CHECK(q.group->size() == 2);
  // Compatible with the determinant.
  for (std::size_t g = 0; g < gl->size(); ++g) {
    const bool det_one = determinant(gl->element(g)) == 1;
    CHECK(det_one == (q.image[g] == q.image[0]));
  }
  CHECK(quotient(gl, gl).group->size() == 1);
  const auto s4 = make_group("S4", 2);
  const auto one = make_group("C1", 2, 4);
  CHECK(quotient(s4, one).group->size() == 24);
  CHECK(quotient(make_GL2(5), make_SL2(5)).group->size() == 4);
}

}  // TEST_SUITE
