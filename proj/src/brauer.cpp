#include "modrep/brauer.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace modrep {

namespace {

// Smallest K (multiple of k0) with m | p^K - 1.
unsigned lift_degree(std::uint32_t p, unsigned k0, std::uint64_t m) {
  for (unsigned k = k0; k <= 64; k += k0) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q = (q * p) % m;
    if (q % m == 1 % m) return k;
  }
  throw Error(ErrorKind::FieldTooLarge, "no extension contains the required roots of unity");
}

std::string hex_word(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

long long signed_residue(Elem a, std::uint32_t p) {
  return a > p / 2 ? static_cast<long long>(a) - static_cast<long long>(p) : static_cast<long long>(a);
}

std::string scalar_name(long long a) {
  if (a == 1) return "I2";
  if (a == -1) return "-I2";
  return std::to_string(a) + "I2";
}

std::string matrix_class_name(const Matrix& m) {
  const Field& f = *m.field();
  const std::uint32_t p = f.p();
  const Elem t = f.add(m(0, 0), m(1, 1));
  const Elem d = f.sub(f.mul(m(0, 0), m(1, 1)), f.mul(m(0, 1), m(1, 0)));
  std::vector<Elem> roots;
  for (Elem a = 0; a < p; ++a) {
    if (f.add(f.sub(f.mul(a, a), f.mul(t, a)), d) == 0) roots.push_back(a);
  }
  if (roots.size() == 2) {
    long long a = signed_residue(roots[0], p);
    long long b = signed_residue(roots[1], p);
    if (a < b) std::swap(a, b);
    return "c3(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  if (roots.size() == 1) {
    const bool scalar = m(0, 1) == 0 && m(1, 0) == 0;
    const long long a = signed_residue(roots[0], p);
    return scalar ? scalar_name(a) : "u(" + std::to_string(a) + ")";
  }
  // Eigenvalues w^e and w^(pe) in GF(p^2).
  const FieldPtr f2 = ladder_field(p, 2);
  const std::uint64_t q1 = f2->order() - 1;
  for (std::uint64_t e = 1; e < q1; ++e) {
    const Elem l = f2->exp(static_cast<std::int64_t>(e));
    if (f2->add(f2->sub(f2->mul(l, l), f2->mul(t, l)), d) != 0) continue;
    const std::uint64_t e2 = (e * p) % q1;
    const std::uint64_t lo = std::min(e, e2);
    return lo == 1 ? std::string("c4(w)") : "c4(w^" + std::to_string(lo) + ")";
  }
  return "?";
}

}  // namespace

std::uint64_t brauer_conductor(const Group& g, std::uint32_t p) {
  std::uint64_t m = 1;
  for (std::size_t c : p_regular_classes(g, p)) m = std::lcm(m, g.classes()[c].order);
  return m;
}

std::vector<CyclotomicInt> lift_eigenvalues(const Matrix& a, std::uint64_t m) {
  const Field& f = *a.field();
  const std::uint64_t q1 = f.order() - 1;
  if (q1 % m != 0) {
    throw Error(ErrorKind::OrderDoesNotDivide, std::to_string(m) + " does not divide " + std::to_string(q1));
  }
  std::vector<CyclotomicInt> out;
  for (std::uint64_t j = 0; j < m && out.size() < a.rows(); ++j) {
    const Elem lambda = f.exp(static_cast<std::int64_t>(q1 / m * j));
    const std::size_t d = eigenspace_dim(a, lambda);
    for (std::size_t i = 0; i < d; ++i) out.push_back(CyclotomicInt::root(m, static_cast<std::int64_t>(j)));
  }
  if (out.size() < a.rows()) {
    throw Error(ErrorKind::NotSemisimple, "eigenspaces of roots of unity of order " + std::to_string(m) +
                                              " span only " + std::to_string(out.size()) + " of " +
                                              std::to_string(a.rows()) + " dimensions");
  }
  return out;
}

BrauerCharacter brauer_character(const Representation& rho) {
  const Group& g = *rho.group();
  const std::uint32_t p = rho.field()->p();
  BrauerCharacter chi;
  chi.label = rho.label();
  chi.degree = rho.degree();
  chi.classes = p_regular_classes(g, p);
  chi.conductor = brauer_conductor(g, p);
  const unsigned k = lift_degree(p, rho.field()->k(), chi.conductor);
  const FieldPtr big = ladder_field(p, k, std::uint64_t{1} << 31);
  const FieldEmbedding emb(rho.field(), big);
  for (std::size_t c : chi.classes) {
    const auto& cls = g.classes()[c];
    CyclotomicInt v = CyclotomicInt::integer(0, chi.conductor);
    if (cls.order == 1) {
      v = CyclotomicInt::integer(static_cast<std::int64_t>(rho.degree()), chi.conductor);
    } else {
      const Matrix a = rho.image(cls.rep).embedded(emb);
      for (const auto& z : lift_eigenvalues(a, cls.order)) v += z;
      v = v.lifted(chi.conductor);
    }
    chi.values.push_back(std::move(v));
  }
  return chi;
}

std::string character_key(const BrauerCharacter& chi) {
  std::string key = "d" + hex_word(chi.degree) + "M" + hex_word(chi.conductor);
  for (const auto& v : chi.values) {
    key += "|";
    const CyclotomicInt lifted = v.lifted(chi.conductor);
    for (std::int64_t c : lifted.coeffs()) {
      // Offset and negate so larger coefficients sort first.
      key += hex_word(static_cast<std::uint64_t>((std::int64_t{1} << 40) - c));
    }
  }
  return key;
}

// ---------------------------------------------------------------------------

namespace {

// Tensor closure over a fixed field. Returns false when some factor is not
// absolutely irreducible, so the caller must enlarge the field.
bool closure(const GroupPtr& g, std::uint32_t p, const Representation& faithful, const MeataxeOptions& opts,
             std::vector<Representation>& found) {
  const std::size_t target = p_regular_classes(*g, p).size();
  found.assign(1, trivial_rep(g, faithful.field()));
  std::vector<Representation> frontier = found;
  // Terminates: each round adds a new isomorphism class or stops.
  while (found.size() < target) {
    std::vector<Representation> next;
    for (const auto& x : frontier) {
      const auto cf = composition_factors(tensor(x, faithful), opts);
      for (const auto& [factor, mult] : cf.factors) {
        if (hom_dim(factor, factor) != 1) return false;
        const bool known = std::any_of(found.begin(), found.end(),
                                       [&](const Representation& y) { return isomorphic_irreducibles(y, factor); });
        if (known) continue;
        found.push_back(factor);
        next.push_back(factor);
      }
      if (found.size() >= target) break;
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  if (found.size() != target) {
    throw Error(ErrorKind::ClosureStalled, g->name() + ": found " + std::to_string(found.size()) + " of " +
                                               std::to_string(target) + " irreducibles");
  }
  return true;
}

}  // namespace

std::vector<Representation> enumerate_irreducibles(const GroupPtr& g, std::uint32_t p, const Representation& faithful,
                                                   const MeataxeOptions& opts) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (faithful.field()->p() != p) throw Error(ErrorKind::IncompatibleFields, "faithful module has wrong characteristic");
  const unsigned k0 = faithful.field()->k();
  for (unsigned k : {1u, 2u, 3u, 4u, 6u, 8u, 12u}) {
    if (k % k0 != 0) continue;
    const FieldPtr f = ladder_field(p, k);
    std::vector<Representation> found;
    if (!closure(g, p, rebase(faithful, f), opts, found)) continue;
    std::vector<std::pair<std::string, std::size_t>> order;
    for (std::size_t i = 0; i < found.size(); ++i) order.emplace_back(character_key(brauer_character(found[i])), i);
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
      const auto da = found[a.second].degree();
      const auto db = found[b.second].degree();
      return da != db ? da < db : a.first < b.first;
    });
    std::vector<Representation> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
      out.push_back(found[order[i].second].relabeled(g->name() + ".irr" + std::to_string(i)));
    }
    return out;
  }
  throw Error(ErrorKind::SplittingFieldNotFoundInLadder, g->name());
}

std::vector<Representation> enumerate_irreducibles(const GroupPtr& g, std::uint32_t p, const MeataxeOptions& opts) {
  const FieldPtr fp = make_field(p, 1);
  if (g->field()->p() == p) return enumerate_irreducibles(g, p, natural_rep(g, ladder_field(p, g->field()->k())), opts);
  return enumerate_irreducibles(g, p, regular(g, fp), opts);
}

BrauerTable brauer_table(const GroupPtr& g, std::uint32_t p, const MeataxeOptions& opts) {
  BrauerTable t;
  t.group = g;
  t.p = p;
  t.irreducibles = enumerate_irreducibles(g, p, opts);
  t.classes = p_regular_classes(*g, p);
  t.conductor = brauer_conductor(*g, p);
  const auto names = class_names(*g);
  for (std::size_t c : t.classes) {
    t.class_names.push_back(names[c]);
    t.orders.push_back(g->classes()[c].order);
    t.sizes.push_back(g->classes()[c].members.size());
  }
  for (const auto& r : t.irreducibles) t.rows.push_back(brauer_character(r));
  return t;
}

std::vector<std::string> class_names(const Group& g) {
  std::vector<std::string> out;
  const bool two_by_two = g.degree() == 2 && g.field()->k() == 1;
  std::vector<std::pair<std::uint64_t, int>> letters;
  for (const auto& c : g.classes()) {
    if (two_by_two) {
      out.push_back(matrix_class_name(g.element(c.rep)));
      continue;
    }
    auto it = std::find_if(letters.begin(), letters.end(), [&](const auto& x) { return x.first == c.order; });
    if (it == letters.end()) {
      letters.emplace_back(c.order, 0);
      it = std::prev(letters.end());
    }
    const int n = it->second++;
    std::string name = std::to_string(c.order);
    name += static_cast<char>('A' + n % 26);
    if (n >= 26) name += std::to_string(n / 26);
    out.push_back(name);
  }
  return out;
}

}  // namespace modrep
