#include "modrep/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "modrep/brauer.hpp"

namespace modrep {

namespace {

void require_compatible(const Representation& a, const Representation& b) {
  if (a.group() != b.group()) throw Error(ErrorKind::GroupMismatch, a.label() + " vs " + b.label());
  if (!a.field()->same_as(*b.field())) throw Error(ErrorKind::ContextMismatch, a.label() + " vs " + b.label());
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Nonzero random vector in the row space of `basis`.
std::vector<Elem> random_combination(const Matrix& basis, std::mt19937_64& rng) {
  const Field& f = *basis.field();
  std::vector<Elem> v(basis.cols(), 0);
  while (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; })) {
    for (std::size_t i = 0; i < basis.rows(); ++i) f.axpy(v, static_cast<Elem>(rng() % f.order()), basis.row(i));
  }
  return v;
}

}  // namespace

HomSpace hom_space(const Representation& src, const Representation& dst) {
  require_compatible(src, dst);
  const std::size_t n1 = src.degree();
  const std::size_t n2 = dst.degree();
  const std::size_t unknowns = n1 * n2;
  const FieldPtr& fp = src.field();
  const Field& f = *fp;
  EchelonBasis system(fp, unknowns);
  const auto g1 = src.gen_images();
  const auto g2 = dst.gen_images();
  // Row (a,c) of T src(g) - dst(g) T = 0, unknown (a,b) at a*n1+b.
  for (std::size_t j = 0; j < g1.size() && !system.full(); ++j) {
    const Matrix& r1 = g1[j];
    const Matrix& r2 = g2[j];
    for (std::size_t a = 0; a < n2 && !system.full(); ++a) {
      for (std::size_t c = 0; c < n1 && !system.full(); ++c) {
        std::vector<Elem> row(unknowns, 0);
        for (std::size_t b = 0; b < n1; ++b) row[a * n1 + b] = r1(b, c);
        for (std::size_t b = 0; b < n2; ++b) {
          const Elem v = r2(a, b);
          if (v) row[b * n1 + c] = f.sub(row[b * n1 + c], v);
        }
        system.insert(std::move(row));
      }
    }
  }
  HomSpace h{src, dst, {}};
  if (system.full()) return h;
  const Matrix kernel = kernel_basis(system.to_rref());
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    std::vector<Elem> entries(kernel.row(i).begin(), kernel.row(i).end());
    h.basis.emplace_back(fp, n2, n1, std::move(entries));
  }
  return h;
}

std::size_t hom_dim(const Representation& src, const Representation& dst) { return hom_space(src, dst).dim(); }

Matrix spin(const Representation& rho, const std::vector<std::vector<Elem>>& vectors, bool transpose) {
  const auto gens = rho.gen_images();
  EchelonBasis basis(rho.field(), rho.degree());
  std::vector<std::vector<Elem>> queue;
  for (const auto& v : vectors) {
    if (basis.insert(v)) queue.push_back(v);
  }
  for (std::size_t q = 0; q < queue.size() && !basis.full(); ++q) {
    for (const auto& g : gens) {
      auto w = transpose ? g.apply_left(queue[q]) : g.apply(queue[q]);
      if (basis.insert(w)) queue.push_back(std::move(w));
      if (basis.full()) break;
    }
  }
  return basis.to_rref();
}

IrreducibilityResult is_irreducible(const Representation& rho, const MeataxeOptions& opts) {
  IrreducibilityResult res;
  const std::size_t n = rho.degree();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "zero-dimensional representation");
  if (n == 1) {
    res.irreducible = true;
    res.certificate = "degree-1";
    return res;
  }
  const FieldPtr& fp = rho.field();
  const Field& f = *fp;
  const auto gens = rho.gen_images();
  for (int attempt = 0; attempt < opts.budget; ++attempt) {
    std::mt19937_64 rng(splitmix64(opts.seed ^ splitmix64(static_cast<std::uint64_t>(attempt))));
    // Random group-algebra element: a combination of a few random words.
    Matrix b(fp, n, n);
    const int terms = 2 + static_cast<int>(rng() % 2);
    for (int t = 0; t < terms; ++t) {
      const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opts.max_word));
      Matrix w = gens[rng() % gens.size()];
      for (int l = 1; l < len; ++l) w = w * gens[rng() % gens.size()];
      const Elem c = static_cast<Elem>(rng() % f.order());
      b = b + w.scaled(c);
    }
    const Elem shift = static_cast<Elem>(rng() % f.order());
    for (std::size_t i = 0; i < n; ++i) b(i, i) = f.add(b(i, i), shift);

    const Poly cp = char_poly(b);
    const auto parts = poly::distinct_degree_parts(f, cp, static_cast<int>(n));
    for (std::size_t d = 1; d < parts.size(); ++d) {
      const Poly& h = parts[d];
      if (poly::degree(h) < 1) continue;
      const Matrix hb = eval_poly(h, b);
      const Matrix kernel = kernel_basis(hb);
      if (kernel.rows() == 0) continue;
      Matrix sub = spin(rho, {random_combination(kernel, rng)});
      if (sub.rows() < n) {
        res.invariant_subspace = std::move(sub);
        res.attempt = attempt;
        res.factor_degree = static_cast<int>(d);
        res.certificate = "spin";
        return res;
      }
      // Norton's test is conclusive only when h is a single irreducible
      // factor whose kernel has dimension deg h.
      if (kernel.rows() != d || static_cast<std::size_t>(poly::degree(h)) != d) continue;
      const Matrix kernel_t = kernel_basis(hb.transpose());
      const Matrix dual_sub = spin(rho, {random_combination(kernel_t, rng)}, true);
      if (dual_sub.rows() < n) {
        // The annihilator of a proper row-invariant subspace is a proper
        // column-invariant subspace.
        res.invariant_subspace = rref(kernel_basis(dual_sub)).form;
        res.attempt = attempt;
        res.factor_degree = static_cast<int>(d);
        res.certificate = "dual-spin";
        return res;
      }
      res.irreducible = true;
      res.attempt = attempt;
      res.factor_degree = static_cast<int>(d);
      res.certificate = "norton";
      return res;
    }
  }
  throw Error(ErrorKind::InconclusiveAfterBudget,
              rho.label() + ": no conclusive algebra element in " + std::to_string(opts.budget) + " attempts");
}

bool is_absolutely_irreducible(const Representation& rho, const MeataxeOptions& opts) {
  return is_irreducible(rho, opts).irreducible && hom_dim(rho, rho) == 1;
}

// ---------------------------------------------------------------------------

std::size_t CompositionFactors::multiplicity_of(const Representation& irreducible) const {
  for (const auto& [rep, mult] : factors) {
    if (rep.degree() == irreducible.degree() && isomorphic_irreducibles(rep, irreducible)) return mult;
  }
  return 0;
}

std::size_t CompositionFactors::count() const {
  std::size_t c = 0;
  for (const auto& fm : factors) c += fm.second;
  return c;
}

bool isomorphic_irreducibles(const Representation& a, const Representation& b) {
  if (a.degree() != b.degree()) return false;
  return hom_dim(a, b) > 0;
}

bool isomorphic(const Representation& a, const Representation& b, std::uint64_t seed) {
  if (a.degree() != b.degree()) return false;
  const auto h = hom_space(a, b);
  if (h.dim() == 0) return false;
  for (const auto& t : h.basis) {
    if (determinant(t) != 0) return true;
  }
  const Field& f = *a.field();
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    Matrix t(a.field(), b.degree(), a.degree());
    for (const auto& basis : h.basis) t = t + basis.scaled(static_cast<Elem>(rng() % f.order()));
    if (determinant(t) != 0) return true;
  }
  return false;
}

CompositionFactors composition_factors(const Representation& rho, const MeataxeOptions& opts) {
  std::vector<Representation> pending{rho};
  std::vector<Representation> irreducibles;
  while (!pending.empty()) {
    Representation m = std::move(pending.back());
    pending.pop_back();
    auto verdict = is_irreducible(m, opts);
    if (verdict.irreducible) {
      irreducibles.push_back(std::move(m));
      continue;
    }
    pending.push_back(quotient_representation(m, verdict.invariant_subspace, m.label()));
    pending.push_back(subrepresentation(m, verdict.invariant_subspace, m.label()));
  }

  std::vector<std::pair<Representation, std::size_t>> grouped;
  for (auto& x : irreducibles) {
    bool merged = false;
    for (auto& [rep, mult] : grouped) {
      if (isomorphic_irreducibles(rep, x)) {
        ++mult;
        merged = true;
        break;
      }
    }
    if (!merged) grouped.emplace_back(std::move(x), 1);
  }

  CompositionFactors out;
  out.total_degree = rho.degree();
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < grouped.size(); ++i) {
    order.emplace_back(character_key(brauer_character(grouped[i].first)), i);
  }
  std::sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    const auto dx = grouped[x.second].first.degree();
    const auto dy = grouped[y.second].first.degree();
    if (dx != dy) return dx < dy;
    return x.first < y.first;
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& [rep, mult] = grouped[order[i].second];
    out.factors.emplace_back(rep.relabeled(rho.label() + "/f" + std::to_string(i)), mult);
  }
  std::size_t total = 0;
  for (const auto& [rep, mult] : out.factors) total += rep.degree() * mult;
  if (total != rho.degree()) throw Error(ErrorKind::DimensionMismatch, "composition factor degrees do not add up");
  return out;
}

std::size_t multiplicity_in_semisimple(const Representation& sigma, const Representation& m,
                                       const MeataxeOptions& opts) {
  if (!is_absolutely_irreducible(sigma, opts)) {
    throw Error(ErrorKind::NotAbsolutelyIrreducible, sigma.label());
  }
  return hom_dim(sigma, m);
}

// ---------------------------------------------------------------------------

FieldPtr ladder_field(std::uint32_t p, unsigned k, std::uint64_t field_bound) {
  if (conway_polynomial(p, k)) return make_field(p, k, std::nullopt, field_bound);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > field_bound) throw Error(ErrorKind::FieldTooLarge, std::to_string(p) + "^" + std::to_string(k));
  }
  return make_field(p, k, search_conway_polynomial(p, k), field_bound);
}

SplittingField ensure_splitting_field(const std::vector<Representation>& reps, const MeataxeOptions& opts,
                                      std::uint64_t field_bound) {
  if (reps.empty()) throw Error(ErrorKind::InvalidInput, "no representations given");
  const std::uint32_t p = reps[0].field()->p();
  unsigned base = 1;
  for (const auto& r : reps) base = std::lcm(base, r.field()->k());
  for (unsigned k : {1u, 2u, 3u, 4u, 6u, 8u, 12u}) {
    if (k % base != 0) continue;
    FieldPtr f;
    try {
      f = ladder_field(p, k, field_bound);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::FieldTooLarge) break;
      throw;
    }
    std::vector<Representation> rebased;
    bool split = true;
    for (const auto& r : reps) {
      rebased.push_back(rebase(r, f));
      for (const auto& [factor, mult] : composition_factors(rebased.back(), opts).factors) {
        if (hom_dim(factor, factor) != 1) {
          split = false;
          break;
        }
      }
      if (!split) break;
    }
    if (split) return {f, std::move(rebased)};
  }
  throw Error(ErrorKind::SplittingFieldNotFoundInLadder, "no splitting field up to degree 12");
}

}  // namespace modrep
