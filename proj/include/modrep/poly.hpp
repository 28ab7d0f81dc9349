#pragma once

// Univariate polynomials over a Field (coefficients low-to-high, no
// trailing zeros; the zero polynomial is empty). Just enough for
// characteristic polynomials and factor extraction in the Meataxe.

#include <vector>

#include "modrep/field.hpp"

namespace modrep {

using Poly = std::vector<Elem>;

namespace poly {

void trim(Poly& a);
int degree(const Poly& a);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
/// Quotient and remainder; throws ZeroElement on division by zero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly mod(const Field& f, const Poly& a, const Poly& b);
Poly gcd(const Field& f, Poly a, Poly b);  // monic
Poly monic(const Field& f, const Poly& a);
Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m);
Elem eval(const Field& f, const Poly& a, Elem x);

/// Distinct irreducible factors of `a` grouped by degree: entry d is the
/// product of the monic irreducible factors of degree d (1 if none).
std::vector<Poly> distinct_degree_parts(const Field& f, const Poly& a, int max_degree);

}  // namespace poly
}  // namespace modrep
