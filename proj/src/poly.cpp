#include "modrep/poly.hpp"

#include <algorithm>

namespace modrep::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.empty()) throw Error(ErrorKind::ZeroElement, "polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  const Elem lead_inv = f.inv(b.back());
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Elem c = f.mul(r.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, b[i]));
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly mod(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  const Elem s = f.inv(a.back());
  Poly r = a;
  for (auto& c : r) c = f.mul(c, s);
  return r;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly result{1};
  base = mod(f, base, m);
  while (e) {
    if (e & 1) result = mod(f, mul(f, result, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return mod(f, result, m);
}

Elem eval(const Field& f, const Poly& a, Elem x) {
  Elem acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

std::vector<Poly> distinct_degree_parts(const Field& f, const Poly& a, int max_degree) {
  std::vector<Poly> parts(static_cast<std::size_t>(max_degree) + 1, Poly{1});
  Poly m = monic(f, a);
  if (degree(m) < 1) return parts;
  // x^(q^d) mod m, iterated.
  Poly xq{0, 1};
  Poly found{1};  // product of all irreducible factors found so far
  for (int d = 1; d <= max_degree && d <= degree(m); ++d) {
    xq = powmod(f, xq, f.order(), m);
    Poly g = gcd(f, m, sub(f, xq, Poly{0, 1}));
    // g holds every irreducible factor of degree dividing d exactly once;
    // strip the ones of smaller degree.
    Poly common = gcd(f, g, found);
    Poly part = divmod(f, g, common).first;
    parts[static_cast<std::size_t>(d)] = monic(f, part);
    found = mul(f, found, parts[static_cast<std::size_t>(d)]);
  }
  return parts;
}

}  // namespace modrep::poly
