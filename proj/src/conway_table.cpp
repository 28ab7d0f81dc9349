// Generated by tools/conway_table.py (brute-force search from the
// definition); cross-checked at test time against search_conway_polynomial.
#include <array>

#include "modrep/field.hpp"

namespace modrep {

namespace {

struct ConwayEntry {
  std::uint32_t p;
  unsigned k;
  std::array<std::uint32_t, 5> coeffs;  // low-to-high, monic, zero padded
};

constexpr ConwayEntry kConway[] = {
    {2, 1, {1, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {3, 1, {1, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {5, 1, {3, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {7, 1, {4, 1}},
    {7, 2, {3, 6, 1}},
    {7, 3, {4, 0, 6, 1}},
    {7, 4, {3, 4, 5, 0, 1}},
    {11, 1, {9, 1}},
    {11, 2, {2, 7, 1}},
    {11, 3, {9, 2, 0, 1}},
    {11, 4, {2, 10, 8, 0, 1}},
    {13, 1, {11, 1}},
    {13, 2, {2, 12, 1}},
    {13, 3, {11, 2, 0, 1}},
    {13, 4, {2, 12, 3, 0, 1}},
    {17, 1, {14, 1}},
    {17, 2, {3, 16, 1}},
    {17, 3, {14, 1, 0, 1}},
    {17, 4, {3, 10, 7, 0, 1}},
    {19, 1, {17, 1}},
    {19, 2, {2, 18, 1}},
    {19, 3, {17, 4, 0, 1}},
    {19, 4, {2, 11, 2, 0, 1}},
    {23, 1, {18, 1}},
    {23, 2, {5, 21, 1}},
    {23, 3, {18, 2, 0, 1}},
    {23, 4, {5, 19, 3, 0, 1}},
};

}  // namespace

std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, unsigned k) {
  for (const auto& e : kConway) {
    if (e.p == p && e.k == k) return std::vector<std::uint32_t>(e.coeffs.begin(), e.coeffs.begin() + k + 1);
  }
  return std::nullopt;
}

}  // namespace modrep
