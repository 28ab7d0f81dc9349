#pragma once

// Finite matrix groups stored by full enumeration.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "modrep/matrix.hpp"

namespace modrep {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct ConjugacyClass {
  std::size_t rep = 0;               // key-minimal member
  std::vector<std::size_t> members;  // sorted by index
  std::uint64_t order = 1;           // element order of the members
};

inline constexpr std::size_t kDefaultGroupBound = 100000;

class Group {
 public:
  /// BFS closure of `gens`; elements are ordered by discovery with each new
  /// frontier sorted by canonical key, identity first.
  static GroupPtr generate(const std::vector<Matrix>& gens, std::string name,
                           std::size_t bound = kDefaultGroupBound);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t degree() const noexcept { return degree_; }

  const Matrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  const std::string& key(std::size_t i) const { return keys_.at(i); }
  std::optional<std::size_t> index_of(const Matrix& m) const;
  bool contains(const Matrix& m) const { return index_of(m).has_value(); }

  /// Indices of the generators (in the order supplied, duplicates allowed).
  const std::vector<std::size_t>& gens() const noexcept { return gens_; }
  const std::vector<Matrix>& gen_matrices() const noexcept { return gen_matrices_; }
  /// Spanning tree of the BFS: element(i) = element(parent(i)) * gen_matrices()[parent_gen(i)].
  std::size_t parent(std::size_t i) const { return parent_.at(i); }
  std::size_t parent_gen(std::size_t i) const { return parent_gen_.at(i); }

  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const { return inv_.at(i); }
  std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }
  std::uint64_t order_of(std::size_t i) const { return orders_.at(i); }
  std::uint64_t exponent() const;

  /// Classes sorted by (element order, class size, rep key).
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_.at(i); }
  bool is_abelian() const;

  Group(std::string name, FieldPtr field, std::size_t degree);

 private:
  void finish(std::size_t bound);

  std::string name_;
  FieldPtr field_;
  std::size_t degree_;
  std::vector<Matrix> elements_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> gens_;
  std::vector<Matrix> gen_matrices_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_gen_;
  std::vector<std::uint32_t> table_;  // |G|^2 multiplication table when small
  std::vector<std::size_t> inv_;
  std::vector<std::uint64_t> orders_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

std::string element_key(const Matrix& m);

/// Map from H-indices to G-indices; throws NotASubgroup.
std::vector<std::size_t> inclusion(const Group& g, const Group& h);
bool is_subgroup(const Group& g, const Group& h);

std::vector<std::size_t> p_regular_classes(const Group& g, std::uint32_t p);
bool is_normal(const Group& g, const Group& n);
/// True iff x^-1 N x = N.
bool normalizes(const Group& n, const Matrix& x);

/// Left cosets g H of H in G.
struct CosetData {
  GroupPtr group;
  GroupPtr subgroup;
  std::vector<std::size_t> sub_in_group;  // H index -> G index
  std::vector<std::size_t> reps;          // G indices, reps[0] = identity
  std::vector<std::size_t> coset_of;      // G index -> coset number
  std::vector<std::size_t> sub_part;      // G index -> H index h, g = rep * h

  std::size_t index() const noexcept { return reps.size(); }
};

CosetData coset_reps(const GroupPtr& g, const GroupPtr& h);

/// G/N realized faithfully as permutation matrices of the left action on
/// the cosets, so quotient representations reuse the matrix machinery.
struct QuotientGroup {
  GroupPtr parent;
  GroupPtr normal;
  GroupPtr group;                     // the quotient as a permutation group
  CosetData cosets;
  std::vector<std::size_t> image;     // parent index -> quotient index
  std::vector<std::size_t> coset_to_element;  // coset number -> quotient index
};

QuotientGroup quotient(const GroupPtr& g, const GroupPtr& n);

// Builders.
GroupPtr make_SL2(std::uint32_t p);
GroupPtr make_GL2(std::uint32_t p);
/// Permutations are image lists on {0..n-1}; the matrix of pi sends e_i to
/// e_pi(i), so products compose right to left.
GroupPtr make_from_permutations(const std::vector<std::vector<std::size_t>>& perms, std::size_t n,
                                std::uint32_t p, std::string name);
Matrix permutation_matrix(const FieldPtr& field, const std::vector<std::size_t>& perm);

/// Subgroup of `g` generated by the given elements of `g`.
GroupPtr subgroup_generated(const Group& g, const std::vector<std::size_t>& elems, std::string name);

}  // namespace modrep
