#pragma once

// Matrix representations and the functors built on them.

#include <memory>
#include <string>
#include <vector>

#include "modrep/group.hpp"

namespace modrep {

/// A homomorphism G -> GL_n(F), stored as the image of every element
/// (indexed like the group). Images act on column vectors.
class Representation {
 public:
  Representation() = default;

  /// Extends generator images along the group's BFS tree and checks the
  /// result is a homomorphism (every Cayley-graph edge when affordable,
  /// otherwise products of sampled pairs).
  static Representation from_generator_images(GroupPtr group, FieldPtr field, std::vector<Matrix> gen_images,
                                              std::string label, bool validate = true);
  /// Trusted constructor for images produced by a functor.
  static Representation from_images(GroupPtr group, FieldPtr field, std::vector<Matrix> images, std::string label);

  const GroupPtr& group() const noexcept { return group_; }
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::string& label() const noexcept { return label_; }
  const Matrix& image(std::size_t element) const { return (*images_).at(element); }
  const std::vector<Matrix>& images() const noexcept { return *images_; }
  std::vector<Matrix> gen_images() const;

  Representation relabeled(std::string label) const;

  /// Full check over all pairs (exhaustive) or the Cayley-graph edges.
  bool is_homomorphism(bool all_pairs = false) const;

 private:
  GroupPtr group_;
  FieldPtr field_;
  std::size_t degree_ = 0;
  std::shared_ptr<const std::vector<Matrix>> images_;
  std::string label_;
};

Representation trivial_rep(const GroupPtr& g, const FieldPtr& field);
/// The defining matrices of `g`, embedded into `field`.
Representation natural_rep(const GroupPtr& g, const FieldPtr& field);

Representation restrict(const Representation& rho, const GroupPtr& h);
/// Block realization over fixed left coset reps t_1..t_m of N in G: block
/// (i,j) of g is sigma(t_i^-1 g t_j) when that lies in N.
Representation induce(const Representation& sigma, const GroupPtr& g);
Representation induce(const Representation& sigma, const CosetData& cosets);
/// n -> sigma(x^-1 n x); x must normalize N.
Representation conjugate(const Representation& sigma, const Matrix& x);
Representation tensor(const Representation& a, const Representation& b);
Representation direct_sum(const Representation& a, const Representation& b);
Representation multiple(const Representation& a, std::size_t times);
Representation inflate(const Representation& psi, const QuotientGroup& q);
Representation regular(const GroupPtr& g, const FieldPtr& field);
/// g -> rho(g^-1)^T.
Representation dual(const Representation& rho);
/// Entries pushed into a larger field of the same characteristic.
Representation rebase(const Representation& rho, const FieldPtr& field);
/// Rebase both onto the compositum of their fields (same p).
std::pair<Representation, Representation> common_field(const Representation& a, const Representation& b);
FieldPtr compositum(const FieldPtr& a, const FieldPtr& b);

/// Action on an invariant subspace (rows of `basis`, in RREF).
Representation subrepresentation(const Representation& rho, const Matrix& basis, std::string label);
/// Action on the quotient by an invariant subspace (rows of `basis`, RREF).
Representation quotient_representation(const Representation& rho, const Matrix& basis, std::string label);

}  // namespace modrep
