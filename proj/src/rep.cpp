#include "modrep/rep.hpp"

#include <numeric>
#include <random>

namespace modrep {

namespace {

std::vector<Matrix> extend_along_tree(const Group& g, const FieldPtr& field, std::size_t degree,
                                      const std::vector<Matrix>& gen_images) {
  std::vector<Matrix> images;
  images.reserve(g.size());
  images.push_back(Matrix::identity(field, degree));
  for (std::size_t i = 1; i < g.size(); ++i) images.push_back(images[g.parent(i)] * gen_images[g.parent_gen(i)]);
  return images;
}

}  // namespace

Representation Representation::from_generator_images(GroupPtr group, FieldPtr field, std::vector<Matrix> gen_images,
                                                     std::string label, bool validate) {
  if (gen_images.size() != group->gen_matrices().size()) {
    throw Error(ErrorKind::DegreeMismatch, "expected " + std::to_string(group->gen_matrices().size()) +
                                               " generator images, got " + std::to_string(gen_images.size()));
  }
  const std::size_t n = gen_images.empty() ? 0 : gen_images[0].rows();
  for (const auto& m : gen_images) {
    if (!m.is_square() || m.rows() != n) throw Error(ErrorKind::DegreeMismatch, "generator images differ in degree");
    if (!m.field()->same_as(*field)) throw Error(ErrorKind::ContextMismatch, "generator image over wrong field");
  }
  Representation r;
  r.group_ = group;
  r.field_ = field;
  r.degree_ = n;
  r.label_ = std::move(label);
  r.images_ = std::make_shared<const std::vector<Matrix>>(extend_along_tree(*group, field, n, gen_images));
  if (validate) {
    // Every generator must map to its own image, and every Cayley edge must
    // commute; together these make the tree extension a homomorphism.
    const auto& gens = group->gens();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!(r.image(gens[j]) == gen_images[j])) {
        throw Error(ErrorKind::NotAHomomorphism, r.label_ + ": generator relation violated");
      }
    }
    const double cost = static_cast<double>(group->size()) * static_cast<double>(gens.size()) *
                        static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
    if (cost <= 3e8) {
      if (!r.is_homomorphism(false)) throw Error(ErrorKind::NotAHomomorphism, r.label_);
    } else {
      std::mt19937_64 rng(0x5eed);
      for (int t = 0; t < 20; ++t) {
        const std::size_t a = rng() % group->size();
        const std::size_t b = rng() % group->size();
        if (!(r.image(a) * r.image(b) == r.image(group->mul(a, b)))) {
          throw Error(ErrorKind::NotAHomomorphism, r.label_ + ": sampled product check failed");
        }
      }
    }
  }
  return r;
}

Representation Representation::from_images(GroupPtr group, FieldPtr field, std::vector<Matrix> images,
                                           std::string label) {
  if (images.size() != group->size()) throw Error(ErrorKind::DegreeMismatch, "one image per element required");
  Representation r;
  r.group_ = std::move(group);
  r.field_ = std::move(field);
  r.degree_ = images.empty() ? 0 : images[0].rows();
  r.label_ = std::move(label);
  r.images_ = std::make_shared<const std::vector<Matrix>>(std::move(images));
  return r;
}

std::vector<Matrix> Representation::gen_images() const {
  std::vector<Matrix> out;
  for (std::size_t g : group_->gens()) out.push_back(image(g));
  return out;
}

Representation Representation::relabeled(std::string label) const {
  Representation r = *this;
  r.label_ = std::move(label);
  return r;
}

bool Representation::is_homomorphism(bool all_pairs) const {
  const Group& g = *group_;
  if (!image(0).is_identity()) return false;
  if (all_pairs) {
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        if (!(image(a) * image(b) == image(g.mul(a, b)))) return false;
    return true;
  }
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t j : g.gens())
      if (!(image(a) * image(j) == image(g.mul(a, j)))) return false;
  return true;
}

// ---------------------------------------------------------------------------

Representation trivial_rep(const GroupPtr& g, const FieldPtr& field) {
  std::vector<Matrix> gens(g->gen_matrices().size(), Matrix::identity(field, 1));
  return Representation::from_generator_images(g, field, std::move(gens), "trivial", false);
}

Representation natural_rep(const GroupPtr& g, const FieldPtr& field) {
  FieldEmbedding e(g->field(), field);
  std::vector<Matrix> images;
  images.reserve(g->size());
  for (const auto& m : g->elements()) images.push_back(m.embedded(e));
  return Representation::from_images(g, field, std::move(images), "natural");
}

Representation restrict(const Representation& rho, const GroupPtr& h) {
  const auto map = inclusion(*rho.group(), *h);
  std::vector<Matrix> images;
  images.reserve(h->size());
  for (std::size_t i = 0; i < h->size(); ++i) images.push_back(rho.image(map[i]));
  return Representation::from_images(h, rho.field(), std::move(images), "Res(" + rho.label() + ")");
}

Representation induce(const Representation& sigma, const GroupPtr& g) {
  return induce(sigma, coset_reps(g, sigma.group()));
}

Representation induce(const Representation& sigma, const CosetData& cosets) {
  if (cosets.subgroup != sigma.group() && !(cosets.subgroup->size() == sigma.group()->size() &&
                                            is_subgroup(*cosets.subgroup, *sigma.group()))) {
    throw Error(ErrorKind::GroupMismatch, "coset data is for a different subgroup");
  }
  // sigma may live on an equal-but-distinct Group object; index through keys.
  std::vector<std::size_t> to_sigma(cosets.subgroup->size());
  for (std::size_t k = 0; k < to_sigma.size(); ++k) {
    to_sigma[k] = cosets.subgroup == sigma.group() ? k : *sigma.group()->index_of(cosets.subgroup->element(k));
  }
  const Group& g = *cosets.group;
  const std::size_t m = cosets.index();
  const std::size_t n = sigma.degree();
  std::vector<Matrix> images;
  images.reserve(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    Matrix d(sigma.field(), m * n, m * n);
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t y = g.mul(x, cosets.reps[j]);
      const std::size_t i = cosets.coset_of[y];
      const Matrix& block = sigma.image(to_sigma[cosets.sub_part[y]]);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) d(i * n + r, j * n + c) = block(r, c);
    }
    images.push_back(std::move(d));
  }
  return Representation::from_images(cosets.group, sigma.field(), std::move(images), "Ind(" + sigma.label() + ")");
}

Representation conjugate(const Representation& sigma, const Matrix& x) {
  const Group& n = *sigma.group();
  if (!normalizes(n, x)) throw Error(ErrorKind::DoesNotNormalize, "element does not normalize " + n.name());
  const Matrix xi = x.inverse();
  std::vector<Matrix> images;
  images.reserve(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) images.push_back(sigma.image(*n.index_of(xi * n.element(i) * x)));
  return Representation::from_images(sigma.group(), sigma.field(), std::move(images), "^g(" + sigma.label() + ")");
}

Representation tensor(const Representation& a, const Representation& b) {
  if (a.group() != b.group()) throw Error(ErrorKind::GroupMismatch, "tensor of representations of different groups");
  if (!a.field()->same_as(*b.field())) throw Error(ErrorKind::ContextMismatch, "tensor over different fields");
  std::vector<Matrix> images;
  images.reserve(a.group()->size());
  for (std::size_t i = 0; i < a.group()->size(); ++i) images.push_back(kron(a.image(i), b.image(i)));
  return Representation::from_images(a.group(), a.field(), std::move(images), a.label() + "(x)" + b.label());
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.group() != b.group()) throw Error(ErrorKind::GroupMismatch, "sum of representations of different groups");
  if (!a.field()->same_as(*b.field())) throw Error(ErrorKind::ContextMismatch, "sum over different fields");
  std::vector<Matrix> images;
  images.reserve(a.group()->size());
  for (std::size_t i = 0; i < a.group()->size(); ++i) images.push_back(block_diag(a.image(i), b.image(i)));
  return Representation::from_images(a.group(), a.field(), std::move(images), a.label() + "+" + b.label());
}

Representation multiple(const Representation& a, std::size_t times) {
  if (times == 0) throw Error(ErrorKind::InvalidInput, "multiple of zero copies");
  Representation r = a;
  for (std::size_t t = 1; t < times; ++t) r = direct_sum(r, a);
  return r.relabeled(std::to_string(times) + "*" + a.label());
}

Representation inflate(const Representation& psi, const QuotientGroup& q) {
  if (psi.group() != q.group) throw Error(ErrorKind::QuotientMismatch, "representation is not of this quotient");
  std::vector<Matrix> images;
  images.reserve(q.parent->size());
  for (std::size_t i = 0; i < q.parent->size(); ++i) images.push_back(psi.image(q.image[i]));
  return Representation::from_images(q.parent, psi.field(), std::move(images), "Inf(" + psi.label() + ")");
}

Representation regular(const GroupPtr& g, const FieldPtr& field) {
  std::vector<Matrix> images;
  images.reserve(g->size());
  for (std::size_t x = 0; x < g->size(); ++x) {
    Matrix m(field, g->size(), g->size());
    for (std::size_t h = 0; h < g->size(); ++h) m(g->mul(x, h), h) = 1;
    images.push_back(std::move(m));
  }
  return Representation::from_images(g, field, std::move(images), "regular");
}

Representation dual(const Representation& rho) {
  std::vector<Matrix> images;
  images.reserve(rho.group()->size());
  for (std::size_t i = 0; i < rho.group()->size(); ++i) images.push_back(rho.image(rho.group()->inv(i)).transpose());
  return Representation::from_images(rho.group(), rho.field(), std::move(images), rho.label() + "*");
}

Representation rebase(const Representation& rho, const FieldPtr& field) {
  if (rho.field()->same_as(*field)) return rho;
  FieldEmbedding e(rho.field(), field);
  std::vector<Matrix> images;
  images.reserve(rho.group()->size());
  for (const auto& m : rho.images()) images.push_back(m.embedded(e));
  return Representation::from_images(rho.group(), field, std::move(images), rho.label());
}

FieldPtr compositum(const FieldPtr& a, const FieldPtr& b) {
  if (a->p() != b->p()) throw Error(ErrorKind::IncompatibleFields, "different characteristics");
  if (a->k() % b->k() == 0) return a;
  if (b->k() % a->k() == 0) return b;
  const unsigned k = std::lcm(a->k(), b->k());
  if (conway_polynomial(a->p(), k)) return make_field(a->p(), k);
  return make_field(a->p(), k, search_conway_polynomial(a->p(), k));
}

std::pair<Representation, Representation> common_field(const Representation& a, const Representation& b) {
  const FieldPtr f = compositum(a.field(), b.field());
  return {rebase(a, f), rebase(b, f)};
}

Representation subrepresentation(const Representation& rho, const Matrix& basis, std::string label) {
  const auto r = rref(basis);
  const std::size_t s = r.rank;
  const Field& f = *rho.field();
  std::vector<Matrix> gens;
  for (const auto& g : rho.gen_images()) {
    Matrix m(rho.field(), s, s);
    for (std::size_t i = 0; i < s; ++i) {
      const auto v = g.apply(r.form.row(i));
      for (std::size_t t = 0; t < s; ++t) m(t, i) = v[r.pivots[t]];
      // The remaining coordinates must vanish for an invariant subspace.
      std::vector<Elem> check = v;
      for (std::size_t t = 0; t < s; ++t) f.axpy(check, f.neg(m(t, i)), r.form.row(t));
      for (Elem x : check) {
        if (x) throw Error(ErrorKind::InvalidInput, "subspace is not invariant");
      }
    }
    gens.push_back(std::move(m));
  }
  return Representation::from_generator_images(rho.group(), rho.field(), std::move(gens), std::move(label), false);
}

Representation quotient_representation(const Representation& rho, const Matrix& basis, std::string label) {
  const auto r = rref(basis);
  const std::size_t n = rho.degree();
  const Field& f = *rho.field();
  std::vector<bool> pivot(n, false);
  for (auto c : r.pivots) pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free.push_back(c);
  std::vector<Matrix> gens;
  for (const auto& g : rho.gen_images()) {
    Matrix m(rho.field(), free.size(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
      std::vector<Elem> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = g(i, free[j]);
      for (std::size_t t = 0; t < r.rank; ++t) {
        const Elem c = v[r.pivots[t]];
        if (c) f.axpy(v, f.neg(c), r.form.row(t));
      }
      for (std::size_t i = 0; i < free.size(); ++i) m(i, j) = v[free[i]];
    }
    gens.push_back(std::move(m));
  }
  return Representation::from_generator_images(rho.group(), rho.field(), std::move(gens), std::move(label), false);
}

}  // namespace modrep
