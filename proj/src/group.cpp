#include "modrep/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace modrep {

std::string element_key(const Matrix& m) {
  std::string key;
  key.reserve(m.entries().size() * 4);
  for (Elem v : m.entries()) {
    key.push_back(static_cast<char>((v >> 24) & 0xff));
    key.push_back(static_cast<char>((v >> 16) & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
    key.push_back(static_cast<char>(v & 0xff));
  }
  return key;
}

Group::Group(std::string name, FieldPtr field, std::size_t degree)
    : name_(std::move(name)), field_(std::move(field)), degree_(degree) {}

GroupPtr Group::generate(const std::vector<Matrix>& gens, std::string name, std::size_t bound) {
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "at least one generator is required");
  const FieldPtr field = gens[0].field();
  const std::size_t n = gens[0].rows();
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != n || !g.field()->same_as(*field)) {
      throw Error(ErrorKind::DimensionMismatch, "generators must be square of a common size and field");
    }
    if (determinant(g) == 0) throw Error(ErrorKind::SingularGenerator, g.to_string());
  }
  auto group = std::make_shared<Group>(std::move(name), field, n);
  Group& G = *group;
  G.gen_matrices_ = gens;

  auto add = [&](Matrix m, std::string key, std::size_t parent, std::size_t gen) {
    G.index_.emplace(key, G.elements_.size());
    G.elements_.push_back(std::move(m));
    G.keys_.push_back(std::move(key));
    G.parent_.push_back(parent);
    G.parent_gen_.push_back(gen);
  };
  Matrix id = Matrix::identity(field, n);
  add(id, element_key(id), 0, 0);

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::map<std::string, std::tuple<Matrix, std::size_t, std::size_t>> fresh;
    for (std::size_t x : frontier) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Matrix y = G.elements_[x] * gens[j];
        std::string key = element_key(y);
        if (G.index_.count(key) || fresh.count(key)) continue;
        fresh.emplace(std::move(key), std::make_tuple(std::move(y), x, j));
      }
    }
    frontier.clear();
    for (auto& [key, val] : fresh) {
      if (G.elements_.size() >= bound) {
        throw Error(ErrorKind::BoundExceeded, "group exceeds " + std::to_string(bound) + " elements");
      }
      frontier.push_back(G.elements_.size());
      add(std::move(std::get<0>(val)), key, std::get<1>(val), std::get<2>(val));
    }
  }
  for (const auto& g : gens) G.gens_.push_back(G.index_.at(element_key(g)));
  G.finish(bound);
  return group;
}

void Group::finish(std::size_t /*bound*/) {
  const std::size_t n = elements_.size();
  // Right multiplication by each generator, then the full table column by
  // column along the spanning tree.
  std::vector<std::vector<std::size_t>> right(gen_matrices_.size(), std::vector<std::size_t>(n));
  for (std::size_t j = 0; j < gen_matrices_.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) right[j][i] = index_.at(element_key(elements_[i] * gen_matrices_[j]));
  }
  inv_.resize(n);
  if (n <= 4096) {
    table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) table_[i * n] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j < n; ++j) {
      const auto& r = right[parent_gen_[j]];
      const std::size_t pj = parent_[j];
      for (std::size_t i = 0; i < n; ++i) table_[i * n + j] = static_cast<std::uint32_t>(r[table_[i * n + pj]]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (table_[i * n + j] == 0) {
          inv_[i] = j;
          break;
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) inv_[i] = index_.at(element_key(elements_[i].inverse()));
  }

  orders_.assign(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::uint64_t o = 1;
    std::size_t x = i;
    while (x != 0) {
      x = mul(x, i);
      ++o;
    }
    orders_[i] = o;
  }

  class_of_.assign(n, static_cast<std::size_t>(-1));
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of_[i] != static_cast<std::size_t>(-1)) continue;
    ConjugacyClass cls;
    std::vector<std::size_t> queue{i};
    class_of_[i] = classes.size();
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t g : gens_) {
        const std::size_t y = conj(g, queue[q]);
        if (class_of_[y] == static_cast<std::size_t>(-1)) {
          class_of_[y] = classes.size();
          queue.push_back(y);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    cls.members = std::move(queue);
    cls.rep = *std::min_element(cls.members.begin(), cls.members.end(),
                                [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
    cls.order = orders_[i];
    classes.push_back(std::move(cls));
  }
  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = classes[a];
    const auto& y = classes[b];
    if (x.order != y.order) return x.order < y.order;
    if (x.members.size() != y.members.size()) return x.members.size() < y.members.size();
    return keys_[x.rep] < keys_[y.rep];
  });
  std::vector<std::size_t> new_id(classes.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    new_id[perm[k]] = k;
    classes_.push_back(std::move(classes[perm[k]]));
  }
  for (auto& c : class_of_) c = new_id[c];
}

std::optional<std::size_t> Group::index_of(const Matrix& m) const {
  if (m.rows() != degree_ || m.cols() != degree_) return std::nullopt;
  auto it = index_.find(element_key(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Group::mul(std::size_t i, std::size_t j) const {
  const std::size_t n = elements_.size();
  if (!table_.empty()) return table_[i * n + j];
  return index_.at(element_key(elements_[i] * elements_[j]));
}

std::uint64_t Group::exponent() const {
  std::uint64_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

bool Group::is_abelian() const {
  for (std::size_t a : gens_)
    for (std::size_t b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> inclusion(const Group& g, const Group& h) {
  if (g.degree() != h.degree() || !g.field()->same_as(*h.field())) {
    throw Error(ErrorKind::NotASubgroup, h.name() + " is not a matrix subgroup of " + g.name());
  }
  std::vector<std::size_t> map(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto idx = g.index_of(h.element(i));
    if (!idx) throw Error(ErrorKind::NotASubgroup, h.name() + " is not contained in " + g.name());
    map[i] = *idx;
  }
  return map;
}

bool is_subgroup(const Group& g, const Group& h) {
  if (g.degree() != h.degree() || !g.field()->same_as(*h.field())) return false;
  return std::all_of(h.elements().begin(), h.elements().end(), [&](const Matrix& m) { return g.contains(m); });
}

std::vector<std::size_t> p_regular_classes(const Group& g, std::uint32_t p) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    if (g.classes()[c].order % p != 0) out.push_back(c);
  }
  return out;
}

bool is_normal(const Group& g, const Group& n) {
  inclusion(g, n);
  for (const auto& x : g.gen_matrices()) {
    const Matrix xi = x.inverse();
    for (const auto& y : n.gen_matrices()) {
      if (!n.contains(x * y * xi)) return false;
    }
  }
  return true;
}

bool normalizes(const Group& n, const Matrix& x) {
  const Matrix xi = x.inverse();
  for (const auto& y : n.gen_matrices()) {
    if (!n.contains(xi * y * x)) return false;
  }
  return true;
}

CosetData coset_reps(const GroupPtr& g, const GroupPtr& h) {
  CosetData d;
  d.group = g;
  d.subgroup = h;
  d.sub_in_group = inclusion(*g, *h);
  const std::size_t none = static_cast<std::size_t>(-1);
  d.coset_of.assign(g->size(), none);
  d.sub_part.assign(g->size(), none);
  for (std::size_t i = 0; i < g->size(); ++i) {
    if (d.coset_of[i] != none) continue;
    const std::size_t c = d.reps.size();
    d.reps.push_back(i);
    for (std::size_t k = 0; k < h->size(); ++k) {
      const std::size_t x = g->mul(i, d.sub_in_group[k]);
      d.coset_of[x] = c;
      d.sub_part[x] = k;
    }
  }
  return d;
}

QuotientGroup quotient(const GroupPtr& g, const GroupPtr& n) {
  if (!is_normal(*g, *n)) throw Error(ErrorKind::NotNormal, n->name() + " is not normal in " + g->name());
  QuotientGroup q;
  q.parent = g;
  q.normal = n;
  q.cosets = coset_reps(g, n);
  const std::size_t m = q.cosets.index();
  auto perm_of = [&](std::size_t x) {
    std::vector<std::size_t> perm(m);
    for (std::size_t c = 0; c < m; ++c) perm[c] = q.cosets.coset_of[g->mul(x, q.cosets.reps[c])];
    return permutation_matrix(g->field(), perm);
  };
  std::vector<Matrix> gens;
  for (std::size_t x : g->gens()) gens.push_back(perm_of(x));
  q.group = Group::generate(gens, g->name() + "/" + n->name());
  q.coset_to_element.resize(m);
  for (std::size_t c = 0; c < m; ++c) q.coset_to_element[c] = *q.group->index_of(perm_of(q.cosets.reps[c]));
  q.image.resize(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) q.image[i] = q.coset_to_element[q.cosets.coset_of[i]];
  return q;
}

// ---------------------------------------------------------------------------

namespace {

// The matrix-group builders hand out one shared object per p, so
// representations built in different places can be compared directly.
GroupPtr cached_group(std::map<std::uint32_t, GroupPtr>& cache, std::uint32_t p, GroupPtr (*build)(std::uint32_t)) {
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
  }
  GroupPtr g = build(p);
  std::lock_guard lock(mu);
  return cache.emplace(p, std::move(g)).first->second;
}

GroupPtr build_SL2(std::uint32_t p) {
  auto f = make_field(p, 1);
  auto u = Matrix::from_ints(f, {{1, 1}, {0, 1}});
  auto l = Matrix::from_ints(f, {{1, 0}, {1, 1}});
  return Group::generate({u, l}, "SL2(" + std::to_string(p) + ")");
}

GroupPtr build_GL2(std::uint32_t p) {
  auto f = make_field(p, 1);
  auto u = Matrix::from_ints(f, {{1, 1}, {0, 1}});
  auto l = Matrix::from_ints(f, {{1, 0}, {1, 1}});
  Matrix d = Matrix::identity(f, 2);
  d(0, 0) = f->primitive();
  std::vector<Matrix> gens{u, l};
  if (p > 2) gens.push_back(d);
  return Group::generate(gens, "GL2(" + std::to_string(p) + ")");
}

}  // namespace

GroupPtr make_SL2(std::uint32_t p) {
  static std::map<std::uint32_t, GroupPtr> cache;
  return cached_group(cache, p, build_SL2);
}

GroupPtr make_GL2(std::uint32_t p) {
  static std::map<std::uint32_t, GroupPtr> cache;
  return cached_group(cache, p, build_GL2);
}

Matrix permutation_matrix(const FieldPtr& field, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  Matrix m(field, n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || seen[perm[i]]) throw Error(ErrorKind::InvalidInput, "not a permutation");
    seen[perm[i]] = true;
    m(perm[i], i) = 1;
  }
  return m;
}

GroupPtr make_from_permutations(const std::vector<std::vector<std::size_t>>& perms, std::size_t n, std::uint32_t p,
                                std::string name) {
  auto f = make_field(p, 1);
  std::vector<Matrix> gens;
  for (const auto& perm : perms) {
    if (perm.size() != n) throw Error(ErrorKind::InvalidInput, "permutation of wrong length");
    gens.push_back(permutation_matrix(f, perm));
  }
  if (gens.empty()) gens.push_back(Matrix::identity(f, n));
  return Group::generate(gens, std::move(name));
}

GroupPtr subgroup_generated(const Group& g, const std::vector<std::size_t>& elems, std::string name) {
  std::vector<Matrix> gens;
  for (std::size_t e : elems) gens.push_back(g.element(e));
  if (gens.empty()) gens.push_back(g.element(0));
  return Group::generate(gens, std::move(name));
}

}  // namespace modrep
