#include "modrep/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace modrep {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field->from_int(rows[i][j]);
  }
  return m;
}

void Matrix::require_same_field(const Matrix& b) const {
  if (!(field_ == b.field_ || field_->same_as(*b.field_))) {
    throw Error(ErrorKind::ContextMismatch, field_->name() + " vs " + b.field_->name());
  }
}

Matrix Matrix::operator*(const Matrix& b) const {
  require_same_field(b);
  if (cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "product shape mismatch");
  Matrix c(field_, rows_, b.cols_);
  const Field& f = *field_;
  if (f.is_prime_field() && f.p() < (1u << 16)) {
    // Delayed reduction: products fit in 32 bits, so a 64-bit accumulator
    // holds 2^32 of them.
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t l = 0; l < cols_; ++l) {
        const std::uint64_t x = a_[i * cols_ + l];
        if (!x) continue;
        const Elem* brow = b.a_.data() + l * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * brow[j];
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c.a_[i * b.cols_ + j] = static_cast<Elem>(acc[j] % f.p());
    }
    return c;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Elem x = a_[i * cols_ + l];
      if (x) f.axpy(c.row(i), x, b.row(l));
    }
  }
  return c;
}

Matrix Matrix::operator+(const Matrix& b) const {
  require_same_field(b);
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "sum shape mismatch");
  Matrix c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = field_->add(a_[i], b.a_[i]);
  return c;
}

Matrix Matrix::operator-(const Matrix& b) const {
  require_same_field(b);
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "difference shape mismatch");
  Matrix c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = field_->sub(a_[i], b.a_[i]);
  return c;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix c = *this;
  for (auto& v : c.a_) v = field_->mul(v, s);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(aug);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= r.pivots.size() || r.pivots[i] != i) throw Error(ErrorKind::SingularGenerator, "matrix is singular");
  }
  Matrix inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

Matrix Matrix::pow(std::uint64_t e) const {
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> v) const {
  std::vector<Elem> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j]) acc = field_->add(acc, field_->mul(a_[i * cols_ + j], v[j]));
    }
    out[i] = acc;
  }
  return out;
}

std::vector<Elem> Matrix::apply_left(std::span<const Elem> v) const {
  std::vector<Elem> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i]) field_->axpy(out, v[i], row(i));
  }
  return out;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](Elem x) { return x == 0; });
}

bool Matrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::embedded(const FieldEmbedding& e) const {
  if (!field_->same_as(*e.src())) throw Error(ErrorKind::ContextMismatch, "embedding source mismatch");
  Matrix m(e.dst(), rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = e(a_[i]);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_->to_string((*this)(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& a) {
  RrefResult out{a, 0, {}};
  Matrix& m = out.form;
  const Field& f = *m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    const Elem s = f.inv(m(r, c));
    f.scale(m.row(r), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m(i, c) != 0) f.axpy(m.row(i), f.neg(m(i, c)), m.row(r));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

Matrix kernel_basis(const Matrix& a) {
  const auto r = rref(a);
  const Field& f = *a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  const std::size_t nullity = a.cols() - r.rank;
  Matrix k(a.field(), nullity, a.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(out, free) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k(out, r.pivots[i]) = f.neg(r.form(i, free));
    ++out;
  }
  return k;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!a.field()->same_as(*b.field())) throw Error(ErrorKind::ContextMismatch, "kron of different fields");
  const Field& f = *a.field();
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Elem x = a(i1, j1);
      if (!x) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          k(i1 * b.rows() + i2, j1 * b.cols() + j2) = f.mul(x, b(i2, j2));
    }
  return k;
}

std::size_t eigenspace_dim(const Matrix& a, Elem lambda) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "eigenspace of non-square matrix");
  Matrix m = a;
  const Field& f = *a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) m(i, i) = f.sub(m(i, i), lambda);
  return a.cols() - rank(m);
}

Elem determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Matrix m = a;
  const Field& f = *a.field();
  Elem det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(c).begin());
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Elem s = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c)) f.axpy(m.row(i), f.neg(f.mul(m(i, c), s)), m.row(c));
    }
  }
  return det;
}

Poly char_poly(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "char_poly of non-square matrix");
  const Field& f = *a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap_ranges(h.row(i).begin(), h.row(i).end(), h.row(m).begin());
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    const Elem t_inv = f.inv(h(m, m - 1));
    for (i = m + 1; i < n; ++i) {
      const Elem u = f.mul(h(i, m - 1), t_inv);
      if (u == 0) continue;
      f.axpy(h.row(i), f.neg(u), h.row(m));
      for (std::size_t r = 0; r < n; ++r) h(r, m) = f.add(h(r, m), f.mul(u, h(r, i)));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = poly::mul(f, Poly{f.neg(h(m - 1, m - 1)), 1}, p[m - 1]);
    Elem t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h(m - i, m - i - 1));
      if (t == 0) break;
      const Elem c = f.mul(t, h(m - i - 1, m - 1));
      if (c) p[m] = poly::sub(f, p[m], poly::mul(f, Poly{c}, p[m - i - 1]));
    }
  }
  return p[n];
}

Matrix eval_poly(const Poly& p, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix acc(a.field(), n, n);
  const Field& f = *a.field();
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = f.add(acc(i, i), *it);
  }
  return acc;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  if (!a.field()->same_as(*b.field())) throw Error(ErrorKind::ContextMismatch, "block_diag of different fields");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(FieldPtr field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), pivot_row_(dim, -1) {}

void EchelonBasis::reduce(std::vector<Elem>& v) const {
  const Field& f = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem c = v[pivots_[r]];
    if (c) f.axpy(v, f.neg(c), rows_[r]);
  }
}

bool EchelonBasis::insert(std::vector<Elem> v) {
  reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  field_->scale(v, field_->inv(v[piv]));
  pivot_row_[piv] = static_cast<long>(rows_.size());
  pivots_.push_back(piv);
  rows_.push_back(std::move(v));
  return true;
}

bool EchelonBasis::contains(std::vector<Elem> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Matrix EchelonBasis::to_rref() const {
  Matrix m(field_, rows_.size(), dim_);
  for (std::size_t r = 0; r < rows_.size(); ++r) std::copy(rows_[r].begin(), rows_[r].end(), m.row(r).begin());
  return rref(m).form;
}

}  // namespace modrep
