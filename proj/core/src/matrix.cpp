#include "elemgs/matrix.hpp"

#include <algorithm>

#include "elemgs/errors.hpp"

namespace elemgs {

Mat::Mat(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (!field_) throw InputError("matrix without a field");
}

Mat Mat::identity(FieldRef field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FieldRef field, const std::vector<std::vector<Elem>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Mat m(field, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!field->contains(rows[i][j])) throw InputError("matrix entry out of range for " + field->name());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Mat Mat::from_scalars(std::size_t rows, std::size_t cols, std::span<const Scalar> entries) {
  if (entries.size() != rows * cols) throw InputError("entry count does not match matrix shape");
  if (entries.empty()) throw InputError("cannot infer field of an empty matrix");
  FieldRef f = entries.front().finite_field();
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].is_finite() || !same_field(entries[i].finite_field(), f))
      throw InputError("mixed-field matrix entries at index " + std::to_string(i));
    m.a_[i] = entries[i].finite_value();
  }
  return m;
}

std::vector<Elem> Mat::column(std::size_t c) const {
  std::vector<Elem> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Mat::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e == 0; });
}

void Mat::require_same_field(const Mat& o) const {
  if (!same_field(field_, o.field_)) throw InputError("matrices over different fields");
}

Mat Mat::operator*(const Mat& o) const {
  require_same_field(o);
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch in product");
  const FiniteField& f = *field_;
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        Elem b = o(k, j);
        if (b) r(i, j) = f.add(r(i, j), f.mul(a, b));
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require_same_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in sum");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require_same_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in difference");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::scaled(Elem c) const {
  Mat r = *this;
  for (auto& e : r.a_) e = field_->mul(e, c);
  return r;
}

Mat Mat::pow(unsigned e) const {
  if (!is_square()) throw InputError("power of a non-square matrix");
  Mat r = identity(field_, rows_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::vector<Elem> Mat::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw InputError("vector length does not match matrix");
  std::vector<Elem> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j]) acc = field_->add(acc, field_->mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Mat Mat::mapped(FieldRef to, std::span<const Elem> embed) const {
  Mat r(std::move(to), rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = embed[a_[i]];
  return r;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
  a.require_same_field(b);
  const FiniteField& f = *a.field_;
  Mat r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      Elem x = a(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) r(i * b.rows_ + k, j * b.cols_ + l) = f.mul(x, b(k, l));
    }
  return r;
}

Mat Mat::block_diag(const Mat& a, const Mat& b) {
  a.require_same_field(b);
  Mat r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
  return r;
}

RowEchelon rref(const Mat& m) {
  const FiniteField& f = *m.field();
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Elem inv = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Elem factor = f.neg(a(i, c));
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(r, j)) a(i, j) = f.add(a(i, j), f.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Mat rows(m.field(), r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows(i, j) = a(i, j);
  return {std::move(rows), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
  const FiniteField& f = *m.field();
  Mat a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Elem inv = f.inv(a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Elem factor = f.neg(f.mul(a(i, c), inv));
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(r, j)) a(i, j) = f.add(a(i, j), f.mul(factor, a(r, j)));
    }
    ++r;
  }
  return r;
}

Mat kernel(const Mat& m) {
  const FiniteField& f = *m.field();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(m.field(), m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k(fc, j) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], j) = f.neg(e.rows(i, fc));
  }
  return k;
}

std::optional<std::vector<Elem>> solve(const Mat& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw InputError("right-hand side length does not match matrix");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Elem> x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rows(i, m.cols());
  return x;
}

EchelonBasis::EchelonBasis(FieldRef field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

std::vector<Elem> EchelonBasis::reduce(std::vector<Elem>& v) const {
  if (v.size() != dim_) throw InputError("vector length does not match subspace ambient dimension");
  const FiniteField& f = *field_;
  std::vector<Elem> coords(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem c = v[pivots_[i]];
    if (c == 0) continue;
    coords[i] = c;  // pivots are normalized to 1
    Elem neg = f.neg(c);
    const auto& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < dim_; ++j)
      if (row[j]) v[j] = f.add(v[j], f.mul(neg, row[j]));
  }
  return coords;
}

bool EchelonBasis::contains(std::vector<Elem> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

bool EchelonBasis::insert(std::vector<Elem> v) {
  if (full()) {
    if (v.size() != dim_) throw InputError("vector length does not match subspace ambient dimension");
    return false;
  }
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
  if (it == v.end()) return false;
  std::size_t piv = std::size_t(it - v.begin());
  Elem inv = field_->inv(v[piv]);
  for (std::size_t j = piv; j < dim_; ++j) v[j] = field_->mul(v[j], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

PolyMat::PolyMat(FieldRef field, unsigned nvars, std::size_t rows, std::size_t cols)
    : field_(field), nvars_(nvars), rows_(rows), cols_(cols), a_(rows * cols, Poly(field, nvars)) {}

PolyMat PolyMat::linear_combination(std::span<const Mat> mats) {
  if (mats.empty()) throw InputError("empty matrix list");
  const Mat& first = mats.front();
  unsigned n = unsigned(mats.size());
  PolyMat r(first.field(), n, first.rows(), first.cols());
  for (unsigned i = 0; i < n; ++i) {
    if (mats[i].rows() != first.rows() || mats[i].cols() != first.cols()) throw InputError("shape mismatch");
    Poly t = Poly::variable(first.field(), n, i);
    for (std::size_t a = 0; a < first.rows(); ++a)
      for (std::size_t b = 0; b < first.cols(); ++b)
        if (Elem c = mats[i](a, b)) r(a, b) += t.scaled(c);
  }
  return r;
}

PolyMat PolyMat::from_scalars(std::size_t rows, std::size_t cols, std::span<const Scalar> entries) {
  if (entries.size() != rows * cols) throw InputError("entry count does not match matrix shape");
  if (entries.empty()) throw InputError("cannot infer field of an empty matrix");
  const RationalFieldRef& rf = entries.front().rational_field();
  PolyMat m(rf->base(), rf->vars(), rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].is_finite() || !entries[i].rational_field()->same_as(*rf))
      throw InputError("mixed-field matrix entries at index " + std::to_string(i));
    const RatFunc& v = entries[i].rational_value();
    if (!v.is_polynomial()) throw InputError("entry " + std::to_string(i) + " has a denominator; clear denominators first");
    m.a_[i] = v.num();
  }
  return m;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
  if (cols_ != o.rows_) throw InputError("polynomial matrix shape mismatch");
  PolyMat r(field_, nvars_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Poly& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

PolyMat PolyMat::pow(unsigned e) const {
  if (rows_ != cols_) throw InputError("power of a non-square matrix");
  PolyMat r(field_, nvars_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) r(i, i) = Poly::constant(field_, nvars_, 1);
  PolyMat b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

PolyMat PolyMat::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMat r(field_, nvars_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(rows[i], cols[j]);
  return r;
}

Mat PolyMat::specialize(std::span<const Elem> point, FieldRef target, std::span<const Elem> embed) const {
  Mat r(target, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).evaluate(point, *target, embed);
  return r;
}

namespace {

// Fraction-free elimination in place; returns (rank, sign of row permutation).
std::pair<std::size_t, int> bareiss(std::vector<Poly>& a, std::size_t rows, std::size_t cols, const FieldRef& f,
                                    unsigned nvars) {
  auto at = [&](std::size_t i, std::size_t j) -> Poly& { return a[i * cols + j]; };
  Poly prev = Poly::constant(f, nvars, 1);
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
      sign = -sign;
    }
    const Poly pivot = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      Poly lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Poly v = pivot * at(i, j);
        if (!lead.is_zero() && !at(r, j).is_zero()) v -= lead * at(r, j);
        at(i, j) = v.is_zero() ? v : Poly::exact_div(v, prev);
      }
      at(i, c) = Poly(f, nvars);
    }
    prev = pivot;
    ++r;
  }
  return {r, sign};
}

}  // namespace

std::size_t generic_rank(const PolyMat& m) {
  std::vector<Poly> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
  return bareiss(a, m.rows(), m.cols(), m.field(), m.nvars()).first;
}

Poly determinant(const PolyMat& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Poly::constant(m.field(), m.nvars(), 1);
  std::vector<Poly> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.push_back(m(i, j));
  auto [r, sign] = bareiss(a, n, n, m.field(), m.nvars());
  if (r < n) return Poly(m.field(), m.nvars());
  Poly d = a[(n - 1) * n + (n - 1)];
  return sign > 0 ? d : -d;
}

}  // namespace elemgs

namespace elemgs {

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InputError("matrix is singular");
  Mat inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows(i, n + j);
  return inv;
}

}  // namespace elemgs
