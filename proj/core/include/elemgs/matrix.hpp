#pragma once

// Dense exact matrices over finite fields and over polynomial rings F_q[t].

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "elemgs/field.hpp"
#include "elemgs/poly.hpp"
#include "elemgs/scalar.hpp"

namespace elemgs {

class Mat {
 public:
  Mat() = default;
  Mat(FieldRef field, std::size_t rows, std::size_t cols);

  static Mat identity(FieldRef field, std::size_t n);
  static Mat from_rows(FieldRef field, const std::vector<std::vector<Elem>>& rows);
  /// Entries row-major; every entry must be a finite-field scalar of one field.
  static Mat from_scalars(std::size_t rows, std::size_t cols, std::span<const Scalar> entries);

  const FieldRef& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {a_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {a_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const noexcept { return a_; }
  std::vector<Elem> column(std::size_t c) const;

  bool is_zero() const noexcept;
  bool is_square() const noexcept { return rows_ == cols_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(Elem c) const;
  Mat pow(unsigned e) const;
  Mat transpose() const;
  std::vector<Elem> apply(std::span<const Elem> v) const;

  /// Entries re-encoded into a larger field via an embedding table.
  Mat mapped(FieldRef to, std::span<const Elem> embed) const;

  static Mat kron(const Mat& a, const Mat& b);
  static Mat block_diag(const Mat& a, const Mat& b);

  friend bool operator==(const Mat& a, const Mat& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void require_same_field(const Mat& o) const;

  FieldRef field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

/// Reduced row echelon form: nonzero rows only, pivots normalized to 1.
struct RowEchelon {
  Mat rows;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Columns form a basis of {v : m v = 0}; shape cols x nullity.
Mat kernel(const Mat& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<std::vector<Elem>> solve(const Mat& m, std::span<const Elem> b);

/// Incrementally built semi-echelon basis of a subspace of F_q^dim. Rows are
/// kept in insertion order; each has a distinct pivot that is zero in every
/// later row, so reduction in insertion order yields coordinates directly.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(FieldRef field, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == dim_; }
  const std::vector<std::vector<Elem>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v in place; returns the multipliers (one per row) removed.
  std::vector<Elem> reduce(std::vector<Elem>& v) const;
  bool contains(std::vector<Elem> v) const;
  /// Adds v if it is independent of the current rows; returns whether added.
  bool insert(std::vector<Elem> v);

 private:
  FieldRef field_;
  std::size_t dim_ = 0;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(FieldRef field, unsigned nvars, std::size_t rows, std::size_t cols);

  /// Sum_i t_i * mats[i], with t_i the polynomial variables.
  static PolyMat linear_combination(std::span<const Mat> mats);
  /// Entries must be rational-function scalars with trivial denominators.
  static PolyMat from_scalars(std::size_t rows, std::size_t cols, std::span<const Scalar> entries);

  const FieldRef& field() const noexcept { return field_; }
  unsigned nvars() const noexcept { return nvars_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Poly& operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
  Poly& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }

  PolyMat operator*(const PolyMat& o) const;
  PolyMat pow(unsigned e) const;
  PolyMat submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  /// Value at a point of F_{q'} (embedding table from the base field).
  Mat specialize(std::span<const Elem> point, FieldRef target, std::span<const Elem> embed) const;

 private:
  FieldRef field_;
  unsigned nvars_ = 0;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> a_;
};

/// Rank over the fraction field F_q(t), by fraction-free (Bareiss) elimination.
std::size_t generic_rank(const PolyMat& m);
/// Determinant of a square polynomial matrix (Bareiss).
Poly determinant(const PolyMat& m);

}  // namespace elemgs

namespace elemgs {
/// Inverse of a square matrix; InputError when singular.
Mat inverse(const Mat& m);
}  // namespace elemgs
