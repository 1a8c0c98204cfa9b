#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tensamp/exact/rational.hpp"

namespace tensamp {

/// Dense vector of exact rationals. Arithmetic is only defined between
/// vectors of equal dimension; mismatches raise UsageError.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t dim) : entries_(dim) {}
  RatVec(std::initializer_list<Rat> values) : entries_(values) {}
  explicit RatVec(std::vector<Rat> values) : entries_(std::move(values)) {}

  static RatVec unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }
  Rat& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rat> entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;
  Rat dot(const RatVec& o) const;

  /// Smallest positive integer multiple with coprime integer entries.
  /// The zero vector maps to itself.
  RatVec primitive() const;

  /// "(a, b, c)" with entries in "p/q" form.
  std::string str() const;

  RatVec& operator+=(const RatVec& o);
  RatVec& operator-=(const RatVec& o);
  RatVec& operator*=(const Rat& s);
  RatVec operator-() const;

  friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
  friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
  friend RatVec operator*(RatVec a, const Rat& s) { return a *= s; }
  friend RatVec operator*(const Rat& s, RatVec a) { return a *= s; }
  friend bool operator==(const RatVec& a, const RatVec& b) = default;
  friend auto operator<=>(const RatVec& a, const RatVec& b) = default;

 private:
  std::vector<Rat> entries_;
};

/// Dense row-major rational matrix.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMat from_rows(const std::vector<RatVec>& rows, std::size_t cols);
  static RatMat from_columns(const std::vector<RatVec>& columns, std::size_t rows);
  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec column(std::size_t c) const;
  RatMat transpose() const;
  bool is_symmetric() const;

  RatVec operator*(const RatVec& x) const;
  RatMat operator*(const RatMat& o) const;
  friend bool operator==(const RatMat& a, const RatMat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form with leftmost pivots.
struct RowEchelon {
  RatMat reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(RatMat m);

std::size_t rank(const RatMat& m);
std::size_t rank(const std::vector<RatVec>& vectors, std::size_t dim);

/// Basis of {x : A x = 0}, one vector per free column of the reduced form.
std::vector<RatVec> null_space(const RatMat& a);

/// Solves A x = b exactly. Underdetermined systems get zeros on the
/// non-pivot columns of the leftmost-pivot reduced form. Returns nullopt
/// when inconsistent.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

/// Determinant by Gaussian elimination over Q.
Rat determinant(const RatMat& m);

/// Characteristic polynomial coefficients c_0..c_n of det(t I - A),
/// c_n = 1 (Faddeev-LeVerrier recursion).
std::vector<Rat> characteristic_polynomial(const RatMat& a);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Inertia of a symmetric matrix by Descartes' sign rule on its (real-rooted)
/// characteristic polynomial.
Inertia inertia(const RatMat& symmetric);

}  // namespace tensamp
