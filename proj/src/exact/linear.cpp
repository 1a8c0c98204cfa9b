#include "tensamp/exact/linear.hpp"

#include <sstream>
#include <utility>

namespace tensamp {

namespace {

void require_same_dim(const RatVec& a, const RatVec& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw UsageError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

RatVec RatVec::unit(std::size_t dim, std::size_t index) {
  RatVec v(dim);
  v[index] = 1;
  return v;
}

bool RatVec::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Rat RatVec::dot(const RatVec& o) const {
  require_same_dim(*this, o, "dot");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) acc += entries_[i].raw() * o.entries_[i].raw();
  return Rat(acc);
}

RatVec RatVec::primitive() const {
  if (is_zero()) return *this;
  mpz_class lcm_den = 1;
  for (const auto& e : entries_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(entries_.size());
  mpz_class g = 0;
  for (const auto& e : entries_) {
    mpz_class v = e.numerator() * (lcm_den / e.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  RatVec out(entries_.size());
  for (std::size_t i = 0; i < ints.size(); ++i) out[i] = Rat(ints[i] / g, mpz_class(1));
  return out;
}

std::string RatVec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].str();
  }
  os << ')';
  return os.str();
}

RatVec& RatVec::operator+=(const RatVec& o) {
  require_same_dim(*this, o, "vector add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& o) {
  require_same_dim(*this, o, "vector subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rat& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

RatVec RatVec::operator-() const {
  RatVec out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RatMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw UsageError("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMat RatMat::from_columns(const std::vector<RatVec>& columns, std::size_t rows) {
  RatMat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != rows) throw UsageError("from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVec RatMat::row(std::size_t r) const {
  RatVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

RatVec RatMat::column(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

RatVec RatMat::operator*(const RatVec& x) const {
  if (x.dim() != cols_) throw UsageError("matrix-vector product: dimension mismatch");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c).raw() * x[c].raw();
    out[r] = Rat(acc);
  }
  return out;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw UsageError("matrix product: dimension mismatch");
  RatMat out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < o.cols_; ++c) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += (*this)(r, k).raw() * o(k, c).raw();
      out(r, c) = Rat(acc);
    }
  return out;
}

RowEchelon row_reduce(RatMat m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(found, k), m(pivot_row, k));
    }
    const Rat inv = Rat(1) / m(pivot_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, c).is_zero()) continue;
      const Rat factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(pivot_row, k);
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RatMat& m) { return row_reduce(m).pivot_columns.size(); }

std::size_t rank(const std::vector<RatVec>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(RatMat::from_rows(vectors, dim));
}

std::vector<RatVec> null_space(const RatMat& a) {
  const RowEchelon ech = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
      v[ech.pivot_columns[i]] = -ech.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.dim()) throw UsageError("solve_linear: A has " + std::to_string(a.rows()) +
                                            " rows but b has dimension " + std::to_string(b.dim()));
  RatMat aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon ech = row_reduce(std::move(aug));
  if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
    x[ech.pivot_columns[i]] = ech.reduced(i, a.cols());
  }
  return x;
}

Rat determinant(const RatMat& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of non-square matrix");
  RatMat w = m;
  Rat det = 1;
  const std::size_t n = w.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!w(r, c).is_zero()) {
        p = r;
        break;
      }
    }
    if (p == n) return Rat(0);
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(w(p, k), w(c, k));
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (w(r, c).is_zero()) continue;
      const Rat f = w(r, c) / w(c, c);
      for (std::size_t k = c; k < n; ++k) w(r, k) -= f * w(c, k);
    }
  }
  return det;
}

std::vector<Rat> characteristic_polynomial(const RatMat& a) {
  if (a.rows() != a.cols()) throw UsageError("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rat> coeffs(n + 1);
  coeffs[n] = 1;
  RatMat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[n - k + 1];
    m = std::move(next);
    const RatMat am = a * m;
    Rat trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = -trace / Rat(static_cast<long>(k));
  }
  return coeffs;
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Inertia inertia(const RatMat& symmetric) {
  if (!symmetric.is_symmetric()) throw UsageError("inertia requires a symmetric matrix");
  const auto coeffs = characteristic_polynomial(symmetric);
  Inertia out;
  while (out.zero < coeffs.size() && coeffs[out.zero].is_zero()) ++out.zero;
  std::vector<int> pos;
  std::vector<int> neg;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    pos.push_back(coeffs[i].sign());
    neg.push_back((i % 2 == 1) ? -coeffs[i].sign() : coeffs[i].sign());
  }
  out.positive = sign_changes(pos);
  out.negative = sign_changes(neg);
  return out;
}

}  // namespace tensamp
