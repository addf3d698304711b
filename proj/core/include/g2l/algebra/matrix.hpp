#pragma once

#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2l/algebra/scalar.hpp"

namespace g2l {

/// Dense row-major matrix over an exact commutative ring.
template <ExactRing S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& fill = S{})
      : rows_(rows), cols_(cols), data_(rows * cols, zero_like(fill)) {
    if (!is_zero(fill)) std::fill(data_.begin(), data_.end(), fill);
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
  }
  /// Row-wise initializer; every row must have the same length.
  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size(), zero_like(rows.front().front()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(std::size_t n, const S& like = S{}) {
    Matrix m(n, n, zero_like(like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(like);
    return m;
  }
  static Matrix diagonal(const std::vector<S>& d) {
    if (d.empty()) return Matrix();
    Matrix m(d.size(), d.size(), zero_like(d.front()));
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<S>& data() const { return data_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_element());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    std::vector<T> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Matrix<T>(rows_, cols_, std::move(out));
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    return a.map([](const S& x) { return -x; });
  }
  friend Matrix operator*(const S& c, const Matrix& a) {
    return a.map([&c](const S& x) { return c * x; });
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("Matrix: product of " + a.shape() + " and " + b.shape());
    }
    Matrix c(a.rows_, b.cols_, a.zero_element());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (!is_zero(bkj)) c(i, j) = c(i, j) + aik * bkj;
        }
      }
    }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// Deterministic row-major text: entries separated by ", ", rows by newlines.
  std::string to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string((*this)(i, j));
      os << "\n";
    }
    return os.str();
  }
  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(to_string((*this)(i, j)));
    return out;
  }

  S zero_element() const { return data_.empty() ? S{} : zero_like(data_.front()); }
  S one_element() const { return data_.empty() ? S{} : one_like(data_.front()); }

 private:
  void check_same(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument(std::string("Matrix: ") + op + " of " + shape() + " and " +
                                  o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Column vector helper.
template <ExactRing S>
Matrix<S> column(const std::vector<S>& v) {
  return Matrix<S>(v.size(), 1, v);
}

/// Converts a rational matrix into another ring.
template <ExactRing S>
Matrix<S> lift(const Matrix<Rational>& m, const S& like = S{}) {
  return m.map([&like](const Rational& r) { return from_rational(r, like); });
}

}  // namespace g2l
