#pragma once

#include <string>
#include <vector>

#include "qosp/parallel.hpp"
#include "qosp/rational.hpp"

namespace qosp {

// Dense matrix over an exact scalar ring S (Rational or LaurentPoly).
// A zero-element prototype is stored so the scalar context (variable list)
// is known even for empty matrices.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, S zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)),
        entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols), zero_) {}

  static Matrix identity(int n, const S& zero, const S& one) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) {
      m.at(i, i) = one;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const S& zero() const { return zero_; }

  S& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const S& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
  }
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!(e == zero_)) {
        return false;
      }
    }
    return true;
  }

  Matrix operator+(const Matrix& rhs) const {
    Matrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i) {
      out.entries_[i] = entries_[i] + rhs.entries_[i];
    }
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    Matrix out = *this;
    for (size_t i = 0; i < entries_.size(); ++i) {
      out.entries_[i] = entries_[i] - rhs.entries_[i];
    }
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_) {
      e = zero_ - e;
    }
    return out;
  }

  Matrix scaled(const S& c) const {
    Matrix out = *this;
    for (auto& e : out.entries_) {
      e = e * c;
    }
    return out;
  }

  // Entry (i,j) = sum_k a(i,k) b(k,j); the scalar ring is exact, so the
  // parallel and serial paths produce identical results.
  friend Matrix mul_serial(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_, a.zero_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a.at(i, k);
        if (aik == a.zero_) {
          continue;
        }
        for (int j = 0; j < b.cols_; ++j) {
          const S& bkj = b.at(k, j);
          if (bkj == b.zero_) {
            continue;
          }
          out.at(i, j) = out.at(i, j) + aik * bkj;
        }
      }
    }
    return out;
  }

  friend Matrix mul_parallel(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_, a.zero_);
#if defined(QOSP_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a.at(i, k);
        if (aik == a.zero_) {
          continue;
        }
        for (int j = 0; j < b.cols_; ++j) {
          const S& bkj = b.at(k, j);
          if (bkj == b.zero_) {
            continue;
          }
          out.at(i, j) = out.at(i, j) + aik * bkj;
        }
      }
    }
    return out;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) {
      throw ScalarError("matrix dimension mismatch in product");
    }
    if (parallel::enabled() && rows_ >= 8) {
      return mul_parallel(*this, rhs);
    }
    return mul_serial(*this, rhs);
  }

  template <class T, class Fn>
  Matrix<T> map(const T& new_zero, Fn fn) const {
    Matrix<T> out(rows_, cols_, new_zero);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        out.at(i, j) = fn(at(i, j));
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += i == 0 ? "[ " : "  ";
      for (int j = 0; j < cols_; ++j) {
        if constexpr (std::is_same_v<S, Rational>) {
          s += rational_to_string(at(i, j));
        } else {
          s += at(i, j).to_string();
        }
        if (j + 1 < cols_) {
          s += ", ";
        }
      }
      s += i + 1 < rows_ ? "\n" : " ]";
    }
    return s;
  }

 private:
  int rows_;
  int cols_;
  S zero_;
  std::vector<S> entries_;
};

}  // namespace qosp
