#ifndef ACM_MATRIX3_HPP
#define ACM_MATRIX3_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "acm/types.hpp"

namespace acm {

/// Dense 3x3 complex matrix, row major. Carrier of every ACM in the library.
class Matrix3 {
 public:
  Matrix3() = default;

  static Matrix3 zero() { return Matrix3{}; }

  static Matrix3 identity() {
    Matrix3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = Complex{1.0, 0.0};
    return m;
  }

  static Matrix3 diagonal(Complex d0, Complex d1, Complex d2) {
    Matrix3 m;
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    return m;
  }

  Complex& operator()(int r, int c) { return e_[static_cast<size_t>(3 * r + c)]; }
  const Complex& operator()(int r, int c) const {
    return e_[static_cast<size_t>(3 * r + c)];
  }

  Complex trace() const { return e_[0] + e_[4] + e_[8]; }

  Matrix3 adjoint() const {
    Matrix3 a;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a(r, c) = std::conj((*this)(c, r));
    return a;
  }

  friend Matrix3 operator+(const Matrix3& a, const Matrix3& b) {
    Matrix3 m;
    for (size_t i = 0; i < 9; ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
  }

  friend Matrix3 operator-(const Matrix3& a, const Matrix3& b) {
    Matrix3 m;
    for (size_t i = 0; i < 9; ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
  }

  friend Matrix3 operator*(Complex s, const Matrix3& a) {
    Matrix3 m;
    for (size_t i = 0; i < 9; ++i) m.e_[i] = s * a.e_[i];
    return m;
  }

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Complex acc{};
        for (int k = 0; k < 3; ++k) acc += a(r, k) * b(k, c);
        m(r, c) = acc;
      }
    return m;
  }

 private:
  std::array<Complex, 9> e_{};
};

/// Max entrywise modulus of a - b; the tolerance norm used throughout.
double max_abs_diff(const Matrix3& a, const Matrix3& b);

/// Square complex matrix of runtime order n; only what the degree-n
/// companion construction needs.
class MatrixN {
 public:
  explicit MatrixN(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  int order() const { return n_; }

  Complex& operator()(int r, int c) { return e_[static_cast<size_t>(n_ * r + c)]; }
  const Complex& operator()(int r, int c) const {
    return e_[static_cast<size_t>(n_ * r + c)];
  }

 private:
  int n_;
  std::vector<Complex> e_;
};

}  // namespace acm

#endif  // ACM_MATRIX3_HPP
