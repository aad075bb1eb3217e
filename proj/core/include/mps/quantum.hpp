#pragma once

#include <array>
#include <cstdint>

#include "mps/verifier.hpp"

namespace mps {

/// Exact complex integer a + b*i. Every entry of a Pauli tensor product and
/// of any product of them lies in this ring.
struct GaussianComplex {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend constexpr GaussianComplex operator+(GaussianComplex a, GaussianComplex b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr GaussianComplex operator*(GaussianComplex a, GaussianComplex b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr GaussianComplex operator-(GaussianComplex a) { return {-a.re, -a.im}; }
  friend constexpr bool operator==(GaussianComplex, GaussianComplex) = default;
};

/// 4x4 matrix over Gaussian integers, row-major.
struct Matrix4 {
  std::array<GaussianComplex, 16> m{};

  constexpr GaussianComplex& at(int row, int col) { return m[4 * row + col]; }
  constexpr const GaussianComplex& at(int row, int col) const { return m[4 * row + col]; }

  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
  friend Matrix4 operator-(const Matrix4& a);
  friend constexpr bool operator==(const Matrix4&, const Matrix4&) = default;
};

Matrix4 identity4();

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Kronecker product of two exact 2x2 Pauli matrices.
Matrix4 pauli_tensor(Pauli a, Pauli b);

bool commutes(const Matrix4& m, const Matrix4& n);

/// The nine square operators, arranged so row r and column c carry the same
/// observables as the classical contexts Rr and Cc:
///   row 1: X(x)I, I(x)X, X(x)X
///   row 2: I(x)Y, Y(x)I, Y(x)Y
///   row 3: X(x)Y, Y(x)X, Z(x)Z
std::array<std::array<Matrix4, 3>, 3> mermin_peres_operators();

/// Signature of the quantum square: the sign of the identity each row and
/// column product equals, in kAllContexts order (R1 R2 R3 C1 C2 C3).
std::array<Sign, 6> quantum_signature();

/// Checks pairwise commutation within every row and column and that each
/// triple product is +-identity with the expected sign pattern.
VerificationReport verify_quantum_square();

}  // namespace mps
