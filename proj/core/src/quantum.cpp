#include "mps/quantum.hpp"

#include <string>

namespace mps {

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      GaussianComplex sum;
      for (int k = 0; k < 4; ++k) sum = sum + a.at(r, k) * b.at(k, c);
      out.at(r, c) = sum;
    }
  return out;
}

Matrix4 operator-(const Matrix4& a) {
  Matrix4 out;
  for (int i = 0; i < 16; ++i) out.m[i] = -a.m[i];
  return out;
}

Matrix4 identity4() {
  Matrix4 out;
  for (int i = 0; i < 4; ++i) out.at(i, i) = {1, 0};
  return out;
}

namespace {

using Matrix2 = std::array<GaussianComplex, 4>;

Matrix2 pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return {{{1, 0}, {0, 0}, {0, 0}, {1, 0}}};
    case Pauli::X: return {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}};
    case Pauli::Y: return {{{0, 0}, {0, -1}, {0, 1}, {0, 0}}};
    case Pauli::Z: return {{{1, 0}, {0, 0}, {0, 0}, {-1, 0}}};
  }
  throw std::logic_error("bad pauli");
}

const char* pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  throw std::logic_error("bad pauli");
}

}  // namespace

Matrix4 pauli_tensor(Pauli a, Pauli b) {
  const Matrix2 ma = pauli_matrix(a);
  const Matrix2 mb = pauli_matrix(b);
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out.at(2 * i + k, 2 * j + l) = ma[2 * i + j] * mb[2 * k + l];
  return out;
}

bool commutes(const Matrix4& m, const Matrix4& n) { return m * n == n * m; }

std::array<std::array<Matrix4, 3>, 3> mermin_peres_operators() {
  return {{{pauli_tensor(Pauli::X, Pauli::I), pauli_tensor(Pauli::I, Pauli::X),
            pauli_tensor(Pauli::X, Pauli::X)},
           {pauli_tensor(Pauli::I, Pauli::Y), pauli_tensor(Pauli::Y, Pauli::I),
            pauli_tensor(Pauli::Y, Pauli::Y)},
           {pauli_tensor(Pauli::X, Pauli::Y), pauli_tensor(Pauli::Y, Pauli::X),
            pauli_tensor(Pauli::Z, Pauli::Z)}}};
}

std::array<Sign, 6> quantum_signature() {
  const auto grid = mermin_peres_operators();
  std::array<Sign, 6> signature{};
  const Matrix4 one = identity4();
  // kAllContexts order: R1 R2 R3 C1 C2 C3.
  for (int r = 0; r < 3; ++r) {
    const Matrix4 product = grid[r][0] * grid[r][1] * grid[r][2];
    signature[r] = product == one ? Sign::plus : Sign::minus;
  }
  for (int c = 0; c < 3; ++c) {
    const Matrix4 product = grid[0][c] * grid[1][c] * grid[2][c];
    signature[3 + c] = product == one ? Sign::plus : Sign::minus;
  }
  return signature;
}

VerificationReport verify_quantum_square() {
  VerificationReport report;
  report.check = "quantum_square";
  report.universe =
      "9 Pauli tensor operators: 18 pairwise commutation checks, 9 involutions, "
      "6 triple products";
  report.universe_size = 18 + 9 + 6;

  const auto grid = mermin_peres_operators();
  const Matrix4 one = identity4();

  static constexpr Pauli labels[3][3][2] = {
      {{Pauli::X, Pauli::I}, {Pauli::I, Pauli::X}, {Pauli::X, Pauli::X}},
      {{Pauli::I, Pauli::Y}, {Pauli::Y, Pauli::I}, {Pauli::Y, Pauli::Y}},
      {{Pauli::X, Pauli::Y}, {Pauli::Y, Pauli::X}, {Pauli::Z, Pauli::Z}}};
  auto cell_name = [&](int r, int c) {
    return std::string(pauli_char(labels[r][c][0])) + "(x)" + pauli_char(labels[r][c][1]);
  };

  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!(grid[r][c] * grid[r][c] == one))
        report.counterexamples.push_back(
            Counterexample{-1, "", cell_name(r, c), "not involutory"});

  for (int line = 0; line < 3; ++line) {
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (!commutes(grid[line][a], grid[line][b]))
          report.counterexamples.push_back(Counterexample{
              -1, "R" + std::to_string(line + 1),
              cell_name(line, a) + "," + cell_name(line, b), "do not commute"});
        if (!commutes(grid[a][line], grid[b][line]))
          report.counterexamples.push_back(Counterexample{
              -1, "C" + std::to_string(line + 1),
              cell_name(a, line) + "," + cell_name(b, line), "do not commute"});
      }
    }
  }

  const auto signature = quantum_signature();
  const std::array<Sign, 6> expected = {Sign::plus, Sign::plus, Sign::plus,
                                        Sign::plus, Sign::plus, Sign::minus};
  for (std::size_t i = 0; i < signature.size(); ++i) {
    const Matrix4 product = [&] {
      if (i < 3) return grid[i][0] * grid[i][1] * grid[i][2];
      return grid[0][i - 3] * grid[1][i - 3] * grid[2][i - 3];
    }();
    const bool is_plus_one = product == one;
    const bool is_minus_one = product == -one;
    if (!is_plus_one && !is_minus_one) {
      report.counterexamples.push_back(Counterexample{
          -1, to_string(kAllContexts[i]), "triple product", "not +-identity"});
    } else if (signature[i] != expected[i]) {
      report.counterexamples.push_back(Counterexample{
          -1, to_string(kAllContexts[i]), "triple product",
          std::string("sign ") + sign_char(signature[i]) + "1, expected " +
              sign_char(expected[i]) + "1"});
    }
  }

  report.pass = report.counterexamples.empty();
  return report;
}

}  // namespace mps
