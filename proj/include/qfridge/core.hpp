#pragma once

// Dense operators and density matrices on at most four qubits.
//
// Basis convention: qubit 0 (q1) is the most significant bit of the basis
// index, so |q1 q2 q3> has index 4*q1 + 2*q2 + q3. Every module uses it.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfridge {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxQubits = 4;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;

// Structural checks (Hermiticity, unitarity, trace).
inline constexpr double kStructuralTol = 1e-12;
// Negative eigenvalues above this are treated as round-off and clamped.
inline constexpr double kPsdTol = 1e-10;

/// Thrown when a tensor product would exceed the supported dimension.
class DimensionOverflow : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Square complex matrix on an n-qubit space, 1 <= n <= 4.
class Operator {
 public:
  explicit Operator(Matrix m);

  static Operator identity(std::size_t n_qubits);
  static Operator zero(std::size_t n_qubits);
  static Operator diagonal(const std::vector<double>& entries);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t qubits() const { return n_qubits_; }
  const Matrix& matrix() const { return m_; }
  cplx operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  Operator adjoint() const { return Operator(m_.adjoint()); }
  cplx trace() const { return m_.trace(); }

  /// Largest entry of |A - A^dagger|.
  double hermiticity_error() const;
  /// Largest entry of |A^dagger A - I|.
  double unitarity_error() const;
  bool is_hermitian(double tol = kStructuralTol) const { return hermiticity_error() <= tol; }
  bool is_unitary(double tol = kStructuralTol) const { return unitarity_error() <= tol; }

  /// Largest absolute entry.
  double max_abs() const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(cplx s, const Operator& a);
  friend Operator operator*(double s, const Operator& a) { return cplx{s, 0.0} * a; }

 private:
  Matrix m_;
  std::size_t n_qubits_ = 0;
};

/// Commutator [a, b] = ab - ba.
Operator commutator(const Operator& a, const Operator& b);

/// Hermitian, unit-trace, positive semidefinite operator.
///
/// Construction validates all three properties. Eigenvalues in
/// [-kPsdTol, 0) are clamped to zero and the state renormalized; anything
/// more negative is rejected with std::invalid_argument.
class DensityMatrix {
 public:
  explicit DensityMatrix(Operator op);

  /// |i><i| in the computational basis.
  static DensityMatrix basis_state(std::size_t n_qubits, std::size_t index);
  static DensityMatrix maximally_mixed(std::size_t n_qubits);

  const Operator& op() const { return op_; }
  const Matrix& matrix() const { return op_.matrix(); }
  std::size_t dim() const { return op_.dim(); }
  std::size_t qubits() const { return op_.qubits(); }
  cplx operator()(std::size_t r, std::size_t c) const { return op_(r, c); }

  /// Diagonal entry i as a probability.
  double population(std::size_t index) const;
  std::vector<double> populations() const;

 private:
  Operator op_;
};

/// Pauli string with a real coefficient; letter k acts on qubit k.
struct PauliString {
  std::string letters;
  double coefficient = 1.0;

  PauliString(std::string_view text, double coeff = 1.0);
  std::size_t qubits() const { return letters.size(); }
};

Operator pauli_to_operator(const PauliString& p);

namespace gates {
Operator I();
Operator X();
Operator Y();
Operator Z();
/// Hadamard, maps Z <-> X under conjugation.
Operator H();
/// (Y + Z)/sqrt(2), maps Z <-> Y under conjugation.
Operator Hy();
}  // namespace gates

/// Tensor product a (x) b; throws DimensionOverflow past kMaxDim.
Operator kron(const Operator& a, const Operator& b);
/// Embeds a single-qubit operator on `qubit` of an n-qubit register.
Operator embed(const Operator& single, std::size_t qubit, std::size_t n_qubits);

/// Reduced state on the qubits in `keep` (0-based, kept in ascending order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

/// Ascending eigenvalues of a Hermitian operator.
std::vector<double> eigenvalues(const Operator& h);

/// exp(-i h t) via eigendecomposition. h must be Hermitian.
Operator herm_exp(const Operator& h, double t);

/// U rho U^dagger. u must be unitary.
DensityMatrix evolve(const DensityMatrix& rho, const Operator& u);

/// Zeros every off-diagonal entry in the computational basis.
DensityMatrix dephase(const DensityMatrix& rho);

/// Re tr(rho * h).
double expectation(const DensityMatrix& rho, const Operator& h);

}  // namespace qfridge
