#include "qfridge/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace qfridge {

namespace {

std::size_t qubits_for_dim(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) {
    throw std::invalid_argument("Operator: matrix must be square");
  }
  for (std::size_t n = 1; n <= kMaxQubits; ++n) {
    if (static_cast<std::size_t>(rows) == (std::size_t{1} << n)) return n;
  }
  std::ostringstream msg;
  msg << "Operator: dimension " << rows << " is not 2^n with 1 <= n <= " << kMaxQubits;
  throw std::invalid_argument(msg.str());
}

void require_same_dim(const Operator& a, const Operator& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw std::invalid_argument(msg.str());
  }
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

Operator::Operator(Matrix m) : m_(std::move(m)), n_qubits_(qubits_for_dim(m_.rows(), m_.cols())) {}

Operator Operator::identity(std::size_t n_qubits) {
  const auto d = idx(std::size_t{1} << n_qubits);
  return Operator(Matrix::Identity(d, d));
}

Operator Operator::zero(std::size_t n_qubits) {
  const auto d = idx(std::size_t{1} << n_qubits);
  return Operator(Matrix::Zero(d, d));
}

Operator Operator::diagonal(const std::vector<double>& entries) {
  Matrix m = Matrix::Zero(idx(entries.size()), idx(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) m(idx(i), idx(i)) = entries[i];
  return Operator(std::move(m));
}

double Operator::hermiticity_error() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

double Operator::unitarity_error() const {
  const Matrix id = Matrix::Identity(m_.rows(), m_.cols());
  return (m_.adjoint() * m_ - id).cwiseAbs().maxCoeff();
}

double Operator::max_abs() const { return m_.cwiseAbs().maxCoeff(); }

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator+");
  return Operator(a.m_ + b.m_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator-");
  return Operator(a.m_ - b.m_);
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator*");
  return Operator(a.m_ * b.m_);
}

Operator operator*(cplx s, const Operator& a) { return Operator(s * a.m_); }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(Operator op) : op_(std::move(op)) {
  const double herm = op_.hermiticity_error();
  if (herm > kStructuralTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (max |rho - rho^dagger| = " << herm << ")";
    throw std::invalid_argument(msg.str());
  }
  const double tr = op_.trace().real();
  if (std::abs(tr - 1.0) > kStructuralTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << tr << " differs from 1";
    throw std::invalid_argument(msg.str());
  }

  Matrix m = 0.5 * (op_.matrix() + op_.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Eigen::VectorXd& w = es.eigenvalues();
  const double min_eig = w.minCoeff();
  if (min_eig < -kPsdTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite (min eigenvalue " << min_eig << ")";
    throw std::invalid_argument(msg.str());
  }
  if (min_eig < 0.0) {
    Eigen::VectorXd clamped = w.cwiseMax(0.0);
    clamped /= clamped.sum();
    m = es.eigenvectors() * clamped.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
    m = 0.5 * (m + m.adjoint());
  }
  op_ = Operator(std::move(m));
}

DensityMatrix DensityMatrix::basis_state(std::size_t n_qubits, std::size_t index) {
  const std::size_t d = std::size_t{1} << n_qubits;
  if (index >= d) throw std::invalid_argument("basis_state: index out of range");
  Matrix m = Matrix::Zero(idx(d), idx(d));
  m(idx(index), idx(index)) = 1.0;
  return DensityMatrix(Operator(std::move(m)));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
  const std::size_t d = std::size_t{1} << n_qubits;
  return DensityMatrix((1.0 / static_cast<double>(d)) * Operator::identity(n_qubits));
}

double DensityMatrix::population(std::size_t index) const {
  if (index >= dim()) throw std::invalid_argument("population: index out of range");
  return op_(index, index).real();
}

std::vector<double> DensityMatrix::populations() const {
  std::vector<double> p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = op_(i, i).real();
  return p;
}

// ---------------------------------------------------------------------------

PauliString::PauliString(std::string_view text, double coeff) : letters(text), coefficient(coeff) {
  if (letters.empty() || letters.size() > kMaxQubits) {
    throw std::invalid_argument("PauliString: length must be 1.." + std::to_string(kMaxQubits));
  }
  for (char& c : letters) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw std::invalid_argument(std::string("PauliString: invalid letter '") + c + "'");
    }
  }
}

namespace gates {

Operator I() { return Operator(Matrix::Identity(2, 2)); }

Operator X() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return Operator(m);
}

Operator Y() {
  Matrix m(2, 2);
  m << 0, cplx{0, -1}, cplx{0, 1}, 0;
  return Operator(m);
}

Operator Z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return Operator(m);
}

Operator H() { return (1.0 / std::sqrt(2.0)) * (X() + Z()); }

Operator Hy() { return (1.0 / std::sqrt(2.0)) * (Y() + Z()); }

}  // namespace gates

namespace {

Operator single_pauli(char c) {
  switch (c) {
    case 'X': return gates::X();
    case 'Y': return gates::Y();
    case 'Z': return gates::Z();
    default: return gates::I();
  }
}

}  // namespace

Operator pauli_to_operator(const PauliString& p) {
  Operator out = single_pauli(p.letters.front());
  for (std::size_t k = 1; k < p.letters.size(); ++k) out = kron(out, single_pauli(p.letters[k]));
  return p.coefficient * out;
}

// ---------------------------------------------------------------------------

Operator kron(const Operator& a, const Operator& b) {
  const std::size_t d = a.dim() * b.dim();
  if (d > kMaxDim) {
    std::ostringstream msg;
    msg << "kron: result dimension " << d << " exceeds " << kMaxDim;
    throw DimensionOverflow(msg.str());
  }
  const Matrix& x = a.matrix();
  const Matrix& y = b.matrix();
  Matrix out(idx(d), idx(d));
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return Operator(std::move(out));
}

Operator embed(const Operator& single, std::size_t qubit, std::size_t n_qubits) {
  if (single.dim() != 2) throw std::invalid_argument("embed: operator must be single-qubit");
  if (qubit >= n_qubits) throw std::invalid_argument("embed: qubit index out of range");
  Operator out = qubit == 0 ? single : gates::I();
  for (std::size_t k = 1; k < n_qubits; ++k) out = kron(out, k == qubit ? single : gates::I());
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  const std::size_t n = rho.qubits();
  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate qubit index");
  }
  if (kept.back() >= n) throw std::invalid_argument("partial_trace: qubit index out of range");

  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  // Bit position of qubit q inside a basis index (qubit 0 is the MSB).
  auto bit = [n](std::size_t q) { return n - 1 - q; };
  auto scatter = [&](std::size_t value, const std::vector<std::size_t>& qs) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < qs.size(); ++k) {
      if ((value >> (qs.size() - 1 - k)) & 1U) out |= std::size_t{1} << bit(qs[k]);
    }
    return out;
  };

  const std::size_t dk = std::size_t{1} << kept.size();
  const std::size_t dt = std::size_t{1} << traced.size();
  Matrix out = Matrix::Zero(idx(dk), idx(dk));
  for (std::size_t r = 0; r < dk; ++r) {
    const std::size_t rbase = scatter(r, kept);
    for (std::size_t c = 0; c < dk; ++c) {
      const std::size_t cbase = scatter(c, kept);
      cplx acc = 0.0;
      for (std::size_t e = 0; e < dt; ++e) {
        const std::size_t env = scatter(e, traced);
        acc += rho(rbase | env, cbase | env);
      }
      out(idx(r), idx(c)) = acc;
    }
  }
  return DensityMatrix(Operator(std::move(out)));
}

std::vector<double> eigenvalues(const Operator& h) {
  if (!h.is_hermitian()) throw std::invalid_argument("eigenvalues: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix(), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& w = es.eigenvalues();
  return {w.data(), w.data() + w.size()};
}

Operator herm_exp(const Operator& h, double t) {
  const double herm = h.hermiticity_error();
  if (herm > kStructuralTol) {
    std::ostringstream msg;
    msg << "herm_exp: generator is not Hermitian (max |h - h^dagger| = " << herm << ")";
    throw std::invalid_argument(msg.str());
  }
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  const Eigen::VectorXd& w = es.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::polar(1.0, -w(k) * t);
  return Operator(es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint());
}

DensityMatrix evolve(const DensityMatrix& rho, const Operator& u) {
  if (u.dim() != rho.dim()) throw std::invalid_argument("evolve: dimension mismatch");
  const double err = u.unitarity_error();
  if (err > kStructuralTol) {
    std::ostringstream msg;
    msg << "evolve: operator is not unitary (max |U^dagger U - I| = " << err << ")";
    throw std::invalid_argument(msg.str());
  }
  Matrix m = u.matrix() * rho.matrix() * u.matrix().adjoint();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(Operator(std::move(m)));
}

DensityMatrix dephase(const DensityMatrix& rho) {
  Matrix m = rho.matrix().diagonal().asDiagonal();
  return DensityMatrix(Operator(std::move(m)));
}

double expectation(const DensityMatrix& rho, const Operator& h) {
  if (h.dim() != rho.dim()) throw std::invalid_argument("expectation: dimension mismatch");
  // tr(rho h) without forming the product.
  return (rho.matrix().transpose().cwiseProduct(h.matrix())).sum().real();
}

}  // namespace qfridge
