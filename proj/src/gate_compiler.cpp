#include "qfridge/gate_compiler.hpp"

#include "qfridge/fridge.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace qfridge {

namespace {

std::string short_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

Operator on(const Operator& single, std::size_t qubit) { return embed(single, qubit, 3); }

Operator zz(std::size_t a, std::size_t b) { return on(gates::Z(), a) * on(gates::Z(), b); }

GateStep basis_change(const std::string& letters) {
  Operator generator = Operator::zero(3);
  std::string label;
  for (std::size_t q = 0; q < 3; ++q) {
    const Operator b = letters[q] == 'X' ? gates::H() : gates::Hy();
    // exp(-i (pi/2)(I - b)) = b because b is an involution.
    generator = generator + (kPi / 2.0) * on(gates::I() - b, q);
    if (q > 0) label += '.';
    label += letters[q] == 'X' ? "H" : "Hy";
  }
  return {label + "@123", generator, 1.0};
}

GateStep rotation(const char* pauli, const char* angle_text, double angle, const Operator& p,
                  const char* qubits) {
  return {std::string(pauli) + "(" + angle_text + ")@" + qubits, angle * p, 1.0};
}

// Ten steps realising exp(-i phi ABC), in time order.
std::vector<GateStep> term_block(const std::string& letters, double phi) {
  const Operator x2 = on(gates::X(), 1);
  const Operator y2 = on(gates::Y(), 1);
  const Operator z1z2 = zz(0, 1);
  const Operator z2z3 = zz(1, 2);
  const double q = kPi / 4.0;

  std::vector<GateStep> steps;
  steps.reserve(kStepsPerTerm);
  steps.push_back(basis_change(letters));
  steps.push_back(rotation("X", "-pi/4", -q, x2, "2"));
  steps.push_back(rotation("Y", "-pi/2", -2.0 * q, y2, "2"));
  steps.push_back(rotation("ZZ", "pi/4", q, z1z2, "12"));
  steps.push_back(rotation("Y", "pi/4", q, y2, "2"));
  steps.push_back({"ZZ(" + short_double(phi) + ")@23", phi * z2z3, 1.0});
  steps.push_back(rotation("Y", "pi/4", q, y2, "2"));
  steps.push_back(rotation("ZZ", "pi/4", q, z1z2, "12"));
  steps.push_back(rotation("X", "pi/4", q, x2, "2"));
  steps.push_back(basis_change(letters));
  return steps;
}

}  // namespace

CompiledSequence compile(double theta, double g) { return compile(theta, g, {0, 1, 2, 3}); }

CompiledSequence compile(double theta, double g, const std::array<std::size_t, kTermCount>& order) {
  if (!(g > 0.0)) throw std::invalid_argument("compile: g must be positive");
  if (!std::isfinite(theta)) throw std::invalid_argument("compile: theta must be finite");
  std::array<std::size_t, kTermCount> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < kTermCount; ++k) {
    if (sorted[k] != k) throw std::invalid_argument("compile: block order must be a permutation of 0..3");
  }

  const auto terms = h_exc_pauli_terms();
  CompiledSequence seq;
  seq.theta = theta;
  seq.g = g;
  seq.term_order = order;
  seq.term_boundaries.push_back(0);
  // H_exc t = (theta/g) g sum c_k P_k, so each term angle is c_k theta.
  for (std::size_t k : order) {
    const double phi = terms[k].coefficient * theta;
    for (GateStep& s : term_block(terms[k].letters, phi)) seq.steps.push_back(std::move(s));
    seq.term_boundaries.push_back(seq.steps.size());
  }
  return seq;
}

Operator sequence_unitary(const CompiledSequence& seq) {
  Operator u = Operator::identity(3);
  for (const GateStep& s : seq.steps) u = s.unitary() * u;
  return u;
}

double verify(const CompiledSequence& seq, double theta) {
  FridgeConfig cfg;
  cfg.g = seq.g;
  const Operator direct = herm_exp(build_h_exc(cfg), theta / seq.g);
  const Operator u = sequence_unitary(seq);
  return std::abs((u.adjoint() * direct).trace()) / 8.0;
}

std::size_t max_pauli_weight(const Operator& op, double tol) {
  if (op.qubits() != 3) throw std::invalid_argument("max_pauli_weight: expected a 3-qubit operator");
  static const char* letters = "IXYZ";
  std::size_t weight = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        const std::string s{letters[a], letters[b], letters[c]};
        const cplx coeff = (pauli_to_operator(PauliString(s)) * op).trace() / 8.0;
        if (std::abs(coeff) > tol) {
          const auto w = static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return ch != 'I'; }));
          weight = std::max(weight, w);
        }
      }
    }
  }
  return weight;
}

LedgerRun run_with_ledger(const CompiledSequence& seq, const DensityMatrix& rho0, const Operator& h_sys) {
  LedgerRun run{rho0, {}};
  run.entries.reserve(seq.steps.size());
  double cumulative = 0.0;
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    const GateStep& s = seq.steps[k];
    LedgerStep step = ledger_step(run.final_state, s.generator, s.duration, h_sys, k + 1, cumulative);
    cumulative = step.entry.cumulative_work;
    run.final_state = std::move(step.state);
    run.entries.push_back(step.entry);
  }
  return run;
}

}  // namespace qfridge
