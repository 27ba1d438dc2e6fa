// Copyright (c) 2026 the symdiag authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symdiag {

/// Gate-level IR for {CNOT, Rz} circuits.
///
/// Conventions used throughout:
///  - qubit 0 is the most significant bit of a basis index,
///  - Rz(phi) = diag(e^{-i phi/2}, e^{+i phi/2}),
///  - CNOT(t, c) flips the target bit t when the control bit c is set.

struct GateOp {
  enum class Kind { Cnot, Rz };

  Kind kind;
  int target;
  int control;  // -1 for Rz
  double angle; // 0 for CNOT

  static GateOp cnot(int target, int control) {
    if (target == control)
      throw std::invalid_argument("CNOT target equals control");
    return GateOp{Kind::Cnot, target, control, 0.0};
  }
  static GateOp rz(int target, double angle) {
    return GateOp{Kind::Rz, target, -1, angle};
  }

  bool is_cnot() const { return kind == Kind::Cnot; }
  bool is_rz() const { return kind == Kind::Rz; }

  bool operator==(const GateOp& o) const {
    return kind == o.kind && target == o.target && control == o.control &&
           angle == o.angle;
  }
};

/// One Rz followed by one CNOT sharing the target wire.
struct FBlock {
  int target;
  int control;
  double angle;
};

std::array<GateOp, 2> expand_fblock(const FBlock& b);

struct Circuit {
  int width = 0;
  std::vector<GateOp> ops;
  double global_phase = 0.0; // declared multiplier e^{i*global_phase}

  Circuit() = default;
  explicit Circuit(int w) : width(w) {
    if (w < 1) throw std::invalid_argument("circuit width must be >= 1");
  }

  void push(const GateOp& op);
  void push_fblock(const FBlock& b);

  bool operator==(const Circuit& o) const {
    return width == o.width && global_phase == o.global_phase && ops == o.ops;
  }
};

struct DiagonalVector {
  std::vector<std::complex<double>> entries;
};

struct NotDiagonalError : std::runtime_error {
  std::uint64_t basis_index;
  explicit NotDiagonalError(std::uint64_t q)
      : std::runtime_error("circuit is not diagonal at basis index " +
                           std::to_string(q)),
        basis_index(q) {}
};

struct LengthMismatchError : std::runtime_error {
  LengthMismatchError() : std::runtime_error("diagonal length mismatch") {}
};

struct BasisResult {
  std::uint64_t index;
  double phase; // excludes the circuit's declared global phase
};

/// Runs the circuit on one computational basis state, tracking the exact
/// accumulated Rz phase. CNOTs act as bit permutations.
BasisResult apply_to_basis(const Circuit& c, std::uint64_t q);

/// Evaluates the circuit on every basis state. Throws NotDiagonalError if
/// any basis state is mapped elsewhere. entries[q] includes global_phase.
DiagonalVector extract_diagonal(const Circuit& c);

/// True iff d1[q] * conj(d2[q]) is the same constant for all q, within tol.
bool equivalent_up_to_global_phase(const DiagonalVector& d1,
                                   const DiagonalVector& d2, double tol);

/// ASAP layering: a gate lands on layer 1 + max(last layer of its qubits).
/// Both Rz and CNOT count as unit depth.
int schedule_depth(const Circuit& c);

struct GateCounts {
  long cnot = 0;
  long rz = 0;
};
GateCounts gate_counts(const Circuit& c);

// Text format: "width=m global_phase=<radians>", then one gate per line,
// "CNOT t c" or "RZ t <radians>". Round-trips exactly.
std::string to_text(const Circuit& c);
Circuit from_text(const std::string& text);

std::string to_qasm(const Circuit& c);

std::string format_double(double v); // shortest exact decimal form

} // namespace symdiag
