// Copyright 2026 The gselc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GSELC_STATE_VECTOR_H
#define GSELC_STATE_VECTOR_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gselc/graph.h"

namespace gselc {

using Amplitude = std::complex<double>;

inline constexpr size_t kDefaultMaxQubits = 20;
/// Equality tolerance for states reached through long gate sequences.
inline constexpr double kStateTolerance = 1e-9;
/// Tolerance for single-gate algebraic identities.
inline constexpr double kGateTolerance = 1e-12;

enum class GateKind { H, X, Z, CZ, SqrtMinusIX, SqrtIZ };

std::string gate_kind_name(GateKind kind);

/// One gate application: a kind plus one (or, for CZ, two distinct) qubit targets.
class Gate {
   public:
    Gate(GateKind kind, std::span<const size_t> targets);

    static Gate h(size_t q) {
        return single(GateKind::H, q);
    }
    static Gate x(size_t q) {
        return single(GateKind::X, q);
    }
    static Gate z(size_t q) {
        return single(GateKind::Z, q);
    }
    /// (-I + iX) / sqrt(2), a square root of -iX.
    static Gate sqrt_minus_ix(size_t q) {
        return single(GateKind::SqrtMinusIX, q);
    }
    /// (iI + Z) / sqrt(2), a square root of iZ.
    static Gate sqrt_iz(size_t q) {
        return single(GateKind::SqrtIZ, q);
    }
    static Gate cz(size_t a, size_t b);

    GateKind kind() const noexcept {
        return kind_;
    }
    size_t arity() const noexcept {
        return arity_;
    }
    std::span<const size_t> targets() const noexcept {
        return {targets_.data(), arity_};
    }
    /// e.g. "CZ 0 5" or "H 3".
    std::string to_string() const;

    bool operator==(const Gate &other) const = default;

   private:
    static Gate single(GateKind kind, size_t q);

    GateKind kind_;
    std::array<size_t, 2> targets_{};
    size_t arity_;
};

/// Single-qubit pure state (amplitude of |0>, amplitude of |1>).
struct QubitState {
    Amplitude zero;
    Amplitude one;

    static QubitState ket0() {
        return {1.0, 0.0};
    }
    static QubitState ket1() {
        return {0.0, 1.0};
    }
    static QubitState plus();
    static QubitState minus();
};

/// Dense 2^n amplitude vector. Bit i of a basis index is qubit i.
class StateVector {
   public:
    /// |0...0> on n qubits. Throws TooLarge when n > max_qubits.
    explicit StateVector(size_t n, size_t max_qubits = kDefaultMaxQubits);

    static StateVector basis(size_t n, uint64_t index, size_t max_qubits = kDefaultMaxQubits);
    static StateVector plus(size_t n, size_t max_qubits = kDefaultMaxQubits);
    /// Tensor product; qubits[i] is qubit i.
    static StateVector product(std::span<const QubitState> qubits, size_t max_qubits = kDefaultMaxQubits);
    /// Takes ownership of raw amplitudes; size must be a power of two. No normalisation.
    static StateVector from_amplitudes(std::vector<Amplitude> amps, size_t max_qubits = kDefaultMaxQubits);

    size_t num_qubits() const noexcept {
        return n_;
    }
    size_t dimension() const noexcept {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    Amplitude operator[](uint64_t index) const {
        return amps_[index];
    }

    StateVector &apply(const Gate &gate);
    double norm_squared() const noexcept;

    /// Lines "index,real,imag" in ascending basis order, numbers as %.17g.
    std::string to_csv() const;

    /// Unnormalised linear algebra for building reference superpositions.
    StateVector &operator+=(const StateVector &other);
    StateVector &operator-=(const StateVector &other);
    StateVector &operator*=(Amplitude factor);
    friend StateVector operator+(StateVector a, const StateVector &b) {
        return a += b;
    }
    friend StateVector operator-(StateVector a, const StateVector &b) {
        return a -= b;
    }
    friend StateVector operator*(Amplitude factor, StateVector a) {
        return a *= factor;
    }

   private:
    StateVector() = default;
    void check_target(size_t q) const;
    void apply_single(size_t q, const std::array<Amplitude, 4> &m);

    size_t n_ = 0;
    std::vector<Amplitude> amps_;
};

StateVector apply_gate(StateVector sv, const Gate &gate);

/// `low` occupies qubits [0, low.n), `high` the qubits above.
StateVector tensor(const StateVector &low, const StateVector &high, size_t max_qubits = kDefaultMaxQubits);

/// Largest component-wise |a_i - b_i|.
double max_abs_diff(const StateVector &a, const StateVector &b);
bool equal_exact(const StateVector &a, const StateVector &b, double tol = kStateTolerance);

struct PhaseComparison {
    bool equal;
    /// Unit-modulus lambda with a ~ lambda * b.
    Amplitude phase;
    /// max_i |a_i - lambda * b_i|.
    double residual;
};

/// Compares a against lambda * b, lambda fixed by the largest-magnitude component of b.
PhaseComparison equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol = kStateTolerance);

/// prod_{edges} CZ |+>^n, built gate by gate.
StateVector graph_state(const Graph &g, size_t max_qubits = kDefaultMaxQubits);

}  // namespace gselc

#endif
