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

#include "gselc/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <string>

#include "gselc/error.h"

namespace gselc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_size(size_t n, size_t max_qubits) {
    if (n > max_qubits) {
        throw Error(ErrorKind::TooLarge,
                    std::to_string(n) + " qubits exceeds the configured maximum of " + std::to_string(max_qubits));
    }
    if (n >= 63) {
        throw Error(ErrorKind::TooLarge, "state vector of " + std::to_string(n) + " qubits is not addressable");
    }
}

void check_same_shape(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorKind::SizeMismatch, "states on " + std::to_string(a.num_qubits()) + " and " +
                                                 std::to_string(b.num_qubits()) + " qubits");
    }
}

}  // namespace

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::CZ:
            return "CZ";
        case GateKind::SqrtMinusIX:
            return "SQRT_MINUS_IX";
        case GateKind::SqrtIZ:
            return "SQRT_IZ";
    }
    return "?";
}

Gate::Gate(GateKind kind, std::span<const size_t> targets) : kind_(kind), arity_(targets.size()) {
    size_t expected = kind == GateKind::CZ ? 2 : 1;
    if (targets.size() != expected) {
        throw Error(ErrorKind::BadArity, gate_kind_name(kind) + " takes " + std::to_string(expected) +
                                             " target(s), got " + std::to_string(targets.size()));
    }
    if (kind == GateKind::CZ && targets[0] == targets[1]) {
        throw Error(ErrorKind::BadArity, "CZ targets must be distinct");
    }
    for (size_t k = 0; k < targets.size(); k++) {
        targets_[k] = targets[k];
    }
}

Gate Gate::single(GateKind kind, size_t q) {
    std::array<size_t, 1> t{q};
    return Gate(kind, t);
}

Gate Gate::cz(size_t a, size_t b) {
    std::array<size_t, 2> t{a, b};
    return Gate(GateKind::CZ, t);
}

std::string Gate::to_string() const {
    std::string out = gate_kind_name(kind_);
    for (size_t t : targets()) {
        out += ' ';
        out += std::to_string(t);
    }
    return out;
}

QubitState QubitState::plus() {
    return {kInvSqrt2, kInvSqrt2};
}

QubitState QubitState::minus() {
    return {kInvSqrt2, -kInvSqrt2};
}

StateVector::StateVector(size_t n, size_t max_qubits) {
    check_size(n, max_qubits);
    n_ = n;
    amps_.assign(size_t{1} << n, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(size_t n, uint64_t index, size_t max_qubits) {
    StateVector sv(n, max_qubits);
    if (index >= sv.dimension()) {
        throw Error(ErrorKind::OutOfRange, "basis index " + std::to_string(index) + " out of range");
    }
    sv.amps_[0] = 0.0;
    sv.amps_[index] = 1.0;
    return sv;
}

StateVector StateVector::plus(size_t n, size_t max_qubits) {
    StateVector sv(n, max_qubits);
    double value = std::pow(2.0, -0.5 * static_cast<double>(n));
    for (auto &a : sv.amps_) {
        a = value;
    }
    return sv;
}

StateVector StateVector::product(std::span<const QubitState> qubits, size_t max_qubits) {
    StateVector sv(qubits.size(), max_qubits);
    for (uint64_t index = 0; index < sv.dimension(); index++) {
        Amplitude a = 1.0;
        for (size_t q = 0; q < qubits.size(); q++) {
            a *= ((index >> q) & 1) ? qubits[q].one : qubits[q].zero;
        }
        sv.amps_[index] = a;
    }
    return sv;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps, size_t max_qubits) {
    if (amps.empty() || (amps.size() & (amps.size() - 1)) != 0) {
        throw Error(ErrorKind::SizeMismatch, "amplitude count " + std::to_string(amps.size()) +
                                                 " is not a power of two");
    }
    size_t n = static_cast<size_t>(std::countr_zero(amps.size()));
    check_size(n, max_qubits);
    StateVector sv;
    sv.n_ = n;
    sv.amps_ = std::move(amps);
    return sv;
}

void StateVector::check_target(size_t q) const {
    if (q >= n_) {
        throw Error(ErrorKind::OutOfRange,
                    "qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + "-qubit state");
    }
}

// m is row-major [m00, m01, m10, m11].
void StateVector::apply_single(size_t q, const std::array<Amplitude, 4> &m) {
    size_t stride = size_t{1} << q;
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            Amplitude a0 = amps_[i];
            Amplitude a1 = amps_[i + stride];
            amps_[i] = m[0] * a0 + m[1] * a1;
            amps_[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

StateVector &StateVector::apply(const Gate &gate) {
    for (size_t t : gate.targets()) {
        check_target(t);
    }
    size_t q = gate.targets()[0];
    size_t stride = size_t{1} << q;
    switch (gate.kind()) {
        case GateKind::H:
            for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
                for (size_t i = base; i < base + stride; i++) {
                    Amplitude a0 = amps_[i];
                    Amplitude a1 = amps_[i + stride];
                    amps_[i] = (a0 + a1) * kInvSqrt2;
                    amps_[i + stride] = (a0 - a1) * kInvSqrt2;
                }
            }
            break;
        case GateKind::X:
            for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
                for (size_t i = base; i < base + stride; i++) {
                    std::swap(amps_[i], amps_[i + stride]);
                }
            }
            break;
        case GateKind::Z:
            for (size_t i = 0; i < amps_.size(); i++) {
                if (i & stride) {
                    amps_[i] = -amps_[i];
                }
            }
            break;
        case GateKind::CZ: {
            size_t mask = stride | (size_t{1} << gate.targets()[1]);
            for (size_t i = 0; i < amps_.size(); i++) {
                if ((i & mask) == mask) {
                    amps_[i] = -amps_[i];
                }
            }
            break;
        }
        case GateKind::SqrtMinusIX: {
            const Amplitude d{-kInvSqrt2, 0.0};
            const Amplitude o{0.0, kInvSqrt2};
            apply_single(q, {d, o, o, d});
            break;
        }
        case GateKind::SqrtIZ: {
            const Amplitude zero{0.0, 0.0};
            apply_single(q, {Amplitude{kInvSqrt2, kInvSqrt2}, zero, zero, Amplitude{-kInvSqrt2, kInvSqrt2}});
            break;
        }
    }
    return *this;
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::string StateVector::to_csv() const {
    std::string out;
    char line[96];
    for (size_t i = 0; i < amps_.size(); i++) {
        // Adding +0.0 folds a negative zero into 0 so dumps do not print "-0".
        std::snprintf(line, sizeof(line), "%zu,%.17g,%.17g\n", i, amps_[i].real() + 0.0, amps_[i].imag() + 0.0);
        out += line;
    }
    return out;
}

StateVector &StateVector::operator+=(const StateVector &other) {
    check_same_shape(*this, other);
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] += other.amps_[i];
    }
    return *this;
}

StateVector &StateVector::operator-=(const StateVector &other) {
    check_same_shape(*this, other);
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] -= other.amps_[i];
    }
    return *this;
}

StateVector &StateVector::operator*=(Amplitude factor) {
    for (auto &a : amps_) {
        a *= factor;
    }
    return *this;
}

StateVector apply_gate(StateVector sv, const Gate &gate) {
    sv.apply(gate);
    return sv;
}

StateVector tensor(const StateVector &low, const StateVector &high, size_t max_qubits) {
    size_t n = low.num_qubits() + high.num_qubits();
    check_size(n, max_qubits);
    std::vector<Amplitude> amps(size_t{1} << n);
    size_t shift = low.num_qubits();
    for (size_t h = 0; h < high.dimension(); h++) {
        for (size_t l = 0; l < low.dimension(); l++) {
            amps[(h << shift) | l] = low[l] * high[h];
        }
    }
    return StateVector::from_amplitudes(std::move(amps), max_qubits);
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    check_same_shape(a, b);
    double worst = 0.0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (size_t i = 0; i < x.size(); i++) {
        worst = std::max(worst, std::abs(x[i] - y[i]));
    }
    return worst;
}

bool equal_exact(const StateVector &a, const StateVector &b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

PhaseComparison equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    check_same_shape(a, b);
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    size_t ref = 0;
    for (size_t i = 1; i < y.size(); i++) {
        if (std::abs(y[i]) > std::abs(y[ref])) {
            ref = i;
        }
    }
    Amplitude phase{1.0, 0.0};
    Amplitude ratio = std::abs(y[ref]) > 0.0 ? x[ref] / y[ref] : Amplitude{0.0, 0.0};
    if (std::abs(ratio) > 0.0) {
        phase = ratio / std::abs(ratio);
    }
    double residual = 0.0;
    for (size_t i = 0; i < x.size(); i++) {
        residual = std::max(residual, std::abs(x[i] - phase * y[i]));
    }
    return {residual <= tol, phase, residual};
}

StateVector graph_state(const Graph &g, size_t max_qubits) {
    StateVector sv = StateVector::plus(g.num_vertices(), max_qubits);
    for (const auto &[a, b] : g.edges()) {
        sv.apply(Gate::cz(a, b));
    }
    return sv;
}

}  // namespace gselc
