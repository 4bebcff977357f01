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

#ifndef GSELC_LOGICAL_ENCODING_H
#define GSELC_LOGICAL_ENCODING_H

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gselc/graph.h"
#include "gselc/report.h"
#include "gselc/state_vector.h"

namespace gselc {

/// Five physical qubits of one five-qubit-code block: a core plus four ancillae.
struct LogicalRegister {
    size_t core;
    std::array<size_t, 4> ancillae;

    /// Block j occupies qubits [5j, 5j + 4] with the core first.
    static LogicalRegister block(size_t j);

    /// core, ancillae[0..3]; this is also the pentagon's cyclic order.
    std::array<size_t, 5> qubits() const;
};

/// Throws OutOfRange if any index repeats within or across the registers.
void check_registers_disjoint(std::span<const LogicalRegister> registers);

struct LoggedGate {
    Gate gate;
    std::string stage;
    /// Hadamard applied where it provably leaves the state unchanged.
    bool identity_position = false;
};

/// Ordered record of every gate a construction applied, tagged by stage.
class CircuitLog {
   public:
    void record(const Gate &gate, std::string_view stage, bool identity_position = false);

    std::span<const LoggedGate> gates() const noexcept {
        return gates_;
    }
    size_t cz_count() const noexcept {
        return cz_count_;
    }
    size_t cz_count(std::string_view stage) const;
    /// Hadamards that change the state.
    size_t hadamard_count() const noexcept {
        return hadamard_count_;
    }
    size_t identity_hadamard_count() const noexcept {
        return identity_hadamard_count_;
    }

   private:
    std::vector<LoggedGate> gates_;
    size_t cz_count_ = 0;
    size_t hadamard_count_ = 0;
    size_t identity_hadamard_count_ = 0;
};

/// Applies `gate` to `sv` and appends it to `log`.
void apply_logged(StateVector &sv, CircuitLog &log, const Gate &gate, std::string_view stage,
                  bool identity_position = false);

/// Replays every logged gate, in order, onto `initial`.
StateVector replay(const CircuitLog &log, StateVector initial);

/// H_core prod_i CZ_{core, ancilla_i} H_core: the repetition-code step.
void ghz_encode(StateVector &sv, const LogicalRegister &reg, CircuitLog &log);
/// CZ around the 5-cycle core, a0, a1, a2, a3.
void pentagon(StateVector &sv, const LogicalRegister &reg, CircuitLog &log);
/// pentagon after ghz_encode; sends |+/->_core |+>^4 to the logical |+/-_L>.
void encode_logical(StateVector &sv, const LogicalRegister &reg, CircuitLog &log);
/// Logical CZ between two encoded blocks: CZ on all 25 inter-block pairs.
void logical_cz(StateVector &sv, const LogicalRegister &a, const LogicalRegister &b, CircuitLog &log);

struct Construction {
    StateVector state;
    CircuitLog log;
};

struct ElcConstruction {
    StateVector state;
    CircuitLog log;
    /// State after both Hadamard sets, before the pentagons.
    StateVector pre_pentagon;
    /// Graph tracked through the pipeline by applying ELC for each Hadamard pair.
    Graph pre_pentagon_graph;
    Graph final_graph;
    /// Oracle checks that each tracked graph state matches the simulated state.
    Report tracking;
};

/// Encodes |+>^{5n} block by block (pentagons; the repetition step acts
/// trivially on |+>), then applies the logical CZ between neighbouring blocks.
Construction build_cluster_direct(size_t n_logical, size_t max_qubits = kDefaultMaxQubits);

/// Core chain CZs, Hadamards on core pairs (0,1), (2,3), ..., repetition-code
/// CZs, a second round of core Hadamards, then pentagons.
ElcConstruction build_cluster_elc(size_t n_logical, double tol = kStateTolerance,
                                  size_t max_qubits = kDefaultMaxQubits);

Construction build_cs2_direct(size_t max_qubits = kDefaultMaxQubits);
ElcConstruction build_cs2_elc(double tol = kStateTolerance, size_t max_qubits = kDefaultMaxQubits);

/// 1/2 [ |+>^5 (|+>^5 + |->^5) + |->^5 (|+>^5 - |->^5) ], block A on qubits 0..4.
StateVector classically_encoded_pair(size_t max_qubits = kDefaultMaxQubits);

/// Pentagons on every block plus complete bipartite edges between consecutive blocks.
Graph encoded_cluster_graph(size_t n_logical);

/// Compares the direct and ELC two-block constructions.
Report verify_cs2_equivalence(double tol = kStateTolerance, size_t max_qubits = kDefaultMaxQubits);

struct ChainCore {
    Graph graph;
    CircuitLog log;
};

/// Path on the n_logical core qubits. n_logical must be even and at least 2.
ChainCore build_chain_core(size_t n_logical);

/// On the core chain alone, applies Hadamard pairs left to right and checks
/// each intermediate state against the graph state of the ELC'd graph.
Report verify_chain_elc_steps(size_t n_logical, double tol = kStateTolerance,
                              size_t max_qubits = kDefaultMaxQubits);

struct LogicalCluster {
    StateVector state;
    CircuitLog log;
    Report report;
};

/// ELC pipeline for an n_logical chain, checked against build_cluster_direct.
LogicalCluster build_logical_cluster(size_t n_logical, double tol = kStateTolerance,
                                     size_t max_qubits = kDefaultMaxQubits);

/// `{"construction", "n_logical", "cz_count", "hadamard_count", "equal_to_reference", "max_amp_diff"}`.
nlohmann::ordered_json construction_summary(std::string_view construction, size_t n_logical, const CircuitLog &log,
                                            bool equal_to_reference, double max_amp_diff);

}  // namespace gselc

#endif
