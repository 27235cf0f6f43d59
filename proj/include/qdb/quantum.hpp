#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "qdb/label.hpp"

namespace qdb {

using Amplitude = std::complex<double>;

constexpr double kDefaultPruneEps = 1e-9;
constexpr double kNormTolerance = 1e-9;

// The constant per-letter reflection 2|s><s| - I for the uniform 4-vector
// s = (1/2, 1/2, 1/2, 1/2): -1/2 on the diagonal, +1/2 off it.
using Reflection4 = std::array<std::array<double, 4>, 4>;
const Reflection4& reflection4();

// Per-letter sign oracle: flips the amplitude of every label whose letter i
// matches the target's letter i. Counts one query per application.
struct FactorizedOracle {
    Label target;
    long queries_used = 0;

    explicit FactorizedOracle(Label t) : target(t) {}
};

// Complex amplitude vector over the 4^n label space, correlated label by
// label with the cell addresses of the file being searched. Values are
// immutable snapshots; every operation returns a new state.
struct JointState {
    int letters = 0;
    std::vector<Amplitude> amplitudes;        // size 4^letters
    std::vector<std::uint64_t> correlation;   // label -> cell address
    std::vector<std::uint8_t> active;         // 1 = survived the last prune

    std::uint64_t size() const { return amplitudes.size(); }
    double norm_squared() const;
    double probability_of(std::uint64_t label) const;
    std::vector<std::uint64_t> active_labels() const;
};

struct SearchOutcome {
    Label label;
    std::uint64_t address = 0;
    long queries = 0;
};

// Uniform superposition over the whole label space: every amplitude
// 4^(-n/2), all labels active. The correlation must be a bijection between
// [0, 4^n) and the file's cell addresses.
JointState uniform_state(int letters, std::vector<std::uint64_t> correlation);

// F_i of the pipeline. Letter index i is 1-based, most significant first.
JointState apply_oracle(const JointState& state, FactorizedOracle& oracle, int i);

// R_i = I x ... x R0 x ... x I applied at letter i.
JointState apply_reflection(const JointState& state, int i);

// P: zero every amplitude with modulus < eps, mark it inactive, and
// renormalize the survivors.
JointState project_prune(const JointState& state, double eps = kDefaultPruneEps);

// One P_i R_i F_i round: filters the active set down to the labels whose
// letter i matches the oracle target, consuming exactly one query.
JointState grover_letter_step(const JointState& state, FactorizedOracle& oracle,
                              int i, double eps = kDefaultPruneEps);

// Full factorized search on a prepared uniform state. Runs letters 1..n in
// order and reads the single surviving label off the final state.
SearchOutcome factorized_search(JointState state, FactorizedOracle& oracle,
                                double eps = kDefaultPruneEps);

// Convenience form that prepares the uniform state itself.
SearchOutcome factorized_search(int letters, std::vector<std::uint64_t> correlation,
                                FactorizedOracle& oracle,
                                double eps = kDefaultPruneEps);

}  // namespace qdb
