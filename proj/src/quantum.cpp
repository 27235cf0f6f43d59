#include "qdb/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace qdb {

const Reflection4& reflection4() {
    static const Reflection4 r0 = [] {
        Reflection4 m{};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m[r][c] = (r == c) ? -0.5 : 0.5;
        return m;
    }();
    return r0;
}

double JointState::norm_squared() const {
    double s = 0.0;
    for (const Amplitude& a : amplitudes) s += std::norm(a);
    return s;
}

double JointState::probability_of(std::uint64_t label) const {
    if (label >= size()) throw IndexError("label out of range");
    return std::norm(amplitudes[label]);
}

std::vector<std::uint64_t> JointState::active_labels() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t l = 0; l < size(); ++l)
        if (active[l]) out.push_back(l);
    return out;
}

JointState uniform_state(int letters, std::vector<std::uint64_t> correlation) {
    const std::uint64_t space = label_space_size(letters);
    if (correlation.size() != space)
        throw InvalidCorrelationError(
            "correlation covers " + std::to_string(correlation.size()) +
            " labels, expected " + std::to_string(space));
    std::unordered_set<std::uint64_t> seen(correlation.begin(), correlation.end());
    if (seen.size() != correlation.size())
        throw InvalidCorrelationError("correlation maps two labels to one address");

    JointState state;
    state.letters = letters;
    state.amplitudes.assign(space, Amplitude(std::pow(4.0, -letters / 2.0), 0.0));
    state.correlation = std::move(correlation);
    state.active.assign(space, 1);
    return state;
}

static void check_letter_index(const JointState& state, int i) {
    if (i < 1 || i > state.letters)
        throw IndexError("letter index " + std::to_string(i) + " out of range [1," +
                         std::to_string(state.letters) + "]");
}

JointState apply_oracle(const JointState& state, FactorizedOracle& oracle, int i) {
    check_letter_index(state, i);
    const int shift = 2 * (state.letters - i);
    const std::uint64_t want = (oracle.target.index() >> shift) & 3;

    JointState out = state;
    for (std::uint64_t l = 0; l < out.size(); ++l)
        if (((l >> shift) & 3) == want) out.amplitudes[l] = -out.amplitudes[l];
    oracle.queries_used += 1;
    return out;
}

JointState apply_reflection(const JointState& state, int i) {
    check_letter_index(state, i);
    const int shift = 2 * (state.letters - i);
    const std::uint64_t stride = std::uint64_t{1} << shift;

    JointState out = state;
    // R0 v = (sum(v)/2) - v_k on each 4-block of letter i.
    for (std::uint64_t base = 0; base < out.size(); ++base) {
        if (((base >> shift) & 3) != 0) continue;
        Amplitude sum = 0.0;
        for (int k = 0; k < 4; ++k) sum += state.amplitudes[base + k * stride];
        for (int k = 0; k < 4; ++k)
            out.amplitudes[base + k * stride] =
                sum * 0.5 - state.amplitudes[base + k * stride];
    }
    return out;
}

JointState project_prune(const JointState& state, double eps) {
    if (eps <= 0.0) throw IndexError("prune tolerance must be positive");
    JointState out = state;
    double surviving = 0.0;
    for (std::uint64_t l = 0; l < out.size(); ++l) {
        if (std::abs(out.amplitudes[l]) < eps) {
            out.amplitudes[l] = 0.0;
            out.active[l] = 0;
        } else {
            out.active[l] = 1;
            surviving += std::norm(out.amplitudes[l]);
        }
    }
    if (surviving == 0.0)
        throw EmptyStateError("all amplitudes below prune tolerance");
    const double scale = 1.0 / std::sqrt(surviving);
    for (Amplitude& a : out.amplitudes) a *= scale;
    return out;
}

JointState grover_letter_step(const JointState& state, FactorizedOracle& oracle,
                              int i, double eps) {
    return project_prune(apply_reflection(apply_oracle(state, oracle, i), i), eps);
}

SearchOutcome factorized_search(JointState state, FactorizedOracle& oracle, double eps) {
    const long before = oracle.queries_used;
    for (int i = 1; i <= state.letters; ++i)
        state = grover_letter_step(state, oracle, i, eps);

    const std::uint64_t target = oracle.target.index();
    if (state.probability_of(target) < 1.0 - kNormTolerance)
        throw ConsistencyError("search did not converge on the target label");
    return SearchOutcome{Label(state.letters, target), state.correlation[target],
                         oracle.queries_used - before};
}

SearchOutcome factorized_search(int letters, std::vector<std::uint64_t> correlation,
                                FactorizedOracle& oracle, double eps) {
    if (oracle.target.index() >= label_space_size(letters))
        throw IndexError("oracle target outside the label space");
    return factorized_search(uniform_state(letters, std::move(correlation)), oracle, eps);
}

}  // namespace qdb
