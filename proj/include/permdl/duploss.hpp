// Whole-genome duplication / random-loss model.
//
// One step duplicates the whole permutation in tandem (p p) and then loses one
// copy of every element. If `kept_first` is the set of values whose first copy
// survives, the result is p restricted to kept_first followed by p restricted
// to the complement, both in p's order. A step is therefore fully described by
// that set.

#ifndef PERMDL_DUPLOSS_HPP
#define PERMDL_DUPLOSS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "permdl/permutation.hpp"

namespace permdl {

struct DuplicationStep {
    std::vector<int> kept_first;  // sorted values retained from the first copy
    friend bool operator==(const DuplicationStep&, const DuplicationStep&) = default;
};

struct Scenario {
    Permutation start;
    std::vector<DuplicationStep> steps;
    Permutation end;

    int n() const noexcept { return start.size(); }
    std::size_t length() const noexcept { return steps.size(); }
};

inline Permutation apply_step(const Permutation& p, const DuplicationStep& step) {
    const int n = p.size();
    std::vector<char> first(static_cast<std::size_t>(n) + 1, 0);
    for (int v : step.kept_first) {
        if (v < 1 || v > n)
            throw std::invalid_argument("kept value " + std::to_string(v) + " is not in the permutation");
        first[v] = 1;
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int v : p.values())
        if (first[v]) out.push_back(v);
    for (int v : p.values())
        if (!first[v]) out.push_back(v);
    return Permutation(std::move(out));
}

/// Smallest s with 2^s >= k, for k >= 1.
inline int ceil_log2(std::uint64_t k) noexcept {
    int s = 0;
    while ((std::uint64_t{1} << s) < k) ++s;
    return s;
}

/// Minimum number of whole-genome steps turning the identity into p:
/// ceil(log2(number of maximal increasing runs)).
inline int min_steps(const Permutation& p) {
    return ceil_log2(static_cast<std::uint64_t>(descent_count(p)) + 1);
}

/// True iff desc(p) <= 2^budget - 1.
inline bool reachable_within(const Permutation& p, int budget) {
    if (budget < 0) throw std::invalid_argument("budget must be non-negative");
    if (budget >= 62) return true;
    return static_cast<std::uint64_t>(descent_count(p)) <= (std::uint64_t{1} << budget) - 1;
}

inline Permutation replay(const Permutation& start, const std::vector<DuplicationStep>& steps) {
    Permutation cur = start;
    for (const auto& s : steps) cur = apply_step(cur, s);
    return cur;
}

/// An optimal scenario from the identity to `target`.
///
/// Works backward: with runs R1..Rk and m = ceil(k/2), the predecessor is
/// M1..Mm with Mi = sorted(Ri u R(i+m)), and the step keeps R1..Rm from the
/// first copy. The predecessor has at most m runs, so the recursion ends at the
/// identity after ceil(log2 k) steps.
inline Scenario synthesize_scenario(const Permutation& target) {
    std::vector<DuplicationStep> backward;
    Permutation cur = target;
    while (true) {
        auto runs = maximal_runs(cur).runs;
        const std::size_t k = runs.size();
        if (k == 1) break;
        const std::size_t m = (k + 1) / 2;
        std::vector<int> pred;
        DuplicationStep step;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<int> merged = runs[i];
            if (i + m < k) merged.insert(merged.end(), runs[i + m].begin(), runs[i + m].end());
            std::sort(merged.begin(), merged.end());
            pred.insert(pred.end(), merged.begin(), merged.end());
            step.kept_first.insert(step.kept_first.end(), runs[i].begin(), runs[i].end());
        }
        std::sort(step.kept_first.begin(), step.kept_first.end());
        backward.push_back(std::move(step));
        cur = Permutation(std::move(pred));
    }
    std::reverse(backward.begin(), backward.end());
    return Scenario{Permutation::identity(target.size()), std::move(backward), target};
}

/// Forward simulation from the identity with uniformly random steps.
///
/// Generator: std::mt19937_64 seeded with `seed`. For each step, values
/// 1..n are visited in increasing order and each consumes one 64-bit draw;
/// the value joins kept_first iff the draw's most significant bit is set.
inline Scenario random_evolution(int n, int steps, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    std::mt19937_64 gen(seed);
    Permutation start = Permutation::identity(n);
    Permutation cur = start;
    std::vector<DuplicationStep> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int s = 0; s < steps; ++s) {
        DuplicationStep step;
        for (int v = 1; v <= n; ++v)
            if (gen() >> 63) step.kept_first.push_back(v);
        cur = apply_step(cur, step);
        out.push_back(std::move(step));
    }
    return Scenario{std::move(start), std::move(out), std::move(cur)};
}

}  // namespace permdl

#endif  // PERMDL_DUPLOSS_HPP
