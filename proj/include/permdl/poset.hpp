// Descent compositions and the diamond posets whose linear extensions are the
// minimal permutations with a fixed descent/ascent profile.
//
// Nodes are permutation positions 1..n. A cover (lower, upper) means the value
// at `lower` must be smaller than the value at `upper`. A descent at i gives
// the cover (i+1, i); an ascent at i closes a diamond with i+1 on top, i at
// the bottom and i-1, i+2 as the two middles, which adds the covers (i-1, i+1)
// and (i, i+2) to the descent covers around it.

#ifndef PERMDL_POSET_HPP
#define PERMDL_POSET_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permdl/bigint.hpp"
#include "permdl/permutation.hpp"

namespace permdl {

/// Lengths of the maximal descent blocks, in order. A block of length r spans
/// r+1 positions; consecutive blocks are joined by one ascent.
class DescentComposition {
public:
    explicit DescentComposition(std::vector<int> run_lengths) : run_lengths_(std::move(run_lengths)) {
        if (run_lengths_.empty()) throw std::invalid_argument("composition needs at least one block");
        for (int r : run_lengths_)
            if (r < 1) throw std::invalid_argument("block lengths must be at least 1");
    }

    const std::vector<int>& run_lengths() const noexcept { return run_lengths_; }
    int blocks() const noexcept { return static_cast<int>(run_lengths_.size()); }
    int d() const noexcept { return std::accumulate(run_lengths_.begin(), run_lengths_.end(), 0); }
    int n() const noexcept { return d() + blocks(); }

    /// One-based ascent positions (the last position of every block but the final one).
    std::vector<int> ascent_positions() const {
        std::vector<int> out;
        int pos = 0;
        for (int b = 0; b + 1 < blocks(); ++b) {
            pos += run_lengths_[b] + 1;
            out.push_back(pos);
        }
        return out;
    }

    friend bool operator==(const DescentComposition&, const DescentComposition&) = default;
    friend auto operator<=>(const DescentComposition& a, const DescentComposition& b) {
        return a.run_lengths_ <=> b.run_lengths_;
    }

private:
    std::vector<int> run_lengths_;
};

inline std::string to_string(const DescentComposition& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.run_lengths().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.run_lengths()[i]);
    }
    return out + ")";
}

/// The composition of p if p consists of non-empty descent blocks separated
/// by isolated ascents; nullopt otherwise (or if p has no descent).
inline std::optional<DescentComposition> composition_of(const Permutation& p) {
    const auto v = p.values();
    if (v.size() < 2) return std::nullopt;
    std::vector<int> runs;
    int cur = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] > v[i + 1]) {
            ++cur;
        } else {
            if (cur == 0) return std::nullopt;  // leading or doubled ascent
            runs.push_back(cur);
            cur = 0;
        }
    }
    if (cur == 0) return std::nullopt;  // trailing ascent
    runs.push_back(cur);
    return DescentComposition(std::move(runs));
}

/// Compositions of d into n-d positive parts, in lexicographic order.
/// Empty when n lies outside [d+1, 2d].
inline std::vector<DescentComposition> compositions(int d, int n) {
    std::vector<DescentComposition> out;
    const int k = n - d;
    if (d < 1 || k < 1 || k > d) return out;
    std::vector<int> parts(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == k - 1) {
            parts[idx] = remaining;
            out.emplace_back(parts);
            return;
        }
        for (int r = 1; r <= remaining - (k - 1 - idx); ++r) {
            parts[idx] = r;
            self(self, idx + 1, remaining - r);
        }
    };
    rec(rec, 0, d);
    return out;
}

class DiamondPoset {
public:
    using Cover = std::pair<int, int>;  // (lower, upper)

    /// Arbitrary cover relation on nodes 1..n; rejects cycles.
    DiamondPoset(int element_count, std::vector<Cover> covers)
        : n_(element_count), covers_(std::move(covers)) {
        if (n_ < 1) throw std::invalid_argument("poset needs at least one node");
        uppers_.assign(static_cast<std::size_t>(n_) + 1, {});
        lowers_.assign(static_cast<std::size_t>(n_) + 1, {});
        for (auto [lo, up] : covers_) {
            if (lo < 1 || lo > n_ || up < 1 || up > n_ || lo == up)
                throw std::invalid_argument("cover references an invalid node");
            uppers_[lo].push_back(up);
            lowers_[up].push_back(lo);
        }
        if (!acyclic()) throw std::invalid_argument("cover relation has a cycle");
    }

    int element_count() const noexcept { return n_; }
    const std::vector<Cover>& covers() const noexcept { return covers_; }
    const std::vector<int>& uppers(int node) const { return uppers_.at(static_cast<std::size_t>(node)); }
    const std::vector<int>& lowers(int node) const { return lowers_.at(static_cast<std::size_t>(node)); }
    const std::optional<DescentComposition>& composition() const noexcept { return composition_; }

    /// Descent count of every authorized labelling (only meaningful for composition-built posets).
    int d() const { return composition_ ? composition_->d() : throw std::logic_error("poset has no composition"); }

    /// True iff the permutation, read as a labelling, respects every cover.
    bool respects(const Permutation& p) const {
        if (p.size() != n_) return false;
        for (auto [lo, up] : covers_)
            if (p.at(lo) >= p.at(up)) return false;
        return true;
    }

    friend DiamondPoset build_poset(const DescentComposition& c);

private:
    bool acyclic() const {
        std::vector<int> indeg(static_cast<std::size_t>(n_) + 1, 0);
        for (auto [lo, up] : covers_) ++indeg[up];
        std::vector<int> stack;
        for (int v = 1; v <= n_; ++v)
            if (indeg[v] == 0) stack.push_back(v);
        int seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (int u : uppers_[v])
                if (--indeg[u] == 0) stack.push_back(u);
        }
        return seen == n_;
    }

    int n_;
    std::vector<Cover> covers_;
    std::vector<std::vector<int>> uppers_;
    std::vector<std::vector<int>> lowers_;
    std::optional<DescentComposition> composition_;
};

inline DiamondPoset build_poset(const DescentComposition& c) {
    const int n = c.n();
    std::vector<char> ascent(static_cast<std::size_t>(n) + 1, 0);
    for (int a : c.ascent_positions()) ascent[a] = 1;
    std::vector<DiamondPoset::Cover> covers;
    for (int i = 1; i < n; ++i)
        if (!ascent[i]) covers.emplace_back(i + 1, i);
    for (int i = 1; i < n; ++i) {
        if (!ascent[i]) continue;
        covers.emplace_back(i - 1, i + 1);
        covers.emplace_back(i, i + 2);
    }
    DiamondPoset poset(n, std::move(covers));
    poset.composition_ = c;
    return poset;
}

/// The ladder with d steps: composition (1,1,...,1), 2d nodes.
inline DiamondPoset ladder_poset(int d) {
    if (d < 1) throw std::invalid_argument("ladder needs at least one step");
    return build_poset(DescentComposition(std::vector<int>(static_cast<std::size_t>(d), 1)));
}

/// Visits every authorized labelling in search order; `visit` returns false to stop.
///
/// Values n, n-1, ..., 1 are assigned in turn, each to a node all of whose
/// uppers already carry a label.
template <typename Visit>
void for_each_labelling(const DiamondPoset& poset, Visit&& visit) {
    const int n = poset.element_count();
    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> pending(static_cast<std::size_t>(n) + 1, 0);  // unlabelled uppers
    for (int v = 1; v <= n; ++v) pending[v] = static_cast<int>(poset.uppers(v).size());
    bool stop = false;

    auto rec = [&](auto&& self, int value) -> void {
        if (value == 0) {
            if (!visit(Permutation(std::vector<int>(label.begin() + 1, label.end())))) stop = true;
            return;
        }
        for (int node = 1; node <= n && !stop; ++node) {
            if (label[node] != 0 || pending[node] != 0) continue;
            label[node] = value;
            for (int lo : poset.lowers(node)) --pending[lo];
            self(self, value - 1);
            for (int lo : poset.lowers(node)) ++pending[lo];
            label[node] = 0;
        }
    };
    rec(rec, n);
}

/// All authorized labellings as permutations in position order, sorted lexicographically.
inline std::vector<Permutation> authorized_labellings(const DiamondPoset& poset) {
    std::vector<Permutation> out;
    for_each_labelling(poset, [&](Permutation p) {
        out.push_back(std::move(p));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Linear-extension count by dynamic programming over the set of labelled nodes.
inline BigInt count_labellings(const DiamondPoset& poset) {
    const int n = poset.element_count();
    if (n > 63) throw std::invalid_argument("count_labellings supports at most 63 nodes");
    std::vector<std::uint64_t> upper_mask(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
        for (int u : poset.uppers(v)) upper_mask[v] |= std::uint64_t{1} << u;
    const std::uint64_t full = ((std::uint64_t{1} << n) - 1) << 1;
    std::unordered_map<std::uint64_t, BigInt> memo;

    auto rec = [&](auto&& self, std::uint64_t done) -> BigInt {
        if (done == full) return 1;
        if (auto it = memo.find(done); it != memo.end()) return it->second;
        BigInt total = 0;
        for (int v = 1; v <= n; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if ((done & bit) == 0 && (upper_mask[v] & ~done) == 0) total += self(self, done | bit);
        }
        memo.emplace(done, total);
        return total;
    };
    return rec(rec, 0);
}

/// Linear-extension count by exhaustive enumeration.
inline BigInt count_labellings_by_enumeration(const DiamondPoset& poset) {
    BigInt total = 0;
    for_each_labelling(poset, [&](const Permutation&) {
        ++total;
        return true;
    });
    return total;
}

/// Ladder criterion: with the upper line at odd positions and the lower line at
/// even positions, both lines increase and the i-th upper element exceeds at
/// least i lower elements.
inline bool satisfies_ladder_criterion(const Permutation& p) {
    if (p.size() % 2 != 0) return false;
    const int d = p.size() / 2;
    std::vector<int> upper, lower;
    for (int i = 1; i <= d; ++i) {
        upper.push_back(p.at(2 * i - 1));
        lower.push_back(p.at(2 * i));
    }
    if (!std::is_sorted(upper.begin(), upper.end()) || !std::is_sorted(lower.begin(), lower.end())) return false;
    for (int i = 0; i < d; ++i) {
        const auto smaller = std::count_if(lower.begin(), lower.end(), [&](int y) { return y < upper[i]; });
        if (smaller < i + 1) return false;
    }
    return true;
}

/// `lower -> upper`, one cover per line.
inline void write_edge_list(std::ostream& os, const DiamondPoset& poset) {
    for (auto [lo, up] : poset.covers()) os << lo << " -> " << up << '\n';
}

}  // namespace permdl

#endif  // PERMDL_POSET_HPP
