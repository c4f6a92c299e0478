// Minimal permutations with d descents: those with exactly d descents that
// contain no smaller pattern with d descents.
//
// Local test: p is minimal with d descents iff desc(p) = d and every ascent at
// position i has 2 <= i <= n-2 with p(i-1) p(i) p(i+1) p(i+2) an occurrence of
// 2143 or 3142 (a "diamond").

#ifndef PERMDL_MINIMAL_HPP
#define PERMDL_MINIMAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permdl/bigint.hpp"
#include "permdl/parallel.hpp"
#include "permdl/permutation.hpp"
#include "permdl/poset.hpp"

namespace permdl {

enum class DiamondType { P2143, P3142 };

inline const char* to_string(DiamondType t) { return t == DiamondType::P2143 ? "2143" : "3142"; }

/// Pattern formed by the four entries around the ascent at one-based `ascent`,
/// or nullopt if they are not a diamond (or the window leaves the permutation).
inline std::optional<DiamondType> diamond_at(std::span<const int> v, int ascent) {
    const int n = static_cast<int>(v.size());
    if (ascent < 2 || ascent > n - 2) return std::nullopt;
    const int a = v[ascent - 2], b = v[ascent - 1], c = v[ascent], e = v[ascent + 1];
    // a > b < c > e with a < c and b < e
    if (!(a > b && b < c && c > e && a < c && b < e)) return std::nullopt;
    return a < e ? DiamondType::P2143 : DiamondType::P3142;
}

struct MinimalityWitness {
    enum class Kind { DescentCount, Ascent };
    Kind kind;
    int ascent_position = 0;     // offending ascent (Kind::Ascent)
    int removable_position = 0;  // position whose removal keeps the descent count (Kind::Ascent)
};

struct MinimalityReport {
    bool is_minimal = false;
    int descent_count = 0;
    std::optional<MinimalityWitness> witness;
};

/// Linear-time decision using the diamond condition. When the answer is
/// negative the report names the first offending ascent together with a
/// position whose deletion leaves the descent count unchanged.
inline MinimalityReport is_minimal(const Permutation& p, int d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    MinimalityReport r;
    const auto v = p.values();
    const int n = p.size();
    r.descent_count = descent_count(v);
    if (r.descent_count != d) {
        r.witness = MinimalityWitness{MinimalityWitness::Kind::DescentCount};
        return r;
    }
    for (int i = 1; i < n; ++i) {
        if (v[i - 1] > v[i]) continue;
        if (diamond_at(v, i)) continue;
        MinimalityWitness w{MinimalityWitness::Kind::Ascent, i, 0};
        if (i == 1) {
            w.removable_position = 1;
        } else if (i == n - 1) {
            w.removable_position = n;
        } else if (v[i - 2] < v[i - 1]) {
            w.removable_position = i;  // ascents at i-1 and i
        } else if (v[i] < v[i + 1]) {
            w.removable_position = i + 1;  // ascents at i and i+1
        } else if (v[i - 2] > v[i]) {
            w.removable_position = i;
        } else {
            w.removable_position = i + 1;  // v[i-1] > v[i+1]
        }
        r.witness = w;
        return r;
    }
    r.is_minimal = true;
    return r;
}

/// Brute-force definition: exactly d descents and every single deletion drops
/// below d. Single deletions suffice because deleting never adds a descent.
inline bool is_minimal_oracle(const Permutation& p, int d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    if (descent_count(p) != d) return false;
    for (int i = 1; i <= p.size(); ++i)
        if (descent_count(remove_element(p, i)) >= d) return false;
    return true;
}

struct BasisSlice {
    int d = 0;
    int n = 0;
    std::vector<Permutation> members;  // lexicographic
};

/// Size bounds d+1 <= n <= 2d.
inline bool basis_size_feasible(int d, int n) noexcept { return d >= 1 && n >= d + 1 && n <= 2 * d; }

namespace detail {

// Permutations of size n with exactly d descents whose first entry is `first`,
// filtered by the diamond test.
inline std::vector<Permutation> brute_force_with_first(int d, int n, int first) {
    std::vector<Permutation> out;
    std::vector<int> word{first};
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    used[first] = 1;
    auto rec = [&](auto&& self, int desc) -> void {
        const int len = static_cast<int>(word.size());
        if (len == n) {
            Permutation p(word);
            if (is_minimal(p, d).is_minimal) out.push_back(std::move(p));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            const int nd = desc + (word.back() > v);
            const int pairs_left = n - len - 1;
            if (nd > d || nd + pairs_left < d) continue;
            used[v] = 1;
            word.push_back(v);
            self(self, nd);
            word.pop_back();
            used[v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/// Filters all permutations of size n with d descents. The reference path.
inline BasisSlice enumerate_basis_brute_force(int d, int n, int jobs = 1) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    BasisSlice slice{d, n, {}};
    if (!basis_size_feasible(d, n)) return slice;
    auto parts = detail::parallel_map<std::vector<Permutation>>(
        static_cast<std::size_t>(n), jobs,
        [&](std::size_t i) { return detail::brute_force_with_first(d, n, static_cast<int>(i) + 1); });
    for (auto& part : parts)
        for (auto& p : part) slice.members.push_back(std::move(p));
    // first-entry partitions are already in lexicographic order
    return slice;
}

/// Generates the authorized labellings of every composition's diamond poset.
inline BasisSlice enumerate_basis_by_compositions(int d, int n, int jobs = 1) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    BasisSlice slice{d, n, {}};
    const auto comps = compositions(d, n);
    auto parts = detail::parallel_map<std::vector<Permutation>>(
        comps.size(), jobs, [&](std::size_t i) { return authorized_labellings(build_poset(comps[i])); });
    for (auto& part : parts)
        for (auto& p : part) slice.members.push_back(std::move(p));
    std::sort(slice.members.begin(), slice.members.end());
    return slice;
}

/// Brute force up to n = 9, composition-based generation beyond.
inline BasisSlice enumerate_basis(int d, int n, int jobs = 1) {
    return n <= 9 ? enumerate_basis_brute_force(d, n, jobs) : enumerate_basis_by_compositions(d, n, jobs);
}

/// |B_d restricted to size n|, summed over compositions without materializing members.
inline BigInt count_basis(int d, int n, int jobs = 1) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    const auto comps = compositions(d, n);
    auto counts = detail::parallel_map<BigInt>(comps.size(), jobs,
                                               [&](std::size_t i) { return count_labellings(build_poset(comps[i])); });
    BigInt total = 0;
    for (const auto& c : counts) total += c;
    return total;
}

/// |B_d| over all sizes d+1..2d.
inline BigInt count_basis_total(int d, int jobs = 1) {
    BigInt total = 0;
    for (int n = d + 1; n <= 2 * d; ++n) total += count_basis(d, n, jobs);
    return total;
}

struct DiamondTypeCounts {
    BigInt n1;  // diamond is an occurrence of 2143
    BigInt n2;  // diamond is an occurrence of 3142
};

/// Splits the size-(d+2) slice by the type of its unique diamond.
inline DiamondTypeCounts count_by_diamond_type(int d, int jobs = 1) {
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    DiamondTypeCounts out{0, 0};
    const auto slice = enumerate_basis(d, d + 2, jobs);
    for (const auto& p : slice.members) {
        const auto v = p.values();
        for (int i = 1; i < p.size(); ++i) {
            if (v[i - 1] > v[i]) continue;
            if (diamond_at(v, i) == DiamondType::P2143)
                ++out.n1;
            else
                ++out.n2;
            break;
        }
    }
    return out;
}

// Closed forms for the size-(d+2) slice.

inline BigInt size_d_plus_2_count_formula(int d) {
    const BigInt dd = d;
    return pow2(static_cast<unsigned>(d + 2)) - (dd + 1) * (dd + 2) - 2;
}

inline BigInt n1_formula(int d) {
    const BigInt dd = d;
    return pow2(static_cast<unsigned>(d + 2)) - (dd + 1) * (dd + 2) * (dd + 3) / 6 - dd - 3;
}

inline BigInt n2_formula(int d) {
    const BigInt dd = d;
    return dd * (dd - 1) * (dd + 1) / 6;
}

}  // namespace permdl

#endif  // PERMDL_MINIMAL_HPP
