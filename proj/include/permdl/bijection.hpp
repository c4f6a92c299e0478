// Explicit correspondences for the two enumerated slices of minimal
// permutations:
//
//  * size 2d  <-> Dyck paths of length 2d, and the ECO generating tree with
//    succession rule (2), (k) -> (2)(3)...(k+1);
//  * size d+2 <-> two copies of the non-interval subsets of {1..d+1}, through
//    phi1 (onto S1) and phi2 (onto S2, split into types A..E).
//
// Ladder layout: position 2i-1 holds the i-th node of the upper line and
// position 2i the i-th node of the lower line.

#ifndef PERMDL_BIJECTION_HPP
#define PERMDL_BIJECTION_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permdl/bigint.hpp"
#include "permdl/minimal.hpp"
#include "permdl/permutation.hpp"

namespace permdl {

// ---------------------------------------------------------------------------
// Dyck paths

enum class DyckStep : char { Up = 'U', Down = 'D' };

class DyckPath {
public:
    explicit DyckPath(std::vector<DyckStep> steps) : steps_(std::move(steps)) {
        if (steps_.empty()) throw std::invalid_argument("Dyck path must be non-empty");
        int height = 0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            height += steps_[i] == DyckStep::Up ? 1 : -1;
            if (height < 0) throw std::invalid_argument("Dyck path goes below the axis at step " + std::to_string(i + 1));
        }
        if (height != 0) throw std::invalid_argument("Dyck path does not return to the axis");
    }

    const std::vector<DyckStep>& steps() const noexcept { return steps_; }
    int semilength() const noexcept { return static_cast<int>(steps_.size()) / 2; }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath& a, const DyckPath& b) { return a.steps_ <=> b.steps_; }

private:
    std::vector<DyckStep> steps_;
};

inline DyckPath parse_dyck(std::string_view text) {
    std::vector<DyckStep> steps;
    for (char c : text) {
        if (c == 'U' || c == 'u')
            steps.push_back(DyckStep::Up);
        else if (c == 'D' || c == 'd')
            steps.push_back(DyckStep::Down);
        else if (c == ' ' || c == '\n' || c == '\r' || c == '\t')
            continue;
        else
            throw ParseError(std::string("invalid Dyck step '") + c + "'", std::string(1, c));
    }
    try {
        return DyckPath(std::move(steps));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), std::string(text));
    }
}

inline std::string to_string(const DyckPath& path) {
    std::string out;
    for (auto s : path.steps()) out += static_cast<char>(s);
    return out;
}

/// All Dyck paths of semilength d, Up before Down at every branching.
inline std::vector<DyckPath> all_dyck_paths(int d) {
    std::vector<DyckPath> out;
    std::vector<DyckStep> cur;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == d && downs == d) {
            out.emplace_back(cur);
            return;
        }
        if (ups < d) {
            cur.push_back(DyckStep::Up);
            self(self, ups + 1, downs);
            cur.pop_back();
        }
        if (downs < ups) {
            cur.push_back(DyckStep::Down);
            self(self, ups, downs + 1);
            cur.pop_back();
        }
    };
    if (d >= 1) rec(rec, 0, 0);
    return out;
}

/// Up-step numbers label the lower line, Down-step numbers the upper line.
inline Permutation dyck_to_perm(const DyckPath& path) {
    const int d = path.semilength();
    std::vector<int> lower, upper;
    for (int t = 1; t <= 2 * d; ++t) (path.steps()[t - 1] == DyckStep::Up ? lower : upper).push_back(t);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(2 * d));
    for (int i = 0; i < d; ++i) {
        out.push_back(upper[i]);
        out.push_back(lower[i]);
    }
    return Permutation(std::move(out));
}

inline DyckPath perm_to_dyck(const Permutation& p) {
    if (p.size() % 2 != 0 || !is_minimal(p, p.size() / 2).is_minimal)
        throw std::invalid_argument("not a minimal permutation of size 2d: " + to_string(p));
    std::vector<DyckStep> steps(static_cast<std::size_t>(p.size()));
    for (int pos = 1; pos <= p.size(); ++pos)
        steps[p.at(pos) - 1] = pos % 2 == 0 ? DyckStep::Up : DyckStep::Down;
    return DyckPath(std::move(steps));
}

// ---------------------------------------------------------------------------
// ECO generating tree

struct EcoNode {
    Permutation permutation;  // minimal, size 2d
    int eco_label;            // 2d - last entry + 1, number of children
};

inline EcoNode make_eco_node(Permutation p) {
    const int size = p.size();
    const int label = size - p.at(size) + 1;
    return EcoNode{std::move(p), label};
}

inline EcoNode eco_root() { return make_eco_node(Permutation({2, 1})); }

/// Children in label order (2), (3), ..., (k+1): a new ladder step with top
/// 2d+2 and bottom i, for i = 2d+1 down to 2d+2-k, after shifting entries >= i.
inline std::vector<EcoNode> eco_children(const EcoNode& node) {
    const int size = node.permutation.size();
    const int k = node.eco_label;
    std::vector<EcoNode> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = size + 1; i >= size + 2 - k; --i) {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(size) + 2);
        for (int x : node.permutation.values()) v.push_back(x >= i ? x + 1 : x);
        v.push_back(size + 2);
        v.push_back(i);
        out.push_back(make_eco_node(Permutation(std::move(v))));
    }
    return out;
}

/// Levels 1..depth of the tree rooted at 21, each in tree order.
inline std::vector<std::vector<EcoNode>> generating_tree(int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    std::vector<std::vector<EcoNode>> levels{{eco_root()}};
    while (static_cast<int>(levels.size()) < depth) {
        std::vector<EcoNode> next;
        for (const auto& node : levels.back())
            for (auto& child : eco_children(node)) next.push_back(std::move(child));
        levels.push_back(std::move(next));
    }
    return levels;
}

// ---------------------------------------------------------------------------
// Non-interval subsets

/// Non-empty subset of {1..d+1} that is not a run of consecutive integers.
class NonIntervalSubset {
public:
    NonIntervalSubset(int d, std::vector<int> elements) : d_(d), elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        if (d_ < 1) throw std::invalid_argument("d must be at least 1");
        if (elements_.empty()) throw std::invalid_argument("subset must be non-empty");
        if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
            throw std::invalid_argument("subset has a repeated element");
        if (elements_.front() < 1 || elements_.back() > d_ + 1)
            throw std::invalid_argument("subset element outside 1.." + std::to_string(d_ + 1));
        if (elements_.back() - elements_.front() + 1 == static_cast<int>(elements_.size()))
            throw std::invalid_argument("subset is an interval");
    }

    int d() const noexcept { return d_; }
    const std::vector<int>& elements() const noexcept { return elements_; }

    /// {1..d+1} minus the subset, sorted.
    std::vector<int> holes() const {
        std::vector<int> w;
        for (int x = 1, j = 0; x <= d_ + 1; ++x) {
            if (j < static_cast<int>(elements_.size()) && elements_[j] == x)
                ++j;
            else
                w.push_back(x);
        }
        return w;
    }

    friend bool operator==(const NonIntervalSubset&, const NonIntervalSubset&) = default;

private:
    int d_;
    std::vector<int> elements_;
};

inline std::string to_string(const NonIntervalSubset& s) {
    std::string out;
    for (int x : s.elements()) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

inline NonIntervalSubset parse_subset(int d, std::string_view text) {
    std::vector<int> elements = parse_integers(text);
    try {
        return NonIntervalSubset(d, std::move(elements));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), std::string(text));
    }
}

/// Ordered by cardinality, then lexicographically.
inline std::vector<NonIntervalSubset> non_interval_subsets(int d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    const int m = d + 1;
    if (m > 30) throw std::invalid_argument("d too large for subset enumeration");
    std::vector<NonIntervalSubset> out;
    std::vector<int> cur;
    for (int size = 2; size <= m; ++size) {
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == size) {
                if (cur.back() - cur.front() + 1 != size) out.emplace_back(d, cur);
                return;
            }
            for (int x = start; x <= m - (size - static_cast<int>(cur.size())) + 1; ++x) {
                cur.push_back(x);
                self(self, x + 1);
                cur.pop_back();
            }
        };
        rec(rec, 1);
    }
    return out;
}

inline BigInt non_interval_count_formula(int d) {
    const BigInt dd = d;
    return pow2(static_cast<unsigned>(d + 1)) - (dd + 1) * (dd + 2) / 2 - 1;
}

// ---------------------------------------------------------------------------
// Size-(d+2) slice: S1, S2 and types A..E

namespace detail {

struct TwoBlocks {
    std::vector<int> first;   // first descent block
    std::vector<int> second;  // second descent block
};

// Splits a permutation with exactly one ascent.
inline std::optional<TwoBlocks> split_at_ascent(const Permutation& p) {
    const auto v = p.values();
    std::optional<std::size_t> cut;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] < v[i + 1]) {
            if (cut) return std::nullopt;
            cut = i + 1;
        }
    }
    if (!cut) return std::nullopt;
    return TwoBlocks{{v.begin(), v.begin() + static_cast<std::ptrdiff_t>(*cut)},
                     {v.begin() + static_cast<std::ptrdiff_t>(*cut), v.end()}};
}

// A decreasing block is consecutive when its extreme entries span its length.
inline bool consecutive(const std::vector<int>& block) {
    return block.front() - block.back() + 1 == static_cast<int>(block.size());
}

inline void append_decreasing(std::vector<int>& out, std::vector<int> values) {
    std::sort(values.rbegin(), values.rend());
    out.insert(out.end(), values.begin(), values.end());
}

inline void append_range_decreasing(std::vector<int>& out, int hi, int lo) {
    for (int x = hi; x >= lo; --x) out.push_back(x);
}

inline std::vector<int> range(int lo, int hi) {
    std::vector<int> r;
    for (int x = lo; x <= hi; ++x) r.push_back(x);
    return r;
}

// Minimal permutation with d = size-2 descents, or throws.
inline TwoBlocks require_size_d_plus_2(const Permutation& p) {
    if (p.size() < 4 || !is_minimal(p, p.size() - 2).is_minimal)
        throw std::invalid_argument("not a minimal permutation of size d+2: " + to_string(p));
    return *split_at_ascent(p);
}

}  // namespace detail

/// S1: the largest entry tops the ascent and the first block is not consecutive.
inline bool is_in_s1(const Permutation& p) {
    const auto blocks = detail::require_size_d_plus_2(p);
    return blocks.second.front() == p.size() && !detail::consecutive(blocks.first);
}

/// Elements of s decreasing, then d+2, then the holes decreasing.
inline Permutation phi1(const NonIntervalSubset& s) {
    std::vector<int> out;
    detail::append_decreasing(out, s.elements());
    out.push_back(s.d() + 2);
    detail::append_decreasing(out, s.holes());
    return Permutation(std::move(out));
}

inline NonIntervalSubset phi1_inverse(const Permutation& p) {
    if (!is_in_s1(p)) throw std::invalid_argument("not in S1: " + to_string(p));
    return NonIntervalSubset(p.size() - 2, detail::split_at_ascent(p)->first);
}

enum class S2Type { A, B, C, D, E };

inline char to_char(S2Type t) { return static_cast<char>('A' + static_cast<int>(t)); }

struct S2Classification {
    S2Type type_tag;
    int ascent_position;  // one-based position of the ascent bottom
    // entries around the ascent, in order j i k h
    int j, i, k, h;
};

/// Unique type A..E of a permutation in S2.
inline S2Classification classify_s2(const Permutation& p) {
    const auto blocks = detail::require_size_d_plus_2(p);
    const int top = p.size();  // d+2
    const int d = p.size() - 2;
    const auto& b1 = blocks.first;
    const auto& b2 = blocks.second;
    const int pos = static_cast<int>(b1.size());
    S2Classification c{S2Type::A, pos, p.at(pos - 1), p.at(pos), p.at(pos + 1), p.at(pos + 2)};

    if (b1.front() == top) {
        c.type_tag = detail::consecutive(b2) ? S2Type::D : S2Type::E;
        return c;
    }
    if (b2.front() != top) throw std::logic_error("largest entry neither first nor at the ascent top");
    if (!detail::consecutive(b1)) throw std::invalid_argument("permutation is in S1, not S2: " + to_string(p));
    if (b1.size() == 2)
        c.type_tag = S2Type::A;
    else if (b2.size() >= 3 && b2[1] == d + 1 && b2[2] == d)
        c.type_tag = S2Type::C;
    else
        c.type_tag = S2Type::B;
    return c;
}

/// Bijection from non-interval subsets onto S2. Cases follow the relative
/// order of the two smallest holes w1 < w2 and the two largest elements
/// s(n-1) < s(n) of the subset.
inline Permutation phi2(const NonIntervalSubset& s) {
    const int d = s.d();
    const auto& elems = s.elements();
    const auto holes = s.holes();
    const int n = static_cast<int>(elems.size());
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(d) + 2);

    // (1) one hole x: type A with x (x-1) as the first block
    if (holes.size() == 1) {
        const int x = holes.front();
        out = {x, x - 1};
        std::vector<int> rest;
        for (int v = 1; v <= d + 2; ++v)
            if (v != x && v != x - 1) rest.push_back(v);
        detail::append_decreasing(out, rest);
        return Permutation(std::move(out));
    }

    const int w1 = holes[0], w2 = holes[1];
    const int sn = elems[n - 1], sn1 = elems[n - 2];

    // (2) w1 < w2 < s(n-1) < s(n) or w1 < s(n-1) < w2 < s(n): type E
    if (w1 < sn1 && w2 < sn) {
        out.push_back(d + 2);
        detail::append_decreasing(out, holes);
        detail::append_decreasing(out, elems);
        return Permutation(std::move(out));
    }
    // (3) s(n-1) < w1 < w2 < s(n): type D, s = {1..n-1} + {s(n)}
    if (sn1 < w1 && w2 < sn) {
        out.push_back(d + 2);
        std::vector<int> second = detail::range(sn - n + 1, sn);
        std::vector<int> rest;
        for (int v = 1; v <= d + 1; ++v)
            if (v < sn - n + 1 || v > sn) rest.push_back(v);
        detail::append_decreasing(out, rest);
        detail::append_decreasing(out, second);
        return Permutation(std::move(out));
    }
    // (4) w1 < s(n-1) < s(n) < w2: type C, second block (d+2)..(d+2-p) then (n-p-1)..1
    if (w1 < sn1 && sn < w2) {
        const int p = n + 1 - w1;
        const int tail = n - p - 1;
        detail::append_range_decreasing(out, d + 2 - p - 1, tail + 1);
        detail::append_range_decreasing(out, d + 2, d + 2 - p);
        detail::append_range_decreasing(out, tail, 1);
        return Permutation(std::move(out));
    }
    // (5) s(n-1) < w1 < s(n) < w2: type B, second block (d+2)(d+1) then (n-2)..1
    detail::append_range_decreasing(out, d, n - 1);
    detail::append_range_decreasing(out, d + 2, d + 1);
    detail::append_range_decreasing(out, n - 2, 1);
    return Permutation(std::move(out));
}

inline NonIntervalSubset phi2_inverse(const Permutation& p) {
    const auto c = classify_s2(p);
    const auto blocks = *detail::split_at_ascent(p);
    const int d = p.size() - 2;
    const int n = static_cast<int>(blocks.second.size());
    std::vector<int> s;
    switch (c.type_tag) {
        case S2Type::A: {
            const int x = blocks.first.front();
            for (int v = 1; v <= d + 1; ++v)
                if (v != x) s.push_back(v);
            break;
        }
        case S2Type::E:
            s = blocks.second;
            break;
        case S2Type::D:
            s = detail::range(1, n - 1);
            s.push_back(blocks.second.front());
            break;
        case S2Type::C: {
            int run = 1;
            while (run < n && blocks.second[run] == blocks.second[run - 1] - 1) ++run;
            const int p_between = run - 1;
            const int w1 = n + 1 - p_between;
            s = detail::range(1, w1 - 1);
            for (int v = w1 + 1; v <= n + 1; ++v) s.push_back(v);
            break;
        }
        case S2Type::B:
            s = detail::range(1, n - 1);
            s.push_back(n + 1);
            break;
    }
    return NonIntervalSubset(d, std::move(s));
}

}  // namespace permdl

#endif  // PERMDL_BIJECTION_HPP
