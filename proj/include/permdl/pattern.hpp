// Pattern involvement, occurrence listing and basis avoidance.

#ifndef PERMDL_PATTERN_HPP
#define PERMDL_PATTERN_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permdl/permutation.hpp"

namespace permdl {

/// Strictly increasing one-based positions into the host.
struct Occurrence {
    std::vector<int> indices;
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

namespace detail {

// Backtracking over index choices. Position k of the pattern is matched to a
// host index only if it is order-consistent with every earlier choice; the
// loop bound leaves room for the remaining pattern entries.
template <typename Visit>
bool search_occurrences(const Permutation& pattern, const Permutation& host, Visit&& visit) {
    const int k = pattern.size();
    const int n = host.size();
    if (k > n) return false;
    const auto pv = pattern.values();
    const auto hv = host.values();
    std::vector<int> chosen(static_cast<std::size_t>(k));
    bool stop = false;

    auto consistent = [&](int depth, int idx) {
        for (int e = 0; e < depth; ++e) {
            const bool want_less = pv[e] < pv[depth];
            const bool is_less = hv[chosen[e]] < hv[idx];
            if (want_less != is_less) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int depth, int start) -> void {
        if (depth == k) {
            Occurrence occ;
            occ.indices.reserve(chosen.size());
            for (int c : chosen) occ.indices.push_back(c + 1);
            if (!visit(std::move(occ))) stop = true;
            return;
        }
        for (int idx = start; idx <= n - (k - depth) && !stop; ++idx) {
            if (!consistent(depth, idx)) continue;
            chosen[depth] = idx;
            self(self, depth + 1, idx + 1);
        }
    };
    rec(rec, 0, 0);
    return stop;
}

}  // namespace detail

/// All occurrences in lexicographic index order, truncated at `limit` if given.
inline std::vector<Occurrence> occurrences(const Permutation& pattern, const Permutation& host,
                                           std::optional<std::size_t> limit = std::nullopt) {
    if (limit && *limit == 0) throw std::invalid_argument("limit must be at least 1");
    std::vector<Occurrence> out;
    detail::search_occurrences(pattern, host, [&](Occurrence occ) {
        out.push_back(std::move(occ));
        return !limit || out.size() < *limit;
    });
    return out;
}

inline bool involves(const Permutation& pattern, const Permutation& host) {
    return detail::search_occurrences(pattern, host, [](Occurrence) { return false; });
}

/// A set of excluded patterns, required to be an antichain under involvement.
class PatternBasis {
public:
    PatternBasis() = default;

    explicit PatternBasis(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
        std::sort(patterns_.begin(), patterns_.end());
        patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
        for (std::size_t a = 0; a < patterns_.size(); ++a)
            for (std::size_t b = 0; b < patterns_.size(); ++b)
                if (a != b && involves(patterns_[a], patterns_[b]))
                    throw std::invalid_argument("basis is not an antichain: " + to_string(patterns_[a]) +
                                                " is involved in " + to_string(patterns_[b]));
    }

    const std::vector<Permutation>& patterns() const noexcept { return patterns_; }
    std::size_t size() const noexcept { return patterns_.size(); }

private:
    std::vector<Permutation> patterns_;
};

inline bool avoids_basis(const Permutation& host, const PatternBasis& basis) {
    for (const auto& pat : basis.patterns())
        if (involves(pat, host)) return false;
    return true;
}

/// Basis file: one permutation per line; blank lines and `#` comments are ignored.
inline PatternBasis read_basis(std::istream& in) {
    std::vector<Permutation> patterns;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        try {
            patterns.push_back(parse_permutation(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.token());
        }
    }
    return PatternBasis(std::move(patterns));
}

inline PatternBasis parse_basis(const std::string& text) {
    std::istringstream in(text);
    return read_basis(in);
}

}  // namespace permdl

#endif  // PERMDL_PATTERN_HPP
