// Permutations of {1..n}, descent statistics, runs, removal and standardization.
//
// Positions and values are one-based throughout: a permutation of size n is
// the word p(1) p(2) ... p(n) over {1..n}, and a descent at position i means
// p(i) > p(i+1) for 1 <= i <= n-1.

#ifndef PERMDL_PERMUTATION_HPP
#define PERMDL_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permdl {

/// Raised for malformed textual input. `token()` is the offending piece of input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::string token)
        : std::invalid_argument(what), token_(std::move(token)) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

/// Immutable permutation of {1..n}, n >= 1.
class Permutation {
public:
    /// Validates that `values` is a bijection on {1..n}; throws std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("permutation must have at least one element");
        std::vector<char> seen(values_.size() + 1, 0);
        const int n = static_cast<int>(values_.size());
        for (int v : values_) {
            if (v < 1 || v > n)
                throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            if (seen[v]) throw std::invalid_argument("duplicate value " + std::to_string(v));
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    static Permutation reverse_identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.rbegin(), v.rend(), 1);
        return Permutation(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(values_.size()); }

    /// One-based access: `at(1)` is the first entry.
    int at(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }

    std::span<const int> values() const noexcept { return values_; }
    const std::vector<int>& vec() const noexcept { return values_; }

    /// One-based position of `value`.
    int position_of(int value) const {
        auto it = std::find(values_.begin(), values_.end(), value);
        if (it == values_.end()) throw std::out_of_range("value not in permutation");
        return static_cast<int>(it - values_.begin()) + 1;
    }

    bool is_identity() const noexcept { return std::is_sorted(values_.begin(), values_.end()); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.values_ <=> b.values_; }

private:
    std::vector<int> values_;
};

/// Canonical text form: space-separated values on one line.
inline std::string to_string(const Permutation& p) {
    std::string out;
    for (int v : p.values()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

/// Concatenated digits, e.g. "2143". Only unambiguous for n <= 9.
inline std::string to_compact_string(const Permutation& p) {
    std::string out;
    for (int v : p.values()) out += std::to_string(v);
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

/// Splits whitespace- and/or comma-separated positive integers.
inline std::vector<int> parse_integers(std::string_view text, std::vector<std::string>* tokens_out = nullptr) {
    std::vector<int> values;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        std::string tok(text.substr(i, j - i));
        if (tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("not a positive integer: '" + tok + "'", tok);
        values.push_back(std::stoi(tok));
        if (tokens_out) tokens_out->push_back(std::move(tok));
        i = j;
    }
    return values;
}

/// Parses a permutation from whitespace- and/or comma-separated values.
inline Permutation parse_permutation(std::string_view text) {
    std::vector<std::string> tokens;
    std::vector<int> values = parse_integers(text, &tokens);
    if (values.empty()) throw ParseError("empty permutation", "");
    const int n = static_cast<int>(values.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < values.size(); ++k) {
        const int v = values[k];
        if (v < 1 || v > n)
            throw ParseError("value " + tokens[k] + " out of range 1.." + std::to_string(n), tokens[k]);
        if (seen[v]) throw ParseError("duplicate value " + tokens[k], tokens[k]);
        seen[v] = 1;
    }
    return Permutation(std::move(values));
}

struct DescentSet {
    std::vector<int> positions;  // sorted, one-based, in [1..n-1]
    int count() const noexcept { return static_cast<int>(positions.size()); }
};

inline DescentSet descents(const Permutation& p) {
    DescentSet out;
    const auto v = p.values();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] > v[i + 1]) out.positions.push_back(static_cast<int>(i) + 1);
    return out;
}

/// Number of descents in an arbitrary word of distinct integers.
inline int descent_count(std::span<const int> word) noexcept {
    int d = 0;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) d += word[i] > word[i + 1];
    return d;
}

inline int descent_count(const Permutation& p) noexcept { return descent_count(p.values()); }

inline bool is_ascent(const Permutation& p, int position) {
    return p.at(position) < p.at(position + 1);
}

/// Maximal increasing contiguous segments, left to right.
struct RunDecomposition {
    std::vector<std::vector<int>> runs;
    int count() const noexcept { return static_cast<int>(runs.size()); }
};

inline RunDecomposition maximal_runs(const Permutation& p) {
    RunDecomposition out;
    const auto v = p.values();
    out.runs.push_back({v[0]});
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i - 1] > v[i]) out.runs.emplace_back();
        out.runs.back().push_back(v[i]);
    }
    return out;
}

/// Replaces each entry by its rank among the entries. Entries must be distinct.
inline Permutation standardize(std::span<const int> word) {
    if (word.empty()) throw std::invalid_argument("cannot standardize an empty word");
    std::vector<int> order(word.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
    std::vector<int> out(word.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && word[order[r]] == word[order[r - 1]])
            throw std::invalid_argument("duplicate entry " + std::to_string(word[order[r]]));
        out[order[r]] = static_cast<int>(r) + 1;
    }
    return Permutation(std::move(out));
}

/// Deletes the entry at one-based `position` and standardizes the rest.
/// The result must stay non-empty, so p.size() >= 2 is required.
inline Permutation remove_element(const Permutation& p, int position) {
    if (position < 1 || position > p.size())
        throw std::out_of_range("position " + std::to_string(position) + " outside 1.." + std::to_string(p.size()));
    if (p.size() == 1) throw std::invalid_argument("removal would leave an empty permutation");
    const int removed = p.at(position);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size()) - 1);
    for (int i = 1; i <= p.size(); ++i) {
        if (i == position) continue;
        const int v = p.at(i);
        out.push_back(v > removed ? v - 1 : v);
    }
    return Permutation(std::move(out));
}

/// Descent count after deleting position `position`, without building the permutation.
inline int descents_after_removal(std::span<const int> v, int position) noexcept {
    const std::size_t k = static_cast<std::size_t>(position - 1);
    int d = descent_count(v);
    if (k > 0) d -= v[k - 1] > v[k];
    if (k + 1 < v.size()) d -= v[k] > v[k + 1];
    if (k > 0 && k + 1 < v.size()) d += v[k - 1] > v[k + 1];
    return d;
}

}  // namespace permdl

#endif  // PERMDL_PERMUTATION_HPP
