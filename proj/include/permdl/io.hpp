// Text and JSON formats: scenarios, basis slices, b-files and generating trees.

#ifndef PERMDL_IO_HPP
#define PERMDL_IO_HPP

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "permdl/bigint.hpp"
#include "permdl/bijection.hpp"
#include "permdl/duploss.hpp"
#include "permdl/minimal.hpp"
#include "permdl/permutation.hpp"

namespace permdl {

using Json = nlohmann::json;

inline Json to_json(const Permutation& p) { return Json(p.vec()); }

/// { "n": int, "steps": [[kept values...], ...], "end": [perm...] }
inline Json scenario_to_json(const Scenario& s) {
    Json steps = Json::array();
    for (const auto& step : s.steps) steps.push_back(step.kept_first);
    return Json{{"n", s.n()}, {"steps", std::move(steps)}, {"end", s.end.vec()}};
}

/// Rebuilds a scenario from JSON and checks that replaying it reaches "end".
inline Scenario scenario_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    Scenario s{Permutation::identity(n), {}, Permutation(j.at("end").get<std::vector<int>>())};
    if (s.end.size() != n) throw std::invalid_argument("scenario end has the wrong size");
    for (const auto& step : j.at("steps")) {
        auto kept = step.get<std::vector<int>>();
        std::sort(kept.begin(), kept.end());
        s.steps.push_back(DuplicationStep{std::move(kept)});
    }
    if (replay(s.start, s.steps) != s.end) throw std::invalid_argument("scenario steps do not reach its end");
    return s;
}

/// One permutation per line under a `# d=<d> n=<n> count=<c>` header.
inline void write_basis_slice(std::ostream& os, const BasisSlice& slice) {
    os << "# d=" << slice.d << " n=" << slice.n << " count=" << slice.members.size() << '\n';
    for (const auto& p : slice.members) os << to_string(p) << '\n';
}

/// OEIS b-file: `<index> <count>` per line.
inline void write_bfile(std::ostream& os, const std::vector<std::pair<int, BigInt>>& terms) {
    for (const auto& [index, count] : terms) os << index << ' ' << count << '\n';
}

/// Tree as indented text: two spaces per level, `perm (label)`.
inline void write_tree_text(std::ostream& os, const EcoNode& root, int depth) {
    auto rec = [&](auto&& self, const EcoNode& node, int level) -> void {
        os << std::string(static_cast<std::size_t>(2 * (level - 1)), ' ') << to_string(node.permutation) << " ("
           << node.eco_label << ")\n";
        if (level < depth)
            for (const auto& child : eco_children(node)) self(self, child, level + 1);
    };
    rec(rec, root, 1);
}

/// Tree as JSON adjacency: nodes with ids, permutations, labels and child ids.
inline Json tree_to_json(const std::vector<std::vector<EcoNode>>& levels) {
    Json nodes = Json::array();
    std::size_t next_id = 0;
    std::size_t level_start = 0;
    for (std::size_t lv = 0; lv < levels.size(); ++lv) {
        const std::size_t child_start = level_start + levels[lv].size();
        std::size_t child_cursor = child_start;
        for (const auto& node : levels[lv]) {
            Json children = Json::array();
            if (lv + 1 < levels.size())
                for (int c = 0; c < node.eco_label; ++c) children.push_back(child_cursor++);
            nodes.push_back(Json{{"id", next_id++},
                                 {"level", lv + 1},
                                 {"permutation", node.permutation.vec()},
                                 {"label", node.eco_label},
                                 {"children", std::move(children)}});
        }
        level_start = child_start;
    }
    return Json{{"nodes", std::move(nodes)}};
}

}  // namespace permdl

#endif  // PERMDL_IO_HPP
