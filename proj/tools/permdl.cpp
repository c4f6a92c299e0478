// permdl: command-line front end for the duplication-loss model and minimal
// permutations with d descents.
//
// Exit codes: 0 success (or predicate true), 1 predicate false, 2 usage or parse error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permdl/permdl.hpp"

namespace {

using namespace permdl;

enum class Format { Plain, Json, Bfile, Csv };

struct Globals {
    Format format = Format::Plain;
    int jobs = 1;
    std::size_t limit = 1000;
    std::uint64_t seed = 0;
};

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_format(const Globals& g, std::initializer_list<Format> allowed, const char* cmd) {
    for (auto f : allowed)
        if (f == g.format) return;
    throw UsageError(std::string("--format not supported by '") + cmd + "'");
}

std::string join(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string runs_text(const RunDecomposition& r) {
    std::string out;
    for (std::size_t i = 0; i < r.runs.size(); ++i) {
        if (i) out += " | ";
        out += join(r.runs[i], " ");
    }
    return out;
}

void print_grid(std::ostream& os, const Permutation& p) {
    for (int value = p.size(); value >= 1; --value) {
        for (int pos = 1; pos <= p.size(); ++pos) {
            if (pos > 1) os << ' ';
            os << (p.at(pos) == value ? '*' : '.');
        }
        os << '\n';
    }
}

// stats ----------------------------------------------------------------------

int cmd_stats(const Globals& g, const std::string& text, bool grid) {
    require_format(g, {Format::Plain, Format::Json}, "stats");
    const Permutation p = parse_permutation(text);
    const auto ds = descents(p);
    const auto runs = maximal_runs(p);
    if (g.format == Format::Json) {
        std::cout << Json{{"permutation", p.vec()},
                          {"size", p.size()},
                          {"descents", ds.count()},
                          {"descent_positions", ds.positions},
                          {"runs", runs.runs},
                          {"min_steps", min_steps(p)}}
                         .dump()
                  << '\n';
        return kOk;
    }
    std::cout << "permutation: " << p << '\n'
              << "size: " << p.size() << '\n'
              << "descents: " << ds.count() << '\n'
              << "descent positions: " << join(ds.positions, " ") << '\n'
              << "runs: " << runs_text(runs) << '\n'
              << "run count: " << runs.count() << '\n'
              << "min steps: " << min_steps(p) << '\n';
    if (grid) print_grid(std::cout, p);
    return kOk;
}

// check ----------------------------------------------------------------------

int cmd_check(const Globals& g, const std::string& text, std::optional<int> d_opt) {
    require_format(g, {Format::Plain, Format::Json}, "check");
    const Permutation p = parse_permutation(text);
    const int d = d_opt.value_or(std::max(1, descent_count(p)));
    if (d < 1) throw UsageError("d must be at least 1");
    const auto r = is_minimal(p, d);
    std::string reason;
    if (r.witness) {
        if (r.witness->kind == MinimalityWitness::Kind::DescentCount)
            reason = "has " + std::to_string(r.descent_count) + " descents, not " + std::to_string(d);
        else
            reason = "ascent at position " + std::to_string(r.witness->ascent_position) +
                     " is not a 2143/3142 diamond; removing position " +
                     std::to_string(r.witness->removable_position) + " (value " +
                     std::to_string(p.at(r.witness->removable_position)) + ") keeps " +
                     std::to_string(r.descent_count) + " descents";
    }
    if (g.format == Format::Json) {
        Json j{{"permutation", p.vec()}, {"d", d}, {"minimal", r.is_minimal}, {"descents", r.descent_count}};
        if (r.witness) {
            j["witness"] = Json{{"kind", r.witness->kind == MinimalityWitness::Kind::DescentCount ? "descent_count"
                                                                                                  : "ascent"},
                                {"ascent_position", r.witness->ascent_position},
                                {"removable_position", r.witness->removable_position}};
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << p << ": " << (r.is_minimal ? "minimal" : "not minimal") << " with d=" << d;
        if (!reason.empty()) std::cout << " (" << reason << ")";
        std::cout << '\n';
    }
    return r.is_minimal ? kOk : kFalse;
}

// enumerate ------------------------------------------------------------------

int cmd_enumerate(const Globals& g, int d, std::optional<int> n, bool count_only) {
    if (d < 1) throw UsageError("d must be at least 1");
    if (n) {
        if (!basis_size_feasible(d, *n))
            std::cerr << "warning: no minimal permutation with " << d << " descents has size " << *n
                      << " (sizes range over " << d + 1 << ".." << 2 * d << ")\n";
        if (count_only) {
            const BigInt c = count_basis(d, *n, g.jobs);
            switch (g.format) {
                case Format::Json: std::cout << Json{{"d", d}, {"n", *n}, {"count", c.str()}}.dump() << '\n'; break;
                case Format::Bfile: write_bfile(std::cout, {{*n, c}}); break;
                case Format::Csv: std::cout << "n,count\n" << *n << ',' << c << '\n'; break;
                case Format::Plain: std::cout << "d=" << d << " n=" << *n << " count=" << c << '\n'; break;
            }
            return kOk;
        }
        require_format(g, {Format::Plain, Format::Json, Format::Csv}, "enumerate (listing)");
        const auto slice = enumerate_basis(d, *n, g.jobs);
        if (g.format == Format::Json) {
            Json members = Json::array();
            for (const auto& p : slice.members) members.push_back(p.vec());
            std::cout << Json{{"d", d}, {"n", *n}, {"count", slice.members.size()}, {"members", members}}.dump()
                      << '\n';
        } else if (g.format == Format::Csv) {
            for (const auto& p : slice.members) std::cout << join(p.vec(), ",") << '\n';
        } else {
            write_basis_slice(std::cout, slice);
        }
        return kOk;
    }
    std::vector<std::pair<int, BigInt>> terms;
    BigInt total = 0;
    for (int size = d + 1; size <= 2 * d; ++size) {
        terms.emplace_back(size, count_basis(d, size, g.jobs));
        total += terms.back().second;
    }
    switch (g.format) {
        case Format::Bfile: write_bfile(std::cout, terms); break;
        case Format::Csv:
            std::cout << "n,count\n";
            for (const auto& [size, c] : terms) std::cout << size << ',' << c << '\n';
            break;
        case Format::Json: {
            Json by_size = Json::object();
            for (const auto& [size, c] : terms) by_size[std::to_string(size)] = c.str();
            std::cout << Json{{"d", d}, {"by_size", by_size}, {"total", total.str()}}.dump() << '\n';
            break;
        }
        case Format::Plain:
            std::cout << "d=" << d << '\n';
            for (const auto& [size, c] : terms) std::cout << "n=" << size << ": " << c << '\n';
            std::cout << "total: " << total << '\n';
            break;
    }
    return kOk;
}

// sequence -------------------------------------------------------------------

int cmd_sequence(const Globals& g, int max_d, std::optional<int> offset, bool two_d) {
    if (max_d < 1) throw UsageError("--max-d must be at least 1");
    std::vector<std::pair<int, BigInt>> terms;
    for (int d = 1; d <= max_d; ++d) {
        if (two_d)
            terms.emplace_back(d, count_basis(d, 2 * d, g.jobs));
        else if (offset)
            terms.emplace_back(d, count_basis(d, d + *offset, g.jobs));
        else
            terms.emplace_back(d, count_basis_total(d, g.jobs));
    }
    switch (g.format) {
        case Format::Csv:
            std::cout << "d,count\n";
            for (const auto& [d, c] : terms) std::cout << d << ',' << c << '\n';
            break;
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& [d, c] : terms) arr.push_back(Json{{"d", d}, {"count", c.str()}});
            std::cout << arr.dump() << '\n';
            break;
        }
        default: write_bfile(std::cout, terms); break;
    }
    return kOk;
}

// scenario / evolve ------------------------------------------------------------

void print_scenario(const Globals& g, const Scenario& s) {
    if (g.format == Format::Json) {
        std::cout << scenario_to_json(s).dump() << '\n';
        return;
    }
    std::cout << "start: " << s.start << '\n' << "steps: " << s.length() << '\n';
    Permutation cur = s.start;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        Permutation next = apply_step(cur, s.steps[i]);
        std::cout << "step " << i + 1 << ": " << cur << " -> " << next << "  [kept first: "
                  << join(s.steps[i].kept_first, " ") << "]\n";
        cur = std::move(next);
    }
    std::cout << "end: " << s.end << '\n'
              << "replay: " << (cur == s.end ? "ok" : "MISMATCH") << '\n';
}

int cmd_scenario(const Globals& g, const std::string& text) {
    require_format(g, {Format::Plain, Format::Json}, "scenario");
    const Permutation p = parse_permutation(text);
    const Scenario s = synthesize_scenario(p);
    print_scenario(g, s);
    return replay(s.start, s.steps) == p ? kOk : kFalse;
}

int cmd_evolve(const Globals& g, int n, int steps) {
    require_format(g, {Format::Plain, Format::Json}, "evolve");
    if (n < 1 || steps < 0) throw UsageError("evolve needs n >= 1 and steps >= 0");
    const Scenario s = random_evolution(n, steps, g.seed);
    print_scenario(g, s);
    if (g.format == Format::Plain)
        std::cout << "descents: " << descent_count(s.end) << " (bound " << ((std::uint64_t{1} << std::min(steps, 62)) - 1)
                  << ")\n";
    return kOk;
}

// bijection ------------------------------------------------------------------

int cmd_dyck(const Globals& g, const std::string& arg, bool inverse) {
    require_format(g, {Format::Plain, Format::Json}, "bijection dyck");
    if (inverse) {
        const auto path = perm_to_dyck(parse_permutation(arg));
        if (g.format == Format::Json)
            std::cout << Json{{"path", to_string(path)}}.dump() << '\n';
        else
            std::cout << to_string(path) << '\n';
    } else {
        const auto p = dyck_to_perm(parse_dyck(arg));
        if (g.format == Format::Json)
            std::cout << Json{{"permutation", p.vec()}}.dump() << '\n';
        else
            std::cout << p << '\n';
    }
    return kOk;
}

int cmd_phi(const Globals& g, int which, int d, const std::string& arg, bool inverse) {
    require_format(g, {Format::Plain, Format::Json}, "bijection phi");
    if (inverse) {
        const Permutation p = parse_permutation(arg);
        const auto s = which == 1 ? phi1_inverse(p) : phi2_inverse(p);
        if (g.format == Format::Json)
            std::cout << Json{{"d", s.d()}, {"subset", s.elements()}}.dump() << '\n';
        else
            std::cout << to_string(s) << '\n';
        return kOk;
    }
    if (d < 1) throw UsageError("phi needs -d >= 1");
    const auto s = parse_subset(d, arg);
    const Permutation p = which == 1 ? phi1(s) : phi2(s);
    if (which == 1) {
        if (g.format == Format::Json)
            std::cout << Json{{"permutation", p.vec()}}.dump() << '\n';
        else
            std::cout << p << '\n';
    } else {
        const auto c = classify_s2(p);
        if (g.format == Format::Json)
            std::cout << Json{{"permutation", p.vec()}, {"type", std::string(1, to_char(c.type_tag))}}.dump() << '\n';
        else
            std::cout << p << " (type " << to_char(c.type_tag) << ")\n";
    }
    return kOk;
}

int cmd_classify(const Globals& g, const std::string& arg) {
    require_format(g, {Format::Plain, Format::Json}, "bijection classify");
    const Permutation p = parse_permutation(arg);
    if (is_in_s1(p)) {
        if (g.format == Format::Json)
            std::cout << Json{{"set", "S1"}}.dump() << '\n';
        else
            std::cout << "S1\n";
        return kOk;
    }
    const auto c = classify_s2(p);
    if (g.format == Format::Json) {
        std::cout << Json{{"set", "S2"},
                          {"type", std::string(1, to_char(c.type_tag))},
                          {"ascent_position", c.ascent_position},
                          {"j", c.j}, {"i", c.i}, {"k", c.k}, {"h", c.h}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "S2 type " << to_char(c.type_tag) << " (j i k h = " << c.j << ' ' << c.i << ' ' << c.k << ' '
                  << c.h << ")\n";
    }
    return kOk;
}

int cmd_tree(const Globals& g, int depth) {
    require_format(g, {Format::Plain, Format::Json}, "bijection tree");
    if (depth < 1) throw UsageError("--depth must be at least 1");
    const auto levels = generating_tree(depth);
    if (g.format == Format::Json) {
        std::cout << tree_to_json(levels).dump() << '\n';
        return kOk;
    }
    std::cout << "level sizes:";
    for (const auto& level : levels) std::cout << ' ' << level.size();
    std::cout << '\n';
    write_tree_text(std::cout, eco_root(), depth);
    return kOk;
}

// poset / patterns -------------------------------------------------------------

int cmd_poset(const Globals& g, const std::string& comp_text, bool count, bool list) {
    require_format(g, {Format::Plain, Format::Json}, "poset");
    const DescentComposition comp(parse_integers(comp_text));
    const auto poset = build_poset(comp);
    if (g.format == Format::Json) {
        Json covers = Json::array();
        for (auto [lo, up] : poset.covers()) covers.push_back({lo, up});
        Json j{{"composition", comp.run_lengths()}, {"d", comp.d()}, {"n", comp.n()}, {"covers", covers}};
        if (count) j["labellings"] = count_labellings(poset).str();
        std::cout << j.dump() << '\n';
        return kOk;
    }
    if (count) {
        std::cout << "# composition " << to_string(comp) << " d=" << comp.d() << " n=" << comp.n()
                  << " labellings=" << count_labellings(poset) << '\n';
    }
    if (list) {
        for (const auto& p : authorized_labellings(poset)) std::cout << p << '\n';
    } else {
        write_edge_list(std::cout, poset);
    }
    return kOk;
}

int cmd_occurrences(const Globals& g, const std::string& pat, const std::string& host_text) {
    require_format(g, {Format::Plain, Format::Json}, "occurrences");
    const Permutation pattern = parse_permutation(pat);
    const Permutation host = parse_permutation(host_text);
    auto occ = occurrences(pattern, host, g.limit + 1);
    const bool truncated = occ.size() > g.limit;
    if (truncated) occ.resize(g.limit);
    if (g.format == Format::Json) {
        Json arr = Json::array();
        for (const auto& o : occ) arr.push_back(o.indices);
        std::cout << Json{{"occurrences", arr}, {"truncated", truncated}}.dump() << '\n';
    } else {
        for (const auto& o : occ) {
            std::vector<int> vals;
            for (int i : o.indices) vals.push_back(host.at(i));
            std::cout << "positions " << join(o.indices, " ") << "  values " << join(vals, " ") << '\n';
        }
        std::cout << occ.size() << " occurrence(s)" << (truncated ? " (truncated at --limit)" : "") << '\n';
    }
    return occ.empty() ? kFalse : kOk;
}

int cmd_avoid(const Globals& g, const std::string& basis_path, const std::string& host_text) {
    require_format(g, {Format::Plain, Format::Json}, "avoid");
    std::ifstream in(basis_path);
    if (!in) throw UsageError("cannot open basis file " + basis_path);
    const PatternBasis basis = read_basis(in);
    const Permutation host = parse_permutation(host_text);
    std::optional<Permutation> hit;
    for (const auto& pat : basis.patterns())
        if (involves(pat, host)) {
            hit = pat;
            break;
        }
    if (g.format == Format::Json) {
        Json j{{"avoids", !hit}};
        if (hit) j["contained"] = hit->vec();
        std::cout << j.dump() << '\n';
    } else if (hit) {
        std::cout << "contains " << *hit << '\n';
    } else {
        std::cout << "avoids all " << basis.size() << " pattern(s)\n";
    }
    return hit ? kFalse : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Duplication-loss model and minimal permutations with d descents"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");

    Globals g;
    if (const char* env = std::getenv("PERMDL_JOBS")) {
        try {
            g.jobs = std::max(1, std::stoi(env));
        } catch (...) {
            std::cerr << "warning: ignoring invalid PERMDL_JOBS='" << env << "'\n";
        }
    }
    std::map<std::string, Format> formats{
        {"plain", Format::Plain}, {"json", Format::Json}, {"bfile", Format::Bfile}, {"csv", Format::Csv}};
    app.add_option("--format", g.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--jobs", g.jobs, "Worker threads (default: $PERMDL_JOBS or 1)")->check(CLI::PositiveNumber);
    app.add_option("--limit", g.limit, "Maximum occurrences to list")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for random evolution");

    std::string perm_text, arg2;
    std::optional<int> d_opt, n_opt, offset_opt;
    int d = 0, depth = 4, steps = 0, n_evolve = 0, max_d = 0;
    bool grid = false, count_only = false, inverse = false, two_d = false, list = false;

    auto* stats = app.add_subcommand("stats", "Descents, runs and duplication-loss cost of a permutation");
    stats->add_option("permutation", perm_text, "e.g. \"6 9 8 4 1 3 7 2 5\"")->required();
    stats->add_flag("--grid", grid, "Also print a dot grid");

    auto* check = app.add_subcommand("check", "Decide minimality with d descents (exit 0 iff minimal)");
    check->add_option("permutation", perm_text)->required();
    check->add_option("-d", d_opt, "Descent count (default: the permutation's own)");

    auto* enumerate = app.add_subcommand("enumerate", "List or count minimal permutations with d descents");
    enumerate->add_option("-d", d, "Descent count")->required();
    enumerate->add_option("-n", n_opt, "Size (default: counts for every size)");
    enumerate->add_flag("--count-only", count_only, "Count without listing");

    auto* sequence = app.add_subcommand("sequence", "Count sequence indexed by d (b-file by default)");
    sequence->add_option("--max-d", max_d, "Last index")->required();
    auto* offset_option = sequence->add_option("--offset", offset_opt, "Size offset k: count size d+k");
    sequence->add_flag("--two-d", two_d, "Count size 2d")->excludes(offset_option);

    auto* scenario = app.add_subcommand("scenario", "Optimal duplication-loss scenario from the identity");
    scenario->add_option("permutation", perm_text)->required();

    auto* evolve = app.add_subcommand("evolve", "Random duplication-loss evolution from the identity");
    evolve->add_option("-n", n_evolve, "Size")->required();
    evolve->add_option("--steps", steps, "Number of steps")->required();

    auto* bijection = app.add_subcommand("bijection", "Dyck, phi1/phi2 and generating-tree correspondences");
    bijection->require_subcommand(1);
    auto* dyck = bijection->add_subcommand("dyck", "Dyck path (U/D) to size-2d minimal permutation");
    dyck->add_option("input", perm_text, "Dyck path, or a permutation with --inverse")->required();
    dyck->add_flag("--inverse", inverse);
    auto* phi1_cmd = bijection->add_subcommand("phi1", "Non-interval subset to S1");
    phi1_cmd->add_option("input", perm_text, "Subset such as 3,4,5,8, or a permutation with --inverse")->required();
    phi1_cmd->add_option("-d", d);
    phi1_cmd->add_flag("--inverse", inverse);
    auto* phi2_cmd = bijection->add_subcommand("phi2", "Non-interval subset to S2");
    phi2_cmd->add_option("input", perm_text)->required();
    phi2_cmd->add_option("-d", d);
    phi2_cmd->add_flag("--inverse", inverse);
    auto* classify = bijection->add_subcommand("classify", "S1 membership or S2 type of a size-(d+2) minimal permutation");
    classify->add_option("permutation", perm_text)->required();
    auto* tree = bijection->add_subcommand("tree", "Generating tree of size-2d minimal permutations");
    tree->add_option("--depth", depth, "Number of levels");

    auto* poset = app.add_subcommand("poset", "Diamond poset of a descent composition (edge list `lower -> upper`)");
    poset->add_option("composition", perm_text, "Block lengths, e.g. 1,1,1")->required();
    poset->add_flag("--count", count_only, "Report the number of authorized labellings");
    poset->add_flag("--labellings", list, "List labellings instead of edges");

    auto* occ = app.add_subcommand("occurrences", "Occurrences of a pattern in a host permutation");
    occ->add_option("pattern", perm_text)->required();
    occ->add_option("host", arg2)->required();

    auto* avoid = app.add_subcommand("avoid", "Test a permutation against a basis file (exit 0 iff it avoids)");
    avoid->add_option("basis", arg2, "Basis file: one permutation per line")->required();
    avoid->add_option("permutation", perm_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*stats) return cmd_stats(g, perm_text, grid);
        if (*check) return cmd_check(g, perm_text, d_opt);
        if (*enumerate) return cmd_enumerate(g, d, n_opt, count_only);
        if (*sequence) return cmd_sequence(g, max_d, offset_opt, two_d);
        if (*scenario) return cmd_scenario(g, perm_text);
        if (*evolve) return cmd_evolve(g, n_evolve, steps);
        if (*dyck) return cmd_dyck(g, perm_text, inverse);
        if (*phi1_cmd) return cmd_phi(g, 1, d, perm_text, inverse);
        if (*phi2_cmd) return cmd_phi(g, 2, d, perm_text, inverse);
        if (*classify) return cmd_classify(g, perm_text);
        if (*tree) return cmd_tree(g, depth);
        if (*poset) return cmd_poset(g, perm_text, count_only, list);
        if (*occ) return cmd_occurrences(g, perm_text, arg2);
        if (*avoid) return cmd_avoid(g, arg2, perm_text);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
