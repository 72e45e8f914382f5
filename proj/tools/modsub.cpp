#include <unistd.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "modsub/counting.hpp"
#include "modsub/errors.hpp"
#include "modsub/graph.hpp"
#include "modsub/moves.hpp"
#include "modsub/oracle.hpp"
#include "modsub/sampler.hpp"
#include "modsub/silhouette.hpp"
#include "modsub/words.hpp"

namespace {

using namespace modsub;

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Graph& g, const std::string& format) {
    if (format == "dot")
        std::cout << g.to_dot();
    else
        std::cout << g.to_json() << '\n';
}

// Seeds are mandatory whenever output is piped, so scripted runs never
// depend on silent entropy; interactive calls fall back to the OS.
std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t given) {
    if (opt->count() > 0) return given;
    if (isatty(fileno(stdout))) {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    throw CLI::RequiredError("--seed (stdout is not a terminal)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting and uniform random generation of finitely generated "
                 "subgroups of the modular group, as Stallings graphs"};
    app.require_subcommand(1);

    std::string table_path;
    app.add_option("--table", table_path, "Counting table file produced by precompute");

    auto make_table = [&table_path]() {
        return table_path.empty() ? CountTable{} : CountTable::load_file(table_path);
    };

    int rc = 0;

    // count ------------------------------------------------------------
    auto* count = app.add_subcommand("count", "Exact counts of subgroups and graphs");
    count->require_subcommand(1);
    count->fallthrough();

    struct {
        int n = 0, k2 = 0, k3 = 0, l2 = 0, l3 = 0;
        std::string what = "H";
    } ct;
    auto* count_type = count->add_subcommand(
        "type", "Count by combinatorial type (n, k2, k3, l2, l3)");
    count_type->fallthrough();
    count_type->add_option("n", ct.n)->required();
    count_type->add_option("k2", ct.k2)->required();
    count_type->add_option("k3", ct.k3)->required();
    count_type->add_option("l2", ct.l2)->required();
    count_type->add_option("l3", ct.l3)->required();
    count_type
        ->add_option("--what", ct.what,
                     "s: labeled cyclically reduced graphs; L: labeled rooted reduced "
                     "graphs; H: subgroups (default)")
        ->check(CLI::IsMember({"s", "L", "H"}));
    count_type->callback([&] {
        CountTable table = make_table();
        const CombinatorialType t{ct.n, ct.k2, ct.k3, ct.l2, ct.l3};
        const BigCount out =
            ct.what == "s" ? table.s(t) : ct.what == "L" ? table.L(t) : table.H(t);
        std::cout << out.get_str() << '\n';
    });

    struct {
        int n = 0, l2 = 0, l3 = 0, r = 0;
        bool cyclic = false;
        std::string what = "H";
    } ci;
    auto* count_iso =
        count->add_subcommand("iso", "Count subgroups of a size and isomorphism type");
    count_iso->fallthrough();
    count_iso->add_option("n", ci.n)->required();
    count_iso->add_option("l2", ci.l2)->required();
    count_iso->add_option("l3", ci.l3)->required();
    count_iso->add_option("r", ci.r)->required();
    count_iso->add_flag("--cyclic", ci.cyclic, "Only cyclically reduced subgroups");
    count_iso
        ->add_option("--what", ci.what,
                     "L: labeled rooted reduced graphs; H: subgroups (default)")
        ->check(CLI::IsMember({"L", "H"}));
    count_iso->callback([&] {
        CountTable table = make_table();
        BigCount out = table.count_iso(ci.n, {ci.l2, ci.l3, ci.r}, ci.cyclic);
        if (ci.what == "H") out = exact_div(out, factorial(static_cast<unsigned long>(ci.n)));
        std::cout << out.get_str() << '\n';
    });

    long csn = 0;
    auto* count_sil = count->add_subcommand("silhouette", "Count labeled silhouette graphs");
    count_sil->fallthrough();
    count_sil->add_option("n", csn)->required();
    count_sil->callback([&] {
        CountTable table = make_table();
        std::cout << table.count_silhouette(csn).get_str() << '\n';
    });

    // sample -----------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "Uniform random generation (JSON, one per line)");
    sample->require_subcommand(1);
    sample->fallthrough();

    struct {
        int n = 0, k2 = 0, k3 = 0, l2 = 0, l3 = 0;
        std::uint64_t seed = 0, count = 1;
        bool rooted = false, faithful = false, trace_bits = false;
        std::string format = "json";
    } st;
    auto* sample_type = sample->add_subcommand("type", "Sample graphs of a combinatorial type");
    sample_type->fallthrough();
    sample_type->add_option("n", st.n)->required();
    sample_type->add_option("k2", st.k2)->required();
    sample_type->add_option("k3", st.k3)->required();
    sample_type->add_option("l2", st.l2)->required();
    sample_type->add_option("l3", st.l3)->required();
    auto* st_seed = sample_type->add_option("--seed", st.seed, "Generator seed");
    sample_type->add_option("--count", st.count, "Number of samples");
    sample_type->add_flag("--rooted", st.rooted, "Rooted reduced graphs instead");
    sample_type->add_option("--format", st.format)->check(CLI::IsMember({"json", "dot"}));
    sample_type->add_flag("--faithful", st.faithful,
                          "Draw every insertion label instead of relabeling once at the end");
    sample_type->add_flag("--trace-bits", st.trace_bits, "Report random bits consumed");
    sample_type->callback([&] {
        CountTable table = make_table();
        RandomSource rng(resolve_seed(st_seed, st.seed));
        SamplerOptions opts;
        opts.fresh_labels = !st.faithful;
        const CombinatorialType t{st.n, st.k2, st.k3, st.l2, st.l3};
        for (std::uint64_t i = 0; i < st.count; ++i)
            emit(st.rooted ? random_reduced_graph(t, rng, table, opts)
                           : random_cyclically_reduced_graph(t, rng, table, opts),
                 st.format);
        if (st.trace_bits) std::cerr << "bits consumed: " << rng.bits_consumed() << '\n';
    });

    struct {
        int n = 0, l2 = 0, l3 = 0, r = 0;
        std::uint64_t seed = 0, count = 1;
        bool cyclic = false, faithful = false, trace_bits = false;
        std::string format = "json";
    } si;
    auto* sample_iso =
        sample->add_subcommand("iso", "Sample subgroups of a size and isomorphism type");
    sample_iso->fallthrough();
    sample_iso->add_option("n", si.n)->required();
    sample_iso->add_option("l2", si.l2)->required();
    sample_iso->add_option("l3", si.l3)->required();
    sample_iso->add_option("r", si.r)->required();
    auto* si_seed = sample_iso->add_option("--seed", si.seed, "Generator seed");
    sample_iso->add_option("--count", si.count, "Number of samples");
    sample_iso->add_flag("--cyclic", si.cyclic, "Only cyclically reduced subgroups");
    sample_iso->add_option("--format", si.format)->check(CLI::IsMember({"json", "dot"}));
    sample_iso->add_flag("--faithful", si.faithful,
                         "Draw every insertion label instead of relabeling once at the end");
    sample_iso->add_flag("--trace-bits", si.trace_bits, "Report random bits consumed");
    sample_iso->callback([&] {
        CountTable table = make_table();
        RandomSource rng(resolve_seed(si_seed, si.seed));
        SamplerOptions opts;
        opts.fresh_labels = !si.faithful;
        for (std::uint64_t i = 0; i < si.count; ++i)
            emit(random_subgroup_iso(si.n, {si.l2, si.l3, si.r}, rng, table, si.cyclic, opts),
                 si.format);
        if (si.trace_bits) std::cerr << "bits consumed: " << rng.bits_consumed() << '\n';
    });

    // silhouette ---------------------------------------------------------
    struct {
        std::string in;
        bool trace = false;
    } sil;
    auto* sil_cmd = app.add_subcommand("silhouette", "Rewrite a graph to its silhouette");
    sil_cmd->fallthrough();
    sil_cmd->add_option("--in", sil.in, "Graph JSON file, or - for stdin")->required();
    sil_cmd->add_flag("--trace", sil.trace, "Print the applied moves to stderr");
    sil_cmd->callback([&] {
        const Graph g = Graph::parse_json(slurp(sil.in));
        std::vector<Move> trace;
        const Graph out = silhouette(g, sil.trace ? &trace : nullptr);
        for (const Move& m : trace) std::cerr << move_str(m) << '\n';
        std::cout << out.to_json() << '\n';
    });

    // member -------------------------------------------------------------
    struct {
        std::string graph, word;
    } mem;
    auto* member_cmd = app.add_subcommand("member", "Is a word in the subgroup of a graph?");
    member_cmd->fallthrough();
    member_cmd->add_option("--graph", mem.graph, "Rooted graph JSON file")->required();
    member_cmd->add_option("--word", mem.word, "Word over a, b, B (A is accepted for a)")
        ->required();
    member_cmd->callback([&] {
        const Graph g = Graph::parse_json(slurp(mem.graph));
        std::cout << (member(g, mem.word) ? "true" : "false") << '\n';
    });

    // enumerate ------------------------------------------------------------
    struct {
        int size = 0;
        std::vector<int> type;
        bool rooted = false, count_only = false;
    } en;
    auto* enum_cmd = app.add_subcommand("enumerate", "Brute-force enumeration (small sizes)");
    enum_cmd->fallthrough();
    enum_cmd->add_option("--size", en.size, "Number of vertices")->required();
    enum_cmd->add_option("--type", en.type, "Restrict to type k2 k3 l2 l3")->expected(4);
    enum_cmd->add_flag("--rooted", en.rooted, "Rooted reduced graphs instead");
    enum_cmd->add_flag("--count", en.count_only, "Print only the number of graphs");
    enum_cmd->callback([&] {
        std::uint64_t matched = 0;
        const auto visit = [&](const Graph& g) {
            if (!en.type.empty()) {
                const CombinatorialType want{en.size, en.type[0], en.type[1], en.type[2],
                                             en.type[3]};
                if (g.combinatorial_type() != want) return;
            }
            ++matched;
            if (!en.count_only) std::cout << g.to_json() << '\n';
        };
        if (en.rooted)
            for_each_reduced(en.size, visit);
        else
            for_each_cyclically_reduced(en.size, visit);
        if (en.count_only) std::cout << matched << '\n';
    });

    // selftest -------------------------------------------------------------
    int self_max = 7;
    auto* self_cmd =
        app.add_subcommand("selftest", "Cross-check the recurrences against enumeration");
    self_cmd->fallthrough();
    self_cmd->add_option("--max-n", self_max, "Largest size to enumerate")
        ->check(CLI::Range(1, 8));
    self_cmd->callback([&] {
        CountTable table = make_table();
        bool ok = true;
        for (int n = 1; n <= self_max; ++n) {
            const auto oracle = count_by_type(n);
            for (const auto& [t, c] : oracle)
                if (table.s(t) != c) {
                    std::cout << "FAIL s" << t.str() << ": recurrence " << table.s(t).get_str()
                              << ", enumeration " << c.get_str() << '\n';
                    ok = false;
                }
            std::size_t zeros = 0;
            for (const CombinatorialType& t : valid_cyclic_types(n))
                if (!oracle.count(t)) {
                    if (table.s(t) != 0) {
                        std::cout << "FAIL s" << t.str() << ": recurrence "
                                  << table.s(t).get_str() << ", enumeration 0\n";
                        ok = false;
                    }
                    ++zeros;
                }
            std::cout << "size " << n << ": s agrees on " << oracle.size() << " types ("
                      << zeros << " empty)\n";
        }
        for (int n = 1; n <= std::min(self_max, 6); ++n) {
            const auto oracle = count_reduced_by_type(n);
            std::size_t checked = 0;
            for (int k2 = 0; 2 * k2 <= n; ++k2)
                for (int k3 = 0; 2 * k3 <= n; ++k3)
                    for (int l2 = 0; l2 <= n; ++l2)
                        for (int l3 = 0; l3 <= n; ++l3) {
                            const CombinatorialType t{n, k2, k3, l2, l3};
                            const auto it = oracle.find(t);
                            const BigCount expect = it == oracle.end() ? BigCount(0) : it->second;
                            if (table.L(t) != expect) {
                                std::cout << "FAIL L" << t.str() << ": formula "
                                          << table.L(t).get_str() << ", enumeration "
                                          << expect.get_str() << '\n';
                                ok = false;
                            }
                            ++checked;
                        }
            std::cout << "size " << n << ": L agrees on " << checked << " candidate types\n";
        }
        std::cout << (ok ? "selftest passed" : "selftest FAILED") << '\n';
        if (!ok) rc = 1;
    });

    // precompute -------------------------------------------------------------
    struct {
        int max_n = 0;
        std::string out;
    } pre;
    auto* pre_cmd = app.add_subcommand("precompute", "Fill and save a counting table");
    pre_cmd->fallthrough();
    pre_cmd->add_option("--max-n", pre.max_n, "Fill every valid type up to this size")
        ->required();
    pre_cmd->add_option("--out", pre.out, "Output file")->required();
    pre_cmd->callback([&] {
        CountTable table = make_table();
        table.precompute(pre.max_n);
        table.save_file(pre.out);
        std::cerr << "saved " << table.entries() << " entries (" << table.nonzero_entries()
                  << " nonzero) to " << pre.out << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return rc;
}
