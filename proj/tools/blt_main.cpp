// Command line front end: builds the group of a graph, decides isomorphism
// at the graph/space/group levels, computes the invariant bridges, verifies
// pullback homomorphisms through the functor, runs the singularity scan and
// exports multiplication tables.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "blt/commands.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw blt::parse_error("cannot open output file: " + out_path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groups from graphs: the Baer-Lovasz-Tutte construction, its "
                 "isomorphism oracles and the pullback-homomorphism functor"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help"); // keep -h free for graph options

    std::string g_path, h_path, map_path, out_path;
    unsigned p = 3;
    std::string level = "group";
    std::string objective;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    unsigned jobs = 1;
    std::size_t lemma_checks = 100;
    std::uint64_t seed = 12345;

    auto* build = app.add_subcommand("build", "Build the alternating tuple and group metadata");
    build->set_help_flag("--help", "print help");
    build->add_option("--graph", g_path, "graph file (edge list or JSON)")->required();
    build->add_option("-p", p, "odd prime modulus");
    build->add_option("-o,--output", out_path, "write output to a file");

    auto* iso = app.add_subcommand("iso", "Decide isomorphism at a chosen level");
    iso->set_help_flag("--help", "print help");
    iso->add_option("--g", g_path, "first graph file")->required();
    iso->add_option("--h", h_path, "second graph file")->required();
    iso->add_option("-p", p, "odd prime modulus");
    iso->add_option("--level", level, "graph | space | group");
    iso->add_option("-o,--output", out_path, "write output to a file");

    auto* inv = app.add_subcommand("invariants", "Matching and independence, both routes");
    inv->set_help_flag("--help", "print help");
    inv->add_option("--graph", g_path, "graph file")->required();
    inv->add_option("-p", p, "odd prime modulus");
    inv->add_option("-o,--output", out_path, "write output to a file");

    auto* fun = app.add_subcommand("functor", "Verify a pullback homomorphism and its induced group map");
    fun->set_help_flag("--help", "print help");
    fun->add_option("--g", g_path, "source graph file")->required();
    fun->add_option("--h", h_path, "target graph file")->required();
    fun->add_option("--map", map_path, "mapping file {\"pairs\": [[x,y],...]} to verify");
    fun->add_option("--objective", objective, "order | size: optimize instead of verifying a map");
    fun->add_option("-p", p, "odd prime modulus");
    fun->add_option("-o,--output", out_path, "write output to a file");

    auto* pl = app.add_subcommand("prooflab", "Scan minor-conforming matrices and verify singularity");
    pl->set_help_flag("--help", "print help");
    pl->alias("proof-lab");
    auto* verify = pl->add_subcommand("verify", "default action");
    verify->set_help_flag("--help", "print help");
    verify->fallthrough();
    pl->add_option("--g", g_path, "first graph file")->required();
    pl->add_option("--h", h_path, "second graph file")->required();
    pl->add_option("-p", p, "odd prime modulus");
    pl->add_flag("--exhaustive", exhaustive, "scan every matrix (guarded)");
    pl->add_option("--samples", samples, "sample this many conforming matrices instead");
    pl->add_option("--jobs", jobs, "worker threads for the exhaustive scan");
    pl->add_option("--lemma-checks", lemma_checks, "how many conforming matrices get the splitting machinery verified");
    pl->add_option("--seed", seed, "sampling seed");
    pl->add_option("-o,--output", out_path, "write output to a file");

    auto* cay = app.add_subcommand("cayley", "Export the multiplication table");
    cay->set_help_flag("--help", "print help");
    cay->add_option("--graph", g_path, "graph file")->required();
    cay->add_option("-p", p, "odd prime modulus");
    cay->add_option("-o,--output", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::string out;
        if (*build) {
            out = blt::cmd_build(g_path, p);
        } else if (*iso) {
            out = blt::cmd_iso(g_path, h_path, p, level);
        } else if (*inv) {
            out = blt::cmd_invariants(g_path, p);
        } else if (*fun) {
            if (map_path.empty() == objective.empty())
                throw blt::parse_error("functor needs exactly one of --map or --objective");
            out = map_path.empty() ? blt::cmd_functor_optimize(g_path, h_path, objective)
                                   : blt::cmd_functor(g_path, h_path, map_path, p);
        } else if (*pl) {
            blt::ScanOptions opts;
            opts.exhaustive = exhaustive || samples == 0;
            opts.samples = samples;
            opts.jobs = jobs;
            opts.lemma_checks = lemma_checks;
            opts.seed = seed;
            out = blt::cmd_prooflab(g_path, h_path, p, opts);
        } else if (*cay) {
            out = blt::cmd_cayley(g_path, p);
        }
        emit(out, out_path);
        return 0;
    } catch (const blt::guard_exceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 2;
    } catch (const blt::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
