#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "llgraph.h"

namespace {

struct GraphSource {
    std::string input;
    std::string family;
    std::uint32_t t = 0;
    double merge_bias = 0.5;
    std::uint64_t seed = 1;
};

struct Options {
    GraphSource src;
    std::string output;
    bool dot = false;
};

int report_failure(llg_status st) {
    std::cerr << llg_status_name(st) << ": " << llg_last_error() << "\n";
    return 1;
}

int usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return 2;
}

// -1: usage problem, already reported
int acquire(const GraphSource& src, llg_graph** out) {
    bool has_input = !src.input.empty();
    bool has_family = !src.family.empty();
    if (has_input == has_family) {
        usage_error("provide exactly one of --input or --family");
        return -1;
    }
    llg_status st;
    if (has_input) {
        if (src.input == "-") {
            std::ostringstream text;
            text << std::cin.rdbuf();
            st = llg_graph_parse(text.str().c_str(), out);
        } else {
            st = llg_graph_load(src.input.c_str(), out);
        }
    } else {
        st = llg_generate(src.family.c_str(), src.t, src.merge_bias, src.seed, out);
    }
    if (st != LLG_OK) return report_failure(st);
    return 0;
}

int emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(output, std::ios::binary);
    f << text;
    if (!f) {
        std::cerr << "IoError: cannot write " << output << "\n";
        return 1;
    }
    return 0;
}

void add_source_flags(CLI::App* cmd, Options& opt, bool generator_only = false) {
    if (!generator_only)
        cmd->add_option("--input", opt.src.input, "edge-list file to read ('-' for stdin)");
    cmd->add_option("--family", opt.src.family,
                    "generator family: paley9, snake, friendship, random_cactus, "
                    "random_locally_linear");
    cmd->add_option("--t", opt.src.t, "number of triangles for generator families");
    cmd->add_option("--merge-bias", opt.src.merge_bias,
                    "vertex-reuse probability for random_locally_linear");
    cmd->add_option("--seed", opt.src.seed, "seed for the random families");
    cmd->add_option("--output", opt.output, "write the report to this file instead of stdout");
}

struct Owned {
    llg_graph* g = nullptr;
    ~Owned() { llg_graph_free(g); }
};

struct OwnedText {
    char* s = nullptr;
    ~OwnedText() { llg_string_free(s); }
};

int run_plain(const Options& opt, llg_status (*fn)(const llg_graph*, char**)) {
    Owned g;
    if (int rc = acquire(opt.src, &g.g)) return rc < 0 ? 2 : rc;
    OwnedText text;
    if (llg_status st = fn(g.g, &text.s)) return report_failure(st);
    return emit(text.s, opt.output);
}

int run_verdict(const Options& opt, llg_status (*fn)(const llg_graph*, int*, char**)) {
    Owned g;
    if (int rc = acquire(opt.src, &g.g)) return rc < 0 ? 2 : rc;
    OwnedText text;
    int ok = 0;
    if (llg_status st = fn(g.g, &ok, &text.s)) return report_failure(st);
    if (int rc = emit(text.s, opt.output)) return rc;
    return ok ? 0 : 1;
}

int run_star(const Options& opt) {
    if (!opt.dot) return run_plain(opt, llg_report_star);
    Owned g;
    if (int rc = acquire(opt.src, &g.g)) return rc < 0 ? 2 : rc;
    Owned star;
    if (llg_status st = llg_star(g.g, &star.g, nullptr, nullptr)) return report_failure(st);
    OwnedText text;
    if (llg_status st = llg_graph_format_dot(star.g, &text.s)) return report_failure(st);
    return emit(text.s, opt.output);
}

int run_reconstruct(const Options& opt) {
    if (!opt.dot) return run_plain(opt, llg_report_reconstruct);
    Owned h;
    if (int rc = acquire(opt.src, &h.g)) return rc < 0 ? 2 : rc;
    Owned base;
    if (llg_status st = llg_reconstruct(h.g, &base.g)) return report_failure(st);
    OwnedText text;
    if (llg_status st = llg_graph_format_dot(base.g, &text.s)) return report_failure(st);
    return emit(text.s, opt.output);
}

int run_generate(const Options& opt) {
    Owned g;
    if (int rc = acquire(opt.src, &g.g)) return rc < 0 ? 2 : rc;
    OwnedText text;
    llg_status st =
        opt.dot ? llg_graph_format_dot(g.g, &text.s) : llg_graph_format(g.g, &text.s);
    if (st != LLG_OK) return report_failure(st);
    return emit(text.s, opt.output);
}

int run_hexfix(const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "IoError: cannot create " << out_dir << "\n";
        return 1;
    }
    std::string base_path = out_dir + "/hex_base_side.edges";
    std::string star_path = out_dir + "/hex_star_side.edges";
    OwnedText base_text, star_text, report;
    if (llg_status st = llg_hexagon_fixtures(base_path.c_str(), star_path.c_str(), &base_text.s,
                                             &star_text.s, &report.s))
        return report_failure(st);
    if (int rc = emit(base_text.s, base_path)) return rc;
    if (int rc = emit(star_text.s, star_path)) return rc;
    return emit(report.s, "");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally linear graphs, their triangle graphs, and the spectral identity"};
    app.require_subcommand(1);

    Options verify_opt, star_opt, charpoly_opt, theorem_opt, census_opt, reconstruct_opt,
        roundtrip_opt, generate_opt;
    std::string hex_out_dir = "fixtures";

    auto* verify = app.add_subcommand("verify", "check local linearity and report a witness");
    add_source_flags(verify, verify_opt);

    auto* star = app.add_subcommand("star", "triangle graph with its triangle table");
    add_source_flags(star, star_opt);
    star->add_flag("--dot", star_opt.dot, "emit the star graph in DOT format");

    auto* charpoly =
        app.add_subcommand("charpoly", "exact characteristic polynomials of A, A+D/2, A*");
    add_source_flags(charpoly, charpoly_opt);

    auto* theorem = app.add_subcommand("theorem", "verify the star spectral identity");
    add_source_flags(theorem, theorem_opt);

    auto* census = app.add_subcommand("census", "induced C4/C5/C6 counts for G and G*");
    add_source_flags(census, census_opt);

    auto* reconstruct =
        app.add_subcommand("reconstruct", "rebuild the base graph from a triangle graph");
    add_source_flags(reconstruct, reconstruct_opt);
    reconstruct->add_flag("--dot", reconstruct_opt.dot, "emit the base graph in DOT format");

    auto* roundtrip =
        app.add_subcommand("roundtrip", "star then reconstruct, certify both isomorphisms");
    add_source_flags(roundtrip, roundtrip_opt);

    auto* generate = app.add_subcommand("generate", "emit a generated graph as an edge list");
    add_source_flags(generate, generate_opt, true);
    generate->add_flag("--dot", generate_opt.dot, "emit DOT instead of an edge list");

    auto* hexfix =
        app.add_subcommand("hexfix", "write the two hexagon-census counterexample fixtures");
    hexfix->add_option("--out-dir", hex_out_dir, "directory for the fixture files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) return run_verdict(verify_opt, llg_report_verify);
    if (star->parsed()) return run_star(star_opt);
    if (charpoly->parsed()) return run_plain(charpoly_opt, llg_report_charpoly);
    if (theorem->parsed()) return run_plain(theorem_opt, llg_report_theorem);
    if (census->parsed()) return run_plain(census_opt, llg_report_census);
    if (reconstruct->parsed()) return run_reconstruct(reconstruct_opt);
    if (roundtrip->parsed()) return run_verdict(roundtrip_opt, llg_report_roundtrip);
    if (generate->parsed()) return run_generate(generate_opt);
    if (hexfix->parsed()) return run_hexfix(hex_out_dir);
    return 2;
}
