// Command-line front end.  Talks to the library exclusively through the C
// API in relroots.h; machine-readable output goes to stdout, diagnostics
// to stderr, exit code 0 iff the command succeeded.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relroots.h"

namespace {

struct CliError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{"cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void check(relroots_status s, const char* where) {
    if (s == RELROOTS_OK) return;
    throw CliError{std::string(where) + ": " + relroots_status_name(s) + ": " +
                   relroots_last_error()};
}

// Returned strings are owned by the library; wrap them so every exit path
// releases them.
struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { relroots_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct OwnedComplex {
    relroots_complex* p = nullptr;
    ~OwnedComplex() { relroots_complex_free(p); }
};

struct OwnedGraph {
    relroots_graph* p = nullptr;
    ~OwnedGraph() { relroots_graph_free(p); }
};

struct OwnedPoly {
    relroots_poly* p = nullptr;
    ~OwnedPoly() { relroots_poly_free(p); }
};

bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

void load_complex(const std::string& source, OwnedComplex& out) {
    if (file_exists(source)) {
        check(relroots_complex_from_json(read_file(source).c_str(), &out.p), "complex");
    } else {
        check(relroots_complex_builtin(source.c_str(), &out.p), "complex");
    }
}

int default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

uint64_t default_budget() {
    if (const char* env = std::getenv("RELROOTS_SEARCH_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw CliError{std::string("bad RELROOTS_SEARCH_BUDGET: ") + env};
        }
    }
    return 1000000;
}

void emit(const std::string& text) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reliability polynomials of complexes and matroids"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(relroots_version()); });

    // analyze
    std::string an_source;
    int an_cap = 20;
    auto* analyze = app.add_subcommand("analyze", "full report for a complex");
    analyze->add_option("source", an_source, "complex JSON file or builtin name")->required();
    analyze->add_option("--shelling-cap", an_cap, "facet cap for the shellability search");

    // roots
    std::string ro_file, ro_coeffs, ro_scatter;
    int ro_unit = 0;
    auto* roots = app.add_subcommand("roots", "root report for a polynomial");
    roots->add_option("poly-file", ro_file, "polynomial JSON file");
    roots->add_option("--coeffs", ro_coeffs, "ascending coefficients, comma separated");
    roots->add_option("--unit-mult", ro_unit, "multiplicity of the (1-q) factor");
    roots->add_option("--scatter", ro_scatter, "write re,im,modulus CSV to this path");

    // demo
    std::string de_name;
    std::vector<int> de_kvec;
    auto* demo = app.add_subcommand("demo", "reference constructions");
    demo->add_option("name", de_name, "rs or fano")->required();
    demo->add_option("--kvec", de_kvec, "replacement vector")->delimiter(',');

    // search
    std::string se_base;
    int se_kmin = 1, se_kmax = 5, se_jobs = default_jobs();
    bool se_outside = false, se_csv = false;
    uint64_t se_budget = 0;
    auto* search = app.add_subcommand("search", "sweep replacement vectors");
    search->add_option("--base", se_base, "base complex: builtin name or JSON file")
        ->required();
    search->add_option("--kmin", se_kmin, "smallest k");
    search->add_option("--kmax", se_kmax, "largest k");
    search->add_option("--jobs", se_jobs, "worker threads");
    search->add_option("--budget", se_budget, "grid size cap (overrides the environment)");
    search->add_flag("--report-outside", se_outside, "only rows with a root outside");
    search->add_flag("--csv", se_csv, "CSV instead of JSON");

    // random
    int ra_m = 0, ra_d = 0, ra_trials = 100, ra_jobs = default_jobs();
    double ra_p = 0.5, ra_eps = 0.1;
    uint64_t ra_seed = 1;
    auto* random = app.add_subcommand("random", "random pure-complex experiment");
    random->add_option("--m", ra_m, "ground set size")->required();
    random->add_option("--d", ra_d, "facet cardinality")->required();
    random->add_option("--p", ra_p, "facet probability");
    random->add_option("--trials", ra_trials, "number of trials");
    random->add_option("--seed", ra_seed, "experiment seed");
    random->add_option("--epsilon", ra_eps, "facet-count slack");
    random->add_option("--jobs", ra_jobs, "worker threads");

    // chromatic-check
    std::string ch_source;
    std::vector<int> ch_order;
    auto* chrom = app.add_subcommand("chromatic-check",
                                     "chromatic/broken-circuit reliability identity");
    chrom->add_option("graph", ch_source, "graph JSON file or builtin name")->required();
    chrom->add_option("--order", ch_order, "1-based edge order, least first")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            OwnedComplex c;
            load_complex(an_source, c);
            OwnedString out;
            check(relroots_complex_analyze_json(c.p, an_cap, &out.p), "analyze");
            emit(out.str());
            return 0;
        }

        if (roots->parsed()) {
            if (ro_file.empty() == ro_coeffs.empty())
                throw CliError{"pass exactly one of poly-file or --coeffs"};
            OwnedPoly p;
            if (!ro_file.empty()) {
                check(relroots_poly_from_json(read_file(ro_file).c_str(), &p.p), "poly");
            } else {
                std::vector<std::string> parts = split_commas(ro_coeffs);
                std::vector<const char*> ptrs;
                for (const auto& s : parts) ptrs.push_back(s.c_str());
                check(relroots_poly_from_coeffs(ptrs.data(), ptrs.size(), ro_unit, &p.p),
                      "poly");
            }
            OwnedString out;
            check(relroots_poly_roots_json(p.p, &out.p), "roots");
            emit(out.str());
            if (!ro_scatter.empty()) {
                OwnedString csv;
                check(relroots_poly_root_scatter_csv(p.p, &csv.p), "scatter");
                std::ofstream f(ro_scatter, std::ios::binary);
                if (!f) throw CliError{"cannot write " + ro_scatter};
                f << csv.str();
            }
            return 0;
        }

        if (demo->parsed()) {
            OwnedString out;
            const int* kv = de_kvec.empty() ? nullptr : de_kvec.data();
            check(relroots_demo_json(de_name.c_str(), kv, de_kvec.size(), &out.p), "demo");
            emit(out.str());
            auto j = nlohmann::json::parse(out.str());
            if (j.value("reference_checked", false) && !j.value("matches_reference", false)) {
                std::cerr << "demo " << de_name << ": output differs from the reference\n";
                return 1;
            }
            return 0;
        }

        if (search->parsed()) {
            OwnedComplex c;
            load_complex(se_base, c);
            uint64_t budget = se_budget != 0 ? se_budget : default_budget();
            OwnedString out;
            if (se_csv) {
                check(relroots_complex_search_csv(c.p, se_kmin, se_kmax, se_jobs,
                                                  se_outside ? 1 : 0, budget, &out.p),
                      "search");
            } else {
                check(relroots_complex_search_json(c.p, se_kmin, se_kmax, se_jobs,
                                                   se_outside ? 1 : 0, budget, &out.p),
                      "search");
            }
            emit(out.str());
            return 0;
        }

        if (random->parsed()) {
            OwnedString out;
            check(relroots_random_experiment_json(ra_m, ra_d, ra_p, ra_trials, ra_seed,
                                                  ra_eps, ra_jobs, &out.p),
                  "random");
            emit(out.str());
            return 0;
        }

        if (chrom->parsed()) {
            OwnedGraph g;
            if (file_exists(ch_source)) {
                check(relroots_graph_from_json(read_file(ch_source).c_str(), &g.p), "graph");
            } else {
                check(relroots_graph_builtin(ch_source.c_str(), &g.p), "graph");
            }
            OwnedString out;
            const int* ord = ch_order.empty() ? nullptr : ch_order.data();
            check(relroots_graph_chromatic_check_json(g.p, ord, ch_order.size(), &out.p),
                  "chromatic-check");
            emit(out.str());
            auto j = nlohmann::json::parse(out.str());
            if (!j.value("holds", false)) {
                std::cerr << "chromatic-check: identity failed; see lhs_coeffs/rhs_coeffs\n";
                return 1;
            }
            return 0;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
