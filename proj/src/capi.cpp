#include "relroots.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "relroots/complex.hpp"
#include "relroots/constructions.hpp"
#include "relroots/errors.hpp"
#include "relroots/graphs.hpp"
#include "relroots/io.hpp"
#include "relroots/random_model.hpp"
#include "relroots/reliability.hpp"
#include "relroots/reports.hpp"
#include "relroots/roots.hpp"

using namespace relroots;

struct relroots_complex {
    SimplicialComplex value;
};
struct relroots_graph {
    Multigraph value;
};
struct relroots_poly {
    RelPoly value;
};

namespace {

thread_local std::string g_last_error;

relroots_status fail(relroots_status s, const char* what) {
    g_last_error = what;
    return s;
}

// Maps the C++ error taxonomy onto status codes.  DomainError must come
// before std::invalid_argument (it derives from it).
template <typename Fn>
relroots_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(RELROOTS_ERR_PARSE, e.what());
    } catch (const DomainError& e) {
        return fail(RELROOTS_ERR_DOMAIN, e.what());
    } catch (const ResourceError& e) {
        return fail(RELROOTS_ERR_RESOURCE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(RELROOTS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(RELROOTS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(RELROOTS_ERR_INTERNAL, "unknown failure");
    }
}

relroots_status require(bool ok, const char* what) {
    return ok ? RELROOTS_OK : fail(RELROOTS_ERR_INVALID_ARGUMENT, what);
}

relroots_status set_out(char** out, const std::string& s) {
    char* copy = static_cast<char*>(std::malloc(s.size() + 1));
    if (!copy) throw std::bad_alloc();
    std::memcpy(copy, s.c_str(), s.size() + 1);
    *out = copy;
    return RELROOTS_OK;
}

std::vector<int> int_span(const int* p, size_t n) { return std::vector<int>(p, p + n); }

}  // namespace

extern "C" {

const char* relroots_version(void) { return "0.1.0"; }

const char* relroots_status_name(relroots_status s) {
    switch (s) {
        case RELROOTS_OK: return "ok";
        case RELROOTS_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case RELROOTS_ERR_PARSE: return "parse-error";
        case RELROOTS_ERR_DOMAIN: return "domain-error";
        case RELROOTS_ERR_RESOURCE: return "resource-exceeded";
        case RELROOTS_ERR_INTERNAL: return "internal-error";
    }
    return "?";
}

const char* relroots_last_error(void) { return g_last_error.c_str(); }

void relroots_string_free(char* s) { std::free(s); }

/* ---- simplicial complexes ---- */

relroots_status relroots_complex_from_json(const char* json, relroots_complex** out) {
    if (auto s = require(json && out, "complex_from_json: null argument")) return s;
    return guarded([&] {
        *out = new relroots_complex{complex_from_json(json)};
        return RELROOTS_OK;
    });
}

relroots_status relroots_complex_builtin(const char* name, relroots_complex** out) {
    if (auto s = require(name && out, "complex_builtin: null argument")) return s;
    return guarded([&] {
        *out = new relroots_complex{builtin_complex(name)};
        return RELROOTS_OK;
    });
}

void relroots_complex_free(relroots_complex* c) { delete c; }

relroots_status relroots_complex_to_json(const relroots_complex* c, char** json_out) {
    if (auto s = require(c && json_out, "complex_to_json: null argument")) return s;
    return guarded([&] { return set_out(json_out, complex_to_json(c->value)); });
}

relroots_status relroots_complex_ground_size(const relroots_complex* c, int* out) {
    if (auto s = require(c && out, "complex_ground_size: null argument")) return s;
    *out = c->value.m();
    return RELROOTS_OK;
}

relroots_status relroots_complex_analyze_json(const relroots_complex* c,
                                              int shelling_cap, char** json_out) {
    if (auto s = require(c && json_out, "complex_analyze_json: null argument")) return s;
    return guarded([&] { return set_out(json_out, analyze_json(c->value, shelling_cap)); });
}

relroots_status relroots_complex_reliability(const relroots_complex* c,
                                             relroots_poly** out) {
    if (auto s = require(c && out, "complex_reliability: null argument")) return s;
    return guarded([&] {
        *out = new relroots_poly{reliability(c->value)};
        return RELROOTS_OK;
    });
}

relroots_status relroots_complex_gen_substitute(const relroots_complex* c,
                                                const int* kvec, size_t kvec_len,
                                                relroots_poly** out) {
    if (auto s = require(c && out && (kvec || kvec_len == 0),
                         "complex_gen_substitute: null argument"))
        return s;
    return guarded([&] {
        *out = new relroots_poly{gen_substitute(c->value, int_span(kvec, kvec_len))};
        return RELROOTS_OK;
    });
}

relroots_status relroots_complex_search_json(const relroots_complex* c, int k_min,
                                             int k_max, int jobs, int only_outside,
                                             uint64_t budget, char** json_out) {
    if (auto s = require(c && json_out, "complex_search_json: null argument")) return s;
    return guarded([&] {
        auto recs = k_search(c->value, k_min, k_max, jobs, budget);
        return set_out(json_out, search_records_json(recs, k_min, k_max, only_outside != 0));
    });
}

relroots_status relroots_complex_search_csv(const relroots_complex* c, int k_min,
                                            int k_max, int jobs, int only_outside,
                                            uint64_t budget, char** csv_out) {
    if (auto s = require(c && csv_out, "complex_search_csv: null argument")) return s;
    return guarded([&] {
        auto recs = k_search(c->value, k_min, k_max, jobs, budget);
        return set_out(csv_out, search_records_csv(recs, only_outside != 0));
    });
}

/* ---- multigraphs ---- */

relroots_status relroots_graph_from_json(const char* json, relroots_graph** out) {
    if (auto s = require(json && out, "graph_from_json: null argument")) return s;
    return guarded([&] {
        *out = new relroots_graph{graph_from_json(json)};
        return RELROOTS_OK;
    });
}

relroots_status relroots_graph_builtin(const char* name, relroots_graph** out) {
    if (auto s = require(name && out, "graph_builtin: null argument")) return s;
    return guarded([&] {
        *out = new relroots_graph{builtin_graph(name)};
        return RELROOTS_OK;
    });
}

void relroots_graph_free(relroots_graph* g) { delete g; }

relroots_status relroots_graph_cographic(const relroots_graph* g,
                                         relroots_complex** out) {
    if (auto s = require(g && out, "graph_cographic: null argument")) return s;
    return guarded([&] {
        *out = new relroots_complex{cographic_matroid(g->value)};
        return RELROOTS_OK;
    });
}

relroots_status relroots_graph_chromatic_check_json(const relroots_graph* g,
                                                    const int* order,
                                                    size_t order_len,
                                                    char** json_out) {
    if (auto s = require(g && json_out && (order || order_len == 0),
                         "graph_chromatic_check_json: null argument"))
        return s;
    return guarded([&] {
        ChromaticCheck check;
        if (order_len == 0) {
            check = chromatic_reliability_identity(g->value);
        } else {
            std::vector<int> zero_based = int_span(order, order_len);
            for (int& x : zero_based) --x;
            check = chromatic_reliability_identity(g->value, &zero_based);
        }
        return set_out(json_out, chromatic_check_json(check));
    });
}

/* ---- polynomials ---- */

relroots_status relroots_poly_from_json(const char* json, relroots_poly** out) {
    if (auto s = require(json && out, "poly_from_json: null argument")) return s;
    return guarded([&] {
        *out = new relroots_poly{poly_from_json(json)};
        return RELROOTS_OK;
    });
}

relroots_status relroots_poly_from_coeffs(const char* const* decimal_coeffs,
                                          size_t n_coeffs,
                                          int unit_root_multiplicity,
                                          relroots_poly** out) {
    if (auto s = require(out && (decimal_coeffs || n_coeffs == 0),
                         "poly_from_coeffs: null argument"))
        return s;
    return guarded([&] {
        if (unit_root_multiplicity < 0)
            throw DomainError("unit root multiplicity must be nonnegative");
        Coeffs c;
        c.reserve(n_coeffs);
        for (size_t i = 0; i < n_coeffs; ++i) {
            if (!decimal_coeffs[i]) throw ParseError("null coefficient string");
            try {
                c.emplace_back(decimal_coeffs[i]);
            } catch (...) {
                throw ParseError(std::string("bad coefficient: ") + decimal_coeffs[i]);
            }
        }
        *out = new relroots_poly{RelPoly{Poly(std::move(c)), unit_root_multiplicity}};
        return RELROOTS_OK;
    });
}

void relroots_poly_free(relroots_poly* p) { delete p; }

relroots_status relroots_poly_to_json(const relroots_poly* p, char** json_out) {
    if (auto s = require(p && json_out, "poly_to_json: null argument")) return s;
    return guarded([&] { return set_out(json_out, poly_to_json(p->value)); });
}

relroots_status relroots_poly_roots_json(const relroots_poly* p, char** json_out) {
    if (auto s = require(p && json_out, "poly_roots_json: null argument")) return s;
    return guarded([&] {
        return set_out(json_out, root_report_json(reliability_roots(p->value)));
    });
}

relroots_status relroots_poly_root_scatter_csv(const relroots_poly* p, char** csv_out) {
    if (auto s = require(p && csv_out, "poly_root_scatter_csv: null argument")) return s;
    return guarded([&] {
        return set_out(csv_out, root_scatter_csv(reliability_roots(p->value)));
    });
}

/* ---- demos and the random model ---- */

relroots_status relroots_demo_json(const char* name, const int* kvec,
                                   size_t kvec_len, char** json_out) {
    if (auto s = require(name && json_out && (kvec || kvec_len == 0),
                         "demo_json: null argument"))
        return s;
    return guarded([&] {
        std::vector<int> k;
        const std::vector<int>* kp = nullptr;
        if (kvec) {
            k = int_span(kvec, kvec_len);
            kp = &k;
        }
        DemoResult res = run_demo(name, kp);
        return set_out(json_out, res.json);
    });
}

relroots_status relroots_random_experiment_json(int m, int d, double p, int trials,
                                                uint64_t seed, double epsilon,
                                                int jobs, char** json_out) {
    if (auto s = require(json_out != nullptr, "random_experiment_json: null argument"))
        return s;
    return guarded([&] {
        ExperimentSummary summary = experiment(m, d, p, trials, seed, epsilon, jobs);
        return set_out(json_out, experiment_json(summary));
    });
}

}  /* extern "C" */
