#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relroots/complex.hpp"
#include "relroots/constructions.hpp"
#include "relroots/graphs.hpp"
#include "relroots/random_model.hpp"
#include "relroots/roots.hpp"

namespace relroots {

// All report JSON goes through these builders so the C API and the CLI
// emit identical shapes.  Element labels in reports are 1-based (the file
// formats stay 0-based).

std::string root_report_json(const RootReport& r);
std::string root_scatter_csv(const RootReport& r);  // re,im,modulus rows

std::string analyze_json(const SimplicialComplex& c, int shelling_cap = 20);

std::string search_records_json(const std::vector<SearchRecord>& recs,
                                int k_min, int k_max, bool only_outside);
std::string search_records_csv(const std::vector<SearchRecord>& recs, bool only_outside);

std::string experiment_json(const ExperimentSummary& s);

std::string chromatic_check_json(const ChromaticCheck& r);

struct DemoResult {
    std::string json;
    bool reference_checked = false;
    bool matches_reference = false;  // meaningful when reference_checked
};

// name is "rs" (cographic K4, default kvec 6,1,6,1,1,1) or "fano"
// (default kvec 1,4,4,4,5,4,5).  With the default kvec the resulting
// h-part is compared against the frozen reference coefficients.
DemoResult run_demo(const std::string& name, const std::vector<int>* kvec);

// Shared builtin registry ("fano", "pm:<m>", "uniform:<m>:<r>", "cog:k4",
// "cog:royle-sokal") and graph builtins ("k4", "royle-sokal").
SimplicialComplex builtin_complex(const std::string& name);
Multigraph builtin_graph(const std::string& name);

}  // namespace relroots
