#include "relroots/reports.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "relroots/errors.hpp"
#include "relroots/matroid.hpp"
#include "relroots/reliability.hpp"

// Insertion-ordered JSON keeps report layouts stable; the reproducibility
// guarantees compare whole report strings.
using json = nlohmann::ordered_json;

namespace relroots {

namespace {

json int_strings(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

json labels_1based(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
}

json face_1based(Face f) {
    json a = json::array();
    for (int i = 0; i < SimplicialComplex::kMaxGround; ++i)
        if (f >> i & 1) a.push_back(i + 1);
    return a;
}

json root_report(const RootReport& r) {
    json j;
    json roots = json::array();
    for (const auto& z : r.roots)
        roots.push_back({{"re", z.real()}, {"im", z.imag()}, {"modulus", std::abs(z)}});
    j["roots"] = std::move(roots);
    j["max_modulus"] = r.max_modulus;
    j["residual_bound"] = r.residual_bound;
    j["verdict"] = verdict_name(r.verdict);
    j["decided_by"] = decided_by_name(r.decided_by);
    j["converged"] = r.converged;
    return j;
}

json rel_poly(const RelPoly& rel) {
    json j;
    j["h_coeffs"] = int_strings(rel.h.coeffs());
    j["unit_root_multiplicity"] = rel.unit_mult;
    return j;
}

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json search_record(const SearchRecord& r) {
    json j;
    j["kvec"] = r.kvec;
    j["h_coeffs"] = int_strings(r.rel.h.coeffs());
    j["unit_root_multiplicity"] = r.rel.unit_mult;
    j["max_modulus"] = r.max_modulus;
    j["residual_bound"] = r.residual_bound;
    j["outside"] = r.outside;
    j["verdict"] = verdict_name(r.verdict);
    return j;
}

}  // namespace

std::string root_report_json(const RootReport& r) { return root_report(r).dump(); }

std::string root_scatter_csv(const RootReport& r) {
    std::string out = "re,im,modulus\n";
    for (const auto& z : r.roots)
        out += g17(z.real()) + "," + g17(z.imag()) + "," + g17(std::abs(z)) + "\n";
    return out;
}

std::string analyze_json(const SimplicialComplex& c, int shelling_cap) {
    json j;
    j["m"] = c.m();
    j["is_void"] = c.is_void();
    auto dim = c.dimension();
    j["dimension"] = dim ? json(*dim) : json(nullptr);
    j["is_pure"] = c.is_pure();
    j["f_vector"] = int_strings(c.f_vector());

    RelPoly rel = reliability(c);
    j["h_vector"] = int_strings(rel.h.coeffs());
    j["loops"] = labels_1based(c.loops());
    j["coloops"] = labels_1based(c.coloops());

    json comps = json::array();
    for (const Component& comp : components(c)) comps.push_back(labels_1based(comp.elements));
    j["components"] = std::move(comps);

    ExchangeWitness w = is_matroid(c);
    j["is_matroid"] = w.is_matroid;
    j["exchange_witness"] =
        w.is_matroid ? json(nullptr)
                     : json{{"sigma", labels_1based(w.sigma)}, {"alpha", labels_1based(w.alpha)}};
    // Paving and shellability are undefined below dimension 1 resp. for
    // void or non-pure complexes; the report says null rather than refusing.
    j["is_paving"] = dim && *dim >= 1 ? json(is_paving(c)) : json(nullptr);

    if (c.is_void() || !c.is_pure()) {
        j["shelling"] = json(nullptr);
    } else {
        ShellingResult sh = is_shellable(c, shelling_cap);
        const char* status = sh.status == Shellable::yes   ? "yes"
                             : sh.status == Shellable::no  ? "no"
                                                           : "capped";
        json order = json(nullptr);
        if (sh.status == Shellable::yes) {
            order = json::array();
            for (int idx : sh.order) order.push_back(face_1based(c.facet_masks()[idx]));
        }
        j["shelling"] = {{"status", status}, {"order", std::move(order)}};
    }

    j["reliability"] = rel_poly(rel);
    j["roots"] = c.is_void() ? json(nullptr) : root_report(reliability_roots(rel));
    return j.dump();
}

std::string search_records_json(const std::vector<SearchRecord>& recs,
                                int k_min, int k_max, bool only_outside) {
    json j;
    j["k_min"] = k_min;
    j["k_max"] = k_max;
    j["only_outside"] = only_outside;
    json rows = json::array();
    for (const SearchRecord& r : recs)
        if (!only_outside || r.outside) rows.push_back(search_record(r));
    j["count"] = rows.size();
    j["records"] = std::move(rows);
    return j.dump();
}

std::string search_records_csv(const std::vector<SearchRecord>& recs, bool only_outside) {
    std::string out = "kvec;max_modulus;residual_bound;outside;verdict;h_coeffs\n";
    for (const SearchRecord& r : recs) {
        if (only_outside && !r.outside) continue;
        std::string kvec, h;
        for (size_t i = 0; i < r.kvec.size(); ++i)
            kvec += (i ? "," : "") + std::to_string(r.kvec[i]);
        const auto& hc = r.rel.h.coeffs();
        for (size_t i = 0; i < hc.size(); ++i) h += (i ? "," : "") + hc[i].str();
        out += kvec + ";" + g17(r.max_modulus) + ";" + g17(r.residual_bound) + ";" +
               (r.outside ? "true" : "false") + ";" + verdict_name(r.verdict) + ";" + h + "\n";
    }
    return out;
}

std::string experiment_json(const ExperimentSummary& s) {
    json j;
    j["params"] = {{"m", s.m},   {"d", s.d},       {"p", s.p},
                   {"trials", s.trials}, {"seed", s.seed}, {"epsilon", s.epsilon}};
    j["counts"] = {{"e1_no_loops", s.count_e1},
                   {"e2_ridges_covered", s.count_e2},
                   {"e3_facet_count_large", s.count_e3},
                   {"all_events", s.count_all_events},
                   {"h_nondecreasing", s.count_h_nondecreasing},
                   {"all_in_disk", s.count_all_in_disk},
                   {"h_nondecreasing_and_in_disk", s.count_h_nondecreasing_and_in_disk}};
    double t = s.trials > 0 ? static_cast<double>(s.trials) : 1.0;
    j["per_event_fractions"] = {{"e1", s.count_e1 / t},
                                {"e2", s.count_e2 / t},
                                {"e3", s.count_e3 / t},
                                {"all_events", s.count_all_events / t},
                                {"h_nondecreasing", s.count_h_nondecreasing / t}};
    j["disk_fraction"] = s.count_all_in_disk / t;
    j["h_implies_disk"] = s.h_implies_disk;
    json trials = json::array();
    for (const TrialRecord& r : s.per_trial)
        trials.push_back({{"no_loops", r.no_loops},
                          {"ridges_covered", r.ridges_covered},
                          {"facet_count_large", r.facet_count_large},
                          {"h_nondecreasing", r.h_nondecreasing},
                          {"all_in_disk", r.all_in_disk},
                          {"facet_count", r.facet_count}});
    j["per_trial"] = std::move(trials);
    return j.dump();
}

std::string chromatic_check_json(const ChromaticCheck& r) {
    json j;
    j["holds"] = r.holds;
    j["n"] = r.n;
    j["components"] = r.c;
    j["lhs_coeffs"] = int_strings(r.lhs.coeffs());
    j["rhs_coeffs"] = int_strings(r.rhs.coeffs());
    return j.dump();
}

namespace {

// Reference displays for the two demos: the h-part coefficients (ascending)
// and the power of (1-q) carried in front.
const std::vector<long> kRsReference = {1, 3, 6, 10, 14, 18, 22, 26, 26, 22, 18, 14, 10, 6};
constexpr int kRsUnitMult = 3;
const std::vector<long> kFanoReference = {1,   4,   10,  20,  35,  56,  84,  120,
                                          165, 218, 278, 343, 411, 476, 528, 557,
                                          552, 504, 418, 311, 200, 106, 46,  13};
constexpr int kFanoUnitMult = 4;

bool matches(const RelPoly& rel, const std::vector<long>& ref, int unit_mult) {
    const auto& h = rel.h.coeffs();
    if (rel.unit_mult != unit_mult || h.size() != ref.size()) return false;
    for (size_t i = 0; i < ref.size(); ++i)
        if (h[i] != ref[i]) return false;
    return true;
}

}  // namespace

DemoResult run_demo(const std::string& name, const std::vector<int>* kvec) {
    SimplicialComplex base = SimplicialComplex::from_facets(0, {});
    std::vector<int> k;
    const std::vector<long>* ref = nullptr;
    int ref_mult = 0;
    if (name == "rs") {
        base = builtin_complex("cog:k4");
        k = {6, 1, 6, 1, 1, 1};
        ref = &kRsReference;
        ref_mult = kRsUnitMult;
    } else if (name == "fano") {
        base = builtin_complex("fano");
        k = {1, 4, 4, 4, 5, 4, 5};
        ref = &kFanoReference;
        ref_mult = kFanoUnitMult;
    } else {
        throw DomainError("unknown demo: " + name);
    }
    bool default_kvec = kvec == nullptr || *kvec == k;
    if (kvec != nullptr) k = *kvec;

    RelPoly rel = gen_substitute(base, k);
    RootReport roots = reliability_roots(rel);

    DemoResult res;
    res.reference_checked = default_kvec;
    res.matches_reference = default_kvec && matches(rel, *ref, ref_mult);

    json j;
    j["name"] = name;
    j["kvec"] = k;
    j["reliability"] = rel_poly(rel);
    j["roots"] = root_report(roots);
    j["reference_checked"] = res.reference_checked;
    if (res.reference_checked) j["matches_reference"] = res.matches_reference;
    res.json = j.dump();
    return res;
}

namespace {

int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw DomainError("trailing characters");
        return v;
    } catch (const DomainError&) {
        throw;
    } catch (...) {
        throw DomainError("bad integer in builtin name: " + s);
    }
}

}  // namespace

SimplicialComplex builtin_complex(const std::string& name) {
    if (name == "fano") return fano();
    if (name == "cog:k4") return cographic_matroid(k4());
    if (name == "cog:royle-sokal") return cographic_matroid(royle_sokal());
    if (name.rfind("pm:", 0) == 0) return path_complex(parse_int(name.substr(3)));
    if (name.rfind("uniform:", 0) == 0) {
        std::string rest = name.substr(8);
        size_t colon = rest.find(':');
        if (colon == std::string::npos)
            throw DomainError("uniform builtin needs uniform:<m>:<r>");
        return uniform_matroid(parse_int(rest.substr(0, colon)),
                               parse_int(rest.substr(colon + 1)));
    }
    throw DomainError("unknown builtin complex: " + name);
}

Multigraph builtin_graph(const std::string& name) {
    if (name == "k4") return k4();
    if (name == "royle-sokal") return royle_sokal();
    throw DomainError("unknown builtin graph: " + name);
}

}  // namespace relroots
