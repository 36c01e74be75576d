#include "relroots/io.hpp"

#include <algorithm>

#include <json.hpp>

#include "relroots/errors.hpp"

namespace relroots {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace

SimplicialComplex complex_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw ParseError("complex file must be a JSON object");
    int m = int_field(j, "m");
    if (!j.contains("facets") || !j["facets"].is_array())
        throw ParseError("missing \"facets\" array");
    std::vector<std::vector<int>> facets;
    for (const auto& row : j["facets"]) {
        if (!row.is_array()) throw ParseError("each facet must be an array of elements");
        std::vector<int> facet;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw ParseError("facet elements must be integers");
            facet.push_back(e.get<int>());
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(m, facets);
}

std::string complex_to_json(const SimplicialComplex& c) {
    json j;
    j["m"] = c.m();
    auto lists = c.facet_lists();
    for (auto& f : lists) std::sort(f.begin(), f.end());
    std::sort(lists.begin(), lists.end());
    j["facets"] = lists;
    return j.dump();
}

Multigraph graph_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw ParseError("graph file must be a JSON object");
    Multigraph g;
    g.n = int_field(j, "n");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("missing \"edges\" array");
    for (const auto& row : j["edges"]) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
            !row[1].is_number_integer())
            throw ParseError("each edge must be a [u, v] pair");
        g.edges.push_back({row[0].get<int>(), row[1].get<int>()});
    }
    validate_graph(g);
    return g;
}

std::string graph_to_json(const Multigraph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    return j.dump();
}

RelPoly poly_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw ParseError("polynomial file must be a JSON object");
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("missing \"coeffs\" array");
    Coeffs c;
    for (const auto& e : j["coeffs"]) {
        if (!e.is_string()) throw ParseError("coefficients must be decimal strings");
        try {
            c.push_back(Int(e.get<std::string>()));
        } catch (const std::exception&) {
            throw ParseError("coefficients must be decimal strings");
        }
    }
    RelPoly p;
    p.h = Poly(std::move(c));
    p.unit_mult = j.contains("unit_root_multiplicity")
                      ? int_field(j, "unit_root_multiplicity")
                      : 0;
    if (p.unit_mult < 0) throw ParseError("unit root multiplicity must be nonnegative");
    return p;
}

std::string poly_to_json(const RelPoly& p) {
    json j;
    j["coeffs"] = p.h.coeff_strings();
    j["unit_root_multiplicity"] = p.unit_mult;
    return j.dump();
}

}  // namespace relroots
