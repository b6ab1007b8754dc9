#pragma once

/// JSON encodings for fields, defining sets, codes and construction results.
/// Field descriptors serialize as {p, s, defining_poly}; defining sets as
/// {n, q, residues} (negative residues accepted on input); generator
/// matrices as row lists of element indices.  Loading a field verifies that
/// the stored defining polynomial matches the canonical one, since element
/// indices are only meaningful relative to it.

#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/bounds.hpp"
#include "lrc/constructions.hpp"
#include "lrc/cyclic.hpp"
#include "lrc/galois.hpp"
#include "lrc/linear.hpp"
#include "lrc/locality.hpp"

namespace lrc {

using json = nlohmann::json;

inline json field_to_json(const Field& f) {
    return json{{"p", f.characteristic()}, {"s", f.extension_degree()}, {"defining_poly", f.modulus()}};
}

inline const Field& field_from_json(const json& j) {
    const Field& f = Field::get(j.at("p").get<uint32_t>(), j.at("s").get<uint32_t>());
    if (j.contains("defining_poly")) {
        const auto poly = j.at("defining_poly").get<std::vector<uint32_t>>();
        if (poly != f.modulus())
            throw std::invalid_argument("unsupported field representation: defining polynomial differs from canonical");
    }
    return f;
}

inline json defset_to_json(const DefiningSet& ds) {
    return json{{"n", ds.n}, {"q", ds.q}, {"residues", ds.residues}};
}

inline DefiningSet defset_from_json(const json& j) {
    const uint32_t n = j.at("n").get<uint32_t>();
    const uint32_t q = j.at("q").get<uint32_t>();
    const auto raw = j.at("residues").get<std::vector<int64_t>>();
    const auto norm = normalize_defset(n, q, raw);
    if (!norm.was_closed)
        throw std::invalid_argument("defining set in file is not closed under multiplication by q");
    return norm.ds;
}

inline json cyclic_to_json(const CyclicCode& c) {
    return json{{"type", "cyclic"},
                {"field", field_to_json(c.field())},
                {"defining_set", defset_to_json(c.defining_set())},
                {"generator_poly", c.generator().coeffs()},
                {"k", c.k()},
                {"splitting", json{{"p", c.root_context().splitting->characteristic()},
                                   {"s", c.root_context().splitting->extension_degree()},
                                   {"alpha", c.root_context().alpha}}}};
}

inline CyclicCode cyclic_from_json(const json& j) {
    const Field& f = field_from_json(j.at("field"));
    CyclicCode c(f, defset_from_json(j.at("defining_set")));
    if (j.contains("generator_poly")) {
        const auto coeffs = j.at("generator_poly").get<std::vector<uint32_t>>();
        if (Poly(f, coeffs) != c.generator())
            throw std::invalid_argument("stored generator polynomial disagrees with the defining set");
    }
    return c;
}

inline json linear_to_json(const LinearCode& c) {
    std::vector<std::vector<uint32_t>> rows(c.k());
    for (uint32_t r = 0; r < c.k(); ++r) rows[r].assign(c.row(r), c.row(r) + c.n());
    return json{{"type", "linear"},
                {"field", field_to_json(c.field())},
                {"n", c.n()},
                {"k", c.k()},
                {"generator", rows},
                {"provenance", c.provenance()}};
}

inline LinearCode linear_from_json(const json& j) {
    const Field& f = field_from_json(j.at("field"));
    const uint32_t n = j.at("n").get<uint32_t>();
    const uint32_t k = j.at("k").get<uint32_t>();
    const auto rows = j.at("generator").get<std::vector<std::vector<uint32_t>>>();
    if (rows.size() != k) throw std::invalid_argument("generator row count != k");
    std::vector<uint32_t> flat;
    flat.reserve(static_cast<size_t>(n) * k);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("generator row length != n");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return LinearCode(f, n, k, std::move(flat), j.value("provenance", std::string{}));
}

inline json predicted_to_json(const Predicted& p) {
    return json{{"k", p.k}, {"d_lower", p.d_lb}, {"r", p.r}, {"delta", p.delta}, {"t", p.t}};
}

inline Predicted predicted_from_json(const json& j) {
    Predicted p;
    p.k = j.at("k").get<uint32_t>();
    p.d_lb = j.at("d_lower").get<uint32_t>();
    p.r = j.at("r").get<uint32_t>();
    p.delta = j.at("delta").get<uint32_t>();
    p.t = j.at("t").get<uint32_t>();
    return p;
}

inline json construction_to_json(const ConstructionResult& res) {
    json j;
    j["construction"] = json{{"name", res.name}, {"params", res.params}};
    j["code"] = res.cyclic ? cyclic_to_json(*res.cyclic) : linear_to_json(res.code);
    j["locality_code"] =
        res.locality_cyclic ? cyclic_to_json(*res.locality_cyclic) : linear_to_json(res.locality_code);
    j["block_layout"] = to_string(res.layout);
    j["block_perm"] = res.block_perm;
    j["predicted"] = predicted_to_json(res.predicted);
    if (res.extra_residues_autoclosed) j["extra_residues_autoclosed"] = true;
    return j;
}

inline LinearCode code_as_linear(const json& j, std::optional<CyclicCode>& cyclic_out) {
    if (j.at("type") == "cyclic") {
        CyclicCode c = cyclic_from_json(j);
        LinearCode lin(c.field(), c.n(), c.k(), c.generator_matrix(), "cyclic");
        cyclic_out = std::move(c);
        return lin;
    }
    cyclic_out.reset();
    return linear_from_json(j);
}

inline ConstructionResult construction_from_json(const json& j) {
    std::optional<CyclicCode> cyc, lcyc;
    LinearCode code = code_as_linear(j.at("code"), cyc);
    LinearCode l = code_as_linear(j.at("locality_code"), lcyc);
    ConstructionResult res(std::move(code), std::move(l));
    res.cyclic = std::move(cyc);
    res.locality_cyclic = std::move(lcyc);
    res.name = j.at("construction").at("name").get<std::string>();
    for (const auto& [key, v] : j.at("construction").at("params").items())
        res.params[key] = v.get<int64_t>();
    res.layout = j.at("block_layout") == "strided" ? BlockLayout::strided : BlockLayout::contiguous;
    res.block_perm = j.value("block_perm", 1u);
    res.predicted = predicted_from_json(j.at("predicted"));
    res.extra_residues_autoclosed = j.value("extra_residues_autoclosed", false);
    return res;
}

inline json weight_report_to_json(const WeightReport& w) {
    json hist = json::object();
    for (uint32_t i = 0; i < w.histogram.size(); ++i)
        if (w.histogram[i]) hist[std::to_string(i)] = w.histogram[i];
    return json{{"d", w.d}, {"omega", w.omega}, {"total", w.total}, {"histogram", hist}};
}

inline json profile_to_json(const LocalityProfile& p) {
    json coords = json::array();
    for (const auto& c : p.coords) {
        json supports = json::array();
        for (const auto& chk : c.checks) supports.push_back(chk.support);
        json jc{{"i", c.index}, {"t_i", c.t_i}, {"supports", supports}};
        if (c.r_i)
            jc["r_i"] = *c.r_i;
        else
            jc["r_i"] = nullptr;
        coords.push_back(std::move(jc));
    }
    return json{{"rmax", p.rmax},
                {"confirmed", p.all_confirmed},
                {"r", p.all_confirmed ? json(p.r) : json(nullptr)},
                {"t", p.t},
                {"per_coordinate", coords}};
}

inline json structural_to_json(const StructuralReport& s) {
    json blocks = json::array();
    for (const auto& b : s.blocks) {
        blocks.push_back(json{{"block", b.index},
                              {"support", b.support},
                              {"dim", b.dim},
                              {"distance", b.distance == UINT32_MAX ? json("inf") : json(b.distance)},
                              {"inside_locality_code", b.inside_locality_code}});
    }
    return json{{"verified", s.verified},
                {"r", s.r},
                {"delta", s.delta},
                {"meets_length_bound", s.meets_length_bound},
                {"blocks", blocks}};
}

inline json projection_to_json(const AdditiveProjection& p) {
    json j{{"n_l", p.n_l},
           {"k_l", p.k_l},
           {"n_prime", p.n_prime},
           {"alphabet", p.alphabet},
           {"omega", p.omega},
           {"info_set", p.info_set},
           {"d_prime_lower", p.d_prime_lower},
           {"bound_only", p.bound_only}};
    j["k_prime"] = p.k_prime ? json(*p.k_prime) : json(nullptr);
    j["d_prime"] = p.d_prime ? json(*p.d_prime) : json(nullptr);
    return j;
}

inline json cm_to_json(const CmResult& cm) {
    json terms = json::array();
    for (const auto& t : cm.terms)
        terms.push_back(json{{"t", t.t}, {"n", t.n_rem}, {"kopt", t.kopt}, {"source", t.source}, {"value", t.value}});
    return json{{"k_max", cm.k_max}, {"argmin_t", cm.argmin_t}, {"terms", terms}};
}

inline json bound_report_to_json(const BoundReport& b) {
    json j{{"generalized_singleton", b.singleton_d_bound},
           {"d_used", b.d_used},
           {"cm", cm_to_json(b.cm)},
           {"cm_r", b.cm_r},
           {"projection",
            json{{"n_prime", b.n_prime},
                 {"alphabet", b.alphabet},
                 {"omega", b.omega},
                 {"d_prime_used", b.d_prime_used},
                 {"cardinality_bound", b.sphere_packing_bound},
                 {"log2", b.sphere_packing_log2},
                 {"k_prime_max", b.k_prime_max},
                 {"k_max", b.projection_k_max}}},
           {"k_upper", b.k_upper},
           {"dimension_optimal", b.dimension_optimal},
           {"bound_violated", b.bound_violated},
           {"verdict", b.verdict},
           {"scope", "optimality relative to linear codes"}};
    j["singleton_optimal"] = b.singleton_optimal ? json(*b.singleton_optimal) : json(nullptr);
    return j;
}

}  // namespace lrc
