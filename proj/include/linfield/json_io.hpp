#pragma once

// JSON (de)serialization for the public value types, used by the CLI's
// --json output and by tests that round-trip reports.  Field elements are
// serialized by their integer codes; fields by (p, s, n) plus the canonical
// modulus, which is re-derived and cross-checked on load.

#include "linfield/field.hpp"
#include "linfield/linpoly.hpp"
#include "linfield/qsp.hpp"
#include "linfield/trinomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace linfield {

inline nlohmann::json field_to_json(const FieldSpec& f) {
    return {{"p", f.p}, {"s", f.s}, {"n", f.n}, {"modulus", f.modulus}};
}

inline FieldSpec field_from_json(const nlohmann::json& j) {
    FieldSpec f = make_field(j.at("p").get<u64>(), j.at("s").get<unsigned>(),
                             j.at("n").get<unsigned>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<u64>>() != f.modulus)
        throw field_mismatch_error("field_from_json: modulus is not the canonical one");
    return f;
}

inline nlohmann::json linearized_to_json(const LinearizedPoly& L) {
    std::vector<u64> codes;
    codes.reserve(L.coeffs.size());
    for (const auto& c : L.coeffs)
        codes.push_back(encode(L.field, c));
    return {{"field", field_to_json(L.field)}, {"coeffs", codes}};
}

inline LinearizedPoly linearized_from_json(const nlohmann::json& j) {
    FieldSpec f = field_from_json(j.at("field"));
    std::vector<FieldElement> coeffs;
    for (u64 code : j.at("coeffs").get<std::vector<u64>>())
        coeffs.push_back(decode(f, code));
    return make_linearized(f, std::move(coeffs));
}

inline nlohmann::json verify_report_to_json(const VerifyReport& r) {
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& pr : r.counterexamples)
        cex.push_back({pr.a_code, pr.b_code});
    nlohmann::json census = nlohmann::json::object();
    for (const auto& [k, v] : r.census)
        census["nullity_" + std::to_string(k)] = v;
    return {{"q", r.q},
            {"d", r.d},
            {"n", r.n},
            {"part", r.part},
            {"exhaustive", r.exhaustive},
            {"pairs_checked", r.pairs_checked},
            {"candidates_checked", r.candidates_checked},
            {"samples_checked", r.samples_checked},
            {"splitting_count", r.splitting_count},
            {"counterexample_count", r.counterexample_count},
            {"counterexamples", cex},
            {"census", census}};
}

inline nlohmann::json estimate_to_json(const ComplexityEstimate& e) {
    return {{"log2_relation", e.log2_relation_term},
            {"log2_linalg", e.log2_linear_algebra_term},
            {"log2_total", e.log2_total},
            {"beats_generic", e.beats_generic},
            {"beats_bruteforce", e.beats_bruteforce}};
}

inline nlohmann::json scan_row_to_json(const ScanRow& r, u64 q, unsigned n, u64 deg_lambda) {
    nlohmann::json j = estimate_to_json(r.est);
    j["q"] = q;
    j["n"] = n;
    j["deg_lambda"] = deg_lambda;
    j["d"] = r.d;
    j["m"] = r.m;
    j["window"] = r.window_ok;
    return j;
}

} // namespace linfield
