#include "gforge/serialize.hpp"

#include "gforge/text.hpp"

namespace gforge {

using nlohmann::json;

namespace {

json text_list(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.get_str());
    return out;
}

template <class F>
auto with_key(const json& j, const char* key, F&& read) -> decltype(read(j)) {
    try {
        return read(j.at(key));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("certificate field '") + key + "': " + e.what());
    }
}

std::string str_at(const json& j, const char* key) {
    return with_key(j, key, [](const json& v) { return v.get<std::string>(); });
}

}  // namespace

json to_json(const GroupCertificate& cert) {
    json j;
    j["claimed_group"] = cert.claimed_group;
    j["reason"] = cert.reason;
    j["evidence"] = json::array();
    for (const auto& e : cert.evidence) j["evidence"].push_back({{"prime", e.prime}, {"cycle_type", e.cycle_type}});
    if (cert.discriminant) j["discriminant"] = cert.discriminant->to_string();
    if (cert.square_class_witness) j["square_class_witness"] = cert.square_class_witness->to_string();
    if (cert.discriminant_is_square) j["discriminant_is_square"] = *cert.discriminant_is_square;
    j["split_type"] = cert.split_type;
    j["budget_used"] = cert.budget_used;
    return j;
}

GroupCertificate group_certificate_from_json(const json& j, const Field& field) {
    GroupCertificate c;
    c.claimed_group = str_at(j, "claimed_group");
    c.reason = str_at(j, "reason");
    with_key(j, "evidence", [&](const json& ev) {
        for (const auto& e : ev)
            c.evidence.push_back({e.at("prime").get<std::uint64_t>(), e.at("cycle_type").get<std::vector<int>>()});
        return 0;
    });
    if (j.contains("discriminant")) c.discriminant = parse_element(str_at(j, "discriminant"), field);
    if (j.contains("square_class_witness"))
        c.square_class_witness = parse_element(str_at(j, "square_class_witness"), field);
    if (j.contains("discriminant_is_square"))
        c.discriminant_is_square = with_key(j, "discriminant_is_square", [](const json& v) { return v.get<bool>(); });
    c.split_type = with_key(j, "split_type", [](const json& v) { return v.get<std::vector<int>>(); });
    c.budget_used = with_key(j, "budget_used", [](const json& v) { return v.get<long>(); });
    return c;
}

json to_json(const BBCertificate& cert) {
    json j;
    j["field"] = cert.R.field().name();
    j["input_stem"] = cert.input_stem.to_string();
    j["target_n"] = cert.target_n;
    j["R"] = cert.R.to_string();
    j["node_a"] = cert.node_a.to_string();
    j["fiber0"] = cert.fiber0.to_string();
    j["fiber1"] = cert.fiber1.to_string();
    j["fiberA"] = cert.fiberA.to_string();
    j["sn_certificate"] = to_json(cert.sn_cert);
    j["checks"] = {{"fiber0_separable", cert.checks.fiber0_separable},
                   {"fiber0_contains_stem", cert.checks.fiber0_contains_stem},
                   {"fiber1_totally_split", cert.checks.fiber1_totally_split},
                   {"nodes_distinct", cert.checks.nodes_distinct}};
    j["prime_budget"] = cert.prime_budget;
    j["pad_roots"] = text_list(cert.pad_roots);
    j["assumption"] = cert.assumption;
    return j;
}

BBCertificate bb_certificate_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "certificate is not a JSON object");
    const Field field = Field::parse(str_at(j, "field"));
    BBCertificate c;
    c.input_stem = parse_unipoly(str_at(j, "input_stem"), field);
    c.target_n = with_key(j, "target_n", [](const json& v) { return v.get<int>(); });
    c.R = parse_parampoly(str_at(j, "R"), field);
    c.node_a = parse_element(str_at(j, "node_a"), field);
    c.fiber0 = parse_unipoly(str_at(j, "fiber0"), field);
    c.fiber1 = parse_unipoly(str_at(j, "fiber1"), field);
    c.fiberA = parse_unipoly(str_at(j, "fiberA"), field);
    c.sn_cert = with_key(j, "sn_certificate", [&](const json& v) { return group_certificate_from_json(v, field); });
    with_key(j, "checks", [&](const json& v) {
        c.checks.fiber0_separable = v.at("fiber0_separable").get<bool>();
        c.checks.fiber0_contains_stem = v.at("fiber0_contains_stem").get<bool>();
        c.checks.fiber1_totally_split = v.at("fiber1_totally_split").get<bool>();
        c.checks.nodes_distinct = v.at("nodes_distinct").get<bool>();
        return 0;
    });
    c.prime_budget = with_key(j, "prime_budget", [](const json& v) { return v.get<long>(); });
    with_key(j, "pad_roots", [&](const json& v) {
        for (const auto& r : v) c.pad_roots.emplace_back(r.get<std::string>());
        return 0;
    });
    c.assumption = str_at(j, "assumption");
    return c;
}

json to_json(const VerifyResult& result) { return {{"ok", result.ok}, {"reasons", result.reasons}}; }

json to_json(const SpecializationReport& report) {
    json j;
    j["t0"] = report.t0.to_string();
    j["unramified"] = report.unramified;
    j["degree_sum_ok"] = report.degree_sum_ok;
    j["fibers"] = json::array();
    for (const auto& f : report.fibers)
        j["fibers"].push_back({{"factor", f.factor.to_string()}, {"degree", f.degree}, {"multiplicity", f.multiplicity}});
    return j;
}

json to_json(const std::vector<DecompositionEntry>& decomposition) {
    json out = json::array();
    for (const auto& d : decomposition)
        out.push_back({{"factor", d.factor.to_string()}, {"residue_degree", d.residue_degree}, {"group_order", d.group_order}});
    return out;
}

json to_json(const TrinomialFamilyData& data) {
    return {{"poly", data.poly.to_string()},
            {"discriminant", data.discriminant.to_string('T')},
            {"squarefree_part", data.squarefree_part.to_string('T')},
            {"discriminant_nonsquare", data.discriminant_nonsquare}};
}

json to_json(const SplitTrinomialResult& result) {
    json j;
    j["alpha"] = result.alpha ? json(result.alpha->to_string()) : json(nullptr);
    j["a"] = result.a.to_string();
    j["roots"] = json::array();
    for (const auto& r : result.roots) j["roots"].push_back(r.to_string());
    j["method"] = result.method;
    return j;
}

}  // namespace gforge
