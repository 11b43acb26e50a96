#include "gforge/cli.hpp"

#include <gmp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "gforge/serialize.hpp"
#include "gforge/skew.hpp"
#include "gforge/text.hpp"

namespace gforge::cli {

using nlohmann::json;

namespace {

struct Outcome {
    json inputs = json::object();
    json result = json::object();
    int exit_code = kExitOk;
};

/// "@path" reads the file; anything else is the literal text.
std::string load_text(const std::string& value) {
    if (value.empty() || value.front() != '@') return value;
    std::ifstream in(value.substr(1), std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + value.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidArgument, path + " is not valid JSON: " + e.what());
    }
}

PermGroup read_group(const std::string& text, int degree) {
    if (text.size() > 1 && text.front() == 'S' && text.find('(') == std::string::npos) {
        if (std::stoi(text.substr(1)) != degree)
            throw Error(ErrorCode::InvalidArgument, text + " does not act on " + std::to_string(degree) + " points");
        return PermGroup::symmetric(degree);
    }
    return PermGroup::parse(text, degree);
}

json config_json(const RunConfig& c) {
    return {{"field", c.field_spec},
            {"prime_budget", c.prime_budget},
            {"attempt_budget", c.attempt_budget},
            {"degree_cap", c.degree_cap},
            {"seed", c.seed}};
}

json versions_json() { return {{"gforge", GFORGE_VERSION}, {"gmp", gmp_version}}; }

json error_json(const std::exception& e) {
    json j;
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        j = {{"code", "ParseError"}, {"message", e.what()}, {"line", pe->line()}, {"column", pe->column()}};
    } else if (const auto* ge = dynamic_cast<const Error*>(&e)) {
        j = {{"code", std::string(to_string(ge->code()))}, {"message", e.what()}};
    } else {
        j = {{"code", "InternalError"}, {"message", e.what()}};
    }
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Constructive inverse Galois theory toolkit", "gforge"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--field", config.field_spec, "Base field: Q, GF(p), GF(q), GF(p^k)");
    app.add_option("--prime-budget", config.prime_budget, "Primes examined by S_n certification")
        ->check(CLI::PositiveNumber);
    app.add_option("--attempt-budget", config.attempt_budget, "Candidates tried by the S_n search")
        ->check(CLI::PositiveNumber);
    app.add_option("--degree-cap", config.degree_cap, "Largest degree accepted by factorization")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "Seed for randomized splitting (GFORGE_SEED overrides)");
    app.add_option("--out", config.output_path, "Write the JSON artifact here instead of stdout");

    // Each handler fills `outcome`; it runs after parsing and the seed override.
    std::function<void(Outcome&)> handler;
    auto factor_options = [&] { return FactorOptions{config.degree_cap, config.seed}; };
    auto field = [&] { return Field::parse(config.field_spec); };

    std::string stem, q_override, poly, at, x_text, alpha, ring_text = "GF(4);frob", lhs, rhs, side = "right";
    std::string cert_path, group_text, subgroup_text;
    int n = 0, degree = 0;
    long budget = 0;

    auto* bb = app.add_subcommand("bb-construct", "Regular S_n extension with a prescribed fiber at T=0");
    bb->add_option("--stem", stem, "Monic irreducible stem polynomial in Y (or @file)")->required();
    bb->add_option("--n", n, "Target degree n >= deg stem")->required();
    bb->add_option("--q", q_override, "Optional S_n polynomial for the node a");
    bb->callback([&] {
        handler = [&](Outcome& o) {
            o.inputs = {{"stem", stem}, {"n", n}};
            const Field f = field();
            BBOptions opts;
            opts.prime_budget = config.prime_budget;
            opts.attempt_budget = config.attempt_budget;
            opts.factor = factor_options();
            if (!q_override.empty()) {
                o.inputs["q"] = q_override;
                opts.q_override = parse_unipoly(load_text(q_override), f);
            }
            const BBCertificate cert = bb_construct(parse_unipoly(load_text(stem), f), n, opts);
            o.result = {{"certificate", to_json(cert)}};
        };
    });

    auto* verify = app.add_subcommand("verify", "Re-check a Beckmann-Black certificate");
    verify->add_option("--cert", cert_path, "Artifact or bare certificate JSON file")->required();
    verify->callback([&] {
        handler = [&](Outcome& o) {
            o.inputs = {{"cert", cert_path}};
            const json j = read_json_file(cert_path);
            const json& c = j.contains("result") && j["result"].contains("certificate") ? j["result"]["certificate"] : j;
            VerifyResult v;
            try {
                v = verify_bb_certificate(bb_certificate_from_json(c), factor_options());
            } catch (const Error& e) {
                v = {false, {std::string("malformed certificate: ") + e.what()}};
            }
            o.result = to_json(v);
            o.exit_code = v.ok ? kExitOk : kExitError;
        };
    });

    auto* spec = app.add_subcommand("specialize", "Fiber factorization of A(t0, Y)");
    spec->add_option("--poly", poly, "Monic parametric polynomial in T and Y (or @file)")->required();
    spec->add_option("--at", at, "Specialization point t0")->required();
    spec->callback([&] {
        handler = [&](Outcome& o) {
            o.inputs = {{"poly", poly}, {"at", at}};
            const Field f = field();
            const ParamPoly a = parse_parampoly(load_text(poly), f);
            const FieldElem t0 = parse_element(at, f);
            const SpecializationReport report = specialize_at(a, t0, factor_options());
            o.result = to_json(report);
            if (f.is_finite() && report.unramified)
                o.result["decomposition"] = to_json(frobenius_decomposition(a, t0, factor_options()));
        };
    });

    auto* sn = app.add_subcommand("certify-sn", "Dedekind-style S_n certificate");
    sn->add_option("--poly", poly, "Monic polynomial in Y over Q (or @file)")->required();
    sn->add_option("--budget", budget, "Prime budget (defaults to --prime-budget)")->check(CLI::PositiveNumber);
    sn->callback([&] {
        handler = [&](Outcome& o) {
            o.inputs = {{"poly", poly}};
            const long b = budget > 0 ? budget : config.prime_budget;
            o.inputs["budget"] = b;
            const GroupCertificate cert = certify_sn(parse_unipoly(load_text(poly), field()), b, factor_options());
            o.result = to_json(cert);
            o.exit_code = cert.conclusive() ? kExitOk : kExitInconclusive;
        };
    });

    auto* cubic = app.add_subcommand("cubic-group", "Galois group of a cubic");
    cubic->add_option("--poly", poly, "Cubic in Y (or @file)")->required();
    cubic->callback([&] {
        handler = [&](Outcome& o) {
            o.inputs = {{"poly", poly}};
            const GroupCertificate cert = cubic_galois_group(parse_unipoly(load_text(poly), field()), factor_options());
            o.result = to_json(cert);
            o.exit_code = cert.conclusive() ? kExitOk : kExitInconclusive;
        };
    });

    auto* tri = app.add_subcommand("trinomial", "Trinomial families");
    tri->require_subcommand(1);
    auto* lp = tri->add_subcommand("lp", "The family Y^3 + (T - x)Y + (T - x)");
    lp->add_option("--x", x_text, "Parameter x")->required();
    lp->callback([&] {
        handler = [&](Outcome& o) {
            o.inputs = {{"x", x_text}};
            o.result = to_json(lp_trinomial_data(parse_element(x_text, field())));
        };
    });
    auto* split = tri->add_subcommand("split", "Totally split Y^3 + aY + a");
    split->add_option("--alpha", alpha, "Use the closed form at this alpha");
    split->callback([&] {
        handler = [&](Outcome& o) {
            const Field f = field();
            if (alpha.empty()) {
                o.result = to_json(split_trinomial(f));
            } else {
                o.inputs = {{"alpha", alpha}};
                o.result = to_json(split_trinomial_at(parse_element(alpha, f)));
            }
        };
    });

    auto* skew = app.add_subcommand("skew", "Arithmetic in H[T, sigma]");
    skew->require_subcommand(1);
    auto add_skew = [&](const char* name, const char* help, bool needs_rhs) {
        auto* sub = skew->add_subcommand(name, help);
        sub->add_option("--ring", ring_text, "Ring descriptor, e.g. \"GF(4);frob\" or \"H;conj(i)\"");
        sub->add_option("--lhs", lhs, "Left operand")->required();
        auto* r = sub->add_option("--rhs", rhs, "Right operand");
        if (needs_rhs) r->required();
        return sub;
    };
    auto* smul = add_skew("mul", "Twisted product lhs*rhs", true);
    auto* sdiv = add_skew("div", "Euclidean division of lhs by rhs", true);
    sdiv->add_option("--side", side, "right: lhs = q*rhs + r; left: lhs = rhs*q + r")
        ->check(CLI::IsMember({"right", "left"}));
    auto* sore = add_skew("ore", "r, s with lhs*r = rhs*s != 0", true);
    auto* scenter = add_skew("center", "Whether lhs is central", false);
    auto skew_handler = [&](const std::string& op) {
        return [&, op] {
            handler = [&, op](Outcome& o) {
                o.inputs = {{"ring", ring_text}, {"lhs", lhs}};
                if (op != "center") o.inputs["rhs"] = rhs;
                const SkewRing ring = SkewRing::parse(ring_text);
                const SkewPoly a = parse_skewpoly(load_text(lhs), ring);
                o.result = {{"ring", ring.to_string()}, {"order", ring.order()}};
                if (op == "center") {
                    o.result["central"] = center_test(a);
                    return;
                }
                const SkewPoly b = parse_skewpoly(load_text(rhs), ring);
                if (op == "mul") {
                    o.result["product"] = skew_mul(a, b).to_string();
                } else if (op == "div") {
                    o.inputs["side"] = side;
                    auto [q, r] = side == "left" ? left_divide(a, b) : right_divide(a, b);
                    o.result["quotient"] = q.to_string();
                    o.result["remainder"] = r.to_string();
                } else {
                    auto [r, s] = ore_witness(a, b);
                    o.result["r"] = r.to_string();
                    o.result["s"] = s.to_string();
                    o.result["common_multiple"] = skew_mul(a, r).to_string();
                }
            };
        };
    };
    smul->callback(skew_handler("mul"));
    sdiv->callback(skew_handler("div"));
    sore->callback(skew_handler("ore"));
    scenter->callback(skew_handler("center"));

    auto* nq = app.add_subcommand("normquot", "N_G(K)/K for permutation groups");
    nq->add_option("--degree", degree, "Number of points")->required()->check(CLI::PositiveNumber);
    nq->add_option("--group", group_text, "Generators of G in cycle notation, or S<n>")->required();
    nq->add_option("--subgroup", subgroup_text, "Generators of K in cycle notation")->required();
    nq->callback([&] {
        handler = [&](Outcome& o) {
            o.inputs = {{"degree", degree}, {"group", group_text}, {"subgroup", subgroup_text}};
            const PermGroup g = read_group(group_text, degree);
            const PermGroup k = read_group(subgroup_text, degree);
            const NormalizerQuotient q = normalizer_quotient(g, k);
            json reps = json::array();
            for (const auto& p : q.coset_representatives) reps.push_back(perm_to_string(p));
            o.result = {{"group_order", g.order()},
                        {"subgroup_order", k.order()},
                        {"normalizer_order", q.normalizer_order},
                        {"order", q.order},
                        {"subgroup_normal", k.is_normal_in(g)},
                        {"coset_representatives", reps}};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    }

    if (const char* env = std::getenv("GFORGE_SEED")) {
        try {
            config.seed = std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            err << "error: GFORGE_SEED is not an integer: " << env << "\n";
            return kExitError;
        }
    }
    for (const auto* sub = app.get_subcommands().front(); sub; ) {
        config.command += (config.command.empty() ? "" : " ") + sub->get_name();
        const auto& next = sub->get_subcommands();
        sub = next.empty() ? nullptr : next.front();
    }

    Outcome outcome;
    try {
        handler(outcome);
    } catch (const std::exception& e) {
        outcome.result = {{"error", error_json(e)}};
        outcome.exit_code = kExitError;
        err << "error: " << e.what() << "\n";
    }

    const json artifact = {{"command", config.command},
                           {"inputs", outcome.inputs},
                           {"config", config_json(config)},
                           {"versions", versions_json()},
                           {"result", outcome.result}};
    const std::string text = artifact.dump(2) + "\n";
    if (config.output_path.empty()) {
        out << text;
    } else {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!(file << text)) {
            err << "error: cannot write " << config.output_path << "\n";
            return kExitError;
        }
    }
    return outcome.exit_code;
}

}  // namespace gforge::cli
