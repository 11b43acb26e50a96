#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gforge/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
    json artifact() const { return json::parse(out); }
};

Run call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = gforge::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("gforge_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Exit status of the tool run in a separate process.
int shell(const std::string& args) {
    const std::string cmd = std::string(GFORGE_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("command examples") {
    const Run bb = call({"bb-construct", "--stem", "Y^2 - 2", "--n", "2"});
    CHECK(bb.code == 0);
    const json cert = bb.artifact()["result"]["certificate"];
    CHECK(cert["fiber0"] == "Y^2 - 2");
    CHECK(cert["sn_certificate"]["claimed_group"] == "S2");

    const Run sp = call({"specialize", "--poly", "Y^2 - T", "--field", "GF(5)", "--at", "2"});
    CHECK(sp.code == 0);
    const json fibers = sp.artifact()["result"]["fibers"];
    REQUIRE(fibers.size() == 1);
    CHECK(fibers[0]["degree"] == 2);

    const Run sn = call({"certify-sn", "--poly", "(Y-1)*(Y-2)", "--budget", "100"});
    CHECK(sn.code == 2);
    CHECK(sn.artifact()["result"]["claimed_group"] == "inconclusive");

    const Run s5 = call({"certify-sn", "--poly", "Y^5 - Y - 1"});
    CHECK(s5.code == 0);
    CHECK(s5.artifact()["result"]["claimed_group"] == "S5");
}

TEST_CASE("artifact layout") {
    const json a = call({"cubic-group", "--poly", "Y^3 - 2"}).artifact();
    for (const char* key : {"command", "inputs", "config", "versions", "result"}) CHECK(a.contains(key));
    CHECK(a["command"] == "cubic-group");
    CHECK(a["inputs"]["poly"] == "Y^3 - 2");
    CHECK(a["config"]["seed"] == 0x5EED);
    CHECK(a["result"]["claimed_group"] == "S3");
    CHECK(call({"trinomial", "lp", "--x", "0"}).artifact()["command"] == "trinomial lp");
}

TEST_CASE("subcommands") {
    CHECK(call({"skew", "mul", "--ring", "GF(4);frob", "--lhs", "T", "--rhs", "g"}).artifact()["result"]["product"] ==
          "g^2*T");
    const json div = call({"skew", "div", "--lhs", "T^2", "--rhs", "g*T"}).artifact()["result"];
    CHECK(div["quotient"] == "g*T");
    CHECK(div["remainder"] == "0");
    const json ore = call({"skew", "ore", "--lhs", "T", "--rhs", "g"}).artifact()["result"];
    CHECK(ore["r"] == "1");
    CHECK(ore["s"] == "g^2*T");
    CHECK(call({"skew", "center", "--lhs", "T^2"}).artifact()["result"]["central"] == true);
    CHECK(call({"skew", "center", "--lhs", "g*T^2"}).artifact()["result"]["central"] == false);
    CHECK(call({"skew", "center", "--ring", "H;conj(i)", "--lhs", "j*T"}).artifact()["result"]["central"] == false);
    CHECK(call({"skew", "center", "--ring", "H;conj(i)", "--lhs", "i*T"}).artifact()["result"]["central"] == true);

    const json nq = call({"normquot", "--degree", "3", "--group", "S3", "--subgroup", "(1 2)"}).artifact()["result"];
    CHECK(nq["order"] == 1);
    CHECK(nq["coset_representatives"] == json::array({"()"}));
    CHECK(call({"normquot", "--degree", "4", "--group", "S4", "--subgroup", "(1 2)(3 4), (1 3)(2 4)"})
              .artifact()["result"]["order"] == 6);

    const json split = call({"trinomial", "split", "--alpha", "2"}).artifact()["result"];
    CHECK(split["a"] == "-343/36");
    CHECK(split["roots"] == json::array({"-7/6", "-7/3", "7/2"}));
    CHECK(call({"trinomial", "split", "--field", "GF(5)"}).code == 1);
    CHECK(call({"trinomial", "lp", "--x", "0"}).artifact()["result"]["discriminant"] == "-4*T^3 - 27*T^2");
}

TEST_CASE("errors") {
    const Run bad = call({"certify-sn", "--poly", "Y^5 - Y + ("});
    CHECK(bad.code == 1);
    const json e = bad.artifact()["result"]["error"];
    CHECK(e["code"] == "ParseError");
    CHECK(e["line"] == 1);
    CHECK(e["column"] == 12);
    CHECK(bad.err.find("column 12") != std::string::npos);

    const fs::path multi = scratch() / "multi.txt";
    std::ofstream(multi) << "Y^3\n  - Y $ 1\n";
    const json e2 = call({"certify-sn", "--poly", "@" + multi.string()}).artifact()["result"]["error"];
    CHECK(e2["line"] == 2);
    CHECK(e2["column"] == 7);

    CHECK(call({"bb-construct", "--stem", "Y^2 - 1", "--n", "2"}).artifact()["result"]["error"]["code"] ==
          "NotIrreducible");
    CHECK(call({"skew", "mul", "--ring", "GF(4);twist", "--lhs", "T", "--rhs", "T"}).code == 1);
    CHECK(call({"bb-construct", "--n", "2"}).code == 1);
    CHECK(call({}).code == 1);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("determinism and seed override") {
    const std::vector<std::string> args = {"bb-construct", "--stem", "Y^3 - 2", "--n", "3"};
    const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
    auto with_out = [&](const fs::path& p) {
        auto v = args;
        v.insert(v.end(), {"--out", p.string()});
        return v;
    };
    CHECK(call(with_out(a)).code == 0);
    CHECK(call(with_out(b)).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());

    ::setenv("GFORGE_SEED", "7", 1);
    const Run seeded = call(args);
    ::unsetenv("GFORGE_SEED");
    const json s = seeded.artifact();
    CHECK(s["config"]["seed"] == 7);
    CHECK(s["result"] == json::parse(slurp(a))["result"]);
    CHECK(call({"bb-construct", "--stem", "Y^3 - 2", "--n", "3", "--seed", "9"}).artifact()["config"]["seed"] == 9);
}

TEST_CASE("certificates re-verify in a fresh process") {
    const fs::path cert = scratch() / "cert.json";
    for (const char* stem : {"Y^2 - 2", "Y^3 - 2", "Y^3 - 3*Y - 1"}) {
        CAPTURE(stem);
        REQUIRE(shell("bb-construct --stem '" + std::string(stem) + "' --n 4 --out " + cert.string()) == 0);
        CHECK(shell("verify --cert " + cert.string()) == 0);
    }

    json artifact = json::parse(slurp(cert));
    artifact["result"]["certificate"]["R"] = artifact["result"]["certificate"]["R"].get<std::string>() + " + 1";
    const fs::path tampered = scratch() / "tampered.json";
    std::ofstream(tampered) << artifact.dump();
    CHECK(shell("verify --cert " + tampered.string()) == 1);
    const json v = call({"verify", "--cert", tampered.string()}).artifact()["result"];
    CHECK(v["ok"] == false);
    CHECK(v["reasons"][0] == "node mismatch at T=0");

    std::ofstream(tampered) << R"({"field": "Q"})";
    const Run broken = call({"verify", "--cert", tampered.string()});
    CHECK(broken.code == 1);
    CHECK(broken.artifact()["result"]["reasons"][0].get<std::string>().rfind("malformed certificate", 0) == 0);
}
