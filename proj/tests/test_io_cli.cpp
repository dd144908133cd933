#include <doctest.h>

#include <sstream>

#include "frecheb/cli.hpp"
#include "frecheb/io.hpp"
#include "frecheb/oracle.hpp"

using namespace frecheb;
using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int status = cli::run(args, in, out, err);
    return {status, out.str(), err.str()};
}

const char* kGodelMinimum =
    R"({"implication":"godel","gamma":[[0.6,0.49],[0.26,0.9]],"beta":[0.1,0.4]})";
const char* kGodelInfimum =
    R"({"implication":"godel","gamma":[[0.41,0.07],[0.29,0.31]],"beta":[0.88,0.46]})";

}  // namespace

TEST_CASE("documents round trip exactly") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto sys = generate_random_system(3, 4, ImplicationKind::Lukasiewicz, s);
        const SystemDocument doc{"r", sys};
        const auto back = parse_system_document(parse_json_text(to_json(doc).dump()));
        CHECK(back.system.gamma == sys.gamma);
        CHECK(back.system.beta == sys.beta);
        CHECK(back.name == doc.name);
    }
}

TEST_CASE("malformed documents name the field") {
    auto message = [](const std::string& text) {
        try {
            parse_system_document(parse_json_text(text));
        } catch (const DocumentError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message(R"({"implication":"godel","gamma":[[0.1,0.2],[0.3,1.2]],"beta":[0.1,0.2]})")
              .rfind("gamma[1][1]:", 0) == 0);
    CHECK(message(R"({"implication":"godel","gamma":[[0.1,0.2],[0.3]],"beta":[0.1,0.2]})")
              .rfind("gamma[1]:", 0) == 0);
    CHECK(message(R"({"implication":"godel","gamma":[[0.1]],"beta":[0.1,0.2]})").rfind("beta:", 0) ==
          0);
    CHECK(message(R"({"implication":"max","gamma":[[0.1]],"beta":[0.1]})").rfind("implication:", 0) ==
          0);
    CHECK(message(R"({"implication":"godel","beta":[0.1]})").rfind("gamma:", 0) == 0);
    CHECK(message(R"({"implication":"godel","gamma":[["x"]],"beta":[0.1]})").rfind("gamma[0][0]:", 0) ==
          0);
    CHECK(message("{not json").rfind("<document>:", 0) == 0);
}

TEST_CASE("cli distance and approx") {
    const auto d = run_cli({"distance", "--input", "-"}, kGodelMinimum);
    REQUIRE(d.status == 0);
    const auto doc = json::parse(d.out);
    CHECK(std::abs(doc["per_row"][0]["nabla_j"].get<double>() - 0.15) <= 1e-12);
    CHECK(doc["per_row"][0]["argmin_i"] == 1);

    const auto a = run_cli({"approx", "--input", "-"}, kGodelInfimum);
    REQUIRE(a.status == 0);
    const auto adoc = json::parse(a.out);
    CHECK(adoc["verdict"] == "infimum");
    CHECK(adoc["approximation"]["empty"] == true);
    CHECK_FALSE(adoc.contains("near_approximation"));

    const auto near = run_cli({"approx", "--input", "-", "--delta", "0.2"}, kGodelInfimum);
    REQUIRE(near.status == 0);
    CHECK(json::parse(near.out)["near_approximation"]["optimal"] == false);

    const auto pretty = run_cli({"distance", "--input", "-", "--pretty"}, kGodelInfimum);
    CHECK(pretty.out.find("infimum") != std::string::npos);
}

TEST_CASE("cli check and verify") {
    const auto c = run_cli({"check", "--input", "-"},
                           R"({"implication":"godel","gamma":[[0.6,0.49],[0.26,0.9]],"beta":[0.58,0.88]})");
    REQUIRE(c.status == 0);
    CHECK(json::parse(c.out)["consistent"] == true);
    CHECK(json::parse(c.out)["residual"] == 0.0);

    const auto v = run_cli({"verify", "--input", "-"}, kGodelInfimum);
    CHECK(v.status == 0);
    CHECK(json::parse(v.out)["passed"] == true);

    const auto r = run_cli({"verify", "--random", "3", "3", "50", "--seed", "5"});
    CHECK(r.status == 0);
    CHECK(json::parse(r.out)["sweeps"].size() == 3);
}

TEST_CASE("cli maxt-distance") {
    const auto m = run_cli({"maxt-distance", "--input", "-"},
                           R"({"implication":"goguen","a":[[0.6,0.26],[0.49,0.9]],"b":[0.1,0.4]})");
    REQUIRE(m.status == 0);
    CHECK(json::parse(m.out)["attained"] == true);
}

TEST_CASE("cli validation errors exit with status 1") {
    CHECK(run_cli({}).status == 1);
    CHECK(run_cli({"bogus"}).status == 1);
    CHECK(run_cli({"distance"}).status == 1);
    CHECK(run_cli({"distance", "--input", "/nonexistent.json"}).status == 1);
    const auto bad = run_cli({"distance", "--input", "-"},
                             R"({"implication":"godel","gamma":[[0.6,-0.49]],"beta":[0.1]})");
    CHECK(bad.status == 1);
    CHECK(bad.err.find("gamma[0][1]") != std::string::npos);
    CHECK(run_cli({"approx", "--input", "-", "--delta", "0.1"}, kGodelInfimum).status == 1);
}
