#include <doctest.h>

#include <isobaric/cli.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "isobaric");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = isobaric::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("wip text output") {
        auto r = invoke({"wip", "--weights", "1,2,3,4", "--k", "4", "--n", "4"});
        CHECK(r.code == 0);
        CHECK(r.out.find("t1^4 + 4 t1^2 t2 + 2 t2^2 + 4 t1 t3 + 4 t4") != std::string::npos);
    }

    TEST_CASE("fit emits JSON by default") {
        auto r = invoke({"fit", "--mode", "f", "--values", "1,2,3,4,5,6"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["schema_version"] == 1);
        CHECK(j["command"] == "fit");
        CHECK(j["core"] == nlohmann::json::array({2, -1}));
        CHECK(j["terminating"] == true);
        CHECK(j["minimal"] == true);
    }

    TEST_CASE("gfp json and csv") {
        auto j = invoke({"gfp", "--core", "1,1", "--n", "6", "--format", "json"});
        REQUIRE(j.code == 0);
        auto doc = nlohmann::json::parse(j.out);
        CHECK(doc["schema_version"] == 1);
        auto c = invoke({"gfp", "--core", "1,1", "--n", "6", "--format", "csv"});
        CHECK(c.code == 0);
        CHECK(c.out.find("13") != std::string::npos);
    }

    TEST_CASE("ramify") {
        auto r = invoke({"ramify", "--core", "1,1", "--prime", "5", "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["delta"] == -5);
        CHECK(j["agree"] == true);
    }

    TEST_CASE("exit codes") {
        CHECK(invoke({"window", "--core", "1,0", "--from", "-3", "--to", "2"}).code == 1);
        CHECK(invoke({"wip", "--k", "x"}).code == 2);
        CHECK(invoke({"nosuch"}).code == 2);
        CHECK(invoke({"period", "--core", "1,1", "--prime", "4"}).code == 1);
        auto bad = invoke({"fit", "--mode", "g", "--values", "1,2,4,8"});
        CHECK(bad.code == 1);
        CHECK(bad.err.rfind("error:", 0) == 0);
    }

    TEST_CASE("family catalog") {
        auto r = invoke({"family", "--name", "pell", "--n", "4", "--format", "json"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["f_values"] == nlohmann::json::array({1, 2, 5, 12, 29}));
    }
}

TEST_SUITE("cli") {
    TEST_CASE("fit from a b-file skips G_0") {
        auto r = invoke({"fit", "--mode", "g", "--bfile", std::string(ISOBARIC_DATA_DIR) + "/perrin.txt", "--format", "text"});
        CHECK(r.code == 0);
        CHECK(r.out.find("core: [0,1,1]") != std::string::npos);
        CHECK(invoke({"fit", "--mode", "f", "--bfile", "/nonexistent"}).code == 2);
    }
}
