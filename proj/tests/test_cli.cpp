#include "doctest.h"

#include "bentice/cli.hpp"

#include <sstream>

using namespace bentice;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json report(const Result& r) {
    json j = json::parse(r.out);
    j.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("documented examples") {
        auto okada = call({"verify", "okada", "--family", "B", "--n", "2"});
        CHECK(okada.code == cli::ok);
        CHECK(json::parse(okada.out)["verdict"] == "pass");

        auto count = call({"enumerate", "--family", "A", "--lambda", "2,1", "--emit", "count"});
        CHECK(count.code == cli::ok);
        CHECK(count.out == "2\n");

        auto latex = call({"partition", "--family", "B", "--lambda", "1", "--scheme", "deformation", "--emit", "latex"});
        CHECK(latex.code == cli::ok);
        CHECK(latex.out == "1 - t_{1} x_{1}\n");
    }

    TEST_CASE("report schema") {
        auto r = call({"partition", "--family", "C", "--lambda", "2,1", "--scheme", "generic"});
        REQUIRE(r.code == cli::ok);
        auto j = json::parse(r.out);
        for (auto k : {"verb", "inputs", "verdict", "data", "elapsed_ms"}) CHECK(j.contains(k));
        CHECK(j["verb"] == "partition");
    }

    TEST_CASE("exit codes") {
        CHECK(call({"enumerate", "--family", "B", "--lambda", "2,2"}).code == cli::input_error);
        CHECK(call({"enumerate", "--family", "Q", "--lambda", "2,1"}).code == cli::input_error);
        CHECK(call({"frobnicate"}).code == cli::input_error);
        CHECK(call({"enumerate", "--family", "B", "--lambda", "9,1"}).code == cli::cap_exceeded);
        CHECK(call({"enumerate", "--family", "B", "--lambda", "3,2,1", "--max-n", "2"}).code == cli::cap_exceeded);
        auto fail = call({"verify", "character", "--family", "D", "--lambda", "3,2"});
        CHECK(fail.code == cli::verification_failed);
        CHECK(json::parse(fail.out)["verdict"] == "fail");
        auto bad = call({"enumerate", "--family", "B", "--lambda", "2,2"});
        CHECK(json::parse(bad.out)["verdict"] == "input_error");
        CHECK(bad.out.find("strict") != std::string::npos);
    }

    TEST_CASE("every check runs") {
        std::vector<std::vector<std::string>> runs = {
            {"verify", "ybe"},
            {"verify", "bend", "--family", "C", "--n", "2"},
            {"verify", "caduceus", "--family", "Bstar", "--n", "2"},
            {"verify", "fish", "--family", "B", "--variant", "B"},
            {"verify", "fish", "--family", "D", "--n", "2"},
            {"verify", "jellyfish", "--family", "BC", "--n", "2"},
            {"verify", "divisibility", "--family", "B", "--lambda", "3,1", "--scheme", "deformation"},
            {"verify", "rho", "--family", "D", "--n", "2"},
            {"verify", "bijection", "--n", "2"},
            {"verify", "character", "--family", "Cstar", "--lambda", "3,1"},
            {"verify", "tokuyama", "--lambda", "3,1"},
            {"asm", "--family", "B", "--lambda", "2,1", "--emit", "count"},
            {"character", "--type", "C", "--mu", "1,0"},
            {"enumerate", "--family", "C", "--lambda", "1", "--emit", "tikz"},
        };
        for (auto& a : runs) {
            CAPTURE(a[0] + " " + (a.size() > 1 ? a[1] : ""));
            CHECK(call(a).code == cli::ok);
        }
    }

    TEST_CASE("reports are deterministic") {
        for (auto a : std::vector<std::vector<std::string>>{
                 {"enumerate", "--family", "Bstar", "--lambda", "2,1"},
                 {"partition", "--family", "BC", "--lambda", "3,1", "--scheme", "okada", "--workers", "3"},
                 {"verify", "divisibility", "--family", "C", "--lambda", "3,2", "--seed", "7"},
                 {"asm", "--family", "C", "--lambda", "2,1"},
                 {"character", "--family", "B", "--lambda", "3,1"}}) {
            auto r1 = call(a), r2 = call(a);
            CHECK(report(r1) == report(r2));
            CHECK(report(r1).dump() == report(r2).dump());
        }
    }

    TEST_CASE("run config echo") {
        cli::RunConfig c;
        c.verb = "enumerate";
        c.family = "A";
        c.lambda = "1";
        c.emit = "count";
        std::ostringstream out, err;
        CHECK(cli::run(c, out, err) == cli::ok);
        CHECK(out.str() == "1\n");
        CHECK(c.to_json()["verb"] == "enumerate");
    }
}
