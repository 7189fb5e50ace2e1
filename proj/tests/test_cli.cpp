#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "posetcode/ag.hpp"
#include "posetcode/codes.hpp"
#include "posetcode/error.hpp"
#include "posetcode/golden.hpp"
#include "posetcode/io.hpp"

using namespace posetcode;
namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "posetcode-tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("rs code json round trip") {
    const auto F = gf::Field::make(2, 3);
    for (auto b : std::vector<std::optional<unsigned>>{std::nullopt, 1u, 2u}) {
        const auto code = codes::build_code({F, {gf::Elem{0}, gf::Elem{3}, gf::Elem{6}}, 2, 5, b});
        const auto j = io::rs_code_to_json(code);
        const auto back = io::rs_code_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back.code.generator == code.code.generator);
        CHECK(back.code.metric.describe() == code.code.metric.describe());
        CHECK(io::rs_code_to_json(back) == j);
    }
    auto j = io::rs_code_to_json(codes::build_code({F, {gf::Elem{0}, gf::Elem{3}}, 2, 3, 1u}));
    j["points"] = {0, 0};
    CHECK_THROWS_AS(io::rs_code_from_json(j), Error);
    CHECK_THROWS_AS(io::rs_code_from_json(nlohmann::json::parse("{\"field\": 3}")), Error);
}

TEST_CASE("ag code json round trip") {
    const auto F = gf::Field::make(7, 1);
    const auto places = ag::parse_places(*F, "1,2,inf");
    const ag::AGCodeSpec spec{F, places, ag::parse_divisor(*F, "P1:2,P3:1,A5:-1", places), 2, true};
    const auto code = ag::build_ag_code(spec);
    const auto j = io::ag_code_to_json(code);
    const auto back = io::ag_code_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.code.generator == code.code.generator);
    CHECK(back.spec.G == code.spec.G);
    CHECK(io::ag_code_to_json(back) == j);
}

TEST_CASE("paper-example command") {
    const auto r = run({"paper-example"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("weight enumerator: 1 + 4x^3 + 20x^4") != std::string::npos);
    CHECK(r.out.find("length=4 dim=2 min_distance=3") != std::string::npos);
    CHECK(r.out.find("golden table: match") != std::string::npos);

    const auto csv = run({"paper-example", "--format", "csv"});
    CHECK(csv.out == std::string(data::kPaperExampleGolden));

    const auto js = run({"paper-example", "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["rows"].size() == 25);
    CHECK(j["min_distance"] == 3);
}

TEST_CASE("tampered golden table is rejected") {
    std::string text(data::kPaperExampleGolden);
    const auto pos = text.find("2x^2 + x + 1,3 3 3;4 2 2,4");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 26, "2x^2 + x + 1,3 3 3;4 2 2,3");
    const auto path = scratch("tampered.csv");
    std::ofstream(path) << text;
    const auto r = run({"paper-example", "--golden", path.string()});
    CHECK(r.status == cli::kPropertyFailure);
    CHECK(r.err.find("GoldenMismatch") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).status == cli::kParameterError);
    CHECK(run({"code", "build", "--q", "6", "--points", "0,1", "--s", "2", "--t", "2"}).status ==
          cli::kParameterError);
    CHECK(run({"code", "build", "--q", "5", "--points", "1,3,4", "--s", "2", "--t", "9", "--b-row", "1"}).status ==
          cli::kParameterError);
    CHECK(run({"code", "compare", "--q", "7", "--points", "0,1,2,3", "--s", "4", "--t", "12", "--budget", "1000"})
              .status == cli::kBudgetExceeded);
    CHECK(run({"--help"}).status == cli::kOk);
}

TEST_CASE("code build, weights and check-mds through files") {
    const auto path = scratch("code.json");
    auto r = run({"--out", path.string(), "code", "build", "--q", "5", "--points", "1,3,4", "--s", "2", "--t", "4",
                  "--b-row", "1"});
    REQUIRE(r.status == cli::kOk);
    CHECK(r.out.empty());
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["metric"]["name"] == "U(2,3,1)");

    r = run({"code", "weights", path.string(), "--format", "csv"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out == "weight,count\n0,1\n3,4\n4,20\n");
    r = run({"code", "weights", path.string()});
    CHECK(r.out == "1 + 4x^3 + 20x^4\n");
    r = run({"code", "check-mds", path.string(), "--expect-mds"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("slack=0 MDS") != std::string::npos);
    r = run({"code", "weights", (scratch("missing.json")).string()});
    CHECK(r.status == cli::kParameterError);
}

TEST_CASE("worker count does not change output") {
    const auto path = scratch("code8.json");
    REQUIRE(run({"--out", path.string(), "code", "build", "--q", "2^3", "--points", "0,1,2,3", "--s", "3", "--t",
                 "8", "--b-row", "2"})
                .status == cli::kOk);
    const auto a = run({"--workers", "1", "code", "weights", path.string(), "--format", "json"});
    const auto b = run({"--workers", "4", "code", "weights", path.string(), "--format", "json"});
    CHECK(a.status == cli::kOk);
    CHECK(a.out == b.out);
    const auto sa = run({"--workers", "1", "sweep", "--grid", "nrt", "--fields", "3,4"});
    const auto sb = run({"--workers", "3", "sweep", "--grid", "nrt", "--fields", "3,4"});
    CHECK(sa.status == cli::kOk);
    CHECK(sa.out == sb.out);
}

TEST_CASE("compare command") {
    const auto r = run({"code", "compare", "--q", "5", "--points", "1,3,4", "--s", "2", "--t", "4"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("C(s,r),6,4,3,2/3,1/2") != std::string::npos);
    CHECK(r.out.find("U(s,r,1),4,2,3,1/2,3/4") != std::string::npos);
}

TEST_CASE("poset show") {
    auto r = run({"poset", "show", "--s", "3", "--r", "3", "--b-row", "2"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("4 -> 7") != std::string::npos);
    r = run({"poset", "show", "--s", "2", "--r", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["edges"].size() == 3);
}

TEST_CASE("ag build and verify") {
    const auto path = scratch("ag.json");
    auto r = run({"--out", path.string(), "ag", "build", "--q", "7", "--places", "1,2,3", "--divisor",
                  "P1:2,P2:2,P3:2,Pinf:-2", "--s", "3"});
    REQUIRE(r.status == cli::kOk);
    r = run({"ag", "verify", path.string()});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("d >= 5 holds") != std::string::npos);
    CHECK(r.out.find("(MDS)") != std::string::npos);
    r = run({"code", "weights", path.string()});
    CHECK(r.status == cli::kOk);
}

TEST_CASE("mds-ineq command") {
    auto r = run({"ag", "mds-ineq", "--g", "2", "--r", "2", "--s", "3", "--k", "1", "--h", "1000", "--Ak", "5"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("= 20") != std::string::npos);
    CHECK(r.out.find("verdict: true") != std::string::npos);
    r = run({"ag", "mds-ineq", "--g", "1", "--r", "2", "--s", "3", "--k", "0", "--h", "10", "--Ak", "1", "--format",
             "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == false);
    CHECK(j["elliptic_conflict"] == true);
}
