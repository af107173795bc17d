#include <doctest.h>

#include "causalcoh/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace causalcoh;
using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string text;
    Json json() const { return Json::parse(text); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    const int code = cli::run(args, out);
    return {code, out.str()};
}

std::vector<int> dims(const Json& rows, const std::string& support) {
    std::vector<int> out;
    for (const auto& r : rows)
        if (r["support"] == support) out.push_back(r["dim"].get<int>());
    return out;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("fnv1a digest") {
    CHECK(cli::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("derham on the 3-sphere") {
    const auto r = run({"derham", "--preset", "sphere", "--m", "3", "--n", "4", "--format", "json"});
    REQUIRE(r.code == cli::ok);
    const auto j = r.json();
    CHECK(j["schema"] == cli::kSchema);
    CHECK(j["seed"].is_null());
    CHECK(j["command"][0] == "derham");
    CHECK(dims(j["results"]["table"], "sc") == std::vector<int>{1, 0, 0, 1, 0});
    CHECK(dims(j["results"]["table"], "tc") == std::vector<int>{0, 1, 0, 0, 1});
    CHECK(dims(j["results"]["solutions"], "sc") == std::vector<int>{1, 1, 0, 1, 1});
    CHECK(j["results"]["audit"]["passed"] == true);
    for (const auto& row : j["results"]["table"]) {
        CHECK(row.size() == 3);
        CHECK(row["degree"].get<int>() >= 0);
        CHECK(row["degree"].get<int>() <= 4);
    }
}

TEST_CASE("derham from a triangulation file") {
    const auto path = write_temp("causalcoh_test_s2.json", R"({"vertices": 4, "facets": [[1,2,3],[0,2,3],[0,1,3],[0,1,2]]})");
    const auto r = run({"derham", "--triangulation", path.string()});
    REQUIRE(r.code == cli::ok);
    CHECK(r.json()["results"]["n"] == 3);
    CHECK(dims(r.json()["results"]["table"], "sc") == std::vector<int>{1, 0, 1, 0});
    // The digest covers file contents, not only the path.
    std::ofstream(path) << R"({"vertices": 4, "facets": [[1,2,3],[0,2,3],[0,1,3],[0,1,2]] })";
    CHECK(run({"derham", "--triangulation", path.string()}).json()["inputs_digest"] != r.json()["inputs_digest"]);

    std::ofstream(path) << "{\"vertices\": 4, \"facets\": [[1,2,3]";
    const auto bad = run({"derham", "--triangulation", path.string()});
    CHECK(bad.code == cli::usage_error);
    CHECK(bad.json()["error"]["kind"] == "usage");
    std::filesystem::remove(path);
    CHECK(run({"derham", "--triangulation", path.string()}).code == cli::usage_error);
}

TEST_CASE("derham markdown layout") {
    const auto r = run({"derham", "--preset", "euclidean", "--m", "3", "--format", "md"});
    REQUIRE(r.code == cli::ok);
    CHECK(r.text.find("| sc | 0 | 0 | 0 | 1 | 0 |") != std::string::npos);
    CHECK(r.text.find("| support | 0 | 1 | 2 | 3 | 4 |") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with a diagnostic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"derham", "--preset", "klein", "--m", "2"},
             {"derham", "--preset", "sphere"},
             {"derham", "--preset", "sphere", "--m", "3", "--n", "7"},
             {"derham", "--preset", "sphere", "--m", "3", "--format", "xml"},
             {"calabi", "--background", "antiDeSitter4"},
             {"verify", "--suite", "everything"},
             {"verify", "--suite", "calabi", "--degree", "0"},
             {"hook", "--diagram", "2,,1", "--n", "4"},
             {"hook", "--diagram", "2,1", "--n", "0"},
             {"killing", "--operator", "conformal", "--degree", "1"},
         }) {
        const auto r = run(args);
        INFO(r.text);
        CHECK(r.code == cli::usage_error);
        CHECK(r.json().contains("error"));
    }
}

TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.code == cli::ok);
    CHECK(r.text.find("derham") != std::string::npos);
}

TEST_CASE("hook ranks") {
    const auto r = run({"hook", "--diagram", "2,2,1", "--n", "4"});
    REQUIRE(r.code == cli::ok);
    CHECK(r.json()["results"]["rank"] == 20);
    CHECK(run({"hook", "--diagram", "2,2,1,1", "--n", "3"}).json()["results"]["rank"] == 0);
}

TEST_CASE("calabi tables") {
    const auto m = run({"calabi", "--background", "minkowski4"});
    REQUIRE(m.code == cli::ok);
    CHECK(dims(m.json()["results"]["table"], "sc") == std::vector<int>{0, 0, 0, 10, 0});
    CHECK(m.json()["results"]["killing_dim"] == 10);

    const auto d = run({"calabi", "--background", "deSitter4"});
    CHECK(d.code == cli::audit_failure);
    CHECK(d.json()["error"]["kind"] == "indexing");
    CHECK(d.json()["error"]["candidates"].size() == 2);

    const auto forced = run({"calabi", "--background", "deSitter4", "--indexing", "shift"});
    REQUIRE(forced.code == cli::ok);
    CHECK(forced.json()["results"]["pattern_checked"] == false);
    CHECK(run({"calabi", "--indexing", "diagonal"}).code == cli::usage_error);
}

TEST_CASE("verify suites") {
    const auto c = run({"verify", "--suite", "calabi", "--background", "minkowski4", "--seed", "42", "--degree", "2", "--cases", "2"});
    CHECK(c.code == cli::ok);
    CHECK(c.json()["seed"] == 42);
    CHECK(c.json()["results"]["all_passed"] == true);

    // The stated linearization coefficient fails on de Sitter.
    const auto d = run({"verify", "--suite", "calabi", "--background", "deSitter4", "--degree", "1", "--cases", "1"});
    CHECK(d.code == cli::audit_failure);
    for (const auto& check : d.json()["results"]["checks"]) CHECK(check["passed"] == (check["name"] != "linearized-riemann"));

    CHECK(run({"verify", "--suite", "homology", "--cases", "20"}).code == cli::ok);
    CHECK(run({"verify", "--suite", "forms", "--background", "deSitter4", "--cases", "5"}).code == cli::ok);
    CHECK(run({"verify", "--suite", "young", "--cases", "3", "--format", "md"}).code == cli::ok);
}

TEST_CASE("killing dimensions") {
    const auto r = run({"killing", "--background", "deSitter4", "--operator", "killingYano", "--degree", "2"});
    REQUIRE(r.code == cli::ok);
    CHECK(r.json()["results"]["below_sufficient_degree"] == true);
    CHECK(r.json()["results"]["sufficient_degree"] == 3);
    CHECK(run({"killing", "--background", "minkowski4", "--operator", "killing", "--degree", "1"}).json()["results"]["dim"] == 10);
}

TEST_CASE("reports are byte-identical across runs") {
    const std::vector<std::string> args{"verify", "--suite", "forms", "--seed", "9", "--cases", "4"};
    CHECK(run(args).text == run(args).text);
    auto other = args;
    other[4] = "10";
    CHECK(run(other).json()["inputs_digest"] != run(args).json()["inputs_digest"]);
}
