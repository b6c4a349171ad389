#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "posetcode/cli.hpp"
#include "posetcode/errors.hpp"
#include "posetcode/json_io.hpp"

using namespace posetcode;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("predict and code commands") {
    const auto p = run({"predict", "--shrub", "4", "--q", "5"});
    REQUIRE(p.code == cli::ok);
    const auto pj = Json::parse(p.out);
    CHECK(pj["d"] == 108);
    CHECK(pj["n"] == 256);
    CHECK(pj["k"] == 9);
    CHECK(pj["exponents"]["q-1"] == 1);
    CHECK(pj["exponents"]["q-2"] == 3);

    const auto c = run({"code", "--tree", "0,1,1", "--q", "4", "--exact", "--no-timing"});
    REQUIRE(c.code == cli::ok);
    const auto cj = Json::parse(c.out);
    CHECK(cj["n"] == 27);
    CHECK(cj["k"] == 5);
    CHECK(cj["d"] == 12);
    CHECK(cj["rate"] == "5/27");
    CHECK(cj["modulus"] == "t^2+t+1");
    CHECK_FALSE(cj.contains("seconds"));

    const auto b = Json::parse(run({"predict", "--json", temp_file("pc_p1.json",
        R"({"m":4,"covers":[[1,3],[1,4],[2,3],[2,4]]})").string(), "--q", "5", "--method", "bipartite"}).out);
    CHECK(b["d"] == 144);
    CHECK(b["k"] == 7);
    CHECK(b["method"] == "bipartite-theorem");
}

TEST_CASE("bipartite report") {
    const auto r = run({"report", "--bipartite-all", "--m", "2", "--q", "5", "--no-timing", "--format", "csv"});
    REQUIRE(r.code == cli::ok);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "poset_id,m,ideals,q,n,k,d_exact,d_theorem,method,seconds");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].rfind("P1,4,7,5,256,7,144,144,", 0) == 0);
    CHECK(rows[1].rfind("P2,4,8,5,256,8,144,144,", 0) == 0);
    CHECK(rows[2].rfind("P3,4,9,5,256,9,144,144,", 0) == 0);

    const auto md = run({"report", "--trees", "3", "--q", "4", "--no-timing", "--format", "markdown"});
    CHECK(md.code == cli::ok);
    CHECK(md.out.find("| poset_id |") != std::string::npos);
    const auto js = Json::parse(run({"report", "--chain", "2", "--q", "5", "--format", "json"}).out);
    REQUIRE(js.is_array());
    CHECK(js[0]["d_exact"] == 12);
}

TEST_CASE("reports are identical across worker counts") {
    const std::vector<std::string> base{"report", "--trees", "4", "--q", "4", "--no-timing", "--format", "csv"};
    auto one = base, eight = base;
    one.insert(one.end(), {"--workers", "1"});
    eight.insert(eight.end(), {"--workers", "8"});
    const auto a = run(one), b = run(eight);
    CHECK(a.code == cli::ok);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("exit codes") {
    CHECK(run({"code", "--shrub", "5", "--q", "4", "--exact"}).code == cli::guard_violation);
    CHECK(run({"code", "--shrub", "5", "--q", "4", "--exact", "--max-search-cost", "10"}).err.find(
              "search_too_large") != std::string::npos);
    CHECK(run({"predict", "--chain", "3", "--q", "6"}).code == cli::input_error);
    CHECK(run({"predict", "--q", "5"}).code == cli::input_error);
    CHECK(run({"predict", "--chain", "3", "--shrub", "3", "--q", "5"}).code == cli::input_error);
    CHECK(run({"poset", "--json", "/nonexistent/poset.json"}).code == cli::input_error);
    const auto cyclic = temp_file("pc_cycle.json", R"({"m":2,"covers":[[1,2],[2,1]]})");
    CHECK(run({"poset", "--json", cyclic.string()}).code == cli::input_error);
    const auto broken = temp_file("pc_broken.json", "{not json");
    CHECK(run({"poset", "--json", broken.string()}).code == cli::input_error);
    CHECK(run({"predict", "--antichain", "2", "--q", "5", "--method", "tree"}).code == cli::input_error);
    CHECK(run({"nonsense"}).code == cli::input_error);
    CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("poset, polytope, verify and lemmas") {
    const auto p = Json::parse(run({"poset", "--ordinal-sum", "antichain:2", "antichain:2", "--hibi"}).out);
    CHECK(p["upper_ideal_count"] == 7);
    CHECK(p["upper_ideals"].size() == 7);
    const auto poly = run({"polytope", "--chain", "2", "--poset-polytope", "--facets"});
    CHECK(poly.code == cli::ok);
    CHECK(Json::parse(poly.out).contains("vertices"));
    const auto v = run({"verify", "--max-size", "3", "--q", "4", "--tree-max", "4"});
    CHECK(v.code == cli::ok);
    CHECK(v.err.find("0 mismatches") != std::string::npos);
    const auto l = run({"lemmas", "--max-size", "3", "--ordinal-max", "4"});
    CHECK(l.code == cli::ok);

    const auto out = std::filesystem::temp_directory_path() / "pc_out.json";
    std::filesystem::remove(out);
    CHECK(run({"--out", out.string(), "predict", "--chain", "3", "--q", "5"}).code == cli::ok);
    std::ifstream in(out);
    CHECK(Json::parse(in)["d"] == 48);
}

TEST_CASE("poset specs") {
    CHECK(cli::parse_poset_spec("chain:3") == chain(3));
    CHECK(cli::parse_poset_spec("antichain:2") == antichain(2));
    CHECK(cli::parse_poset_spec("shrub:4") == shrub(4));
    CHECK(cli::parse_poset_spec("tree:0,1,1") == shrub(3));
    CHECK_THROWS_AS(cli::parse_poset_spec("chain:x"), InvalidInputError);
    CHECK_THROWS_AS(cli::parse_poset_spec("chain:0"), InvalidInputError);
}
