#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "yw/cli.hpp"

using namespace yw;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "yw");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("verify A2") {
    auto r = call({"verify", "A", "2", "--lambda", "1,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("nodes: 3 ") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == 2);
    CHECK(call({"verify", "A", "2", "--lambda", "1,0,0"}).code == 2);
    CHECK(call({"verify", "D", "3", "--lambda", "1,0,0"}).code == 2);
    CHECK(call({"verify", "Q", "3", "--lambda", "1,0,0"}).code == 2);
    CHECK(call({"verify", "A", "2", "--lambda", "1,-1"}).code == 2);
}

TEST_CASE("gen refuses beyond the cap") {
    auto r = call({"gen", "B", "3", "--lambda", "9,9,9"});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
}

TEST_CASE("gen writes json and export reads it back") {
    auto dir = std::filesystem::temp_directory_path() / "yw_cli_test";
    std::filesystem::create_directories(dir);
    auto json = (dir / "g.json").string();
    CHECK(call({"gen", "C", "3", "--lambda", "0,1,0", "--out", json}).code == 0);
    auto r = call({"export", "--in", json, "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("digraph crystal {", 0) == 0);
    auto s = call({"export", "C", "3", "--lambda", "0,1,0", "--format", "dot"});
    CHECK(s.out == r.out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("hl names the level-one weight") {
    auto r = call({"hl", "B", "3", "--lambda", "1,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Lambda = Lambda_3") != std::string::npos);
}

TEST_CASE("fixtures") {
    auto files = fixture_files(default_fixture_dir());
    CHECK(files.size() >= 4);
    for (auto& p : files) {
        std::ifstream in(p);
        auto j = nlohmann::ordered_json::parse(in);
        auto o = check_fixture(j);
        CAPTURE(p);
        CHECK(o.pass);
    }
    CHECK(oracle_cases().size() == 16);
}
