#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "yw/graphgen.hpp"

namespace yw {

struct OracleCase {
    Family family;
    int n;
    DominantWeight lambda;
    std::string label;
};

// The contexts checked against the Weyl and Freudenthal oracles.
std::vector<OracleCase> oracle_cases();

struct FixtureOutcome {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines; // one per checked wall
};

FixtureOutcome check_fixture(const nlohmann::ordered_json& j);
std::vector<std::string> fixture_files(const std::string& dir);
std::string default_fixture_dir();

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace yw
