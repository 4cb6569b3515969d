#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "yw/classical.hpp"

namespace yw {

struct CrystalGraph {
    std::shared_ptr<const LambdaContext> ctx;
    std::vector<Wall> nodes;
    std::vector<std::array<int, 3>> edges; // (u, i, v) with v = f_i(u)
    int source = -1;
    int sink = -1;
};

struct GenerateOptions {
    int threads = 1;
    BigInt cap = 1000000;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ClosureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thread count after applying the YW_THREADS override; 0 means hardware concurrency.
int resolve_threads(int requested);

CrystalGraph generate(const LambdaContext& ctx, const GenerateOptions& opt = {});
CrystalGraph generate(std::shared_ptr<const LambdaContext> ctx, const GenerateOptions& opt = {});

struct VerificationReport {
    std::string context;
    std::size_t node_count = 0;
    BigInt weyl_dim = 0;
    bool dimension_ok = false;
    std::size_t weight_count = 0;
    std::vector<std::string> weight_mismatches;
    bool connected = false;
    int sources = 0;
    int sinks = 0;
    bool source_is_H = false;
    bool sink_is_L = false;
    std::vector<std::string> closure_violations;
    std::vector<std::string> string_violations;
    std::vector<std::string> axiom_violations;

    bool pass() const;
    std::string text() const;
};

VerificationReport verify(const CrystalGraph& g, int threads = 1);

std::string export_dot(const CrystalGraph& g);
std::string export_json(const CrystalGraph& g);
CrystalGraph import_json(const std::string& text);

} // namespace yw
