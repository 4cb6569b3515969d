// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any failure.
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "yw/cli.hpp"

using namespace yw;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    failures += !ok;
}

std::vector<int> period_counts(const Pattern& p, int col, int start) {
    std::vector<int> counts(p.n() + 1, 0);
    for (auto c : p.item_colors(col, {start + p.period(), Top::None})) ++counts[c];
    for (auto c : p.item_colors(col, {start, Top::None})) --counts[c];
    return counts;
}

} // namespace

int main() {
    int threads = resolve_threads(0);

    // 1-3 and 6 share one generation per oracle context
    bool dim_ok = true, weights_ok = true, closure_ok = true, axioms_ok = true;
    std::ostringstream dim_bad, wt_bad, cl_bad, ax_bad;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& c : oracle_cases()) {
        auto g = generate(make_context(c.family, c.n, c.lambda), {threads, 1000000});
        auto rep = verify(g, threads);
        if (!rep.dimension_ok) dim_ok = false, dim_bad << " " << c.label;
        if (!rep.weight_mismatches.empty()) weights_ok = false, wt_bad << " " << c.label;
        if (!rep.closure_violations.empty() || rep.sources != 1 || rep.sinks != 1 || !rep.source_is_H ||
            !rep.sink_is_L)
            closure_ok = false, cl_bad << " " << c.label;
        if (!rep.axiom_violations.empty() || !rep.string_violations.empty() || !rep.connected)
            axioms_ok = false, ax_bad << " " << c.label;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream timing;
    timing << oracle_cases().size() << " contexts in " << secs << " s";
    if (!dim_ok) timing << ";" << dim_bad.str();
    report(1, dim_ok && secs < 60.0, "node count equals the Weyl dimension, under 60 s", timing.str());
    report(2, weights_ok, "weight multiplicities match Freudenthal", wt_bad.str());
    report(3, closure_ok, "closure under f/e, unique e-killed node H and f-killed node L", cl_bad.str());

    // 4: worked examples
    {
        bool ok = true;
        int walls = 0;
        std::ostringstream bad;
        auto files = fixture_files(default_fixture_dir());
        std::set<std::string> want{"example_2_4.json", "example_2_5.json", "example_2_9.json", "example_2_13.json"};
        for (const auto& p : files) {
            auto name = p.substr(p.find_last_of('/') + 1);
            if (!want.erase(name)) continue;
            std::ifstream in(p);
            auto o = check_fixture(nlohmann::ordered_json::parse(in));
            walls += static_cast<int>(o.lines.size());
            if (!o.pass) ok = false, bad << " " << name;
        }
        for (auto& m : want) ok = false, bad << " missing " << m;
        report(4, ok, "worked examples reproduce verdicts and tags", std::to_string(walls) + " walls" + bad.str());
    }

    // 5: B3 lambda_3
    {
        auto ctx = make_context(Family::B, 3, {0, 0, 1});
        auto F = enumerate_F(ctx);
        auto comp = reachable(ctx, 100000);
        std::set<std::vector<int>> inF;
        for (auto& w : F) inF.insert(fills(w));
        bool ok = F.size() == 8;
        for (auto& w : comp) ok = ok && inF.count(fills(w)) && member(ctx, w).ok;
        report(5, ok, "B3 lambda_3: unrestricted component lies in F and is accepted",
               "|F| = " + std::to_string(F.size()) + ", component " + std::to_string(comp.size()));
    }

    report(6, axioms_ok, "crystal axioms, colour degree <= 1, connectivity", ax_bad.str());

    // 7: delta-period colour counts
    {
        bool ok = true;
        std::ostringstream bad;
        int checked = 0;
        for (auto t : {AffineType::A1, AffineType::A2tw, AffineType::B1, AffineType::D1}) {
            for (int n : {3, 4, 5, 6}) {
                if (t == AffineType::D1 && n < 4) continue;
                std::vector<int> lams{0, 1};
                if (t == AffineType::A1 || t == AffineType::B1) lams.push_back(n);
                if (t == AffineType::D1) lams.insert(lams.end(), {n - 1, n});
                for (int lam : lams) {
                    auto p = Pattern::make(t, n, lam);
                    for (int col : {0, 1})
                        for (int start : {0, 1, 5}) {
                            ++checked;
                            if (period_counts(*p, col, start) != p->datum().marks) {
                                ok = false;
                                bad << " " << affine_name(t) << n << "/L" << lam << "/col" << col;
                            }
                        }
                }
            }
        }
        report(7, ok, "one delta-period carries the Kac marks", std::to_string(checked) + " windows" + bad.str());
    }

    // 8: determinism
    {
        auto ctx = std::make_shared<const LambdaContext>(make_context(Family::C, 3, {0, 1, 1}));
        auto a = export_json(generate(ctx, {1, 1000000}));
        auto b = export_json(generate(ctx, {8, 1000000}));
        auto da = export_dot(generate(ctx, {1, 1000000}));
        auto db = export_dot(generate(ctx, {8, 1000000}));
        report(8, a == b && da == db, "C3 w2+w3 export identical with 1 and 8 threads",
               std::to_string(a.size()) + " bytes json");
    }

    return failures ? 1 : 0;
}
