#include "yw/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace yw {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DominantWeight parse_lambda(const std::string& s, int n) {
    DominantWeight out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("--lambda expects comma-separated nonnegative integers, got '" + s + "'");
        out.push_back(std::stoi(item));
    }
    if (static_cast<int>(out.size()) != n)
        throw UsageError("--lambda has " + std::to_string(out.size()) + " entries, rank is " + std::to_string(n));
    return out;
}

LambdaContext context_or_usage(const std::string& fam, int n, const std::string& lam) {
    Family f;
    try {
        f = parse_family(fam);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto lambda = parse_lambda(lam, n);
    try {
        return make_context(f, n, lambda);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string omega_text(const LambdaContext& c) {
    std::ostringstream os;
    bool first = true;
    for (int i : c.dec.omegas) {
        os << (first ? "" : " + ") << "w" << i;
        first = false;
    }
    if (c.family == Family::B && c.dec.spin.first) os << (first ? "" : " + ") << "l" << c.n, first = false;
    if (c.family == Family::D && c.dec.spin.first) os << (first ? "" : " + ") << "l" << c.n - 1, first = false;
    if (c.family == Family::D && c.dec.spin.second) os << (first ? "" : " + ") << "l" << c.n, first = false;
    if (first) os << "0";
    return os.str();
}

// one text row per half unit; '#' full, 'b' back half only, 'f' front half only
std::string sketch(const Wall& w) {
    const Pattern& p = *w.pat;
    int m = std::max(1, w.size());
    int top = 0;
    std::vector<std::pair<int, int>> hs;
    for (int k = m - 1; k >= 0; --k) {
        hs.push_back(p.heights(k, w.at(k)));
        top = std::max({top, hs.back().first, hs.back().second});
    }
    std::ostringstream os;
    for (int lvl = top; lvl >= 1; --lvl) {
        os << "  ";
        for (auto [b, f] : hs) os << (b >= lvl && f >= lvl ? '#' : b >= lvl ? 'b' : f >= lvl ? 'f' : '.');
        os << "\n";
    }
    os << "  ";
    for (int k = m - 1; k >= 0; --k) os << (k % 10);
    os << "  (column 0 rightmost)\n";
    return os.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << data;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << data;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

BigInt parse_cap(const std::string& s) {
    try {
        BigInt v(s);
        if (v < 1) throw UsageError("--cap must be positive");
        return v;
    } catch (const std::runtime_error&) {
        throw UsageError("--cap expects an integer, got '" + s + "'");
    }
}

} // namespace

std::vector<OracleCase> oracle_cases() {
    return {
        {Family::A, 2, {1, 0}, "A2 w1"},
        {Family::A, 2, {1, 1}, "A2 w1+w2"},
        {Family::A, 4, {0, 1, 1, 0}, "A4 w2+w3"},
        {Family::C, 3, {1, 0, 0}, "C3 w1"},
        {Family::C, 3, {0, 1, 0}, "C3 w2"},
        {Family::C, 3, {0, 1, 1}, "C3 w2+w3"},
        {Family::B, 3, {1, 0, 0}, "B3 w1"},
        {Family::B, 3, {0, 1, 0}, "B3 w2"},
        {Family::B, 3, {0, 0, 2}, "B3 w3=2l3"},
        {Family::B, 3, {0, 0, 1}, "B3 l3"},
        {Family::B, 3, {1, 0, 1}, "B3 w1+l3"},
        {Family::D, 4, {1, 0, 0, 0}, "D4 w1"},
        {Family::D, 4, {0, 1, 0, 0}, "D4 w2"},
        {Family::D, 4, {0, 0, 1, 0}, "D4 l3"},
        {Family::D, 4, {0, 0, 0, 1}, "D4 l4"},
        {Family::D, 4, {0, 0, 1, 1}, "D4 l3+l4"},
    };
}

FixtureOutcome check_fixture(const nlohmann::ordered_json& j) {
    FixtureOutcome out;
    out.name = j.value("name", std::string("fixture"));
    LambdaContext ctx = context_from_json(j.at("context"));
    int idx = 0;
    for (auto& item : j.at("walls")) {
        ++idx;
        Wall w = wall_from_json(item.at("wall"), ctx.pat);
        bool want = item.at("member").get<bool>();
        std::string tag = item.value("tag", std::string());
        auto got = member(ctx, w);
        bool ok = got.ok == want && got.tag == tag;
        std::ostringstream os;
        os << out.name << " wall " << idx << ": expected " << (want ? "member" : "reject " + tag) << ", got "
           << (got.ok ? "member" : "reject " + got.tag) << (ok ? "  ok" : "  MISMATCH");
        out.lines.push_back(os.str());
        out.pass = out.pass && ok;
    }
    return out;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("YW_FIXTURES")) return env;
#ifdef YW_FIXTURE_DIR
    return YW_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

std::vector<std::string> fixture_files(const std::string& dir) {
    std::vector<std::string> files;
    for (auto& e : std::filesystem::directory_iterator(dir)) {
        auto name = e.path().filename().string();
        if (e.is_regular_file() && name.rfind("example_", 0) == 0 && e.path().extension() == ".json")
            files.push_back(e.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Young wall realizations of classical crystals"};
    app.require_subcommand(1);

    std::string fam, lam, path, format = "json", cap_text = "1000000", in_path, dir;
    int rank = 0, threads = 1;

    auto add_ctx = [&](CLI::App* sub) {
        sub->add_option("family", fam, "A, B, C or D")->required();
        sub->add_option("rank", rank, "rank n")->required();
        sub->add_option("--lambda", lam, "coefficients c_1,...,c_n of the fundamental weights")->required();
    };
    auto add_gen = [&](CLI::App* sub) {
        sub->add_option("--cap", cap_text, "refuse dimensions above this (default 1000000)");
        sub->add_option("--threads", threads, "worker threads (0: all cores; YW_THREADS overrides)");
    };

    auto* gen = app.add_subcommand("gen", "generate the crystal graph");
    add_ctx(gen);
    add_gen(gen);
    gen->add_option("--out", path, "output file (default stdout)");
    gen->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    auto* ver = app.add_subcommand("verify", "generate and verify against the Lie-theoretic oracles");
    add_ctx(ver);
    add_gen(ver);

    auto* hl = app.add_subcommand("hl", "print H and L");
    add_ctx(hl);

    auto* fx = app.add_subcommand("fixtures", "run the example fixtures and the oracle suite");
    fx->add_option("--dir", dir, "fixture directory");
    add_gen(fx);

    auto* ex = app.add_subcommand("export", "export a graph as DOT or JSON");
    ex->add_option("family", fam, "A, B, C or D");
    ex->add_option("rank", rank, "rank n");
    ex->add_option("--lambda", lam, "coefficients c_1,...,c_n");
    ex->add_option("--in", in_path, "read a graph JSON instead of generating");
    ex->add_option("--out", path, "output file (default stdout)");
    ex->add_option("--format", format, "dot or json")->check(CLI::IsMember({"json", "dot"}));
    add_gen(ex);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        GenerateOptions opt;
        opt.cap = parse_cap(cap_text);
        opt.threads = resolve_threads(threads);

        if (*gen) {
            auto ctx = context_or_usage(fam, rank, lam);
            auto g = generate(ctx, opt);
            write_output(path, format == "dot" ? export_dot(g) : export_json(g), out);
            err << "generated " << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
            return 0;
        }
        if (*ver) {
            auto ctx = context_or_usage(fam, rank, lam);
            out << "decomposition: " << omega_text(ctx) << ", Lambda = Lambda_" << ctx.Lambda << "\n";
            auto g = generate(ctx, opt);
            auto rep = verify(g, opt.threads);
            out << rep.text();
            return rep.pass() ? 0 : 1;
        }
        if (*hl) {
            auto ctx = context_or_usage(fam, rank, lam);
            out << "context: " << family_char(ctx.family) << ctx.n << " lambda=" << nlohmann::json(ctx.lambda).dump()
                << "\n";
            out << "decomposition: " << omega_text(ctx) << "\n";
            out << "Lambda = Lambda_" << ctx.Lambda << " (" << affine_name(ctx.pat->type()) << ")\n";
            out << "H: " << wall_to_json(ctx.H).dump() << "\n" << sketch(ctx.H);
            out << "L: " << wall_to_json(ctx.L).dump() << "\n" << sketch(ctx.L);
            return 0;
        }
        if (*fx) {
            if (dir.empty()) dir = default_fixture_dir();
            bool all = true;
            auto files = fixture_files(dir);
            if (files.empty()) {
                err << "no fixtures found in " << dir << "\n";
                return 1;
            }
            for (auto& file : files) {
                auto res = check_fixture(nlohmann::ordered_json::parse(read_file(file)));
                for (auto& l : res.lines) out << l << "\n";
                all = all && res.pass;
            }
            for (auto& c : oracle_cases()) {
                auto t0 = std::chrono::steady_clock::now();
                auto g = generate(make_context(c.family, c.n, c.lambda), opt);
                auto rep = verify(g, opt.threads);
                double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                out << "oracle " << c.label << ": " << rep.node_count << " nodes, dim " << rep.weyl_dim << ", "
                    << (rep.pass() ? "PASS" : "FAIL") << " (" << static_cast<long>(ms) << " ms)\n";
                all = all && rep.pass();
            }
            out << (all ? "all fixtures passed" : "fixture failures") << "\n";
            return all ? 0 : 1;
        }
        if (*ex) {
            CrystalGraph g;
            if (!in_path.empty()) {
                try {
                    g = import_json(read_file(in_path));
                } catch (const std::invalid_argument& e) {
                    err << e.what() << "\n";
                    return 1;
                }
            } else {
                if (fam.empty() || lam.empty()) throw UsageError("export needs FAMILY RANK --lambda or --in FILE");
                g = generate(context_or_usage(fam, rank, lam), opt);
            }
            if (ex->count("--format") == 0) format = "dot";
            write_output(path, format == "dot" ? export_dot(g) : export_json(g), out);
            return 0;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace yw
