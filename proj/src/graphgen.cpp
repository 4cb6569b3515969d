#include "yw/graphgen.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace yw {

namespace {

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        try {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        } catch (...) {
            std::lock_guard lk(err_mu);
            if (!err) err = std::current_exception();
            next = count;
        }
    };
    std::vector<std::thread> pool;
    int nt = static_cast<int>(std::min<std::size_t>(threads, count));
    for (int t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::string describe(const LambdaContext& c) {
    std::ostringstream os;
    os << family_char(c.family) << c.n << " lambda=(";
    for (std::size_t i = 0; i < c.lambda.size(); ++i) os << (i ? "," : "") << c.lambda[i];
    os << ")";
    return os.str();
}

std::string weight_str(const WeightVector& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

} // namespace

int resolve_threads(int requested) {
    if (const char* env = std::getenv("YW_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) requested = static_cast<int>(v);
    }
    if (requested <= 0) requested = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return requested;
}

CrystalGraph generate(const LambdaContext& ctx, const GenerateOptions& opt) {
    return generate(std::make_shared<const LambdaContext>(ctx), opt);
}

CrystalGraph generate(std::shared_ptr<const LambdaContext> ctxp, const GenerateOptions& opt) {
    const LambdaContext& ctx = *ctxp;
    BigInt dim = weyl_dimension(RootDatum::make(ctx.family, ctx.n), ctx.lambda);
    if (dim > opt.cap) {
        std::ostringstream os;
        os << "refusing " << describe(ctx) << ": dimension " << dim << " exceeds cap " << opt.cap;
        throw CapExceeded(os.str());
    }
    const int threads = std::max(1, opt.threads);
    const int n = ctx.n;

    CrystalGraph g;
    g.ctx = ctxp;
    std::unordered_map<Wall, int, WallHash> index;
    g.nodes.push_back(ctx.H);
    index.emplace(ctx.H, 0);
    if (auto m = member(ctx, ctx.H); !m.ok) throw ClosureViolation("H fails membership at " + m.tag);

    std::vector<int> level{0};
    while (!level.empty()) {
        // f_i of every frontier node, computed independently per node
        std::vector<std::vector<std::optional<Wall>>> out(level.size());
        parallel_for(level.size(), threads, [&](std::size_t k) {
            const Wall& w = g.nodes[level[k]];
            out[k].resize(n);
            for (int i = 1; i <= n; ++i) out[k][i - 1] = f(w, i);
        });
        std::vector<Wall> fresh;
        {
            std::unordered_map<Wall, int, WallHash> seen;
            for (auto& row : out)
                for (auto& x : row)
                    if (x && !index.count(*x) && seen.emplace(*x, 0).second) fresh.push_back(*x);
        }
        std::vector<std::vector<int>> keys(fresh.size());
        for (std::size_t k = 0; k < fresh.size(); ++k) keys[k] = fills(fresh[k]);
        std::vector<std::size_t> order(fresh.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });

        // closure check on every new wall
        std::vector<MemberResult> verdict(fresh.size());
        parallel_for(fresh.size(), threads, [&](std::size_t k) { verdict[k] = member(ctx, fresh[k]); });
        for (std::size_t k = 0; k < fresh.size(); ++k)
            if (!verdict[k].ok)
                throw ClosureViolation("f produced a wall outside Y(lambda) (" + verdict[k].tag + "): " +
                                       encode(fresh[k]));

        std::vector<int> next;
        for (auto k : order) {
            int id = static_cast<int>(g.nodes.size());
            index.emplace(fresh[k], id);
            g.nodes.push_back(std::move(fresh[k]));
            next.push_back(id);
        }
        for (std::size_t k = 0; k < level.size(); ++k)
            for (int i = 1; i <= n; ++i)
                if (out[k][i - 1]) g.edges.push_back({level[k], i, index.at(*out[k][i - 1])});
        level = std::move(next);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.source = 0;
    auto it = index.find(ctx.L);
    g.sink = it == index.end() ? -1 : it->second;
    return g;
}

bool VerificationReport::pass() const {
    return dimension_ok && weight_mismatches.empty() && connected && sources == 1 && sinks == 1 && source_is_H &&
           sink_is_L && closure_violations.empty() && string_violations.empty() && axiom_violations.empty();
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
    os << "context: " << context << "\n";
    os << "nodes: " << node_count << " weyl_dimension: " << weyl_dim << " [" << flag(dimension_ok) << "]\n";
    os << "weights: " << weight_count << " distinct, " << weight_mismatches.size() << " mismatches ["
       << flag(weight_mismatches.empty()) << "]\n";
    for (auto& s : weight_mismatches) os << "  " << s << "\n";
    os << "connected: " << (connected ? "yes" : "no") << " [" << flag(connected) << "]\n";
    os << "sources: " << sources << " (H " << (source_is_H ? "yes" : "no") << ") sinks: " << sinks << " (L "
       << (sink_is_L ? "yes" : "no") << ") [" << flag(sources == 1 && sinks == 1 && source_is_H && sink_is_L)
       << "]\n";
    auto list = [&](const char* name, const std::vector<std::string>& v) {
        os << name << ": " << v.size() << " [" << flag(v.empty()) << "]\n";
        for (std::size_t i = 0; i < v.size() && i < 20; ++i) os << "  " << v[i] << "\n";
    };
    list("closure violations", closure_violations);
    list("string violations", string_violations);
    list("axiom violations", axiom_violations);
    os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

VerificationReport verify(const CrystalGraph& g, int threads) {
    const LambdaContext& ctx = *g.ctx;
    const int n = ctx.n;
    const int N = static_cast<int>(g.nodes.size());
    VerificationReport rep;
    rep.context = describe(ctx);
    rep.node_count = g.nodes.size();
    RootDatum rd = RootDatum::make(ctx.family, ctx.n);
    rep.weyl_dim = weyl_dimension(rd, ctx.lambda);
    rep.dimension_ok = BigInt(rep.node_count) == rep.weyl_dim;

    std::unordered_map<Wall, int, WallHash> index;
    for (int k = 0; k < N; ++k) index.emplace(g.nodes[k], k);

    // weights
    std::map<WeightVector, std::uint64_t> got;
    std::vector<WeightVector> wts(N);
    for (int k = 0; k < N; ++k) {
        wts[k] = classical_weight(g.nodes[k]);
        got[wts[k]]++;
    }
    auto want = freudenthal_multiplicities(rd, ctx.lambda);
    rep.weight_count = want.size();
    for (auto& [w, m] : want) {
        auto it = got.find(w);
        std::uint64_t have = it == got.end() ? 0 : it->second;
        if (have != m)
            rep.weight_mismatches.push_back("weight " + weight_str(w) + ": expected " + std::to_string(m) + ", got " +
                                            std::to_string(have));
    }
    for (auto& [w, m] : got)
        if (!want.count(w)) rep.weight_mismatches.push_back("weight " + weight_str(w) + " is not a weight of V(lambda)");

    // per-node checks
    struct NodeInfo {
        std::vector<int> fto, eto; // -1 none, -2 outside the node set
        bool member_ok = true;
        std::string member_tag;
        std::vector<std::string> string_issues, axiom_issues;
    };
    std::vector<NodeInfo> info(N);
    parallel_for(N, std::max(1, threads), [&](std::size_t k) {
        const Wall& w = g.nodes[k];
        NodeInfo& ni = info[k];
        auto m = member(ctx, w);
        ni.member_ok = m.ok;
        ni.member_tag = m.tag;
        ni.fto.assign(n, -1);
        ni.eto.assign(n, -1);
        for (int i = 1; i <= n; ++i) {
            auto fw = f(w, i), ew = e(w, i);
            if (fw) {
                auto it = index.find(*fw);
                ni.fto[i - 1] = it == index.end() ? -2 : it->second;
                auto back = e(*fw, i);
                if (!back || !(*back == w))
                    ni.axiom_issues.push_back("e_" + std::to_string(i) + " f_" + std::to_string(i) + " != id at " +
                                              encode(w));
            }
            if (ew) {
                auto it = index.find(*ew);
                ni.eto[i - 1] = it == index.end() ? -2 : it->second;
                auto back = f(*ew, i);
                if (!back || !(*back == w))
                    ni.axiom_issues.push_back("f_" + std::to_string(i) + " e_" + std::to_string(i) + " != id at " +
                                              encode(w));
            }
            int ph = phi(w, i), ep = epsilon(w, i);
            if (ph - ep != pairing(wts[k], i))
                ni.axiom_issues.push_back("phi-epsilon != <h_" + std::to_string(i) + ",wt> at " + encode(w));
            if ((ph > 0) != fw.has_value() || (ep > 0) != ew.has_value())
                ni.axiom_issues.push_back("phi/epsilon disagree with f/e at " + encode(w));
            if (!ew) {
                // top of an i-string: it must have length phi
                std::optional<Wall> cur = w;
                int len = 0;
                while (len <= ph + 1) {
                    cur = f(*cur, i);
                    if (!cur) break;
                    ++len;
                }
                if (len != ph)
                    ni.string_issues.push_back("colour " + std::to_string(i) + " string from " + encode(w) +
                                               " has length " + std::to_string(len) + ", phi " + std::to_string(ph));
            }
        }
    });

    std::vector<std::vector<int>> adj(N);
    std::vector<std::map<int, int>> in_deg(N), out_deg(N);
    for (auto& [u, i, v] : g.edges) {
        if (u < 0 || v < 0 || u >= N || v >= N) {
            rep.axiom_violations.push_back("edge index out of range");
            continue;
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
        out_deg[u][i]++;
        in_deg[v][i]++;
        if (info[u].fto[i - 1] != v)
            rep.axiom_violations.push_back("edge " + std::to_string(u) + " -" + std::to_string(i) + "-> " +
                                           std::to_string(v) + " is not f_i");
    }
    std::size_t f_edges = 0;
    for (int k = 0; k < N; ++k) {
        NodeInfo& ni = info[k];
        if (!ni.member_ok)
            rep.closure_violations.push_back("node " + encode(g.nodes[k]) + " fails membership (" + ni.member_tag + ")");
        for (int i = 1; i <= n; ++i) {
            if (ni.fto[i - 1] == -2)
                rep.closure_violations.push_back("f_" + std::to_string(i) + " of " + encode(g.nodes[k]) +
                                                 " leaves the node set");
            if (ni.eto[i - 1] == -2)
                rep.closure_violations.push_back("e_" + std::to_string(i) + " of " + encode(g.nodes[k]) +
                                                 " leaves the node set");
            if (ni.fto[i - 1] >= 0) ++f_edges;
            if (in_deg[k][i] > 1 || out_deg[k][i] > 1)
                rep.axiom_violations.push_back("colour " + std::to_string(i) + " degree above 1 at node " +
                                               std::to_string(k));
        }
        for (auto& s : ni.string_issues) rep.string_violations.push_back(s);
        for (auto& s : ni.axiom_issues) rep.axiom_violations.push_back(s);
    }
    if (f_edges != g.edges.size())
        rep.axiom_violations.push_back("edge list has " + std::to_string(g.edges.size()) + " edges, f gives " +
                                       std::to_string(f_edges));

    // connectivity, sources, sinks
    if (N > 0) {
        std::vector<char> seen(N, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++cnt;
                    stack.push_back(v);
                }
        }
        rep.connected = cnt == N;
    }
    for (int k = 0; k < N; ++k) {
        bool src = std::all_of(info[k].eto.begin(), info[k].eto.end(), [](int x) { return x == -1; });
        bool snk = std::all_of(info[k].fto.begin(), info[k].fto.end(), [](int x) { return x == -1; });
        if (src) {
            ++rep.sources;
            rep.source_is_H = g.nodes[k] == ctx.H;
        }
        if (snk) {
            ++rep.sinks;
            rep.sink_is_L = g.nodes[k] == ctx.L;
        }
    }
    return rep;
}

std::string export_dot(const CrystalGraph& g) {
    std::ostringstream os;
    const LambdaContext& c = *g.ctx;
    os << "digraph crystal {\n";
    os << "  label=\"" << describe(c) << "\";\n";
    os << "  node [shape=box];\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        os << "  n" << k << " [label=\"[" << encode(g.nodes[k]) << "]\"];\n";
    for (auto& [u, i, v] : g.edges) os << "  n" << u << " -> n" << v << " [label=" << i << "];\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const CrystalGraph& g) {
    nlohmann::ordered_json j;
    j["context"] = g.ctx->to_json();
    j["nodes"] = nlohmann::ordered_json::array();
    for (auto& w : g.nodes) j["nodes"].push_back(wall_to_json(w));
    j["edges"] = nlohmann::ordered_json::array();
    for (auto& e : g.edges) j["edges"].push_back({e[0], e[1], e[2]});
    return j.dump() + "\n";
}

CrystalGraph import_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + ex.what());
    }
    try {
        CrystalGraph g;
        g.ctx = std::make_shared<const LambdaContext>(context_from_json(j.at("context")));
        for (auto& x : j.at("nodes")) g.nodes.push_back(wall_from_json(x, g.ctx->pat));
        for (auto& x : j.at("edges")) {
            auto e = x.get<std::vector<int>>();
            if (e.size() != 3) throw std::invalid_argument("edge must have three entries");
            g.edges.push_back({e[0], e[1], e[2]});
        }
        for (std::size_t k = 0; k < g.nodes.size(); ++k) {
            if (g.nodes[k] == g.ctx->H) g.source = static_cast<int>(k);
            if (g.nodes[k] == g.ctx->L) g.sink = static_cast<int>(k);
        }
        return g;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + ex.what());
    }
}

} // namespace yw
