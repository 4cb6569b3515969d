// Compares member() over F(lambda) with the connected component of H for every
// lambda of a family/rank up to a coefficient sum.
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "yw/classical.hpp"

int main(int argc, char** argv) {
    CLI::App app{"membership sweep"};
    std::string fam;
    int n = 0, maxsum = 2;
    std::size_t maxF = 200000;
    app.add_option("family", fam)->required();
    app.add_option("rank", n)->required();
    app.add_option("maxsum", maxsum);
    app.add_option("--max-f", maxF);
    CLI11_PARSE(app, argc, argv);
    auto f = yw::parse_family(fam);
    int bad = 0;
    std::vector<int> lam(n, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n) {
            int s = 0;
            for (int x : lam) s += x;
            if (s == 0) return;
            auto ctx = yw::make_context(f, n, lam);
            auto dim = yw::weyl_dimension(yw::RootDatum::make(f, n), lam);
            std::cout << fam << n << " [";
            for (int k = 0; k < n; ++k) std::cout << (k ? "," : "") << lam[k];
            std::cout << "] dim " << dim << std::flush;
            std::vector<yw::Wall> F;
            try {
                // enumeration is exponential; bail out on large boxes
                if (dim > maxF) throw std::length_error("dim");
                F = yw::enumerate_F(ctx);
                if (F.size() > maxF) throw std::length_error("F");
            } catch (const std::length_error&) {
                std::cout << " skip\n";
                return;
            }
            auto C = yw::reachable(ctx);
            std::set<std::vector<int>> comp;
            for (auto& w : C) comp.insert(yw::fills(w));
            int extra = 0, missing = 0;
            for (auto& w : F) {
                bool m = yw::member(ctx, w).ok, in = comp.count(yw::fills(w)) > 0;
                if (m && !in) ++extra;
                if (!m && in) ++missing;
            }
            bool ok = extra == 0 && missing == 0 && C.size() == dim;
            std::cout << " |F| " << F.size() << " |C| " << C.size() << " extra " << extra << " missing " << missing
                      << (ok ? " ok" : " MISMATCH") << "\n";
            bad += !ok;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            lam[i] = v;
            self(self, i + 1, left - v);
        }
        lam[i] = 0;
    };
    rec(rec, 0, maxsum);
    std::cout << (bad ? "mismatches: " + std::to_string(bad) : std::string("all ok")) << "\n";
    return bad ? 1 : 0;
}
