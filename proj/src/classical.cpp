#include "yw/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>
#include <stdexcept>

namespace yw {

int group_width(Family f, int n, int i) { return f == Family::D && i == n + 1 ? n : i; }

int min_rank(Family f) {
    switch (f) {
    case Family::A: return 1;
    case Family::B: return 3;
    case Family::C: return 3;
    case Family::D: return 4;
    }
    return 1;
}

int LambdaContext::base_slot(int k) const {
    if (family == Family::A) throw std::logic_error("type A groups have no staircase base");
    int m = t - 1 - k;
    int P = pat->period();
    if (spin) return (family == Family::B ? n : n - 2) + m * P;
    return m * P;
}

int LambdaContext::row_slot(int k) const {
    return base_slot(k) + (family == Family::D ? n - 2 : n - 1);
}

int LambdaContext::row_top(int k) const { return row_slot(k) + (family == Family::B ? 1 : 0); }

nlohmann::ordered_json LambdaContext::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = std::string(1, family_char(family));
    j["n"] = n;
    j["lambda"] = lambda;
    return j;
}

static Wall build_H_A(const LambdaContext& c) {
    const int N = c.n + 1;
    Wall w = ground_state(c.pat);
    w.cols.assign(c.ncols, ColState{});
    int p = 0, above = 0;
    for (int k = c.t - 1; k >= 0; --k) {
        int need = ((-above) % N + N) % N;
        while (p % N != need) ++p;
        for (int j = 0; j < c.widths[k]; ++j) w.cols[c.offsets[k] + j] = {p, Top::None};
        above += c.omega(k);
    }
    trim(w);
    return w;
}

Wall build_H(const LambdaContext& c) {
    if (c.family == Family::A) return build_H_A(c);
    const Pattern& pat = *c.pat;
    Wall w = ground_state(c.pat);
    for (int col = 0; col < c.ncols; ++col) w.cols.push_back(pat.ground(col));
    for (int k = 0; k < c.t; ++k) {
        int i = c.omega(k), bs = c.base_slot(k), wd = c.widths[k];
        for (int j = 0; j < wd; ++j) {
            int col = c.offsets[k] + j;
            if (j == wd - 1) {
                // rightmost column of the staircase: one half of the 0/1 cell
                Slot x = pat.slot(col, bs);
                w.cols[col] = {bs, x.back == 0 ? Top::Back : Top::Front};
            } else if (c.family == Family::D && i >= c.n && j == 0) {
                // leftmost column ends in one half of the (n-1,n) cell
                int st = bs + wd - 2 - j;
                Slot x = pat.slot(col, st);
                int want = i == c.n + 1 ? c.n : c.n - 1;
                w.cols[col] = {st, x.back == want ? Top::Back : Top::Front};
            } else {
                w.cols[col] = {bs + wd - 1 - j, Top::None};
            }
        }
    }
    trim(w);
    return w;
}

Wall build_L(const LambdaContext& c) {
    Wall w = c.H;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= c.n; ++i) {
            if (auto x = f(w, i)) {
                w = std::move(*x);
                moved = true;
                break;
            }
        }
    }
    return w;
}

LambdaContext make_context(Family f, int n, const DominantWeight& lambda) {
    if (n < min_rank(f))
        throw std::invalid_argument(std::string("rank ") + std::to_string(n) + " is below the supported minimum " +
                                    std::to_string(min_rank(f)) + " for family " + family_char(f));
    LambdaContext c;
    c.family = f;
    c.n = n;
    c.lambda = lambda;
    c.dec = decompose(f, n, lambda);
    c.Lambda = choose_level_one(f, n, c.dec);
    c.pat = Pattern::make(affine_for(f), n, c.Lambda);
    c.spin = c.dec.has_spin();
    c.t = static_cast<int>(c.dec.omegas.size());
    int o = 0;
    for (int i : c.dec.omegas) {
        c.offsets.push_back(o);
        c.widths.push_back(group_width(f, n, i));
        o += c.widths.back();
    }
    c.ncols = o;
    c.H = build_H(c);
    if (f == Family::A) {
        for (int k = 0; k < c.t; ++k) c.padding.push_back(c.H.at(c.offsets[k]).c);
    } else {
        for (int k = 0; k < c.t; ++k) c.padding.push_back(c.base_slot(k));
    }
    c.L = build_L(c);
    return c;
}

LambdaContext context_from_json(const nlohmann::ordered_json& j) {
    return make_context(parse_family(j.at("family").get<std::string>()), j.at("n").get<int>(),
                        j.at("lambda").get<DominantWeight>());
}

bool in_F(const LambdaContext& c, const Wall& w) {
    if (!(*w.pat == *c.pat)) throw std::invalid_argument("wall belongs to a different context");
    return rule4(w) && is_proper(w) && is_reduced(w) && contains(w, c.H) && contains(c.L, w);
}

std::vector<Wall> enumerate_F(const LambdaContext& c) {
    const Pattern& pat = *c.pat;
    int m = std::max(c.H.size(), c.L.size());
    std::vector<std::vector<ColState>> opts(m);
    for (int k = 0; k < m; ++k) {
        ColState lo = c.H.at(k), hi = c.L.at(k);
        std::set<ColState> seen{lo};
        std::vector<ColState> stack{lo};
        while (!stack.empty()) {
            ColState s = stack.back();
            stack.pop_back();
            opts[k].push_back(s);
            for (auto& [col, ns] : pat.adds(k, s))
                if (pat.geq(k, hi, ns) && seen.insert(ns).second) stack.push_back(ns);
        }
        std::sort(opts[k].begin(), opts[k].end());
    }
    std::vector<Wall> out;
    std::vector<ColState> cur;
    auto rec = [&](auto&& self, int k) -> void {
        if (k == m) {
            Wall w{c.pat, cur};
            trim(w);
            if (is_proper(w) && is_reduced(w)) out.push_back(std::move(w));
            return;
        }
        for (ColState s : opts[k]) {
            if (k >= 1) {
                auto a = pat.heights(k, s), b = pat.heights(k - 1, cur[k - 1]);
                if (a.first > b.first || a.second > b.second) continue;
            }
            cur.push_back(s);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Wall> reachable(const LambdaContext& c, std::size_t limit) {
    std::unordered_set<Wall, WallHash> seen{c.H};
    std::vector<Wall> level{c.H};
    while (!level.empty()) {
        std::vector<Wall> next;
        for (const Wall& w : level)
            for (int i = 1; i <= c.n; ++i)
                for (auto x : {f(w, i), e(w, i)})
                    if (x && seen.insert(*x).second) {
                        next.push_back(*x);
                        if (limit && seen.size() > limit) throw std::length_error("component exceeds limit");
                    }
        level = std::move(next);
    }
    std::vector<Wall> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// reading a wall relative to H

namespace {

constexpr int kMinA = 2; // (C1) hits start at a = 2

struct Reader {
    const LambdaContext& L;
    const Wall& w;
    const Pattern& pat;
    Reader(const LambdaContext& l, const Wall& ww) : L(l), w(ww), pat(*l.pat) {}

    ColState st(int col) const { return w.at(col); }
    ColState hs(int col) const { return L.H.at(col); }
    static int content(ColState s, int slot) {
        if (slot < 0) return 0;
        if (slot < s.c) return 2;
        return slot == s.c && s.p != Top::None ? 1 : 0;
    }
    int slot_content(int col, int slot) const { return content(st(col), slot); }
    int has_atoms(int col, int slot) const { return content(st(col), slot) - content(hs(col), slot); }
    // items above H in a column
    int above(int col) const { return pat.items(col, st(col)) - pat.items(col, hs(col)); }
    int col_of(int k, int j) const { return L.offsets[k] + j; }
    int spin_col(int j) const { return L.ncols + j; }
};

struct Letter {
    int v;
    char tag; // 0, 'u' or 'b' (only for v == n in type D)
};

std::vector<std::vector<int>> tableau(const Reader& R) {
    std::vector<std::vector<int>> T;
    for (int k = 0; k < R.L.t; ++k) {
        std::vector<int> vals;
        for (int j = 0; j < R.L.widths[k]; ++j) vals.push_back(R.L.omega(k) - j + R.above(R.col_of(k, j)));
        T.push_back(std::move(vals));
    }
    return T;
}

std::vector<int> spin_values(const Reader& R) {
    std::vector<int> s;
    if (!R.L.spin) return s;
    for (int j = 0; j < R.L.n; ++j) s.push_back(R.above(R.spin_col(j)));
    return s;
}

char tag_of_color(int color, int n) { return color == n - 1 ? 'u' : 'b'; }

Letter d_letter(const Reader& R, int k, int j) {
    const int n = R.L.n, col = R.col_of(k, j);
    Letter x{R.L.widths[k] - j + R.above(col), 0};
    if (x.v == n) {
        int r0 = R.L.row_slot(k);
        ColState s = R.st(col);
        if (s.c == r0 && s.p != Top::None) {
            Slot sl = R.pat.slot(col, r0);
            x.tag = tag_of_color(s.p == Top::Back ? sl.back : sl.front, n);
        }
    }
    return x;
}

std::vector<std::vector<Letter>> d_tableau(const Reader& R) {
    std::vector<std::vector<Letter>> T;
    for (int k = 0; k < R.L.t; ++k) {
        std::vector<Letter> v;
        for (int j = 0; j < R.L.widths[k]; ++j) v.push_back(d_letter(R, k, j));
        T.push_back(std::move(v));
    }
    return T;
}

// n and n-bar are incomparable
bool d_le(const Letter& x, const Letter& y) {
    if (x.v != y.v) return x.v < y.v;
    return x.tag == y.tag;
}

char spin_tag(const Reader& R, int col) {
    ColState g = R.pat.ground(col);
    Slot x = R.pat.slot(col, g.c);
    return tag_of_color(g.p == Top::Back ? x.back : x.front, R.L.n);
}

int row_color(const LambdaContext& L, int k, int j) {
    const int n = L.n, i = L.omega(k);
    int h0 = i >= n ? (i == n + 1 ? n : n - 1) : n;
    return j % 2 == 0 ? h0 : 2 * n - 1 - h0;
}

// Y+ / Y- of group k as atom counts per distance from the row
void row_split(const Reader& R, int k, std::map<int, int>& up, std::map<int, int>& dn,
               std::map<int, std::vector<int>>* upc = nullptr, std::map<int, std::vector<int>>* dnc = nullptr) {
    const LambdaContext& L = R.L;
    const int n = L.n;
    const int r0 = L.row_slot(k), r1 = L.row_top(k);
    auto colors_at = [&](int col, ColState s, ColState minus, int slot) {
        std::vector<int> out;
        Slot x = R.pat.slot(col, slot);
        auto has = [&](ColState z, Top side) {
            return z.c > slot || (z.c == slot && (z.p == side || (x.kind != SlotKind::Split && z.p != Top::None)));
        };
        if (x.kind == SlotKind::Split) {
            if (has(s, Top::Back) && !has(minus, Top::Back)) out.push_back(x.back);
            if (has(s, Top::Front) && !has(minus, Top::Front)) out.push_back(x.front);
        } else if (Reader::content(s, slot) > Reader::content(minus, slot)) {
            out.push_back(x.back);
        }
        return out;
    };
    const ColState nothing{-1, Top::None};
    for (int j = 0; j < L.widths[k]; ++j) {
        const int col = R.col_of(k, j);
        const ColState s = R.st(col), h = R.hs(col);
        for (int sl = r1 + 1; sl < r1 + n + 2; ++sl) {
            int a = Reader::content(s, sl);
            if (a) {
                up[sl - r1] += a;
                if (upc) for (int x : colors_at(col, s, nothing, sl)) (*upc)[sl - r1].push_back(x);
            }
        }
        for (int sl = 0; sl < r0; ++sl) {
            int a = Reader::content(s, sl) - Reader::content(h, sl);
            if (a) {
                dn[r0 - sl] += a;
                if (dnc) for (int x : colors_at(col, s, h, sl)) (*dnc)[r0 - sl].push_back(x);
            }
        }
        if (L.family != Family::D) continue;
        // the (n-1,n)-row itself
        Slot x = R.pat.slot(col, r0);
        if (L.omega(k) < n) {
            int a = (s.c > r0 || (s.c == r0 && s.p != Top::None)) ? 1 : 0;
            int ha = (h.c > r0 || (h.c == r0 && h.p != Top::None)) ? 1 : 0;
            if (a - ha > 0) {
                dn[0] += a - ha;
                if (dnc) (*dnc)[0].push_back(s.c > r0 ? x.back : (s.p == Top::Back ? x.back : x.front));
            }
            if (s.c > r0) {
                up[0] += 1;
                if (upc) (*upc)[0].push_back(x.front);
            }
        } else {
            int rc = row_color(L, k, j);
            Top pos = x.back == rc ? Top::Back : Top::Front;
            Top other = pos == Top::Back ? Top::Front : Top::Back;
            auto has = [&](ColState z, Top side) { return z.c > r0 || (z.c == r0 && z.p == side); };
            if (has(s, other)) {
                up[0] += 1;
                if (upc) (*upc)[0].push_back(other == Top::Back ? x.back : x.front);
            }
            if (has(s, pos) && !has(h, pos)) {
                dn[0] += 1;
                if (dnc) (*dnc)[0].push_back(rc);
            }
        }
    }
}

bool cond_Y1(const Reader& R) {
    for (int k = 0; k < R.L.t; ++k) {
        std::map<int, int> up, dn;
        row_split(R, k, up, dn);
        for (auto [d, a] : up) {
            auto it = dn.find(d);
            if (a > (it == dn.end() ? 0 : it->second)) return false;
        }
    }
    return true;
}

// type A: Y^{omega_{i_k}} inside Y^{omega_{i_{k+1}}}
std::vector<int> a_heights(const Reader& R, int k) {
    std::vector<int> v;
    for (int j = 0; j < R.L.omega(k); ++j) v.push_back(R.st(R.col_of(k, j)).c - R.hs(R.col_of(k, j)).c);
    return v;
}

bool cond_chain(const Reader& R) {
    for (int k = 0; k + 1 < R.L.t; ++k) {
        auto b = a_heights(R, k), a = a_heights(R, k + 1);
        int d = R.L.omega(k + 1) - R.L.omega(k);
        for (int j = 0; j < R.L.omega(k); ++j)
            if (std::max(0, b[j] - d) > a[j]) return false;
    }
    return true;
}

bool cond_Y2(const Reader& R) {
    auto T = tableau(R);
    for (int k = 0; k + 1 < R.L.t; ++k)
        for (std::size_t j = 0; j < T[k].size(); ++j)
            if (T[k][j] > T[k + 1][j]) return false;
    if (R.L.spin && R.L.t > 0) {
        auto s = spin_values(R);
        int k = R.L.t - 1;
        for (std::size_t j = 0; j < T[k].size(); ++j)
            if (T[k][j] > R.L.n + 1 + s[j]) return false;
    }
    return true;
}

bool cond_Y2D(const Reader& R) {
    auto T = d_tableau(R);
    const int n = R.L.n;
    for (int k = 0; k + 1 < R.L.t; ++k)
        for (std::size_t j = 0; j < T[k].size(); ++j)
            if (!d_le(T[k][j], T[k + 1][j])) return false;
    if (R.L.spin && R.L.t > 0) {
        auto s = spin_values(R);
        int k = R.L.t - 1;
        for (std::size_t j = 0; j < T[k].size(); ++j) {
            Letter th = s[j] == 0 ? Letter{n, spin_tag(R, R.spin_col(j))} : Letter{n + s[j], 0};
            if (T[k][j].v > th.v) return false;
            if (T[k][j].v == n && th.v == n && T[k][j].tag != th.tag) return false;
        }
    }
    return true;
}

// triangle rows: minus (lower group below its row) vs plus (upper group or spin group above)
struct TriRows {
    std::vector<int> lo, hi;
};

TriRows triangle_rows(const Reader& R, int k) {
    const LambdaContext& L = R.L;
    TriRows out;
    const bool spin = k == L.t - 1;
    const bool D = L.family == Family::D;
    const int i = L.widths[k];
    const int ra = L.row_slot(k);
    const int rb = spin ? (L.family == Family::B ? 1 : 0) : L.row_top(k + 1);
    auto upper_col = [&](int j) { return spin ? R.spin_col(j) : R.col_of(k + 1, j); };
    if (!D) {
        for (int r = 0; r < i; ++r) {
            int lo = 0, hi = 0;
            for (int j = r; j < i; ++j) lo += R.has_atoms(R.col_of(k, j), ra - r);
            for (int j = 0; j < i - r; ++j) hi += R.has_atoms(upper_col(j), rb + r);
            out.lo.push_back(lo);
            out.hi.push_back(hi);
        }
    } else {
        // the (n-1,n)-row compares presence only; the triangle has base i-1
        for (int r = 0; r + 1 < i; ++r) {
            auto g = [&](int v) { return r == 0 ? std::min(v, 1) : v; };
            int lo = 0, hi = 0;
            for (int j = r + 1; j < i; ++j) lo += g(R.has_atoms(R.col_of(k, j), ra - r));
            for (int j = 0; j + 1 + r < i; ++j) hi += g(R.has_atoms(upper_col(j), rb + r));
            out.lo.push_back(lo);
            out.hi.push_back(hi);
        }
    }
    return out;
}

std::vector<int> row_cell(const Reader& R, int col, int slot, bool outside) {
    Slot x = R.pat.slot(col, slot);
    auto cont = [&](ColState s) {
        std::vector<int> v;
        if (s.c > slot) v = {x.back, x.front};
        else if (s.c == slot && s.p != Top::None) v = {s.p == Top::Back ? x.back : x.front};
        return v;
    };
    auto a = cont(R.st(col));
    if (outside)
        for (int y : cont(R.hs(col))) std::erase(a, y);
    return a;
}

// right-justified single-half row cells of the lower side need a partner of the same colour
bool row_cells_ok(const Reader& R, int k) {
    const LambdaContext& L = R.L;
    const bool spin = k == L.t - 1;
    const int i = L.widths[k], ra = L.row_slot(k);
    std::vector<std::vector<int>> lo, hi;
    for (int j = 1; j < i; ++j) {
        auto a = row_cell(R, R.col_of(k, j), ra, true);
        if (!a.empty()) lo.push_back(a);
    }
    for (int j = 0; j + 1 < i; ++j)
        hi.push_back(spin ? row_cell(R, R.spin_col(j), 0, false) : row_cell(R, R.col_of(k + 1, j), L.row_top(k + 1), false));
    for (std::size_t idx = 0; idx < lo.size(); ++idx) {
        if (idx >= hi.size() || hi[idx].empty()) return false;
        if (lo[idx].size() == 1 && hi[idx].size() == 1 && lo[idx] != hi[idx]) return false;
    }
    return true;
}

bool cond_Y3(const Reader& R) {
    const LambdaContext& L = R.L;
    int pairs = L.t - 1 + (L.spin && L.t > 0 ? 1 : 0);
    for (int k = 0; k < pairs; ++k) {
        auto tr = triangle_rows(R, k);
        for (std::size_t r = 0; r < tr.lo.size(); ++r)
            if (tr.lo[r] > tr.hi[r]) return false;
        if (L.family == Family::D && !row_cells_ok(R, k)) return false;
    }
    return true;
}

int bar_position(const LambdaContext& L, int a) {
    const int n = L.n;
    switch (L.family) {
    case Family::C: return 2 * n + 1 - a;
    case Family::B: return 2 * n + 2 - a;
    case Family::D: return 2 * n - a;
    default: return -1;
    }
}

std::vector<C1Hit> c1_hits(const Reader& R, int k) {
    const LambdaContext& L = R.L;
    std::vector<C1Hit> out;
    std::vector<std::vector<int>> T;
    if (L.family == Family::D) {
        for (auto& row : d_tableau(R)) {
            std::vector<int> v;
            for (auto& x : row) v.push_back(x.v);
            T.push_back(std::move(v));
        }
    } else {
        T = tableau(R);
    }
    const int n = L.n;
    if (k == L.t - 1) {
        auto s = spin_values(R);
        for (int a = kMinA; a < n; ++a)
            for (int p = 1; p <= static_cast<int>(T[k].size()); ++p) {
                if (T[k][p - 1] != a) continue;
                for (int q = 1; q < p; ++q) {
                    int want = L.family == Family::D ? n - a : n - a + 1;
                    if (s[q - 1] == want) out.push_back({a, p, q, k, true});
                }
            }
        return out;
    }
    for (int a = kMinA; a < n; ++a)
        for (int p = 1; p <= static_cast<int>(T[k].size()); ++p) {
            if (T[k][p - 1] != a) continue;
            for (int q = 1; q < p; ++q)
                if (q - 1 < static_cast<int>(T[k + 1].size()) && T[k + 1][q - 1] == bar_position(L, a))
                    out.push_back({a, p, q, k, false});
        }
    return out;
}

bool y4_group(const Reader& R, int g, int a, int p, int q) {
    const LambdaContext& L = R.L;
    const int n = L.n, wd = L.widths[g];
    const bool D = L.family == Family::D;
    const int r0 = L.row_slot(g), r1 = L.row_top(g);
    for (int cc = a; cc < a + p - q; ++cc) {
        int r = D ? n - 1 - cc : n - cc;
        int up = 0, dn = 0;
        if (r <= 0 && D) {
            for (int j = q - 1; j < q + cc - a; ++j)
                if (j < wd && R.st(R.col_of(g, j)).c > r0) ++up;
            for (int j = p - 1 - (cc - a); j < p; ++j) {
                if (j >= wd) continue;
                ColState s = R.st(R.col_of(g, j));
                if (s.c > r0 || (s.c == r0 && s.p != Top::None)) ++dn;
            }
        } else {
            for (int j = q - 1; j < q + cc - a; ++j)
                if (j < wd) up += R.has_atoms(R.col_of(g, j), r1 + r);
            for (int j = p - 1 - (cc - a); j < p; ++j)
                if (j < wd) dn += R.slot_content(R.col_of(g, j), r0 - r);
        }
        if (up > dn) return false;
    }
    return true;
}

bool cond_Y4(const Reader& R) {
    const LambdaContext& L = R.L;
    for (int k = 0; k + 1 < L.t; ++k)
        for (auto& h : c1_hits(R, k))
            if (!(y4_group(R, k, h.a, h.p, h.q) && y4_group(R, k + 1, h.a, h.p, h.q))) return false;
    if (L.spin && L.t > 0)
        for (auto& h : c1_hits(R, L.t - 1))
            if (!y4_group(R, L.t - 1, h.a, h.p, h.q)) return false;
    return true;
}

std::vector<C2Hit> c2_hits(const Reader& R, int k) {
    const LambdaContext& L = R.L;
    const int n = L.n;
    auto T = d_tableau(R);
    std::vector<C2Hit> out;
    const bool spin = k == L.t - 1;
    std::vector<int> s;
    if (spin) s = spin_values(R);
    for (int p = 1; p <= static_cast<int>(T[k].size()); ++p) {
        const Letter& x = T[k][p - 1];
        if (x.v != n || !x.tag) continue;
        if (spin) {
            for (int q = p + 1; q <= n; ++q) {
                if (s[q - 1] != 0) continue;
                char tg = spin_tag(R, R.spin_col(q - 1));
                if (((q - p) % 2 == 1) == (x.tag == tg)) out.push_back({p, q, k, true});
            }
        } else {
            for (int q = p + 1; q <= static_cast<int>(T[k + 1].size()); ++q) {
                const Letter& y = T[k + 1][q - 1];
                if (y.v != n || !y.tag) continue;
                if (((q - p) % 2 == 1) == (x.tag == y.tag)) out.push_back({p, q, k, false});
            }
        }
    }
    return out;
}

// parallelogram rows for a (C2) hit: (lower count, upper count) per row
std::vector<std::pair<int, int>> parallelogram_rows(const Reader& R, const C2Hit& h) {
    const LambdaContext& L = R.L;
    const int n = L.n, k = h.k, p = h.p, q = h.q, i = L.widths[k];
    const int ra = L.row_slot(k);
    const int rb = h.spin ? 0 : L.row_slot(k + 1);
    std::vector<std::pair<int, int>> rows;
    for (int x = 1; x <= n - 2; ++x) {
        int r = n - 1 - x, lo = 0, hi = 0;
        for (int cc = std::max(q, n - x); cc <= std::min(i, n - x + p - 1); ++cc)
            if (R.has_atoms(R.col_of(k, cc - 1), ra - r) > 0) ++lo;
        for (int cc = std::max(1, x - n + q + 1); cc <= std::min(p, x - n + i + 1); ++cc) {
            int col = h.spin ? R.spin_col(cc - 1) : R.col_of(k + 1, cc - 1);
            if (R.has_atoms(col, rb + r) > 0) ++hi;
        }
        rows.push_back({lo, hi});
    }
    return rows;
}

bool cond_Y5(const Reader& R) {
    const LambdaContext& L = R.L;
    int pairs = L.t - 1 + (L.spin && L.t > 0 ? 1 : 0);
    for (int k = 0; k < pairs; ++k)
        for (auto& h : c2_hits(R, k))
            for (auto [lo, hi] : parallelogram_rows(R, h))
                if (lo > hi) return false;
    return true;
}

WallPart rows_part(const std::string& region, int anchor, const std::map<int, int>& counts,
                   const std::map<int, std::vector<int>>& colors) {
    WallPart p;
    p.region = region;
    p.orientation = WallPart::Orientation::Rows;
    p.anchor = anchor;
    int top = counts.empty() ? -1 : counts.rbegin()->first;
    p.lengths.assign(top + 1, 0);
    p.colors.assign(top + 1, {});
    for (auto [d, a] : counts) p.lengths[d] = a;
    for (auto& [d, c] : colors) p.colors[d] = c;
    return p;
}

void check_group(int k, int limit) {
    if (k < 0 || k >= limit) throw std::out_of_range("group index out of range");
}

} // namespace

// ---------------------------------------------------------------------------

int WallPart::blocks() const {
    int s = 0;
    for (auto& c : colors) s += static_cast<int>(c.size());
    return s;
}

bool WallPart::contained_in(const WallPart& o) const {
    if (orientation != o.orientation) throw std::invalid_argument("parts have different orientation");
    for (std::size_t i = 0; i < lengths.size(); ++i)
        if (lengths[i] > (i < o.lengths.size() ? o.lengths[i] : 0)) return false;
    return true;
}

Parts parts(const LambdaContext& ctx, const Wall& w, int k) {
    check_group(k, ctx.t);
    Reader R(ctx, w);
    const Pattern& pat = *ctx.pat;
    Parts out;
    out.interior.region = "interior";
    out.bar.region = "bar";
    out.upper.region = "upper";
    out.lower.region = "lower";
    for (int j = 0; j < ctx.widths[k]; ++j) {
        int col = R.col_of(k, j);
        auto all = pat.item_colors(col, R.st(col));
        auto base = pat.item_colors(col, R.hs(col));
        auto gr = pat.item_colors(col, pat.ground(col));
        std::vector<int> above(all.begin() + static_cast<long>(base.size()), all.end());
        out.interior.colors.push_back(above);
        out.interior.lengths.push_back(pat.heights(col, R.st(col)).first - pat.heights(col, R.hs(col)).first);
        // the wall cut to L
        ColState s = R.st(col), l = ctx.L.at(col);
        ColState m = pat.geq(col, l, s) ? s : l;
        auto cut = pat.item_colors(col, m);
        out.bar.colors.emplace_back(cut.begin() + static_cast<long>(gr.size()), cut.end());
        out.bar.lengths.push_back(pat.heights(col, m).first - pat.heights(col, pat.ground(col)).first);
    }
    if (k + 1 < ctx.t) {
        int d = ctx.omega(k + 1) - ctx.omega(k);
        for (int j = 0; j < ctx.widths[k]; ++j) {
            // top of the lower group's column that reaches into the next group's region
            auto& c = out.interior.colors[j];
            int keep = std::max(0, static_cast<int>(c.size()) - d);
            std::vector<int> top(c.end() - keep, c.end());
            std::reverse(top.begin(), top.end());
            out.upper.lengths.push_back(keep * 2);
            out.upper.colors.push_back(top);
            int col = R.col_of(k + 1, j);
            auto all = pat.item_colors(col, R.st(col));
            auto base = pat.item_colors(col, R.hs(col));
            out.lower.colors.emplace_back(all.begin() + static_cast<long>(base.size()), all.end());
            out.lower.lengths.push_back(static_cast<int>(out.lower.colors.back().size()) * 2);
        }
    }
    return out;
}

std::pair<WallPart, WallPart> n_row_split(const LambdaContext& ctx, const Wall& w, int k) {
    if (ctx.family == Family::A) throw std::invalid_argument("type A has no n-row");
    check_group(k, ctx.t);
    Reader R(ctx, w);
    std::map<int, int> up, dn;
    std::map<int, std::vector<int>> upc, dnc;
    row_split(R, k, up, dn, &upc, &dnc);
    return {rows_part("Y+", ctx.row_slot(k), up, upc), rows_part("Y-", ctx.row_slot(k), dn, dnc)};
}

WallPart reflect_shift(const WallPart& p) {
    // rows are kept as counts measured from the row, so reflecting only relabels
    // the side and right-justification is implicit
    WallPart out = p;
    if (out.region.size() >= 2 && out.region.front() == '|' && out.region.back() == '|') return out;
    out.region = "|" + p.region + "|";
    return out;
}

TriangleParts triangle_parts(const LambdaContext& ctx, const Wall& w, int k) {
    if (ctx.family == Family::A) throw std::invalid_argument("type A has no triangle parts");
    int pairs = ctx.t - 1 + (ctx.spin && ctx.t > 0 ? 1 : 0);
    check_group(k, pairs);
    Reader R(ctx, w);
    auto tr = triangle_rows(R, k);
    TriangleParts out;
    auto mk = [&](const std::string& region, const std::vector<int>& v) {
        WallPart p;
        p.region = region;
        p.orientation = WallPart::Orientation::Rows;
        p.anchor = ctx.row_slot(k);
        p.lengths = v;
        for (int a : v) p.colors.push_back(std::vector<int>(a, -1));
        return p;
    };
    out.plus = mk("L+", tr.hi);
    out.minus = mk("L-", tr.lo);
    out.minus_reflected = reflect_shift(out.minus);
    return out;
}

std::vector<C1Hit> detect_C1(const LambdaContext& ctx, const Wall& w, int k) {
    if (ctx.family == Family::A) throw std::invalid_argument("type A has no (C1) configurations");
    int pairs = ctx.t - 1 + (ctx.spin && ctx.t > 0 ? 1 : 0);
    check_group(k, pairs);
    Reader R(ctx, w);
    return c1_hits(R, k);
}

std::vector<C2Hit> detect_C2(const LambdaContext& ctx, const Wall& w, int k) {
    if (ctx.family != Family::D) throw std::invalid_argument("(C2) configurations exist only in type D");
    int pairs = ctx.t - 1 + (ctx.spin && ctx.t > 0 ? 1 : 0);
    check_group(k, pairs);
    Reader R(ctx, w);
    return c2_hits(R, k);
}

MemberResult member(const LambdaContext& ctx, const Wall& w) {
    if (!in_F(ctx, w)) return {false, "F"};
    Reader R(ctx, w);
    if (ctx.family == Family::A) {
        if (!cond_chain(R)) return {false, "chain"};
        return {true, ""};
    }
    if (!cond_Y1(R)) return {false, "Y1"};
    if (ctx.family == Family::D ? !cond_Y2D(R) : !cond_Y2(R)) return {false, "Y2"};
    if (!cond_Y3(R)) return {false, "Y3"};
    if (!cond_Y4(R)) return {false, "Y4"};
    if (ctx.family == Family::D && !cond_Y5(R)) return {false, "Y5"};
    return {true, ""};
}

} // namespace yw
