#include "yw/wall.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace yw {

namespace {

Slot F(int c) { return {SlotKind::Full, c, c}; }
Slot H(int c) { return {SlotKind::HalfHeight, c, c}; }
Slot S(int b, int f) { return {SlotKind::Split, b, f}; }

int slot_height(const Slot& s) { return s.kind == SlotKind::HalfHeight ? 1 : 2; }

} // namespace

std::shared_ptr<const Pattern> Pattern::make(AffineType type, int n, int lam) {
    auto p = std::make_shared<Pattern>(Pattern());
    p->type_ = type;
    p->n_ = n;
    p->lam_ = lam;
    p->datum_ = AffineDatum::make(type, n);
    if (lam < 0 || lam > n) throw std::invalid_argument("level-one weight index out of range");

    auto add_table = [&](std::vector<Slot> prefix, std::vector<Slot> cycle, ColState g) {
        Table t;
        t.prefix = std::move(prefix);
        t.cycle = std::move(cycle);
        t.prefix_h.assign(1, 0);
        for (auto& s : t.prefix) t.prefix_h.push_back(t.prefix_h.back() + slot_height(s));
        t.cycle_h.assign(1, 0);
        for (auto& s : t.cycle) t.cycle_h.push_back(t.cycle_h.back() + slot_height(s));
        t.ground = g;
        p->tables_.push_back(std::move(t));
    };
    auto range = [](int from, int to) { // inclusive, either direction
        std::vector<Slot> v;
        if (from <= to)
            for (int c = from; c <= to; ++c) v.push_back(F(c));
        else
            for (int c = from; c >= to; --c) v.push_back(F(c));
        return v;
    };
    auto cat = [](std::vector<Slot> a, const std::vector<Slot>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    const ColState half_ground{0, Top::Back};

    switch (type) {
    case AffineType::A1:
        // full blocks, colours shift by one between neighbouring columns
        for (int k = 0; k <= n; ++k) {
            int b = ((lam - k) % (n + 1) + (n + 1)) % (n + 1);
            std::vector<Slot> cyc;
            for (int j = 0; j <= n; ++j) cyc.push_back(F((b + j) % (n + 1)));
            add_table({}, cyc, {0, Top::None});
        }
        break;
    case AffineType::B1:
    case AffineType::A2tw:
        for (int par = 0; par < 2; ++par) {
            if (type == AffineType::B1 && lam == n) {
                int bk = par == 0 ? 1 : 0;
                auto cyc = cat(cat({H(n)}, n >= 3 ? range(n - 1, 2) : std::vector<Slot>{}), {S(bk, 1 - bk)});
                cyc = cat(cat(cyc, n >= 3 ? range(2, n - 1) : std::vector<Slot>{}), {H(n)});
                add_table({H(n)}, cyc, {1, Top::None});
                continue;
            }
            if (lam != 0 && lam != 1) throw std::invalid_argument("unsupported level-one weight for this type");
            int g = lam == 0 ? 1 : 0;
            int bk = par == 0 ? g : 1 - g;
            std::vector<Slot> cyc{S(bk, 1 - bk)};
            cyc = cat(cyc, range(2, n - 1));
            if (type == AffineType::B1) cyc = cat(cyc, {H(n), H(n)});
            else cyc.push_back(F(n));
            cyc = cat(cyc, range(n - 1, 2));
            add_table({}, cyc, half_ground);
        }
        break;
    case AffineType::D1:
        for (int par = 0; par < 2; ++par) {
            std::vector<Slot> cyc;
            if (lam == 0 || lam == 1) {
                int b01 = lam == 0 ? 1 : 0;
                if (par) b01 = 1 - b01;
                int bnn = par == 0 ? n : n - 1;
                cyc = cat({S(b01, 1 - b01)}, n >= 4 ? range(2, n - 2) : std::vector<Slot>{});
                cyc.push_back(S(bnn, 2 * n - 1 - bnn));
                cyc = cat(cyc, range(n - 2, 2));
            } else if (lam == n - 1 || lam == n) {
                int bnn = lam == n - 1 ? n : n - 1;
                if (par) bnn = 2 * n - 1 - bnn;
                int b01 = par == 0 ? 1 : 0;
                cyc = cat({S(bnn, 2 * n - 1 - bnn)}, range(n - 2, 2));
                cyc.push_back(S(b01, 1 - b01));
                cyc = cat(cyc, range(2, n - 2));
            } else {
                throw std::invalid_argument("unsupported level-one weight for this type");
            }
            add_table({}, cyc, half_ground);
        }
        break;
    }
    return p;
}

int Pattern::key(int col) const {
    if (type_ == AffineType::A1) return col % (n_ + 1);
    return col % 2;
}

const Pattern::Table& Pattern::table(int col) const { return tables_[key(col)]; }

Slot Pattern::slot(int col, int s) const {
    const Table& t = table(col);
    if (s < static_cast<int>(t.prefix.size())) return t.prefix[s];
    s -= static_cast<int>(t.prefix.size());
    return t.cycle[s % t.cycle.size()];
}

ColState Pattern::ground(int col) const { return table(col).ground; }

int Pattern::period() const { return static_cast<int>(tables_[0].cycle.size()); }

std::pair<int, int> Pattern::heights(int col, ColState st) const {
    const Table& t = table(col);
    int np = static_cast<int>(t.prefix.size());
    int h;
    if (st.c <= np) {
        h = t.prefix_h[st.c];
    } else {
        int r = st.c - np;
        int len = static_cast<int>(t.cycle.size());
        h = t.prefix_h[np] + (r / len) * t.cycle_h[len] + t.cycle_h[r % len];
    }
    int b = h, f = h;
    if (st.p == Top::Back) b += 2;
    if (st.p == Top::Front) f += 2;
    return {b, f};
}

bool Pattern::full(int col, ColState st) const {
    auto [b, f] = heights(col, st);
    return b == f && b % 2 == 0;
}

bool Pattern::geq(int col, ColState a, ColState b) const {
    auto ha = heights(col, a), hb = heights(col, b);
    return ha.first >= hb.first && ha.second >= hb.second;
}

int Pattern::items(int col, ColState st) const {
    int k = 0;
    for (int s = 0; s < st.c; ++s) k += slot(col, s).kind == SlotKind::Split ? 2 : 1;
    return k + (st.p != Top::None ? 1 : 0);
}

std::vector<int> Pattern::item_colors(int col, ColState st) const {
    std::vector<int> out;
    for (int s = 0; s < st.c; ++s) {
        Slot x = slot(col, s);
        out.push_back(x.back);
        if (x.kind == SlotKind::Split) out.push_back(x.front);
    }
    if (st.p == Top::Back) out.push_back(slot(col, st.c).back);
    if (st.p == Top::Front) out.push_back(slot(col, st.c).front);
    return out;
}

std::vector<std::pair<int, ColState>> Pattern::adds(int col, ColState st) const {
    Slot x = slot(col, st.c);
    if (st.p == Top::Back) return {{x.front, {st.c + 1, Top::None}}};
    if (st.p == Top::Front) return {{x.back, {st.c + 1, Top::None}}};
    if (x.kind == SlotKind::Split) return {{x.back, {st.c, Top::Back}}, {x.front, {st.c, Top::Front}}};
    return {{x.back, {st.c + 1, Top::None}}};
}

std::vector<std::pair<int, ColState>> Pattern::removes(int col, ColState st) const {
    std::vector<std::pair<int, ColState>> out;
    if (st.p == Top::Back) out.push_back({slot(col, st.c).back, {st.c, Top::None}});
    else if (st.p == Top::Front) out.push_back({slot(col, st.c).front, {st.c, Top::None}});
    else if (st.c > 0) {
        Slot x = slot(col, st.c - 1);
        if (x.kind == SlotKind::Split) {
            out.push_back({x.front, {st.c - 1, Top::Back}});
            out.push_back({x.back, {st.c - 1, Top::Front}});
        } else {
            out.push_back({x.back, {st.c - 1, Top::None}});
        }
    }
    ColState g = ground(col);
    std::erase_if(out, [&](const auto& m) { return !geq(col, m.second, g); });
    return out;
}

bool Wall::operator<(const Wall& o) const { return fills(*this) < fills(o); }

std::size_t WallHash::operator()(const Wall& w) const noexcept {
    std::size_t h = 0x84222325cbf29ce4ull;
    for (auto& s : w.cols) {
        h ^= static_cast<std::size_t>(s.c) * 4 + static_cast<std::size_t>(s.p);
        h *= 0x100000001b3ull;
    }
    return h;
}

PatternItem pattern_item(const Pattern& pat, int col, int pos) {
    if (pos < 0 || col < 0) throw std::out_of_range("pattern position");
    // walk slots; split cells show their halves in alternating order per period,
    // which is how the pattern figure draws them
    int s = 0, k = pos;
    while (true) {
        Slot x = pat.slot(col, s);
        int w = x.kind == SlotKind::Split ? 2 : 1;
        if (k < w) {
            if (x.kind == SlotKind::Full) return {x.back, 2, false};
            if (x.kind == SlotKind::HalfHeight) return {x.back, 1, false};
            int period = pat.period();
            bool swapped = (s / period) % 2 == 1 && pat.type() != AffineType::A1;
            int first = swapped ? x.front : x.back, second = swapped ? x.back : x.front;
            return k == 0 ? PatternItem{first, 2, true} : PatternItem{second, 0, false};
        }
        k -= w;
        ++s;
    }
}

Wall ground_state(const PatternPtr& pat) { return Wall{pat, {}}; }

Wall ground_state(AffineType type, int n, int lambda_index) {
    return ground_state(Pattern::make(type, n, lambda_index));
}

void trim(Wall& w) {
    while (!w.cols.empty() && w.cols.back() == w.pat->ground(static_cast<int>(w.cols.size()) - 1)) w.cols.pop_back();
}

Wall with_column(const Wall& w, int col, ColState st) {
    Wall out = w;
    while (static_cast<int>(out.cols.size()) <= col) out.cols.push_back(w.pat->ground(static_cast<int>(out.cols.size())));
    out.cols[col] = st;
    trim(out);
    return out;
}

bool rule4_at(const Wall& w, int col) {
    const Pattern& p = *w.pat;
    for (int j : {col, col + 1}) {
        if (j < 1) continue;
        auto a = p.heights(j, w.at(j));
        auto b = p.heights(j - 1, w.at(j - 1));
        if (a.first > b.first || a.second > b.second) return false;
    }
    return true;
}

bool rule4(const Wall& w) {
    for (int j = 1; j <= w.size(); ++j)
        if (!rule4_at(w, j)) return false;
    return true;
}

bool is_proper(const Wall& w) {
    const Pattern& p = *w.pat;
    if (p.type() == AffineType::A1) return true;
    std::vector<int> hs;
    for (int k = 0; k <= w.size(); ++k) {
        ColState st = w.at(k);
        if (p.full(k, st)) hs.push_back(p.heights(k, st).first);
    }
    std::sort(hs.begin(), hs.end());
    return std::adjacent_find(hs.begin(), hs.end()) == hs.end();
}

bool is_reduced(const Wall& w) {
    const Pattern& p = *w.pat;
    const int P = p.period();
    for (int k = 0; k < w.size(); ++k) {
        ColState ns{w.cols[k].c - P, w.cols[k].p};
        if (ns.c < 0 || !p.geq(k, ns, p.ground(k))) continue;
        Wall w2 = with_column(w, k, ns);
        if (rule4(w2) && is_proper(w2)) return false;
    }
    return true;
}

std::optional<Wall> add_block(const Wall& w, int col, int color) {
    for (auto& [c, ns] : w.pat->adds(col, w.at(col))) {
        if (c != color) continue;
        Wall w2 = with_column(w, col, ns);
        if (rule4_at(w2, col) && is_proper(w2)) return w2;
    }
    return std::nullopt;
}

std::optional<Wall> remove_block(const Wall& w, int col, int color) {
    for (auto& [c, ns] : w.pat->removes(col, w.at(col))) {
        if (c != color) continue;
        Wall w2 = with_column(w, col, ns);
        if (rule4_at(w2, col) && is_proper(w2)) return w2;
    }
    return std::nullopt;
}

std::optional<std::pair<Wall, int>> remove_block(const Wall& w, int col) {
    for (auto& [c, ns] : w.pat->removes(col, w.at(col))) {
        Wall w2 = with_column(w, col, ns);
        if (rule4_at(w2, col) && is_proper(w2)) return std::pair{w2, c};
    }
    return std::nullopt;
}

std::vector<int> block_counts(const Wall& w) {
    const Pattern& p = *w.pat;
    std::vector<int> c(p.n() + 1, 0);
    for (int k = 0; k < w.size(); ++k) {
        for (int x : p.item_colors(k, w.cols[k])) c[x]++;
        for (int x : p.item_colors(k, p.ground(k))) c[x]--;
    }
    return c;
}

int block_total(const Wall& w) {
    int s = 0;
    for (int x : block_counts(w)) s += x;
    return s;
}

WeightVector classical_weight(const Wall& w) {
    const Pattern& p = *w.pat;
    const auto& A = p.datum().cartan;
    auto cnt = block_counts(w);
    WeightVector out(p.n());
    for (int j = 1; j <= p.n(); ++j) {
        int v = j == p.lambda_index() ? 1 : 0;
        for (int i = 0; i <= p.n(); ++i) v -= cnt[i] * A[j][i];
        out[j - 1] = v;
    }
    return out;
}

bool contains(const Wall& a, const Wall& b) {
    if (!(*a.pat == *b.pat)) throw std::invalid_argument("walls belong to different contexts");
    int m = std::max(a.size(), b.size());
    for (int k = 0; k < m; ++k)
        if (!a.pat->geq(k, a.at(k), b.at(k))) return false;
    return true;
}

std::vector<int> fills(const Wall& w) {
    const Pattern& p = *w.pat;
    std::vector<int> out;
    out.reserve(w.cols.size());
    for (int k = 0; k < w.size(); ++k) {
        int d = p.items(k, w.cols[k]) - p.items(k, p.ground(k));
        out.push_back(w.cols[k].p == Top::Front ? -d : d);
    }
    return out;
}

Wall from_fills(const PatternPtr& pat, const std::vector<int>& f) {
    if (!f.empty() && f.back() == 0) throw std::invalid_argument("fills are not trimmed");
    Wall w{pat, {}};
    for (int k = 0; k < static_cast<int>(f.size()); ++k) {
        int d = f[k];
        bool front = d < 0;
        int steps = front ? -d - 1 : d;
        ColState st = pat->ground(k);
        for (int s = 0; s < steps; ++s) st = pat->adds(k, st).front().second;
        if (front) {
            if (st.p != Top::None || pat->slot(k, st.c).kind != SlotKind::Split)
                throw std::invalid_argument("negative fill does not end on a split cell");
            st.p = Top::Front;
        }
        w.cols.push_back(st);
    }
    trim(w);
    return w;
}

std::string encode(const Wall& w) {
    std::ostringstream os;
    auto f = fills(w);
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    return os.str();
}

nlohmann::ordered_json wall_to_json(const Wall& w) {
    nlohmann::ordered_json out;
    out["type"] = affine_name(w.pat->type());
    out["n"] = w.pat->n();
    out["lambda_index"] = w.pat->lambda_index();
    out["fills"] = fills(w);
    return out;
}

Wall wall_from_json(const nlohmann::ordered_json& j, PatternPtr pat) {
    AffineType t = parse_affine(j.at("type").get<std::string>());
    int n = j.at("n").get<int>();
    int lam = j.at("lambda_index").get<int>();
    if (!pat) pat = Pattern::make(t, n, lam);
    else if (pat->type() != t || pat->n() != n || pat->lambda_index() != lam)
        throw std::invalid_argument("wall context does not match");
    return from_fills(pat, j.at("fills").get<std::vector<int>>());
}

} // namespace yw
