#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yw/crystal.hpp"
#include "yw/liealg.hpp"
#include "yw/wall.hpp"

namespace yw {

struct LambdaContext {
    Family family;
    int n;
    DominantWeight lambda;
    OmegaDecomposition dec;
    int Lambda;              // chosen level-one weight index
    PatternPtr pat;
    bool spin = false;
    int t = 0;               // number of omega parts
    std::vector<int> offsets; // first column of each group
    std::vector<int> widths;  // columns per group
    std::vector<int> padding; // slots of delta padding under each group
    int ncols = 0;            // columns used by the omega groups; spin group follows
    Wall H;
    Wall L;

    int omega(int k) const { return dec.omegas[k]; }
    // slot index where the staircase of group k starts (not used for A)
    int base_slot(int k) const;
    // slot of the n-row ((n-1,n)-row for D) in group k, and the first slot above it
    int row_slot(int k) const;
    int row_top(int k) const;
    nlohmann::ordered_json to_json() const;
};

int group_width(Family f, int n, int i);
int min_rank(Family f);

LambdaContext make_context(Family f, int n, const DominantWeight& lambda);
LambdaContext context_from_json(const nlohmann::ordered_json& j);

Wall build_H(const LambdaContext& ctx);
Wall build_L(const LambdaContext& ctx);
bool in_F(const LambdaContext& ctx, const Wall& w);
// every proper reduced wall between H and L
std::vector<Wall> enumerate_F(const LambdaContext& ctx);
// connected component of H under f_i, e_i (i = 1..n) with no membership filter
std::vector<Wall> reachable(const LambdaContext& ctx, std::size_t limit = 0);

// A shape cut out of a wall. `lines` are columns (right to left) or rows
// (distance from the anchor row), holding atom counts: a full cell is 2, a half cell 1.
struct WallPart {
    enum class Orientation { Columns, Rows };
    std::string region;
    Orientation orientation = Orientation::Columns;
    int anchor = 0;
    std::vector<int> lengths;
    std::vector<std::vector<int>> colors;

    int blocks() const;
    bool empty() const { return blocks() == 0; }
    bool contained_in(const WallPart& o) const;
};

struct Parts {
    WallPart interior; // blocks above H in the group
    WallPart bar;      // w cut to L in the group
    WallPart upper;    // Y^{omega_{i_k}}, read top to bottom
    WallPart lower;    // Y^{omega_{i_{k+1}}}, read right to left
};

// k is 0-based
Parts parts(const LambdaContext& ctx, const Wall& w, int k);
std::pair<WallPart, WallPart> n_row_split(const LambdaContext& ctx, const Wall& w, int k);
WallPart reflect_shift(const WallPart& p);

struct TriangleParts {
    WallPart plus;
    WallPart minus;
    WallPart minus_reflected;
};
// pair k couples groups k and k+1; k = t-1 couples the last group with the spin group
TriangleParts triangle_parts(const LambdaContext& ctx, const Wall& w, int k);

struct C1Hit {
    int a, p, q;
    int k;      // lower group index
    bool spin;  // partner is the spin group
    bool operator==(const C1Hit&) const = default;
};
struct C2Hit {
    int p, q;
    int k;
    bool spin;
    bool operator==(const C2Hit&) const = default;
};
std::vector<C1Hit> detect_C1(const LambdaContext& ctx, const Wall& w, int k);
std::vector<C2Hit> detect_C2(const LambdaContext& ctx, const Wall& w, int k);

struct MemberResult {
    bool ok;
    std::string tag; // empty when ok; "F" when w is not in F(lambda)
};
MemberResult member(const LambdaContext& ctx, const Wall& w);

} // namespace yw
