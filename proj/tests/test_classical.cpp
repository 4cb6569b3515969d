#include <doctest.h>

#include <set>

#include "yw/classical.hpp"

using namespace yw;

namespace {

std::set<std::vector<int>> fill_set(const std::vector<Wall>& ws) {
    std::set<std::vector<int>> out;
    for (auto& w : ws) out.insert(fills(w));
    return out;
}

// members of F(lambda) versus the connected component of H
void check_oracle(Family f, int n, const DominantWeight& l) {
    auto ctx = make_context(f, n, l);
    auto F = enumerate_F(ctx);
    auto comp = fill_set(reachable(ctx));
    std::set<std::vector<int>> mem;
    for (auto& w : F)
        if (member(ctx, w).ok) mem.insert(fills(w));
    CHECK(mem == comp);
    CHECK(BigInt(comp.size()) == weyl_dimension(RootDatum::make(f, n), l));
}

} // namespace

TEST_CASE("H and L weights") {
    auto ctx = make_context(Family::B, 3, {0, 1, 0});
    CHECK(classical_weight(build_H(ctx)) == WeightVector{0, 1, 0});
    CHECK(classical_weight(build_L(ctx)) == WeightVector{0, -1, 0});
    CHECK(ctx.H == build_H(ctx));
    CHECK(ctx.L == build_L(ctx));
    for (int i = 1; i <= 3; ++i) {
        CHECK(!e(ctx.H, i).has_value());
        CHECK(!f(ctx.L, i).has_value());
    }
}

TEST_CASE("H is highest and L lowest across families") {
    for (auto [fam, n, l] : std::vector<std::tuple<Family, int, DominantWeight>>{
             {Family::A, 3, {1, 0, 2}},
             {Family::B, 4, {1, 0, 1, 1}},
             {Family::C, 3, {2, 1, 0}},
             {Family::D, 5, {0, 1, 0, 1, 2}}}) {
        auto ctx = make_context(fam, n, l);
        CHECK(classical_weight(ctx.H) == l);
        auto low = classical_weight(ctx.L);
        for (int i = 1; i <= n; ++i) {
            CHECK(!e(ctx.H, i).has_value());
            CHECK(!f(ctx.L, i).has_value());
        }
        CHECK(in_F(ctx, ctx.H));
        CHECK(in_F(ctx, ctx.L));
        CHECK(member(ctx, ctx.H).ok);
        CHECK(member(ctx, ctx.L).ok);
        CHECK(contains(ctx.L, ctx.H));
        (void)low;
    }
}

TEST_CASE("level-one weight selection") {
    CHECK(make_context(Family::B, 3, {1, 0, 1}).Lambda == 3);
    CHECK(make_context(Family::B, 3, {0, 1, 0}).Lambda == 0);
    CHECK(make_context(Family::A, 4, {0, 1, 1, 0}).Lambda == 0);
    CHECK_THROWS(make_context(Family::D, 3, {1, 0, 0}));
    CHECK_THROWS(make_context(Family::B, 3, {1, 0}));
}

TEST_CASE("B3 spin weight: the full component of H lies in F") {
    auto ctx = make_context(Family::B, 3, {0, 0, 1});
    auto F = enumerate_F(ctx);
    CHECK(F.size() == 8);
    auto comp = reachable(ctx);
    CHECK(comp.size() == 8);
    for (auto& w : comp) {
        CHECK(in_F(ctx, w));
        CHECK(member(ctx, w).ok);
    }
}

TEST_CASE("walls outside F are rejected with tag F") {
    auto ctx = make_context(Family::B, 3, {1, 0, 0});
    auto g = ground_state(ctx.pat);
    if (!(g == ctx.H)) {
        auto r = member(ctx, g);
        CHECK(!r.ok);
        CHECK(r.tag == "F");
    }
    auto mv = ctx.pat->adds(0, ctx.L.at(0));
    REQUIRE(!mv.empty());
    auto beyond = with_column(ctx.L, 0, mv.front().second);
    auto r = member(ctx, beyond);
    CHECK(!r.ok);
    CHECK(r.tag == "F");
}

TEST_CASE("parts of a type A wall") {
    auto ctx = make_context(Family::A, 4, {0, 1, 1, 0});
    auto w = from_fills(ctx.pat, {5, 4, 2, 2, 1});
    auto p = parts(ctx, w, 0);
    CHECK(p.upper.blocks() == 3);
    CHECK(p.lower.blocks() == 4);
    CHECK(p.upper.contained_in(p.lower));
    CHECK(!p.lower.contained_in(p.upper));
    CHECK(member(ctx, w).ok);
    auto bad = from_fills(ctx.pat, {5, 3, 1, 1, 1});
    auto r = member(ctx, bad);
    CHECK(!r.ok);
    CHECK(r.tag == "chain");
}

TEST_CASE("reflect_shift is idempotent") {
    auto ctx = make_context(Family::D, 4, {0, 0, 1, 2});
    for (auto& w : enumerate_F(ctx)) {
        for (int k = 0; k < ctx.t; ++k) {
            auto tp = triangle_parts(ctx, w, k);
            auto once = reflect_shift(tp.minus);
            auto twice = reflect_shift(once);
            CHECK(once.lengths == twice.lengths);
            CHECK(once.colors == twice.colors);
            CHECK(once.blocks() == tp.minus.blocks());
        }
    }
}

TEST_CASE("membership equals the component of H") {
    check_oracle(Family::A, 2, {1, 1});
    check_oracle(Family::A, 3, {1, 1, 1});
    check_oracle(Family::A, 4, {0, 1, 1, 0});
    check_oracle(Family::B, 3, {1, 0, 1});
    check_oracle(Family::B, 3, {0, 1, 1});
    check_oracle(Family::B, 3, {1, 1, 0});
    check_oracle(Family::B, 4, {0, 0, 1, 1});
    check_oracle(Family::C, 3, {0, 1, 1});
    check_oracle(Family::C, 3, {1, 1, 0});
    check_oracle(Family::C, 4, {0, 1, 0, 1});
    check_oracle(Family::D, 4, {0, 0, 1, 1});
    check_oracle(Family::D, 4, {0, 1, 1, 0});
    check_oracle(Family::D, 4, {1, 0, 1, 1});
    check_oracle(Family::D, 5, {0, 1, 0, 0, 1});
}

TEST_CASE("context json round trip") {
    auto ctx = make_context(Family::D, 4, {0, 0, 1, 2});
    auto back = context_from_json(ctx.to_json());
    CHECK(back.lambda == ctx.lambda);
    CHECK(back.Lambda == ctx.Lambda);
    CHECK(back.H == ctx.H);
    CHECK(back.L == ctx.L);
}
