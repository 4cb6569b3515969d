#include <doctest.h>

#include <random>

#include "yw/crystal.hpp"

using namespace yw;

namespace {

// level-one weights with a wall model in each type
std::vector<int> supported(AffineType t, int n) {
    switch (t) {
    case AffineType::A1: return {0, 1, n};
    case AffineType::A2tw: return {0, 1};
    case AffineType::B1: return {0, 1, n};
    case AffineType::D1: return {0, 1, n - 1, n};
    }
    return {};
}

} // namespace

TEST_CASE("phi minus epsilon is the weight pairing") {
    std::mt19937 rng(9);
    for (auto t : {AffineType::A1, AffineType::A2tw, AffineType::B1, AffineType::D1}) {
        for (int lam : supported(t, 4)) {
            auto p = Pattern::make(t, 4, lam);
            auto w = ground_state(p);
            for (int step = 0; step < 300; ++step) {
                for (int i = 1; i <= 4; ++i) {
                    CHECK(phi(w, i) - epsilon(w, i) == pairing(classical_weight(w), i));
                    if (auto x = f(w, i)) {
                        auto y = e(*x, i);
                        REQUIRE(y.has_value());
                        CHECK(*y == w);
                        CHECK(phi(*x, i) == phi(w, i) - 1);
                    } else {
                        CHECK(phi(w, i) == 0);
                    }
                    if (auto x = e(w, i)) {
                        auto y = f(*x, i);
                        REQUIRE(y.has_value());
                        CHECK(*y == w);
                    } else {
                        CHECK(epsilon(w, i) == 0);
                    }
                }
                // random walk that can also leave through colour 0
                int i = static_cast<int>(rng() % 5);
                auto x = rng() % 3 ? f(w, i) : e(w, i);
                if (x && block_total(*x) < 60) w = *x;
            }
        }
    }
}

TEST_CASE("signature reduction") {
    auto p = Pattern::make(AffineType::A1, 2, 0);
    auto g = ground_state(p);
    CHECK(column_signature(g, 0, 0) == "+");
    CHECK(column_signature(g, 0, 1) == "");
    auto s = signature(g, 0);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Sign{'+', 0});
    CHECK(!e(g, 0).has_value());
    auto x = f(g, 0);
    REQUIRE(x.has_value());
    CHECK(fills(*x) == std::vector<int>{1});
    for (const auto& sg : signature(*x, 1)) CHECK((sg.ch == '+' || sg.ch == '-'));
}

TEST_CASE("reduced signature has no +- pair") {
    std::mt19937 rng(1);
    auto p = Pattern::make(AffineType::B1, 3, 0);
    auto w = ground_state(p);
    for (int step = 0; step < 500; ++step) {
        for (int i = 0; i <= 3; ++i) {
            auto s = signature(w, i);
            for (std::size_t k = 0; k + 1 < s.size(); ++k) CHECK(!(s[k].ch == '+' && s[k + 1].ch == '-'));
            int minus = 0, plus = 0;
            for (auto& sg : s) (sg.ch == '-' ? minus : plus)++;
            CHECK(minus == epsilon(w, i));
            CHECK(plus == phi(w, i));
        }
        auto x = f(w, static_cast<int>(rng() % 4));
        if (x && block_total(*x) < 40) w = *x;
    }
}
