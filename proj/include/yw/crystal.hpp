#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yw/wall.hpp"

namespace yw {

struct Sign {
    char ch; // '+' or '-'
    int col;
    bool operator==(const Sign&) const = default;
};

// "", "-", "+", "--", "-+", "++"
std::string column_signature(const Wall& w, int col, int i);
// reduced i-signature, read from the leftmost column down to column 0
std::vector<Sign> signature(const Wall& w, int i);

std::optional<Wall> f(const Wall& w, int i);
std::optional<Wall> e(const Wall& w, int i);
int epsilon(const Wall& w, int i);
int phi(const Wall& w, int i);

} // namespace yw
