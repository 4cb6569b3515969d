#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "yw/liealg.hpp"

namespace yw {

// One cell of a column pattern. A split cell holds two half-thickness blocks that
// may be placed in either order; a half-height cell is one of the B_n^(1) n-blocks.
enum class SlotKind : std::uint8_t { Full, HalfHeight, Split };

struct Slot {
    SlotKind kind;
    int back;  // colour (for Full/HalfHeight the only colour)
    int front; // second half of a split cell, else equal to back
};

enum class Top : std::uint8_t { None = 0, Back = 1, Front = 2 };

// Column state: `c` complete slots, plus an optional half of slot `c`.
struct ColState {
    int c = 0;
    Top p = Top::None;
    auto operator<=>(const ColState&) const = default;
};

struct PatternItem {
    int color;
    int extent;     // half-units of height added: 0, 1 or 2
    bool half_top;  // top is half thickness after placing this item
    bool operator==(const PatternItem&) const = default;
};

class Pattern {
public:
    static std::shared_ptr<const Pattern> make(AffineType type, int n, int lambda_index);

    AffineType type() const { return type_; }
    int n() const { return n_; }
    int lambda_index() const { return lam_; }
    const AffineDatum& datum() const { return datum_; }

    Slot slot(int col, int s) const;
    ColState ground(int col) const;
    // number of slots in one delta-column
    int period() const;
    // (back, front) heights in half units
    std::pair<int, int> heights(int col, ColState st) const;
    bool full(int col, ColState st) const;
    bool geq(int col, ColState a, ColState b) const;
    // items placed in the column (split cells count two)
    int items(int col, ColState st) const;
    // colour list of items placed (split cells in nominal order)
    std::vector<int> item_colors(int col, ColState st) const;

    // column moves: (colour, new state)
    std::vector<std::pair<int, ColState>> adds(int col, ColState st) const;
    std::vector<std::pair<int, ColState>> removes(int col, ColState st) const;

    bool operator==(const Pattern& o) const { return type_ == o.type_ && n_ == o.n_ && lam_ == o.lam_; }

private:
    struct Table {
        std::vector<Slot> prefix;
        std::vector<Slot> cycle;
        std::vector<int> prefix_h; // cumulative heights, size prefix+1
        std::vector<int> cycle_h;  // size cycle+1
        ColState ground;
    };
    const Table& table(int col) const;
    int key(int col) const;

    AffineType type_;
    int n_;
    int lam_;
    AffineDatum datum_;
    std::vector<Table> tables_;
};

using PatternPtr = std::shared_ptr<const Pattern>;

struct Wall {
    PatternPtr pat;
    std::vector<ColState> cols; // column 0 first, trailing ground columns trimmed

    ColState at(int col) const { return col < static_cast<int>(cols.size()) ? cols[col] : pat->ground(col); }
    int size() const { return static_cast<int>(cols.size()); }
    bool operator==(const Wall& o) const { return cols == o.cols; }
    bool operator<(const Wall& o) const;
};

struct WallHash {
    std::size_t operator()(const Wall& w) const noexcept;
};

PatternItem pattern_item(const Pattern& pat, int col, int pos);
Wall ground_state(AffineType type, int n, int lambda_index);
Wall ground_state(const PatternPtr& pat);

void trim(Wall& w);
Wall with_column(const Wall& w, int col, ColState st);

// rule (4): column heights weakly decrease leftward, checked around `col`
bool rule4_at(const Wall& w, int col);
bool rule4(const Wall& w);
bool is_proper(const Wall& w);
bool is_reduced(const Wall& w);

std::optional<Wall> add_block(const Wall& w, int col, int color);
std::optional<Wall> remove_block(const Wall& w, int col, int color);
// Removes the block on top of `col`; a complete split cell gives up its front half first.
std::optional<std::pair<Wall, int>> remove_block(const Wall& w, int col);

// number of colour-i items above ground, i = 0..n
std::vector<int> block_counts(const Wall& w);
int block_total(const Wall& w);
WeightVector classical_weight(const Wall& w);
bool contains(const Wall& a, const Wall& b);

// signed fill per column: items above ground, negated for a front-only top half
std::vector<int> fills(const Wall& w);
Wall from_fills(const PatternPtr& pat, const std::vector<int>& f);
std::string encode(const Wall& w);

nlohmann::ordered_json wall_to_json(const Wall& w);
Wall wall_from_json(const nlohmann::ordered_json& j, PatternPtr pat = nullptr);

} // namespace yw
