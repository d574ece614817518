#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace bentice {

constexpr int kMaxRowIndex = 8;

// Spectral index of a row: j, j-bar, or the central row (0 or n).
struct RowLabel {
    enum class Kind : uint8_t { plain, bar, central };
    Kind kind = Kind::plain;
    int index = 0;

    static RowLabel plain(int j) { return {Kind::plain, j}; }
    static RowLabel bar(int j) { return {Kind::bar, j}; }
    static RowLabel central(int j) { return {Kind::central, j}; }

    bool is_central() const { return kind == Kind::central; }
    bool is_bar() const { return kind == Kind::bar; }
    RowLabel barred() const {
        if (kind == Kind::plain) return bar(index);
        if (kind == Kind::bar) return plain(index);
        return *this;
    }
    std::string str() const {
        return std::to_string(index) + (kind == Kind::bar ? "bar" : "");
    }
    std::string latex() const {
        return kind == Kind::bar ? "\\bar{" + std::to_string(index) + "}" : std::to_string(index);
    }

    auto operator<=>(const RowLabel&) const = default;
};

}  // namespace bentice
