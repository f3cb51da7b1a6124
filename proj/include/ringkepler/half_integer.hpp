#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

namespace ringkepler {

/// A number from {..., -1, -1/2, 0, 1/2, 1, ...} stored as twice its value so
/// parity and range tests stay in exact integer arithmetic.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    /// Both values differ by an integer.
    constexpr bool same_parity(HalfInt o) const { return ((twice_ - o.twice_) % 2) == 0; }

    /// "3/2", "-1/2", "2".
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    /// Accepts "k" or "k/2" (and the degenerate "2k/2"). Throws std::invalid_argument.
    static HalfInt parse(std::string_view text);

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

constexpr HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

}  // namespace ringkepler
