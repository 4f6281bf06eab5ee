#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "jacobi/common.hpp"

namespace jacobi {

// A leg color is a base name plus a flavor.  Plain colors label ordinary legs,
// Dual marks the legs a pairing consumes on its left argument, Bar marks the
// fresh colors produced by a translation x -> x + xbar, and DualBar combines
// the two.
enum class Flavor : std::uint8_t { Plain = 0, Dual = 1, Bar = 2, DualBar = 3 };

struct Color {
    std::string base;
    Flavor flavor = Flavor::Plain;

    auto operator<=>(const Color&) const = default;
};

inline Color plain(std::string base) { return Color{std::move(base), Flavor::Plain}; }

inline Color dual_of(const Color& c) {
    switch (c.flavor) {
    case Flavor::Plain: return Color{c.base, Flavor::Dual};
    case Flavor::Bar:   return Color{c.base, Flavor::DualBar};
    default:
        throw InputError("color: '" + c.base + "' is already dual");
    }
}

inline Color bar_of(const Color& c) {
    switch (c.flavor) {
    case Flavor::Plain: return Color{c.base, Flavor::Bar};
    case Flavor::Dual:  return Color{c.base, Flavor::DualBar};
    default:
        throw InputError("color: '" + c.base + "' is already translated");
    }
}

// Display form: x, *x, x~, *x~.
inline std::string to_string(const Color& c) {
    switch (c.flavor) {
    case Flavor::Plain:   return c.base;
    case Flavor::Dual:    return "*" + c.base;
    case Flavor::Bar:     return c.base + "~";
    case Flavor::DualBar: return "*" + c.base + "~";
    }
    return c.base;
}

} // namespace jacobi
