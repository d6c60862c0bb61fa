#pragma once

#include <string>

#include "simpd/error.hpp"

namespace simpd {

/// A non-negative integer, a proved infinity, or an undecided budget note.
/// Infinite means the search space was exhausted; Unknown means a budget
/// truncated the search and must never be read as a value.
struct DistanceValue {
    enum class Kind { Finite, Infinite, Unknown };

    Kind kind = Kind::Unknown;
    int value = 0;    // Finite only
    std::string note; // Unknown only

    static DistanceValue finite(int k) { return {Kind::Finite, k, {}}; }
    static DistanceValue infinite() { return {Kind::Infinite, 0, {}}; }
    static DistanceValue unknown(std::string note) {
        return {Kind::Unknown, 0, std::move(note)};
    }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    bool is_unknown() const { return kind == Kind::Unknown; }
    bool decided() const { return kind != Kind::Unknown; }

    bool operator==(const DistanceValue& o) const {
        return kind == o.kind && (kind != Kind::Finite || value == o.value);
    }
    bool operator!=(const DistanceValue& o) const { return !(*this == o); }

    /// "Finite(k)", "inf" or "unknown(budget=<note>)".
    std::string to_string() const;
};

/// Order with Infinite on top. Throws InvalidArgument on Unknown operands.
bool distance_leq(const DistanceValue& a, const DistanceValue& b);

} // namespace simpd
