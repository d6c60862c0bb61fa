#include "simpd/distance_value.hpp"

namespace simpd {

std::string DistanceValue::to_string() const {
    switch (kind) {
        case Kind::Finite: return "Finite(" + std::to_string(value) + ")";
        case Kind::Infinite: return "inf";
        case Kind::Unknown: return "unknown(budget=" + note + ")";
    }
    return "?";
}

bool distance_leq(const DistanceValue& a, const DistanceValue& b) {
    if (a.is_unknown() || b.is_unknown())
        throw Error(ErrorCode::InvalidArgument, "cannot order undecided values");
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return a.value <= b.value;
}

} // namespace simpd
