#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace contact_atlas {

// Arbitrary-precision integers and rationals. All modules compute exactly;
// the single floating-point computation in the library lives in
// kk_pullback_check and is documented there.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// "p" when the denominator is 1, otherwise "p/q"; used by every serializer
// so reports stay byte-stable.
inline std::string rat_to_string(const Rat& r) {
    Int n = rat_num(r);
    Int d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace contact_atlas
