#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace c2lab {

using Int = boost::multiprecision::cpp_int;

inline std::string to_string(const Int& x) { return x.str(); }

// Floor modulus into [0, m).
inline long long mod_floor(const Int& x, long long m) {
    Int r = x % m;
    if (r < 0) r += m;
    return static_cast<long long>(r);
}

}  // namespace c2lab
