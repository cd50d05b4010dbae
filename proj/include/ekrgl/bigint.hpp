#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ekrgl {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(unsigned base, unsigned exp) {
    BigInt r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace ekrgl
