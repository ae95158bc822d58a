#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kcross {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// n*(n-1)/2 without overflow.
inline BigInt binom2(const BigInt& n) {
    if (n < 2) return 0;
    return n * (n - 1) / 2;
}

inline BigInt pow2(unsigned e) {
    BigInt r = 1;
    return r << e;
}

/// Index of the unordered pair {i,j}, i<j, in the lexicographic listing
/// (0,1),(0,2),...,(0,n-1),(1,2),... of all pairs over n vertices.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    if (i > j) std::swap(i, j);
    if (i == j || j >= n) throw std::invalid_argument("pair_index: bad pair");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Renders an exact rational in decimal with `digits` significant digits,
/// round half to even. Exact integers with few digits render without a
/// fractional part.
std::string decimal_string(const Rat& value, int digits = 17);

} // namespace kcross
