#include "kcross/numeric.hpp"

namespace kcross {

namespace {

// Round A/B (A >= 0, B > 0) to the nearest integer, ties to even.
BigInt round_half_even(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt rem = a - q * b;
    BigInt twice = rem * 2;
    if (twice > b) return q + 1;
    if (twice < b) return q;
    return (q % 2 == 0) ? q : q + 1;
}

int digit_count(BigInt v) {
    int d = 0;
    while (v > 0) { v /= 10; ++d; }
    return d;
}

BigInt pow10(int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

} // namespace

std::string decimal_string(const Rat& value, int digits) {
    if (digits < 1) throw std::invalid_argument("decimal_string: digits < 1");
    if (value == 0) return "0";

    BigInt p = boost::multiprecision::numerator(value);
    BigInt q = boost::multiprecision::denominator(value);
    bool neg = p < 0;
    if (neg) p = -p;

    // Exact integers print exactly.
    if (q == 1) {
        std::string s = p.str();
        return neg ? "-" + s : s;
    }

    // Scale so the rounded mantissa has exactly `digits` digits.
    // exp10 = decimal exponent of the leading digit.
    BigInt ipart = p / q;
    int exp10;
    BigInt mant;
    if (digit_count(ipart) >= digits) {
        int extra = digit_count(ipart) - digits;
        mant = round_half_even(p, q * pow10(extra));
        exp10 = digit_count(ipart) - 1;
    } else {
        int k = digits - digit_count(ipart);
        // If ipart == 0, keep multiplying until the scaled value reaches
        // digits integer digits.
        BigInt scaled = p * pow10(k);
        while (scaled / q < pow10(digits - 1)) {
            ++k;
            scaled *= 10;
        }
        mant = round_half_even(scaled, q);
        exp10 = digits - 1 - k;
    }
    if (mant == pow10(digits)) { // rounding overflowed to one more digit
        mant /= 10;
        ++exp10;
    }

    std::string m = mant.str();
    std::string out;
    if (exp10 >= digits) {
        // Too large for plain rendering at this precision.
        out = m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(exp10);
    } else if (exp10 >= 0) {
        out = m.substr(0, exp10 + 1);
        std::string frac = m.substr(exp10 + 1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    } else if (exp10 >= -6) {
        std::string frac(std::size_t(-exp10 - 1), '0');
        frac += m;
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = "0." + frac;
    } else {
        out = m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(exp10);
    }
    return neg ? "-" + out : out;
}

} // namespace kcross
