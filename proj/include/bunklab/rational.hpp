#ifndef BUNKLAB_RATIONAL_HPP
#define BUNKLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bunklab {

// Exact rational, always kept in lowest terms (mpq canonical form).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "3", "1/2" or a decimal literal like "0.0349" (exact base-10).
// Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

// "num/den", or just "num" when den == 1.
std::string rat_to_string(const Rat& r);

Rat rat_pow(const Rat& base, unsigned long exp);

// true iff 0 <= r <= 1
bool is_probability(const Rat& r);

// Approximate base-10 logarithm of |r|; r must be nonzero.
double rat_log10_abs(const Rat& r);

}  // namespace bunklab

#endif
