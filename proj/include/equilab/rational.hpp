#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace equilab {

/// Exact rational; mpq_class keeps values canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

Rational dot(const RationalVector& a, const RationalVector& b);

/// Least common multiple of all denominators (1 for an empty vector).
Integer common_denominator(const RationalVector& v);

/// Scales v to the primitive integer vector with a positive first nonzero entry.
RationalVector primitive_integer(const RationalVector& v);

}  // namespace equilab
