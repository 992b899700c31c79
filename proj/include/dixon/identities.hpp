#pragma once

// Closed-form binomial identities checked by exact summation.

#include "dixon/integer.hpp"

#include <algorithm>
#include <cstdint>

namespace dixon {

/// Σ_s (-1)^s C(n,s)^p.
inline Integer power_sum_lhs(std::int64_t n, unsigned p)
{
    Integer sum = 0;
    for (std::int64_t s = 0; s <= n; ++s)
        sum += sign_power(s) * power(binomial(n, s), p);
    return sum;
}

inline Integer dixon_lhs(std::int64_t n) { return power_sum_lhs(n, 3); }

/// 0 for odd n, else (-1)^{n/2} (3n/2)! / ((n/2)!)^3.
inline Integer dixon_rhs(std::int64_t n)
{
    if (n % 2 != 0)
        return 0;
    const std::int64_t h = n / 2;
    return sign_power(h) * (factorial(3 * h) / power(factorial(h), 3));
}

/// 0 for odd n, else (-1)^{n/2} C(n, n/2).
inline Integer aigner_rhs(std::int64_t n)
{
    if (n % 2 != 0)
        return 0;
    return sign_power(n / 2) * binomial(n, n / 2);
}

/// Well-poised 3F2 sum over s from max(0, n1-n2, n3-n2) to
/// min(n1, n3, n1+n3-n2); an empty range sums to 0.
inline Integer threeF2_lhs(std::int64_t n1, std::int64_t n2, std::int64_t n3)
{
    const std::int64_t lo = std::max({std::int64_t{0}, n1 - n2, n3 - n2});
    const std::int64_t hi = std::min({n1, n3, n1 + n3 - n2});
    Integer sum = 0;
    for (std::int64_t s = lo; s <= hi; ++s)
        sum += sign_power(s) * binomial(n3, s) * binomial(n2, n1 - s) * binomial(n1, n2 - n3 + s);
    return sum;
}

/// 0 for odd N = n1+n2+n3, else (-1)^{N/2-n2} (N/2)! / ((N/2-n1)!(N/2-n2)!(N/2-n3)!),
/// taken as 0 when a factorial argument is negative.
inline Integer threeF2_rhs(std::int64_t n1, std::int64_t n2, std::int64_t n3)
{
    const std::int64_t total = n1 + n2 + n3;
    if (total % 2 != 0)
        return 0;
    const std::int64_t h = total / 2;
    if (h - n1 < 0 || h - n2 < 0 || h - n3 < 0)
        return 0;
    return sign_power(h - n2) * (factorial(h) / (factorial(h - n1) * factorial(h - n2) * factorial(h - n3)));
}

} // namespace dixon
