#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dixon {

using Integer = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Integer factorial(std::int64_t n)
{
    if (n < 0)
        throw std::domain_error("factorial of a negative number");
    Integer result = 1;
    for (std::int64_t i = 2; i <= n; ++i)
        result *= i;
    return result;
}

inline Integer power(const Integer& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

/// (-1)^e for any integer e.
inline int sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Integer& value) { return value.str(); }

/// Errors raised across the library. Each maps onto a CLI exit code.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dixon
