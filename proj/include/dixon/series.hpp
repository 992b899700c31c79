#pragma once

// Truncated multivariate power series with exact integer coefficients. The
// truncation is a box: every exponent is at most T in every variable.

#include "dixon/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace dixon {

class MSeries {
public:
    MSeries(int num_vars, int truncation) : vars_(num_vars), trunc_(truncation)
    {
        if (num_vars < 1 || truncation < 0)
            throw DomainError("series needs at least one variable and a nonnegative truncation");
        std::size_t size = 1;
        for (int v = 0; v < vars_; ++v)
            size *= static_cast<std::size_t>(trunc_ + 1);
        coeffs_.assign(size, 0);
    }

    static MSeries constant(int num_vars, int truncation, const Integer& c)
    {
        MSeries s(num_vars, truncation);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * x^e; zero when e leaves the box.
    static MSeries monomial(int num_vars, int truncation, std::span<const int> exponents, const Integer& c = 1)
    {
        MSeries s(num_vars, truncation);
        if (s.in_box(exponents))
            s.coeffs_[s.index_of(exponents)] = c;
        return s;
    }

    static MSeries variable(int num_vars, int truncation, int which)
    {
        std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
        e[static_cast<std::size_t>(which)] = 1;
        return monomial(num_vars, truncation, e);
    }

    int num_vars() const { return vars_; }
    int truncation() const { return trunc_; }

    bool in_box(std::span<const int> e) const
    {
        if (static_cast<int>(e.size()) != vars_)
            throw DomainError("exponent tuple has " + std::to_string(e.size()) + " entries, series has " +
                              std::to_string(vars_) + " variables");
        for (int x : e)
            if (x < 0 || x > trunc_)
                return false;
        return true;
    }

    /// Coefficient of x^e; exponents beyond the truncation are an error.
    Integer coefficient(std::span<const int> e) const
    {
        if (!in_box(e))
            throw DomainError("exponent outside the truncation box");
        return coeffs_[index_of(e)];
    }
    Integer coefficient(std::initializer_list<int> e) const
    {
        return coefficient(std::span<const int>(e.begin(), e.size()));
    }

    const Integer& constant_term() const { return coeffs_[0]; }

    std::vector<int> exponents_of(std::size_t index) const
    {
        std::vector<int> e(static_cast<std::size_t>(vars_));
        for (int v = vars_ - 1; v >= 0; --v) {
            e[static_cast<std::size_t>(v)] = static_cast<int>(index % static_cast<std::size_t>(trunc_ + 1));
            index /= static_cast<std::size_t>(trunc_ + 1);
        }
        return e;
    }

    /// Nonzero terms visited in lexicographic exponent order.
    template <class Visitor>
    void for_each_term(Visitor&& visit) const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                visit(exponents_of(i), coeffs_[i]);
    }

    MSeries& operator+=(const MSeries& other)
    {
        check_compatible(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
        return *this;
    }
    MSeries& operator-=(const MSeries& other)
    {
        check_compatible(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= other.coeffs_[i];
        return *this;
    }
    MSeries operator-() const
    {
        MSeries out(*this);
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }
    friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
    friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }

    friend MSeries operator*(const MSeries& a, const MSeries& b)
    {
        a.check_compatible(b);
        const auto lhs = a.support();
        const auto rhs = b.support();
        MSeries out(a.vars_, a.trunc_);
        std::vector<int> sum(static_cast<std::size_t>(a.vars_));
        for (const auto& [ea, ia] : lhs) {
            for (const auto& [eb, ib] : rhs) {
                bool inside = true;
                for (std::size_t v = 0; v < sum.size() && inside; ++v) {
                    sum[v] = ea[v] + eb[v];
                    inside = sum[v] <= a.trunc_;
                }
                if (inside)
                    out.coeffs_[out.index_of(sum)] += a.coeffs_[ia] * b.coeffs_[ib];
            }
        }
        return out;
    }
    MSeries& operator*=(const MSeries& other) { return *this = *this * other; }

    friend MSeries operator*(const Integer& c, MSeries s)
    {
        for (auto& x : s.coeffs_)
            x *= c;
        return s;
    }

    MSeries pow(unsigned exponent) const
    {
        MSeries result = constant(vars_, trunc_, 1);
        for (unsigned i = 0; i < exponent; ++i)
            result *= *this;
        return result;
    }

    /// Inverse of a series with constant term ±1: c·Σ_k u^k with u = 1 - c·s.
    /// u has no constant term, so the sum stops at total degree vars·T.
    MSeries invert_unit() const
    {
        const Integer c = coeffs_[0];
        if (c != 1 && c != -1)
            throw DomainError("series inversion needs a constant term of ±1, got " + c.str());
        MSeries u = constant(vars_, trunc_, 1) - c * (*this);
        MSeries sum = constant(vars_, trunc_, 1);
        MSeries term = sum;
        for (int k = 1; k <= vars_ * trunc_; ++k) {
            term *= u;
            sum += term;
        }
        return c * sum;
    }

    /// Substitutes variable v by variable perm[v].
    MSeries permuted(std::span<const int> perm) const
    {
        if (static_cast<int>(perm.size()) != vars_)
            throw DomainError("permutation size does not match the variable count");
        MSeries out(vars_, trunc_);
        std::vector<int> target(static_cast<std::size_t>(vars_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                continue;
            const auto e = exponents_of(i);
            std::fill(target.begin(), target.end(), 0);
            for (std::size_t v = 0; v < e.size(); ++v)
                target[static_cast<std::size_t>(perm[v])] += e[v];
            out.coeffs_[out.index_of(target)] += coeffs_[i];
        }
        return out;
    }

    std::size_t term_count() const
    {
        std::size_t n = 0;
        for (const auto& c : coeffs_)
            if (c != 0)
                ++n;
        return n;
    }

    friend bool operator==(const MSeries&, const MSeries&) = default;

private:
    std::size_t index_of(std::span<const int> e) const
    {
        std::size_t index = 0;
        for (int x : e)
            index = index * static_cast<std::size_t>(trunc_ + 1) + static_cast<std::size_t>(x);
        return index;
    }

    std::vector<std::pair<std::vector<int>, std::size_t>> support() const
    {
        std::vector<std::pair<std::vector<int>, std::size_t>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                out.emplace_back(exponents_of(i), i);
        return out;
    }

    void check_compatible(const MSeries& other) const
    {
        if (vars_ != other.vars_ || trunc_ != other.trunc_)
            throw DomainError("series shapes differ");
    }

    int vars_;
    int trunc_;
    std::vector<Integer> coeffs_;
};

/// One line per nonzero monomial, `e1 e2 ... : coeff`, lexicographic.
inline void write_series(std::ostream& out, const MSeries& s)
{
    s.for_each_term([&](const std::vector<int>& e, const Integer& c) {
        for (std::size_t v = 0; v < e.size(); ++v)
            out << (v ? " " : "") << e[v];
        out << " : " << c << '\n';
    });
}

} // namespace dixon
