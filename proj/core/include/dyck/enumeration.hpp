#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "dyck/errors.hpp"

namespace dyck {

/// Exact arbitrary-precision integer used for all counts and coefficients.
using Integer = boost::multiprecision::cpp_int;

/// Binomial coefficient with the combinatorial zero convention:
/// binom(a, b) = 0 whenever a < 0, b < 0 or b > a.
Integer binomial(long long a, long long b);

/// Exact integer division; throws InexactDivision if `divisor` does not
/// divide `value`.
Integer exact_div(const Integer& value, const Integer& divisor);

/// Truncated power series with exact integer coefficients. All arithmetic is
/// performed modulo x^(order+1).
class Series {
public:
    Series() : coeffs_(1) {}
    explicit Series(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    Series(std::vector<Integer> coeffs, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    Integer& coeff(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    Series operator+(const Series& other) const;
    Series operator-(const Series& other) const;
    Series operator*(const Series& other) const;

    /// Multiplies by x (shifting coefficients up, dropping the top one).
    Series shift_up() const;

    bool operator==(const Series&) const = default;

private:
    std::vector<Integer> coeffs_;
};

/// Solves M = A(xM) coefficient-wise for the weight sequence a_0..a_N, where
/// A(y) = sum a_i y^i. Requires a_0 >= 1. The n-th coefficient of the result
/// counts Dyck paths of semilength n whose k-ascents carry a_k colours each.
Series solve_master(const std::vector<Integer>& weights, int order);

/// C(3n, n) / (2n + 1): Dyck paths with ascents coloured by Dyck paths, also
/// the number of non-crossing trees on n+1 vertices.
Integer count_catalan_coloured(int n);

/// Closed form for Dyck paths with ascents coloured by paths with ascent
/// lengths at most m. The sum ranges over all p >= 0 with n - mp >= 1.
Integer count_bounded(int n, int m);

/// Closed form for Dyck paths with ascents coloured by pyramid concatenations
/// with pyramid sizes at most m.
Integer count_fibonacci(int n, int m);

/// (1/n) * sum_i C(n,i) C(n,i+1) 2^i: little Schroeder numbers, the count of
/// Dyck paths with ascents coloured by unrestricted pyramid concatenations.
Integer count_little_schroeder(int n);

/// (1/n) * sum_k C(2n,k) C(n,k+1) 2^(k+1): Dyck paths with ascents coloured
/// by Schroeder paths, also the count of paths to (3n,0) with steps
/// (1,2), (2,1), (1,-1).
Integer count_schroeder_coloured(int n);

/// Standard sequence helpers used as colour-set cardinalities.
Integer catalan_number(int n);
/// Number of Dyck paths of semilength n with every ascent of length <= m.
Integer bounded_ascent_count(int n, int m);
/// Number of concatenations of pyramids of size <= m with total semilength n.
Integer fibonacci_path_count(int n, int m);
/// 2^(n-1) for n > 0; 1 for n = 0.
Integer fibonacci_free_count(int n);
/// Large Schroeder numbers 1, 2, 6, 22, 90, ...
Integer schroeder_number(int n);

} // namespace dyck
