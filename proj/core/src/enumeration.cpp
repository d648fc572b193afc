#include "dyck/enumeration.hpp"

#include <algorithm>

namespace dyck {

Integer binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Integer result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

Integer exact_div(const Integer& value, const Integer& divisor) {
    Integer q, r;
    boost::multiprecision::divide_qr(value, divisor, q, r);
    if (r != 0) {
        throw InexactDivision("division of " + value.str() + " by " + divisor.str() +
                              " leaves remainder " + r.str());
    }
    return q;
}

Series::Series(std::vector<Integer> coeffs, int order)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::operator+(const Series& other) const {
    Series result(std::max(order(), other.order()));
    for (int n = 0; n <= result.order(); ++n) {
        if (n <= order()) result.coeff(n) += coeff(n);
        if (n <= other.order()) result.coeff(n) += other.coeff(n);
    }
    return result;
}

Series Series::operator-(const Series& other) const {
    Series result(std::max(order(), other.order()));
    for (int n = 0; n <= result.order(); ++n) {
        if (n <= order()) result.coeff(n) += coeff(n);
        if (n <= other.order()) result.coeff(n) -= other.coeff(n);
    }
    return result;
}

Series Series::operator*(const Series& other) const {
    const int n = std::max(order(), other.order());
    Series result(n);
    for (int i = 0; i <= std::min(n, order()); ++i) {
        if (coeff(i) == 0) continue;
        for (int j = 0; j <= std::min(n - i, other.order()); ++j) {
            result.coeff(i + j) += coeff(i) * other.coeff(j);
        }
    }
    return result;
}

Series Series::shift_up() const {
    Series result(order());
    for (int n = order(); n >= 1; --n) result.coeff(n) = coeff(n - 1);
    return result;
}

Series solve_master(const std::vector<Integer>& weights, int order) {
    if (weights.empty() || weights.front() < 1) {
        throw InvalidBound("solve_master requires a weight sequence with a_0 >= 1");
    }
    // Coefficient n of the fixed point depends only on a_0..a_n and on the
    // coefficients 0..n-1, so `order`+1 rounds of M <- A(xM) converge.
    Series m(order);
    m.coeff(0) = weights[0];
    const int top = std::min<int>(order, static_cast<int>(weights.size()) - 1);
    for (int round = 0; round <= order; ++round) {
        Series xm = m.shift_up();
        // Horner evaluation of A at xM, truncated.
        Series acc(order);
        acc.coeff(0) = weights[static_cast<std::size_t>(top)];
        for (int i = top - 1; i >= 0; --i) {
            acc = acc * xm;
            acc.coeff(0) += weights[static_cast<std::size_t>(i)];
        }
        m = acc;
    }
    return m;
}

Integer count_catalan_coloured(int n) {
    if (n == 0) return 1;
    return exact_div(binomial(3LL * n, n), 2 * n + 1);
}

Integer count_bounded(int n, int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    if (n == 0) return 1;
    Integer total = 0;
    // All p with n - mp >= 1. The naive upper limit n/m - 1 drops the p = 1
    // term for (n, m) = (3, 2) and then disagrees with brute force.
    for (int p = 0; n - static_cast<long long>(m) * p >= 1; ++p) {
        const long long q = n - static_cast<long long>(m) * p;
        Integer term = binomial(q, p) * binomial(3LL * n - static_cast<long long>(m) * p - p, q - 1);
        term = exact_div(term, q);
        if (p % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

Integer count_fibonacci(int n, int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    if (n == 0) return 1;
    Integer total = 0;
    for (int ell = 0; ell <= n - 1; ++ell) {
        Integer inner = 0;
        for (int i = 0; i <= ell + 1; ++i) {
            Integer part = binomial(n - 1 - static_cast<long long>(m) * i, ell) * binomial(ell + 1, i);
            if (i % 2 == 0) {
                inner += part;
            } else {
                inner -= part;
            }
        }
        total += exact_div(binomial(n + ell + 1, ell) * inner, ell + 1);
    }
    return total;
}

Integer count_little_schroeder(int n) {
    if (n == 0) return 1;
    Integer sum = 0;
    Integer pow2 = 1;
    for (int i = 0; i <= n - 1; ++i) {
        sum += binomial(n, i) * binomial(n, i + 1) * pow2;
        pow2 *= 2;
    }
    return exact_div(sum, n);
}

Integer count_schroeder_coloured(int n) {
    if (n == 0) return 1;
    Integer sum = 0;
    Integer pow2 = 2;
    for (int k = 0; k <= n - 1; ++k) {
        sum += binomial(2LL * n, k) * binomial(n, k + 1) * pow2;
        pow2 *= 2;
    }
    return exact_div(sum, n);
}

Integer catalan_number(int n) {
    return exact_div(binomial(2LL * n, n), n + 1);
}

Integer bounded_ascent_count(int n, int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    // Ascent-bounded Dyck paths are the trivially coloured paths with weights
    // a_j = 1 for j <= m, so the master equation counts them directly.
    std::vector<Integer> weights(static_cast<std::size_t>(std::min(n, m)) + 1, 1);
    return solve_master(weights, n).coeff(n);
}

Integer fibonacci_path_count(int n, int m) {
    if (m < 1) throw InvalidBound("bound m must be >= 1");
    std::vector<Integer> f(static_cast<std::size_t>(n) + 1);
    f[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= std::min(i, m); ++j) f[static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(i - j)];
    }
    return f[static_cast<std::size_t>(n)];
}

Integer fibonacci_free_count(int n) {
    if (n == 0) return 1;
    Integer result = 1;
    return result << (n - 1);
}

Integer schroeder_number(int n) {
    // S = 1 + xS + xS^2 gives s_n = s_{n-1} + sum_i s_i s_{n-1-i}.
    std::vector<Integer> s(static_cast<std::size_t>(n) + 1);
    s[0] = 1;
    for (int i = 1; i <= n; ++i) {
        Integer value = s[static_cast<std::size_t>(i - 1)];
        for (int j = 0; j <= i - 1; ++j) value += s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(i - 1 - j)];
        s[static_cast<std::size_t>(i)] = value;
    }
    return s[static_cast<std::size_t>(n)];
}

} // namespace dyck
