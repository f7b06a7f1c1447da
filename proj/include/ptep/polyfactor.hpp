#pragma once

/**
 * @file polyfactor.hpp
 * @brief F_N(x;A) = P_N(x) * Q_N(x) and the vanishing weighted power sums.
 *
 * For a zero-sum vector A = (a_0, ..., a_{p-1}):
 *
 *   F_N(x;A) = sum_{n < p^N} a_{v_p(n)} x^n
 *   Q_N(x)   = (1 - x)(1 - x^p)(1 - x^{p^2}) ... (1 - x^{p^{N-1}})
 *
 * Q_N always divides F_N. The cofactor P_N is obtained two independent ways:
 * by exact division (factor_F) and by the block recursion (build_P_recursive)
 *
 *   P_1(x;A) = sum_{m <= p-2} (a_0 + ... + a_m) x^m
 *   P_N(x;A) = sum_{k <= p-2} x^{k p^{N-1}} P_{N-1}(x; B_k),  B_k = A_0 + ... + A_k
 *
 * where A_k is the k-th left cyclic shift of A. The coefficients of P_N can
 * only be nonzero on the index set C_N (build_C_indices).
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "ptm_sequence.hpp"
#include "rings.hpp"

namespace ptep {

namespace detail {

template <ZModule R>
void require_matching_length(const PTMParams& params, const ZeroSumVector<R>& a)
{
    if (a.p() != params.p())
        throw DomainError("coefficient vector has " + std::to_string(a.p()) + " entries but p=" +
                          std::to_string(params.p()));
}

} // namespace detail

/// F_N(x;A): coefficient n is A[v_p(n)].
template <ZModule R>
DensePolynomial<R> build_F(const PTMParams& params, const ZeroSumVector<R>& a)
{
    detail::require_matching_length(params, a);
    const auto block = ptm_block(params);
    std::vector<R> coeffs;
    coeffs.reserve(block.size());
    for (auto v : block) coeffs.push_back(a[static_cast<std::size_t>(v)]);
    return DensePolynomial<R>(std::move(coeffs));
}

/// F_N via F_N(x;A) = sum_k x^{k p^{N-1}} F_{N-1}(x;A_k). Does not consult v_p.
template <ZModule R>
DensePolynomial<R> build_F_by_recurrence(const PTMParams& params, const ZeroSumVector<R>& a)
{
    detail::require_matching_length(params, a);
    params.block_size();
    if (params.n() == 1) return DensePolynomial<R>(a.entries());
    const auto stride = params.power(params.n() - 1);
    DensePolynomial<R> out;
    for (std::int64_t k = 0; k < params.p(); ++k)
        out = out + build_F_by_recurrence(params.previous(), a.shifted(k)).shifted(static_cast<std::size_t>(k) * stride);
    return out;
}

/// Q_N(x) = prod_{m < N} (1 - x^{p^m}), built by shift-and-subtract.
inline IntPolynomial build_Q(const PTMParams& params)
{
    params.power(params.n() - 1);
    IntPolynomial q = one_minus_x_pow(1);
    for (std::int64_t m = 1; m < params.n(); ++m) {
        const auto d = static_cast<std::size_t>(params.power(m));
        q = q - q.shifted(d);
    }
    return q;
}

/// Exponents j of the unknowns c_j in C_N: C_1 = (0..p-2), and C_N is the
/// concatenation of C_{N-1} offset by k p^{N-1} for k = 0..p-2.
inline std::vector<std::uint64_t> build_C_indices(const PTMParams& params)
{
    const auto p = params.p();
    std::vector<std::uint64_t> idx;
    for (std::int64_t j = 0; j + 1 < p; ++j) idx.push_back(static_cast<std::uint64_t>(j));
    for (std::int64_t level = 2; level <= params.n(); ++level) {
        const auto offset = params.power(level - 1);
        std::vector<std::uint64_t> next;
        next.reserve(idx.size() * static_cast<std::size_t>(p - 1));
        for (std::int64_t k = 0; k + 1 < p; ++k)
            for (auto j : idx) next.push_back(j + static_cast<std::uint64_t>(k) * offset);
        idx = std::move(next);
    }
    return idx;
}

/// P_N resolved through the block recursion; the unknowns in block k of C_N
/// take the solution for the prefix-sum vector B_k.
template <ZModule R>
DensePolynomial<R> build_P_recursive(const PTMParams& params, const ZeroSumVector<R>& a)
{
    detail::require_matching_length(params, a);
    if (params.n() == 1) {
        std::vector<R> c;
        R running = a[0];
        c.push_back(running);
        for (std::size_t m = 1; m + 1 < static_cast<std::size_t>(a.p()); ++m) {
            running = running + a[m];
            c.push_back(running);
        }
        return DensePolynomial<R>(std::move(c));
    }
    const auto stride = params.power(params.n() - 1);
    const auto prefix = prefix_sum_vectors(a);
    DensePolynomial<R> out;
    for (std::size_t k = 0; k < prefix.size(); ++k)
        out = out + build_P_recursive(params.previous(), prefix[k]).shifted(k * stride);
    return out;
}

/// P_N by exact division of F_N by each binomial of Q_N in turn. A
/// NotDivisible here would contradict the factorization theorem.
template <ZModule R>
DensePolynomial<R> factor_F(const PTMParams& params, const ZeroSumVector<R>& a)
{
    auto quotient = build_F(params, a);
    for (std::int64_t m = 0; m < params.n(); ++m)
        quotient = exact_div_binomial(quotient, static_cast<std::size_t>(params.power(m)));
    return quotient;
}

/// Multiplicity of the root x = 1: the largest k with (1 - x)^k | f.
template <ZModule R>
std::size_t vanishing_order_at_one(const DensePolynomial<R>& f)
{
    if (f.is_zero()) throw DomainError("vanishing order of the zero polynomial is undefined");
    std::size_t order = 0;
    auto g = f;
    for (;;) {
        try {
            g = exact_div_binomial(g, 1);
        } catch (const NotDivisibleError&) {
            return order;
        }
        ++order;
    }
}

/// sum_{n < p^N} n^m A[v_p(n)], with 0^0 = 1. This is the m-th derivative of
/// F_N(e^t;A) at t = 0, evaluated as a finite sum.
template <ZModule R>
R weighted_power_sum(const PTMParams& params, const ZeroSumVector<R>& a, std::uint64_t m)
{
    detail::require_matching_length(params, a);
    const auto size = params.block_size();
    R total = zero_like(a[0]);
    for (std::uint64_t n = 0; n < size; ++n) {
        const BigInt power = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m));
        total = total + scale(a[static_cast<std::size_t>(vp(n, params.p()))], power);
    }
    return total;
}

} // namespace ptep
