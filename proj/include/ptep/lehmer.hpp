#pragma once

/**
 * @file lehmer.hpp
 * @brief Lehmer's construction over arbitrary positive weights, and the
 *        root-of-unity product identity.
 *
 * For weights mu_0..mu_M every tuple (a_0, ..., a_M) in {0..p-1}^{M+1}
 * contributes the value n = a_0 mu_0 + ... + a_M mu_M to class
 * (a_0 + ... + a_M) mod p. The classes, taken as multisets, have equal power
 * sums through degree M. With mu_m = p^m the classes are Prouhet's partition.
 *
 * The product identity uses exactly M + 1 factors, m = 0..M:
 *
 *   prod_{m=0}^{M} (1 + w x^{p^m} + ... + w^{p-1} x^{(p-1) p^m})
 *       = sum_{n < p^{M+1}} w^{v_p(n)} x^n
 *
 * which is the count that gives the right-hand side its p^{M+1} terms.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "ptm_sequence.hpp"
#include "rings.hpp"

namespace ptep {

class LehmerSpec {
public:
    LehmerSpec(std::int64_t p, std::vector<BigInt> mu, std::uint64_t budget = default_budget)
        : p_(p), mu_(std::move(mu)), budget_(budget)
    {
        if (p < 2) throw DomainError("base p must be at least 2, got " + std::to_string(p));
        if (mu_.empty()) throw ValidationError("weight vector mu must not be empty");
        for (std::size_t i = 0; i < mu_.size(); ++i)
            if (mu_[i] < 1)
                throw ValidationError("weight mu_" + std::to_string(i) + " = " + mu_[i].str() + " is not positive");
    }

    /// mu_m = p^m for m = 0..M.
    static LehmerSpec prouhet(std::int64_t p, std::int64_t m, std::uint64_t budget = default_budget)
    {
        if (m < 0) throw DomainError("degree M must be non-negative");
        std::vector<BigInt> mu;
        BigInt w = 1;
        for (std::int64_t i = 0; i <= m; ++i, w *= p) mu.push_back(w);
        return LehmerSpec(p, std::move(mu), budget);
    }

    std::int64_t p() const noexcept { return p_; }
    const std::vector<BigInt>& mu() const noexcept { return mu_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(mu_.size()) - 1; }
    std::uint64_t budget() const noexcept { return budget_; }

    std::uint64_t tuple_count() const
    {
        return checked_power(static_cast<std::uint64_t>(p_), mu_.size(), budget_);
    }

private:
    std::int64_t p_;
    std::vector<BigInt> mu_;
    std::uint64_t budget_;
};

/// Class k maps each value to its multiplicity.
struct ClassifiedMultiset {
    std::vector<std::map<BigInt, std::uint64_t>> classes;

    std::uint64_t total_multiplicity() const
    {
        std::uint64_t total = 0;
        for (const auto& c : classes)
            for (const auto& [value, count] : c) total += count;
        return total;
    }
};

namespace detail {

/// Calls visit(digit_sum_mod_p, value) for every tuple in {0..p-1}^{M+1}.
template <class Visit>
void for_each_lehmer_tuple(const LehmerSpec& spec, Visit&& visit)
{
    const auto count = spec.tuple_count();
    const auto p = spec.p();
    const auto len = spec.mu().size();
    std::vector<std::int64_t> digits(len, 0);
    std::int64_t digit_sum = 0;
    BigInt value = 0;
    for (std::uint64_t t = 0; t < count; ++t) {
        visit(digit_sum % p, value);
        // odometer increment, keeping digit_sum and value in step
        for (std::size_t i = 0; i < len; ++i) {
            if (digits[i] + 1 < p) {
                ++digits[i];
                ++digit_sum;
                value += spec.mu()[i];
                break;
            }
            digit_sum -= digits[i];
            value -= spec.mu()[i] * digits[i];
            digits[i] = 0;
        }
    }
}

} // namespace detail

inline ClassifiedMultiset lehmer_expand(const LehmerSpec& spec)
{
    ClassifiedMultiset out;
    out.classes.resize(static_cast<std::size_t>(spec.p()));
    detail::for_each_lehmer_tuple(spec, [&](std::int64_t cls, const BigInt& value) {
        ++out.classes[static_cast<std::size_t>(cls)][value];
    });
    return out;
}

/// Multiset power sums for m = 0..max_degree.
inline PowerSumTable power_sum_table(const ClassifiedMultiset& ms, std::int64_t max_degree)
{
    PowerSumTable t;
    if (max_degree < 0) return t;
    const auto rows = static_cast<std::size_t>(max_degree) + 1;
    t.sums.assign(rows, std::vector<BigInt>(ms.classes.size(), BigInt{0}));
    for (std::size_t k = 0; k < ms.classes.size(); ++k) {
        for (const auto& [value, count] : ms.classes[k]) {
            BigInt power = count;
            for (std::size_t m = 0; m < rows; ++m) {
                t.sums[m][k] += power;
                power *= value;
            }
        }
    }
    return t;
}

/// Equal multiset power sums through degree M = |mu| - 1, or further if asked.
inline EspReport lehmer_verify(const LehmerSpec& spec, std::int64_t through_degree)
{
    return verify_esp(power_sum_table(lehmer_expand(spec), through_degree));
}

inline EspReport lehmer_verify(const LehmerSpec& spec) { return lehmer_verify(spec, spec.degree()); }

/// sum over tuples of w^{a_0+...+a_M} (a_0 mu_0 + ... + a_M mu_M)^m; zero for m <= M.
inline CyclotomicElement lehmer_weighted_sum(const LehmerSpec& spec, std::uint64_t m)
{
    CyclotomicElement total(spec.p());
    detail::for_each_lehmer_tuple(spec, [&](std::int64_t cls, const BigInt& value) {
        total = total + scale(omega_pow(spec.p(), cls), boost::multiprecision::pow(value, static_cast<unsigned>(m)));
    });
    return total;
}

struct ProductIdentitySides {
    DensePolynomial<CyclotomicElement> product; ///< expanded product of the M + 1 factors
    DensePolynomial<CyclotomicElement> series;  ///< sum w^{v_p(n)} x^n
};

inline ProductIdentitySides product_identity_sides(std::int64_t p, std::int64_t m, std::uint64_t budget = default_budget)
{
    const auto params = PTMParams::from_degree(p, m, budget);
    params.block_size();

    ProductIdentitySides out;
    out.product = DensePolynomial<CyclotomicElement>({CyclotomicElement::constant(p, 1)});
    for (std::int64_t i = 0; i <= m; ++i) {
        const auto stride = static_cast<std::size_t>(params.power(i));
        std::vector<CyclotomicElement> factor((static_cast<std::size_t>(p) - 1) * stride + 1, CyclotomicElement(p));
        for (std::int64_t j = 0; j < p; ++j) factor[static_cast<std::size_t>(j) * stride] = omega_pow(p, j);
        out.product = poly_mul(out.product, DensePolynomial<CyclotomicElement>(std::move(factor)));
    }

    std::vector<CyclotomicElement> series;
    for (auto v : ptm_block(params)) series.push_back(omega_pow(p, v));
    out.series = DensePolynomial<CyclotomicElement>(std::move(series));
    return out;
}

inline bool verify_product_identity(std::int64_t p, std::int64_t m, std::uint64_t budget = default_budget)
{
    const auto sides = product_identity_sides(p, m, budget);
    return sides.product == sides.series;
}

} // namespace ptep
