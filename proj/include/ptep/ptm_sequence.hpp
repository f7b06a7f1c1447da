#pragma once

/**
 * @file ptm_sequence.hpp
 * @brief Generalized Prouhet-Thue-Morse sequence v_p(n) and zero-sum coefficient vectors.
 *
 * v_p(n) is the sum of the base-p digits of n, reduced mod p. For p = 2 this
 * is the classical sequence 0,1,1,0,1,0,0,1,...
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rings.hpp"

namespace ptep {

inline constexpr std::uint64_t default_budget = 10'000'000;

/// p^e, or ResourceError when the result would exceed budget.
inline std::uint64_t checked_power(std::uint64_t p, std::uint64_t e, std::uint64_t budget)
{
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (out > budget / p)
            throw ResourceError(std::to_string(p) + "^" + std::to_string(e) + " exceeds the enumeration budget of " +
                                std::to_string(budget));
        out *= p;
    }
    return out;
}

/// Base p and block exponent N (blocks have p^N terms), with an enumeration budget.
class PTMParams {
public:
    PTMParams(std::int64_t p, std::int64_t n, std::uint64_t budget = default_budget)
        : p_(p), n_(n), budget_(budget)
    {
        if (p < 2) throw DomainError("base p must be at least 2, got " + std::to_string(p));
        if (n < 1) throw DomainError("block exponent N must be at least 1, got " + std::to_string(n));
    }

    /// Parameters for equal sums through degree M, i.e. N = M + 1.
    static PTMParams from_degree(std::int64_t p, std::int64_t m, std::uint64_t budget = default_budget)
    {
        if (m < 0) throw DomainError("degree M must be non-negative, got " + std::to_string(m));
        return PTMParams(p, m + 1, budget);
    }

    std::int64_t p() const noexcept { return p_; }
    std::int64_t n() const noexcept { return n_; }
    std::int64_t degree() const noexcept { return n_ - 1; }
    std::uint64_t budget() const noexcept { return budget_; }

    /// p^N, checked against the budget.
    std::uint64_t block_size() const { return power(n_); }

    /// p^e, checked against the budget.
    std::uint64_t power(std::int64_t e) const
    {
        return checked_power(static_cast<std::uint64_t>(p_), static_cast<std::uint64_t>(e), budget_);
    }

    /// Same base and budget, block exponent N - 1.
    PTMParams previous() const { return PTMParams(p_, n_ - 1, budget_); }

    friend bool operator==(const PTMParams&, const PTMParams&) = default;

private:
    std::int64_t p_;
    std::int64_t n_;
    std::uint64_t budget_;
};

/// Sum of the base-p digits of n, reduced mod p.
inline std::int64_t vp(std::uint64_t n, std::int64_t p)
{
    if (p < 2) throw DomainError("base p must be at least 2, got " + std::to_string(p));
    const auto base = static_cast<std::uint64_t>(p);
    std::uint64_t digits = 0;
    while (n != 0) {
        digits += n % base;
        n /= base;
    }
    return static_cast<std::int64_t>(digits % base);
}

/// v_p(0), ..., v_p(p^N - 1) by digit extraction.
inline std::vector<std::int64_t> ptm_block(const PTMParams& params)
{
    const auto size = params.block_size();
    std::vector<std::int64_t> out(size);
    for (std::uint64_t n = 0; n < size; ++n) out[n] = vp(n, params.p());
    return out;
}

/// Same block built by concatenation: block(N) is p copies of block(N-1),
/// the k-th copy with every label shifted by k mod p.
inline std::vector<std::int64_t> ptm_block_by_concatenation(const PTMParams& params)
{
    const auto p = params.p();
    const auto size = params.block_size();
    std::vector<std::int64_t> out;
    out.reserve(size);
    for (std::int64_t d = 0; d < p; ++d) out.push_back(d);
    while (out.size() < size) {
        const auto prev = out.size();
        for (std::int64_t k = 1; k < p; ++k)
            for (std::size_t i = 0; i < prev; ++i) out.push_back((out[i] + k) % p);
    }
    return out;
}

/// Length-p vector over a coefficient ring whose entries sum to zero.
template <ZModule R>
class ZeroSumVector {
public:
    explicit ZeroSumVector(std::vector<R> entries)
        : entries_(std::move(entries))
    {
        if (entries_.size() < 2) throw DomainError("a zero-sum vector needs at least 2 entries");
        R total = entries_[0];
        for (std::size_t i = 1; i < entries_.size(); ++i) total = total + entries_[i];
        if (!is_zero(total)) throw ValidationError("coefficients do not sum to zero");
    }

    std::int64_t p() const noexcept { return static_cast<std::int64_t>(entries_.size()); }
    const std::vector<R>& entries() const noexcept { return entries_; }
    const R& operator[](std::size_t i) const { return entries_[i]; }

    bool is_zero_vector() const
    {
        for (const auto& e : entries_)
            if (!is_zero(e)) return false;
        return true;
    }

    friend bool operator==(const ZeroSumVector&, const ZeroSumVector&) = default;

    friend ZeroSumVector operator+(const ZeroSumVector& x, const ZeroSumVector& y)
    {
        if (x.p() != y.p()) throw DomainError("zero-sum vectors of different length");
        std::vector<R> out;
        out.reserve(x.entries_.size());
        for (std::size_t i = 0; i < x.entries_.size(); ++i) out.push_back(x.entries_[i] + y.entries_[i]);
        return ZeroSumVector(std::move(out), Trusted{});
    }

    friend ZeroSumVector operator-(const ZeroSumVector& x)
    {
        std::vector<R> out;
        out.reserve(x.entries_.size());
        for (const auto& e : x.entries_) out.push_back(-e);
        return ZeroSumVector(std::move(out), Trusted{});
    }

    /// Left cyclic shift by k: entry j becomes entry (j + k) mod p.
    ZeroSumVector shifted(std::int64_t k) const
    {
        const auto p = this->p();
        auto s = k % p;
        if (s < 0) s += p;
        std::vector<R> out;
        out.reserve(entries_.size());
        for (std::int64_t j = 0; j < p; ++j) out.push_back(entries_[static_cast<std::size_t>((j + s) % p)]);
        return ZeroSumVector(std::move(out), Trusted{});
    }

private:
    struct Trusted {};
    ZeroSumVector(std::vector<R> entries, Trusted)
        : entries_(std::move(entries))
    {
    }

    std::vector<R> entries_;
};

/// A_k, the k-th left cyclic shift of A.
template <ZModule R>
ZeroSumVector<R> cyclic_shift(const ZeroSumVector<R>& a, std::int64_t k)
{
    return a.shifted(k);
}

/// B_0, ..., B_{p-2} with B_k = A_0 + A_1 + ... + A_k. B_{p-2} equals -A_{p-1}.
template <ZModule R>
std::vector<ZeroSumVector<R>> prefix_sum_vectors(const ZeroSumVector<R>& a)
{
    std::vector<ZeroSumVector<R>> out;
    out.reserve(static_cast<std::size_t>(a.p() - 1));
    out.push_back(a);
    for (std::int64_t k = 1; k + 1 < a.p(); ++k) out.push_back(out.back() + a.shifted(k));
    return out;
}

/// The generic vector (a_0, ..., a_{p-1}) over the symbolic ring.
inline ZeroSumVector<SymbolicZeroSumForm> symbolic_zero_sum_vector(std::int64_t p)
{
    std::vector<SymbolicZeroSumForm> entries;
    for (std::int64_t i = 0; i < p; ++i) entries.push_back(symbolic_basis(p, i));
    return ZeroSumVector<SymbolicZeroSumForm>(std::move(entries));
}

/// (1, w, ..., w^{p-1}) over the cyclotomic ring.
inline ZeroSumVector<CyclotomicElement> roots_of_unity_vector(std::int64_t p)
{
    std::vector<CyclotomicElement> entries;
    for (std::int64_t i = 0; i < p; ++i) entries.push_back(omega_pow(p, i));
    return ZeroSumVector<CyclotomicElement>(std::move(entries));
}

/// Integer vector; throws ValidationError naming the sum when it is not zero.
inline ZeroSumVector<BigInt> integer_zero_sum_vector(const std::vector<BigInt>& entries)
{
    BigInt total = 0;
    for (const auto& e : entries) total += e;
    if (!total.is_zero()) throw ValidationError("coefficients sum to " + total.str() + ", expected 0");
    return ZeroSumVector<BigInt>(entries);
}

/// Substitute a concrete integer vector into a symbolic one.
inline ZeroSumVector<BigInt> specialize(const ZeroSumVector<SymbolicZeroSumForm>& a, std::span<const BigInt> at)
{
    std::vector<BigInt> out;
    for (const auto& e : a.entries()) out.push_back(e.evaluate(at));
    return ZeroSumVector<BigInt>(std::move(out));
}

} // namespace ptep
