#pragma once

/**
 * @file rings.hpp
 * @brief Exact coefficient rings.
 *
 * Three rings carry every polynomial in the library:
 *  - BigInt, arbitrary-precision integers (bigint.hpp);
 *  - CyclotomicElement, Z[w]/(1 + w + ... + w^{p-1}), where the only relation
 *    imposed on w is that its p powers sum to zero;
 *  - SymbolicZeroSumForm, integer-linear forms in generic symbols
 *    a_0, ..., a_{p-1} subject to a_0 + ... + a_{p-1} = 0.
 *
 * All three expose the same free-function vocabulary (is_zero, zero_like,
 * scale, +, -, unary -), which is what DensePolynomial needs. Multiplication
 * of two elements is only defined for BigInt and CyclotomicElement.
 *
 * Elements are immutable values.
 */

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace ptep {

namespace detail {

inline void require_base(std::int64_t p)
{
    if (p < 2) throw DomainError("base p must be at least 2, got " + std::to_string(p));
}

template <class Elem>
void require_same_base(const Elem& x, const Elem& y)
{
    if (x.p() != y.p())
        throw DomainError("ring mismatch: p=" + std::to_string(x.p()) + " vs p=" + std::to_string(y.p()));
}

inline std::vector<BigInt> add_vectors(const std::vector<BigInt>& x, const std::vector<BigInt>& y, int sign)
{
    std::vector<BigInt> out(x);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (sign > 0)
            out[i] += y[i];
        else
            out[i] -= y[i];
    }
    return out;
}

inline bool all_zero(const std::vector<BigInt>& v)
{
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace detail

// ---------------------------------------------------------------------------
// CyclotomicElement
// ---------------------------------------------------------------------------

/// Element of Z[w]/(1 + w + ... + w^{p-1}) in canonical form: coefficients of
/// w^0 .. w^{p-2}. Works for every p >= 2, prime or not.
class CyclotomicElement {
public:
    /// The zero element for base p.
    explicit CyclotomicElement(std::int64_t p)
        : p_(p)
    {
        detail::require_base(p);
        coeffs_.assign(static_cast<std::size_t>(p - 1), BigInt{0});
    }

    /// Element with the given coefficients on w^0, w^1, ...; any length is
    /// accepted and reduced to canonical form.
    CyclotomicElement(std::int64_t p, std::vector<BigInt> coeffs)
        : CyclotomicElement(p)
    {
        for (std::size_t e = 0; e < coeffs.size(); ++e) add_monomial(e, coeffs[e]);
    }

    /// Integer constant k embedded in the ring.
    static CyclotomicElement constant(std::int64_t p, const BigInt& k)
    {
        CyclotomicElement out(p);
        out.coeffs_[0] = k;
        return out;
    }

    std::int64_t p() const noexcept { return p_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const CyclotomicElement& x, const CyclotomicElement& y)
    {
        return x.p_ == y.p_ && x.coeffs_ == y.coeffs_;
    }

    friend CyclotomicElement operator+(const CyclotomicElement& x, const CyclotomicElement& y)
    {
        detail::require_same_base(x, y);
        return CyclotomicElement(x.p_, detail::add_vectors(x.coeffs_, y.coeffs_, +1), Canonical{});
    }

    friend CyclotomicElement operator-(const CyclotomicElement& x, const CyclotomicElement& y)
    {
        detail::require_same_base(x, y);
        return CyclotomicElement(x.p_, detail::add_vectors(x.coeffs_, y.coeffs_, -1), Canonical{});
    }

    friend CyclotomicElement operator-(const CyclotomicElement& x)
    {
        std::vector<BigInt> c(x.coeffs_);
        for (auto& v : c) v = -v;
        return CyclotomicElement(x.p_, std::move(c), Canonical{});
    }

    /// Schoolbook product followed by reduction: exponents first modulo p
    /// (w^p = 1 holds since w^p - 1 = (w - 1)(1 + ... + w^{p-1})), then the
    /// w^{p-1} term is rewritten as -(1 + w + ... + w^{p-2}).
    friend CyclotomicElement operator*(const CyclotomicElement& x, const CyclotomicElement& y)
    {
        detail::require_same_base(x, y);
        CyclotomicElement out(x.p_);
        const std::size_t n = x.coeffs_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (x.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y.coeffs_[j].is_zero()) continue;
                out.add_monomial(i + j, x.coeffs_[i] * y.coeffs_[j]);
            }
        }
        return out;
    }

private:
    struct Canonical {};

    CyclotomicElement(std::int64_t p, std::vector<BigInt> coeffs, Canonical)
        : p_(p), coeffs_(std::move(coeffs))
    {
    }

    void add_monomial(std::size_t exponent, const BigInt& c)
    {
        const auto e = exponent % static_cast<std::size_t>(p_);
        if (e + 1 < static_cast<std::size_t>(p_)) {
            coeffs_[e] += c;
        } else {
            for (auto& v : coeffs_) v -= c;
        }
    }

    std::int64_t p_;
    std::vector<BigInt> coeffs_;
};

/// Canonical representative of w^{k mod p}.
inline CyclotomicElement omega_pow(std::int64_t p, std::int64_t k)
{
    detail::require_base(p);
    auto e = k % p;
    if (e < 0) e += p;
    std::vector<BigInt> c(static_cast<std::size_t>(e + 1), BigInt{0});
    c.back() = 1;
    return CyclotomicElement(p, std::move(c));
}

inline bool is_zero(const CyclotomicElement& x) { return detail::all_zero(x.coeffs()); }

inline CyclotomicElement zero_like(const CyclotomicElement& x) { return CyclotomicElement(x.p()); }

inline CyclotomicElement scale(const CyclotomicElement& x, const BigInt& k)
{
    std::vector<BigInt> c(x.coeffs());
    for (auto& v : c) v *= k;
    return CyclotomicElement(x.p(), std::move(c));
}

/// +1 / -1 when x is the constant +-1, otherwise nullopt. Other units of the
/// ring (powers of w) are not recognised; exact division only needs +-1.
inline std::optional<int> unit_sign(const CyclotomicElement& x)
{
    const auto& c = x.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return std::nullopt;
    return unit_sign(c[0]);
}

// ---------------------------------------------------------------------------
// SymbolicZeroSumForm
// ---------------------------------------------------------------------------

/// Integer-linear form c_0 a_0 + ... + c_{p-2} a_{p-2} in generic symbols with
/// a_{p-1} = -(a_0 + ... + a_{p-2}) already eliminated. Two forms are equal
/// exactly when their coefficient vectors are.
class SymbolicZeroSumForm {
public:
    /// The zero form for base p.
    explicit SymbolicZeroSumForm(std::int64_t p)
        : p_(p)
    {
        detail::require_base(p);
        coeffs_.assign(static_cast<std::size_t>(p - 1), BigInt{0});
    }

    SymbolicZeroSumForm(std::int64_t p, std::vector<BigInt> coeffs)
        : p_(p), coeffs_(std::move(coeffs))
    {
        detail::require_base(p);
        if (coeffs_.size() != static_cast<std::size_t>(p - 1))
            throw DomainError("symbolic form for p=" + std::to_string(p) + " needs " + std::to_string(p - 1) +
                              " coefficients, got " + std::to_string(coeffs_.size()));
    }

    std::int64_t p() const noexcept { return p_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Substitute a concrete integer vector (a_0, ..., a_{p-1}) that sums to zero.
    BigInt evaluate(std::span<const BigInt> a) const
    {
        if (a.size() != static_cast<std::size_t>(p_))
            throw DomainError("evaluation point must have " + std::to_string(p_) + " entries");
        BigInt total = 0;
        for (const auto& v : a) total += v;
        if (!total.is_zero()) throw ValidationError("evaluation point sums to " + total.str() + ", not 0");
        BigInt out = 0;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out += coeffs_[i] * a[i];
        return out;
    }

    friend bool operator==(const SymbolicZeroSumForm&, const SymbolicZeroSumForm&) = default;

    friend SymbolicZeroSumForm operator+(const SymbolicZeroSumForm& x, const SymbolicZeroSumForm& y)
    {
        detail::require_same_base(x, y);
        return SymbolicZeroSumForm(x.p_, detail::add_vectors(x.coeffs_, y.coeffs_, +1));
    }

    friend SymbolicZeroSumForm operator-(const SymbolicZeroSumForm& x, const SymbolicZeroSumForm& y)
    {
        detail::require_same_base(x, y);
        return SymbolicZeroSumForm(x.p_, detail::add_vectors(x.coeffs_, y.coeffs_, -1));
    }

    friend SymbolicZeroSumForm operator-(const SymbolicZeroSumForm& x)
    {
        std::vector<BigInt> c(x.coeffs_);
        for (auto& v : c) v = -v;
        return SymbolicZeroSumForm(x.p_, std::move(c));
    }

private:
    std::int64_t p_;
    std::vector<BigInt> coeffs_;
};

/// The generic symbol a_i. For i = p-1 this is -(a_0 + ... + a_{p-2}).
inline SymbolicZeroSumForm symbolic_basis(std::int64_t p, std::int64_t i)
{
    detail::require_base(p);
    if (i < 0 || i >= p)
        throw DomainError("symbol index " + std::to_string(i) + " out of range for p=" + std::to_string(p));
    std::vector<BigInt> c(static_cast<std::size_t>(p - 1), BigInt{0});
    if (i == p - 1) {
        for (auto& v : c) v = -1;
    } else {
        c[static_cast<std::size_t>(i)] = 1;
    }
    return SymbolicZeroSumForm(p, std::move(c));
}

inline bool is_zero(const SymbolicZeroSumForm& x) { return detail::all_zero(x.coeffs()); }

inline SymbolicZeroSumForm zero_like(const SymbolicZeroSumForm& x) { return SymbolicZeroSumForm(x.p()); }

inline SymbolicZeroSumForm scale(const SymbolicZeroSumForm& x, const BigInt& k)
{
    std::vector<BigInt> c(x.coeffs());
    for (auto& v : c) v *= k;
    return SymbolicZeroSumForm(x.p(), std::move(c));
}

// ---------------------------------------------------------------------------
// Concepts
// ---------------------------------------------------------------------------

/// A Z-module: what polynomial coefficients need.
template <class R>
concept ZModule = std::copyable<R> && std::equality_comparable<R> && requires(const R& x, const R& y, const BigInt& k) {
    { x + y } -> std::same_as<R>;
    { x - y } -> std::same_as<R>;
    { -x } -> std::same_as<R>;
    { is_zero(x) } -> std::same_as<bool>;
    { zero_like(x) } -> std::same_as<R>;
    { scale(x, k) } -> std::same_as<R>;
};

/// A commutative ring with recognisable +-1.
template <class R>
concept CommutativeRing = ZModule<R> && requires(const R& x, const R& y) {
    { x * y } -> std::same_as<R>;
    { unit_sign(x) } -> std::same_as<std::optional<int>>;
};

/// Product of a module element with a scalar from either Z or the module's own ring.
template <ZModule R, class S>
R mul_coeff(const R& r, const S& s)
{
    if constexpr (std::same_as<S, BigInt>)
        return scale(r, s);
    else
        return r * s;
}

} // namespace ptep
