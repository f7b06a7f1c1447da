#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rings.hpp"

namespace ptep {

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
/// The zero polynomial has no coefficients.
template <ZModule R>
class DensePolynomial {
public:
    DensePolynomial() = default;

    explicit DensePolynomial(std::vector<R> coeffs)
        : coeffs_(std::move(coeffs))
    {
        trim();
    }

    /// c * x^k.
    static DensePolynomial monomial(const R& c, std::size_t k)
    {
        std::vector<R> v(k + 1, zero_like(c));
        v[k] = c;
        return DensePolynomial(std::move(v));
    }

    const std::vector<R>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const
    {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    /// Coefficient of x^i; `zero` is returned past the end.
    R coeff(std::size_t i, const R& zero) const { return i < coeffs_.size() ? coeffs_[i] : zero; }

    friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

    friend DensePolynomial operator+(const DensePolynomial& f, const DensePolynomial& g)
    {
        return combine(f, g, +1);
    }

    friend DensePolynomial operator-(const DensePolynomial& f, const DensePolynomial& g)
    {
        return combine(f, g, -1);
    }

    friend DensePolynomial operator-(const DensePolynomial& f)
    {
        std::vector<R> out;
        out.reserve(f.coeffs_.size());
        for (const auto& c : f.coeffs_) out.push_back(-c);
        return DensePolynomial(std::move(out));
    }

    /// f * x^k.
    DensePolynomial shifted(std::size_t k) const
    {
        if (coeffs_.empty()) return {};
        std::vector<R> out(k, zero_like(coeffs_[0]));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return DensePolynomial(std::move(out));
    }

private:
    static DensePolynomial combine(const DensePolynomial& f, const DensePolynomial& g, int sign)
    {
        std::vector<R> out(f.coeffs_);
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
            const R& c = g.coeffs_[i];
            if (i < out.size())
                out[i] = sign > 0 ? out[i] + c : out[i] - c;
            else
                out.push_back(sign > 0 ? c : -c);
        }
        return DensePolynomial(std::move(out));
    }

    void trim()
    {
        while (!coeffs_.empty() && ptep::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

template <ZModule R>
using Polynomial = DensePolynomial<R>;
using IntPolynomial = DensePolynomial<BigInt>;

/// Integer polynomial from machine integers, lowest degree first.
inline IntPolynomial int_poly(std::initializer_list<long long> coeffs)
{
    std::vector<BigInt> v;
    for (auto c : coeffs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

/// 1 - x^d.
inline IntPolynomial one_minus_x_pow(std::size_t d)
{
    std::vector<BigInt> v(d + 1, BigInt{0});
    v[0] += 1;
    v[d] -= 1;
    return IntPolynomial(std::move(v));
}

/// Exact division failed; carries the nonzero remainder.
template <ZModule R>
class NotDivisible : public NotDivisibleError {
public:
    explicit NotDivisible(DensePolynomial<R> remainder)
        : NotDivisibleError("exact division left a remainder of degree " +
                            std::to_string(remainder.degree().value_or(0))),
          remainder_(std::move(remainder))
    {
    }

    const DensePolynomial<R>& remainder() const noexcept { return remainder_; }

private:
    DensePolynomial<R> remainder_;
};

/// Product with coefficients taken from Z or from R itself. Zero
/// coefficients of either factor are skipped, so sparse factors are cheap.
template <ZModule R, class S>
DensePolynomial<R> poly_mul(const DensePolynomial<R>& f, const DensePolynomial<S>& g)
{
    if (f.is_zero() || g.is_zero()) return {};
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<R> out(a.size() + b.size() - 1, zero_like(a[0]));
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (is_zero(b[j])) continue;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (is_zero(a[i])) continue;
            out[i + j] = out[i + j] + mul_coeff(a[i], b[j]);
        }
    }
    return DensePolynomial<R>(std::move(out));
}

template <ZModule R, class S>
DensePolynomial<R> operator*(const DensePolynomial<R>& f, const DensePolynomial<S>& g)
{
    return poly_mul(f, g);
}

template <ZModule R>
DensePolynomial<R> poly_add(const DensePolynomial<R>& f, const DensePolynomial<R>& g)
{
    return f + g;
}

/// q with f = q * (1 - x^d); throws NotDivisible<R> otherwise. Uses the
/// recurrence q_i = f_i + q_{i-d}, valid over any commutative ring.
template <ZModule R>
DensePolynomial<R> exact_div_binomial(const DensePolynomial<R>& f, std::size_t d)
{
    if (d == 0) throw DomainError("division by 1 - x^0 = 0");
    if (f.is_zero()) return {};
    const auto& a = f.coeffs();
    if (a.size() <= d) throw NotDivisible<R>(f);
    const std::size_t qlen = a.size() - d;
    std::vector<R> q;
    q.reserve(qlen);
    for (std::size_t i = 0; i < qlen; ++i) q.push_back(i >= d ? a[i] + q[i - d] : a[i]);
    // Remaining coefficients of f - q(1 - x^d) live at degrees qlen .. deg f.
    std::vector<R> rem(a.size(), zero_like(a[0]));
    bool clean = true;
    for (std::size_t i = qlen; i < a.size(); ++i) {
        rem[i] = i >= d ? a[i] + q[i - d] : a[i];
        if (!is_zero(rem[i])) clean = false;
    }
    if (!clean) throw NotDivisible<R>(DensePolynomial<R>(std::move(rem)));
    return DensePolynomial<R>(std::move(q));
}

/// q with f = q * g and zero remainder. g needs a +-1 coefficient at its top
/// or bottom degree so each quotient step stays inside the ring. The divisor
/// ring S is either Z or R itself.
template <ZModule R, class S>
DensePolynomial<R> poly_exact_div(const DensePolynomial<R>& f, const DensePolynomial<S>& g)
{
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    const auto& b = g.coeffs();
    const auto top = unit_sign(b.back());
    const auto bottom = unit_sign(b.front());
    if (!top && !bottom) throw DomainError("divisor must have a +-1 coefficient at its lowest or highest degree");
    if (f.is_zero()) return {};
    const std::size_t dg = b.size() - 1;
    if (f.size() <= dg) throw NotDivisible<R>(f);
    const std::size_t qlen = f.size() - dg;

    std::vector<R> r(f.coeffs());
    std::vector<R> q(qlen, zero_like(r[0]));
    auto subtract = [&](std::size_t shift, const R& c) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (is_zero(b[j])) continue;
            r[shift + j] = r[shift + j] - mul_coeff(c, b[j]);
        }
    };

    if (top) {
        for (std::size_t i = qlen; i-- > 0;) {
            const R& lead = r[i + dg];
            if (is_zero(lead)) continue;
            q[i] = *top > 0 ? lead : -lead;
            subtract(i, q[i]);
        }
    } else {
        for (std::size_t i = 0; i < qlen; ++i) {
            const R& low = r[i];
            if (is_zero(low)) continue;
            q[i] = *bottom > 0 ? low : -low;
            subtract(i, q[i]);
        }
    }

    DensePolynomial<R> remainder(std::move(r));
    if (!remainder.is_zero()) throw NotDivisible<R>(std::move(remainder));
    return DensePolynomial<R>(std::move(q));
}

/// Apply a coefficient map, e.g. specialisation of a symbolic polynomial.
template <ZModule R, class Fn>
auto map_coeffs(const DensePolynomial<R>& f, Fn&& fn)
{
    using Out = std::decay_t<decltype(fn(f.coeffs().front()))>;
    std::vector<Out> out;
    out.reserve(f.size());
    for (const auto& c : f.coeffs()) out.push_back(fn(c));
    return DensePolynomial<Out>(std::move(out));
}

} // namespace ptep
