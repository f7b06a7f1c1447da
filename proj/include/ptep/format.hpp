#pragma once

// Human-readable rendering of ring elements and polynomials.

#include <cstddef>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "polynomial.hpp"
#include "rings.hpp"

namespace ptep {

namespace detail {

/// sum c_i * sym(i), skipping zeros: "2*a_0 - a_1".
template <class Symbol>
std::string render_linear(const std::vector<BigInt>& coeffs, Symbol&& sym)
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto& c = coeffs[i];
        if (c.is_zero()) continue;
        const std::string name = sym(i);
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (name.empty())
            out += mag.str();
        else if (mag == 1)
            out += name;
        else
            out += mag.str() + "*" + name;
    }
    return out.empty() ? "0" : out;
}

inline bool is_single_term(const std::vector<BigInt>& coeffs)
{
    std::size_t nonzero = 0;
    for (const auto& c : coeffs) nonzero += c.is_zero() ? 0 : 1;
    return nonzero <= 1;
}

} // namespace detail

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const CyclotomicElement& x)
{
    return detail::render_linear(x.coeffs(), [](std::size_t i) {
        if (i == 0) return std::string{};
        if (i == 1) return std::string{"w"};
        return "w^" + std::to_string(i);
    });
}

/// Linear form in a_0..a_{p-2}, e.g. "a_0 + a_1".
inline std::string to_string(const SymbolicZeroSumForm& x)
{
    return detail::render_linear(x.coeffs(), [](std::size_t i) { return "a_" + std::to_string(i); });
}

namespace detail {

inline bool needs_parens(const BigInt&) { return false; }
inline bool needs_parens(const CyclotomicElement& x) { return !is_single_term(x.coeffs()); }
inline bool needs_parens(const SymbolicZeroSumForm& x) { return !is_single_term(x.coeffs()); }

} // namespace detail

/// "a_0 + (a_0 + a_1)*x + a_1*x^4"; "0" for the zero polynomial.
template <ZModule R>
std::string to_string(const DensePolynomial<R>& f)
{
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (is_zero(c[i])) continue;
        std::string coeff = to_string(c[i]);
        bool negative = false;
        if (!detail::needs_parens(c[i]) && coeff.front() == '-') {
            negative = true;
            coeff.erase(0, 1);
        }
        std::string term;
        const std::string var = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (var.empty())
            term = coeff;
        else if (coeff == "1")
            term = var;
        else
            term = (detail::needs_parens(c[i]) ? "(" + coeff + ")" : coeff) + "*" + var;
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

} // namespace ptep
