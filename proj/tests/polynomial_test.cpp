#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ptep/format.hpp"
#include "ptep/polynomial.hpp"

using namespace ptep;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, std::size_t len)
{
    std::uniform_int_distribution<long long> d(-9, 9);
    std::vector<BigInt> c;
    for (std::size_t i = 0; i < len; ++i) c.emplace_back(d(rng));
    return IntPolynomial(std::move(c));
}

} // namespace

TEST(DensePolynomial, CanonicalForm)
{
    EXPECT_TRUE(int_poly({0, 0, 0}).is_zero());
    EXPECT_EQ(int_poly({1, 2, 0, 0}).size(), 2u);
    EXPECT_EQ(int_poly({1, 2, 0}).degree(), 1u);
    EXPECT_EQ(IntPolynomial().degree(), std::nullopt);
    EXPECT_TRUE((int_poly({1, 2}) - int_poly({1, 2})).is_zero());
}

TEST(DensePolynomial, MultiplyAndDivide)
{
    EXPECT_EQ(int_poly({1, -1}) * int_poly({1, 1}), int_poly({1, 0, -1}));
    EXPECT_EQ(poly_exact_div(int_poly({1, 0, -1}), int_poly({1, -1})), int_poly({1, 1}));
    EXPECT_EQ(exact_div_binomial(int_poly({1, 0, -1}), 1), int_poly({1, 1}));
    EXPECT_EQ(exact_div_binomial(int_poly({1, 0, 0, -1}), 3), int_poly({1}));
    EXPECT_TRUE(poly_exact_div(IntPolynomial(), int_poly({1, -1})).is_zero());
}

TEST(DensePolynomial, SymbolicDivisionOfF1)
{
    // a_0 + a_1 x + a_2 x^2 over the symbolic ring, p = 3
    const DensePolynomial<SymbolicZeroSumForm> f({symbolic_basis(3, 0), symbolic_basis(3, 1), symbolic_basis(3, 2)});
    const auto q = poly_exact_div(f, int_poly({1, -1}));
    const DensePolynomial<SymbolicZeroSumForm> expected({symbolic_basis(3, 0), symbolic_basis(3, 0) + symbolic_basis(3, 1)});
    EXPECT_EQ(q, expected);
    EXPECT_EQ(exact_div_binomial(f, 1), expected);
    EXPECT_EQ(to_string(q), "a_0 + (a_0 + a_1)*x");
}

TEST(DensePolynomial, NotDivisibleCarriesRemainder)
{
    try {
        poly_exact_div(int_poly({1, 0, 1}), int_poly({1, -1}));
        FAIL() << "expected NotDivisible";
    } catch (const NotDivisible<BigInt>& e) {
        // x^2 + 1 = (-x - 1)(1 - x) + 2
        EXPECT_EQ(e.remainder(), int_poly({2}));
    }
    try {
        exact_div_binomial(int_poly({1, 0, 1}), 1);
        FAIL() << "expected NotDivisible";
    } catch (const NotDivisible<BigInt>& e) {
        EXPECT_FALSE(e.remainder().is_zero());
    }
    EXPECT_THROW(exact_div_binomial(int_poly({3}), 2), NotDivisibleError);
    EXPECT_THROW(poly_exact_div(int_poly({1, 2}), int_poly({2, 0, 2})), DomainError);
    EXPECT_THROW(poly_exact_div(int_poly({1, 2}), IntPolynomial()), DomainError);
}

TEST(DensePolynomial, BottomUpDivision)
{
    // divisor 1 + 2x: leading coefficient is not a unit but the constant term is
    const auto g = int_poly({1, 2});
    const auto q = int_poly({3, -1, 4});
    EXPECT_EQ(poly_exact_div(q * g, g), q);
    EXPECT_THROW(poly_exact_div(q * g + int_poly({0, 1}), g), NotDivisibleError);
}

TEST(DensePolynomial, MultiplicationMatchesOracleAndDivisionInverts)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_poly(rng, 1 + trial % 9);
        auto g = random_poly(rng, 1 + trial % 5);
        std::vector<BigInt> gc(g.coeffs());
        if (gc.empty()) gc.emplace_back(1);
        gc.back() = trial % 2 ? 1 : -1;
        g = IntPolynomial(gc);

        oracle::Poly a, b;
        for (const auto& c : f.coeffs()) a.push_back(static_cast<long long>(c));
        for (const auto& c : g.coeffs()) b.push_back(static_cast<long long>(c));
        EXPECT_EQ((f * g).coeffs(), oracle::to_big(oracle::trim(oracle::mul(a, b))));
        EXPECT_EQ(poly_exact_div(f * g, g), f);
        EXPECT_EQ(f * g, g * f);
    }
}

TEST(DensePolynomial, CyclotomicCoefficients)
{
    // (1 + w x)(1 + w^2 x) = 1 + (w + w^2) x + w^3 x^2 = 1 - x + x^2 for p = 3
    const DensePolynomial<CyclotomicElement> f({CyclotomicElement::constant(3, 1), omega_pow(3, 1)});
    const DensePolynomial<CyclotomicElement> g({CyclotomicElement::constant(3, 1), omega_pow(3, 2)});
    const DensePolynomial<CyclotomicElement> expected(
        {CyclotomicElement::constant(3, 1), CyclotomicElement::constant(3, -1), CyclotomicElement::constant(3, 1)});
    EXPECT_EQ(f * g, expected);
    EXPECT_EQ(poly_exact_div(expected, f), g);
}

TEST(Format, Polynomials)
{
    EXPECT_EQ(to_string(int_poly({1, -1, -1, 1})), "1 - x - x^2 + x^3");
    EXPECT_EQ(to_string(IntPolynomial()), "0");
    EXPECT_EQ(to_string(int_poly({0, 2, 0, -3})), "2*x - 3*x^3");
}
