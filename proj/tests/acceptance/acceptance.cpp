// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every check is exact equality; the time limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ptep/ptep.hpp"
#include "ptep_cli.hpp"

using namespace ptep;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_ms, const std::function<void(Check&)>& body)
{
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() > limit_ms)
        c.require(false, "took " + std::to_string(elapsed.count()) + " ms, limit " + std::to_string(limit_ms) + " ms");
    std::printf("[%s] %s %s (%.1f ms)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, elapsed.count(),
                c.ok ? "" : " -- ", c.detail.c_str());
    std::fflush(stdout);
    failures += c.ok ? 0 : 1;
}

std::string tag(std::int64_t p, std::int64_t n) { return "p=" + std::to_string(p) + " N=" + std::to_string(n); }

std::vector<ZeroSumVector<BigInt>> random_integer_vectors(std::int64_t p, int count, std::mt19937_64& rng)
{
    std::vector<ZeroSumVector<BigInt>> out;
    for (int i = 0; i < count; ++i)
        out.push_back(integer_zero_sum_vector(oracle::to_big(oracle::random_zero_sum(rng, p, -10, 10))));
    return out;
}

template <class R>
void theorem1_checks(Check& c, const PTMParams& params, const ZeroSumVector<R>& a)
{
    const auto f = build_F(params, a);
    const auto q = build_Q(params);
    c.require(f == build_F_by_recurrence(params, a), "F != F by recurrence at " + tag(params.p(), params.n()));
    DensePolynomial<R> p_div;
    try {
        p_div = factor_F(params, a);
    } catch (const NotDivisibleError&) {
        c.require(false, std::string("nonzero remainder at ") + tag(params.p(), params.n()));
        return;
    }
    c.require(poly_mul(p_div, q) == f, "P*Q != F at " + tag(params.p(), params.n()));
    c.require(p_div == build_P_recursive(params, a), "division and recursion disagree at " + tag(params.p(), params.n()));
}

template <class R>
void vanishing_checks(Check& c, const PTMParams& params, const ZeroSumVector<R>& a)
{
    for (std::int64_t m = 0; m < params.n(); ++m)
        c.require(is_zero(weighted_power_sum(params, a, static_cast<std::uint64_t>(m))),
                  "weighted sum m=" + std::to_string(m) + " nonzero at " + tag(params.p(), params.n()));
    if (!a.is_zero_vector())
        c.require(vanishing_order_at_one(build_F(params, a)) >= static_cast<std::size_t>(params.n()),
                  "vanishing order below N at " + tag(params.p(), params.n()));
}

} // namespace

int main()
{
    criterion("AC1", "golden Prouhet partition p=2 M=3 via CLI", 1000, [](Check& c) {
        std::ostringstream out, err;
        const int code = cli::run(std::vector<std::string>{"--payload-only", "partition", "--p", "2", "--m", "3"}, out, err);
        c.require(code == 0, "exit code " + std::to_string(code));
        const auto j = json::parse(out.str());
        c.require(j["classes"] == json::parse("[[0,3,5,6,9,10,12,15],[1,2,4,7,8,11,13,14]]"), "classes differ");
        c.require(j["power_sums"] == json::parse(R"([["8","8"],["60","60"],["620","620"],["7200","7200"]])"),
                  "power sums differ");
        c.require(j["esp_verified_through"] == 3, "not verified through 3");
    });

    criterion("AC2", "golden symbolic factorizations p=3 N=1,2", 1000, [](Check& c) {
        auto a = [](std::int64_t i) { return symbolic_basis(3, i); };
        const auto sym = symbolic_zero_sum_vector(3);
        const DensePolynomial<SymbolicZeroSumForm> p1({a(0), a(0) + a(1)});
        const DensePolynomial<SymbolicZeroSumForm> p2({a(0), a(0) + a(1), SymbolicZeroSumForm(3), a(0) + a(1), a(1)});
        for (const auto& [n, expected] : {std::pair{1, p1}, std::pair{2, p2}}) {
            const PTMParams params(3, n);
            c.require(factor_F(params, sym) == expected, "division route differs at N=" + std::to_string(n));
            c.require(build_P_recursive(params, sym) == expected, "recursive route differs at N=" + std::to_string(n));
            c.require(poly_mul(expected, build_Q(params)) == build_F(params, sym), "P*Q != F at N=" + std::to_string(n));
        }
        c.require(to_string(p1) == "a_0 + (a_0 + a_1)*x", "P_1 rendering");
        c.require(to_string(p2) == "a_0 + (a_0 + a_1)*x + (a_0 + a_1)*x^3 + a_1*x^4", "P_2 rendering");
    });

    criterion("AC3", "equal power sums of Prouhet partitions, p 2..5, M 0..4, p^(M+1) <= 1e5", 30000, [](Check& c) {
        for (std::int64_t p = 2; p <= 5; ++p)
            for (std::int64_t m = 0; m <= 4; ++m) {
                const auto params = PTMParams::from_degree(p, m, 100000);
                const auto r = verify_esp(prouhet_partition(params), m);
                c.require(r.equal_up_to == m && !r.first_violation, "p=" + std::to_string(p) + " M=" + std::to_string(m));
            }
    });

    criterion("AC4", "F = P*Q factorization sweep, p 2..5, N 1..4, symbolic + 20 random A", 60000, [](Check& c) {
        std::mt19937_64 rng(20141122);
        for (std::int64_t p = 2; p <= 5; ++p)
            for (std::int64_t n = 1; n <= 4; ++n) {
                const PTMParams params(p, n);
                theorem1_checks(c, params, symbolic_zero_sum_vector(p));
                for (const auto& a : random_integer_vectors(p, 20, rng)) theorem1_checks(c, params, a);
            }
    });

    criterion("AC5", "weighted power sums vanish below N; order at x=1 >= N", 60000, [](Check& c) {
        std::mt19937_64 rng(20141122);
        for (std::int64_t p = 2; p <= 5; ++p)
            for (std::int64_t n = 1; n <= 4; ++n) {
                const PTMParams params(p, n);
                vanishing_checks(c, params, symbolic_zero_sum_vector(p));
                vanishing_checks(c, params, roots_of_unity_vector(p));
                for (const auto& a : random_integer_vectors(p, 20, rng)) vanishing_checks(c, params, a);
            }
    });

    criterion("AC6", "root-of-unity product identity, p 2..6, M 0..3", 10000, [](Check& c) {
        for (std::int64_t p = 2; p <= 6; ++p)
            for (std::int64_t m = 0; m <= 3; ++m)
                c.require(verify_product_identity(p, m), "p=" + std::to_string(p) + " M=" + std::to_string(m));
    });

    criterion("AC7", "Lehmer sweep, p 2..5, M 0..3, 10 random weights in [1,20]; mu=p^m is Prouhet", 60000, [](Check& c) {
        std::mt19937_64 rng(1851);
        std::uniform_int_distribution<long long> weight(1, 20);
        for (std::int64_t p = 2; p <= 5; ++p)
            for (std::int64_t m = 0; m <= 3; ++m) {
                for (int trial = 0; trial < 10; ++trial) {
                    std::vector<BigInt> mu;
                    for (std::int64_t i = 0; i <= m; ++i) mu.emplace_back(weight(rng));
                    const auto r = lehmer_verify(LehmerSpec(p, mu));
                    c.require(r.equal_up_to == m, "random weights p=" + std::to_string(p) + " M=" + std::to_string(m));
                }
                const auto ms = lehmer_expand(LehmerSpec::prouhet(p, m));
                const auto part = prouhet_partition(PTMParams::from_degree(p, m));
                for (std::size_t k = 0; k < part.classes.size(); ++k) {
                    std::map<BigInt, std::uint64_t> expected;
                    for (auto n : part.classes[k]) expected[n] = 1;
                    c.require(ms.classes[k] == expected, "mu=p^m class " + std::to_string(k) + " p=" + std::to_string(p));
                }
            }
    });

    criterion("AC8", "three routes to class power sums agree", 60000, [](Check& c) {
        for (std::int64_t p = 2; p <= 5; ++p)
            for (std::int64_t m = 0; m <= 4; ++m) {
                const auto params = PTMParams::from_degree(p, m, 100000);
                const auto through = m + 1;
                const auto direct = power_sum_table(prouhet_partition(params).classes, through);
                const auto lehmer = power_sum_table(lehmer_expand(LehmerSpec::prouhet(p, m)), through);
                const auto where = "p=" + std::to_string(p) + " M=" + std::to_string(m);
                c.require(direct.sums == lehmer.sums, "direct vs Lehmer at " + where);
                for (std::int64_t j = 0; j < p; ++j)
                    for (std::int64_t k = 0; k < p; ++k) {
                        if (j == k) continue;
                        std::vector<BigInt> a(static_cast<std::size_t>(p), 0);
                        a[static_cast<std::size_t>(j)] = 1;
                        a[static_cast<std::size_t>(k)] = -1;
                        const ZeroSumVector<BigInt> indicator(a);
                        for (std::int64_t d = 0; d <= through; ++d) {
                            const auto& row = direct.sums[static_cast<std::size_t>(d)];
                            const auto w = weighted_power_sum(params, indicator, static_cast<std::uint64_t>(d));
                            c.require(w == row[static_cast<std::size_t>(j)] - row[static_cast<std::size_t>(k)],
                                      "weighted vs direct at " + where + " m=" + std::to_string(d));
                        }
                    }
            }
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
