#pragma once

/**
 * @file partition.hpp
 * @brief Prouhet's partition of {0, ..., p^{M+1} - 1} and power-sum checks.
 *
 * n goes to class S_{v_p(n)}. The classes then have equal sums of m-th powers
 * for every m = 0..M (with 0^0 = 1).
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bigint.hpp"
#include "ptm_sequence.hpp"

namespace ptep {

struct Partition {
    PTMParams params; ///< N = M + 1
    std::vector<std::vector<std::uint64_t>> classes;

    std::int64_t degree() const { return params.degree(); }
};

/// sums[m][k] = s_k(m) for m = 0..max_degree.
struct PowerSumTable {
    std::vector<std::vector<BigInt>> sums;

    std::int64_t max_degree() const { return static_cast<std::int64_t>(sums.size()) - 1; }
    std::size_t class_count() const { return sums.empty() ? 0 : sums.front().size(); }
};

struct EspViolation {
    std::int64_t m;
    std::size_t j;
    std::size_t k;

    friend bool operator==(const EspViolation&, const EspViolation&) = default;
};

/// equal_up_to is the largest m' <= through_degree with all classes equal for
/// every m <= m' (-1 if even the cardinalities differ).
struct EspReport {
    std::int64_t equal_up_to = -1;
    std::optional<EspViolation> first_violation;
    PowerSumTable table;
};

inline Partition prouhet_partition(const PTMParams& params)
{
    const auto size = params.block_size();
    Partition out{params, std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(params.p()))};
    for (auto& c : out.classes) c.reserve(size / static_cast<std::uint64_t>(params.p()));
    for (std::uint64_t n = 0; n < size; ++n)
        out.classes[static_cast<std::size_t>(vp(n, params.p()))].push_back(n);
    return out;
}

/// sum_{n in S} n^m with 0^0 = 1.
inline BigInt power_sum(std::span<const std::uint64_t> s, std::uint64_t m)
{
    BigInt total = 0;
    for (auto n : s) total += boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m));
    return total;
}

/// Power sums of arbitrary classes for m = 0..max_degree.
inline PowerSumTable power_sum_table(std::span<const std::vector<std::uint64_t>> classes, std::int64_t max_degree)
{
    PowerSumTable t;
    if (max_degree < 0) return t;
    const auto rows = static_cast<std::size_t>(max_degree) + 1;
    t.sums.assign(rows, std::vector<BigInt>(classes.size(), BigInt{0}));
    for (std::size_t k = 0; k < classes.size(); ++k) {
        for (auto n : classes[k]) {
            BigInt power = 1;
            const BigInt value(n);
            for (std::size_t m = 0; m < rows; ++m) {
                t.sums[m][k] += power;
                power *= value;
            }
        }
    }
    return t;
}

/// s_k(m) for 0 <= m <= M.
inline PowerSumTable power_sum_table(const Partition& part)
{
    return power_sum_table(part.classes, part.degree());
}

/// Compare every class against class 0 for m = 0..through_degree.
inline EspReport verify_esp(const PowerSumTable& table)
{
    EspReport report;
    report.table = table;
    for (std::size_t m = 0; m < table.sums.size(); ++m) {
        const auto& row = table.sums[m];
        for (std::size_t k = 1; k < row.size(); ++k) {
            if (row[k] != row[0]) {
                report.first_violation = EspViolation{static_cast<std::int64_t>(m), 0, k};
                return report;
            }
        }
        report.equal_up_to = static_cast<std::int64_t>(m);
    }
    return report;
}

inline EspReport verify_esp(std::span<const std::vector<std::uint64_t>> classes, std::int64_t through_degree)
{
    return verify_esp(power_sum_table(classes, through_degree));
}

inline EspReport verify_esp(const Partition& part, std::int64_t through_degree)
{
    return verify_esp(part.classes, through_degree);
}

} // namespace ptep
