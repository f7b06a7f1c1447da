#pragma once

// JSON encodings shared by the CLI and downstream consumers. Integers that may
// exceed 53 bits are always decimal strings.

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "bigint.hpp"
#include "lehmer.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "rings.hpp"

namespace ptep {

using json = nlohmann::ordered_json;

inline json to_json(const BigInt& v) { return v.str(); }

inline json to_json(const std::vector<BigInt>& v)
{
    json out = json::array();
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

inline json to_json(const CyclotomicElement& x) { return to_json(x.coeffs()); }

inline json to_json(const SymbolicZeroSumForm& x) { return to_json(x.coeffs()); }

/// Coefficients lowest degree first.
template <ZModule R>
json to_json(const DensePolynomial<R>& f)
{
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

inline json to_json(const PowerSumTable& t)
{
    json out = json::array();
    for (const auto& row : t.sums) out.push_back(to_json(row));
    return out;
}

inline json to_json(const EspViolation& v) { return json{{"m", v.m}, {"j", v.j}, {"k", v.k}}; }

/// {"p","m","classes","power_sums","esp_verified_through"}; power sums run
/// through whatever degree the report was computed for.
inline json to_json(const Partition& part, const EspReport& report)
{
    json out;
    out["p"] = part.params.p();
    out["m"] = part.degree();
    out["classes"] = part.classes;
    out["power_sums"] = to_json(report.table);
    out["esp_verified_through"] = report.equal_up_to;
    return out;
}

/// Each class is a list of {"value": "<decimal>", "multiplicity": k}, values ascending.
inline json to_json(const ClassifiedMultiset& ms)
{
    json out = json::array();
    for (const auto& cls : ms.classes) {
        json entries = json::array();
        for (const auto& [value, count] : cls) entries.push_back(json{{"value", value.str()}, {"multiplicity", count}});
        out.push_back(std::move(entries));
    }
    return out;
}

} // namespace ptep
