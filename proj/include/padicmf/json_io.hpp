#pragma once

#include <json.hpp>

#include "padicmf/functions.hpp"
#include "padicmf/kummer.hpp"
#include "padicmf/measures.hpp"
#include "padicmf/qseries.hpp"

namespace padicmf::json {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"residue": "...", "prec": n} for values in Z/p^N; cyclotomic values
/// carry {"level": m, "coeffs": [...], "prec": n} instead.
json scalar(const Scalar& x);
json padic(const PadicInt& x);

/// {"p", "N", "M", "coeffs": [...], "prec": [...]}; coefficients outside
/// Z/p^N are written as nested cyclotomic objects.
json series(const PadicContext& ctx, const QExpansion& g);

/// Function descriptors, e.g. {"kind":"monomial","degree":3},
/// {"kind":"indicator","level":1,"class":2}, {"kind":"character","level":1,"power":1}.
/// Also constant, polynomial, locally_constant, binomial, trivial, units.
/// Throws InvalidArgument on malformed input.
ContinuousFn parse_function(const PadicContext& ctx, const json& j);
/// Accepts a bare word ("trivial", "units") or a JSON object text.
ContinuousFn parse_function(const PadicContext& ctx, const std::string& text);

/// {"kind":"eisenstein","a":2}, {"kind":"dirac","c":1}, {"kind":"amice","coeffs":[...]}.
Measure parse_measure(const PadicContext& ctx, const json& j, int m_max = 3);

/// Cayley table as rows of [a, j] pairs.
json cayley(const KummerBasePtr& base, const std::vector<std::vector<std::uint64_t>>& table);

} // namespace padicmf::json
