#include "padicmf/json_io.hpp"

#include "padicmf/errors.hpp"

namespace padicmf::json {

namespace {

std::int64_t get_int(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        fail(ErrorCode::InvalidArgument, std::string("descriptor needs integer field \"") + key + "\"");
    return j.at(key).get<std::int64_t>();
}

std::vector<std::int64_t> get_int_array(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_array())
        fail(ErrorCode::InvalidArgument, std::string("descriptor needs array field \"") + key + "\"");
    std::vector<std::int64_t> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number_integer())
            fail(ErrorCode::InvalidArgument, std::string("non-integer entry in \"") + key + "\"");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

int checked_level(std::int64_t level)
{
    if (level < 0 || level > 16)
        fail(ErrorCode::InvalidArgument, "level out of range");
    return static_cast<int>(level);
}

} // namespace

json padic(const PadicInt& x)
{
    return json{{"residue", std::to_string(x.residue())}, {"prec", x.prec()}};
}

json scalar(const Scalar& x)
{
    if (x.is_rational())
        return padic(x.as_padic());
    json coeffs = json::array();
    for (auto r : x.residues())
        coeffs.push_back(std::to_string(r));
    return json{{"level", x.level()}, {"coeffs", coeffs}, {"prec", x.prec()}};
}

json series(const PadicContext& ctx, const QExpansion& g)
{
    json coeffs = json::array();
    json prec = json::array();
    for (const auto& c : g.coeffs()) {
        if (c.is_rational())
            coeffs.push_back(std::to_string(c.as_padic().residue()));
        else
            coeffs.push_back(scalar(c));
        prec.push_back(c.prec());
    }
    return json{{"p", ctx.p}, {"N", ctx.N}, {"M", g.truncation()}, {"coeffs", coeffs}, {"prec", prec}};
}

ContinuousFn parse_function(const PadicContext& ctx, const json& j)
{
    if (j.is_string()) {
        const auto word = j.get<std::string>();
        if (word == "trivial")
            return fn::constant(ctx, 1);
        if (word == "units")
            return fn::zero_extended_units(fn::constant(ctx, 1));
        fail(ErrorCode::InvalidArgument, "unknown function name \"" + word + "\"");
    }
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        fail(ErrorCode::InvalidArgument, "function descriptor needs a \"kind\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "trivial" || kind == "units")
        return parse_function(ctx, json(kind));
    if (kind == "constant")
        return fn::constant(ctx, get_int(j, "value"));
    if (kind == "monomial") {
        const auto d = get_int(j, "degree");
        if (d < 0 || d > 1000)
            fail(ErrorCode::InvalidArgument, "degree out of range");
        return fn::monomial(ctx, static_cast<int>(d));
    }
    if (kind == "polynomial")
        return fn::polynomial(ctx, get_int_array(j, "coeffs"));
    if (kind == "binomial") {
        const auto k = get_int(j, "k");
        if (k < 0 || k > 1000)
            fail(ErrorCode::InvalidArgument, "k out of range");
        return fn::binomial(ctx, static_cast<int>(k));
    }
    if (kind == "indicator")
        return fn::indicator(ctx, checked_level(get_int(j, "level")), get_int(j, "class"));
    if (kind == "locally_constant")
        return fn::locally_constant(ctx, checked_level(get_int(j, "level")), get_int_array(j, "table"));
    if (kind == "character") {
        const int level = checked_level(get_int(j, "level"));
        return fn::character(ctx, CyclotomicElem::zeta_power(ctx.p, level, ctx.N, get_int(j, "power")));
    }
    fail(ErrorCode::InvalidArgument, "unknown function kind \"" + kind + "\"");
}

ContinuousFn parse_function(const PadicContext& ctx, const std::string& text)
{
    if (!text.empty() && text.front() != '{' && text.front() != '"')
        return parse_function(ctx, json(text));
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::InvalidArgument, std::string("bad function JSON: ") + e.what());
    }
    return parse_function(ctx, j);
}

Measure parse_measure(const PadicContext& ctx, const json& j, int m_max)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        fail(ErrorCode::InvalidArgument, "measure descriptor needs a \"kind\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "eisenstein")
        return measure::eisenstein(ctx, PadicInt(ctx, get_int(j, "a")), m_max);
    if (kind == "dirac")
        return measure::dirac(ctx, get_int(j, "c"));
    if (kind == "amice") {
        std::vector<Scalar> b;
        for (auto c : get_int_array(j, "coeffs"))
            b.push_back(make_scalar(ctx, c));
        return measure::amice(ctx, std::move(b));
    }
    fail(ErrorCode::InvalidArgument, "unknown measure kind \"" + kind + "\"");
}

json cayley(const KummerBasePtr& base, const std::vector<std::vector<std::uint64_t>>& table)
{
    const std::uint64_t n = base->order();
    json rows = json::array();
    for (const auto& row : table) {
        json r = json::array();
        for (auto idx : row)
            r.push_back(json::array({idx / n, idx % n}));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace padicmf::json
