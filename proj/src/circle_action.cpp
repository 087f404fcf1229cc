#include "padicmf/circle_action.hpp"

#include <algorithm>

#include "padicmf/errors.hpp"
#include "padicmf/parallel.hpp"

namespace padicmf {

namespace {

int max_prec(const QExpansion& g)
{
    int prec = 0;
    for (const auto& a : g.coeffs())
        prec = std::max(prec, a.prec());
    return prec;
}

} // namespace

QExpansion act(const ContinuousFn& f, const QExpansion& g)
{
    std::vector<Scalar> c(g.coeffs());
    parallel_for(c.size(), [&](std::size_t n) { c[n] = evaluate(f, static_cast<std::int64_t>(n)) * c[n]; });
    return QExpansion(std::move(c));
}

QExpansion act_character(const Scalar& zeta, const QExpansion& g, int max_level)
{
    if (zeta.level() > max_level)
        fail(ErrorCode::InvalidArgument, "root of unity above the maximal cyclotomic level");
    if (!zeta.is_root_of_unity())
        fail(ErrorCode::NotRootOfUnity, zeta.to_string() + " is not a p-power root of unity");
    std::vector<Scalar> c;
    c.reserve(g.coeffs().size());
    Scalar w = Scalar::one(zeta.p(), zeta.level(), zeta.prec());
    for (const auto& a : g.coeffs()) {
        c.push_back(w * a);
        w *= zeta;
    }
    return QExpansion(std::move(c));
}

DualQExpansion act_dual(const DualScalar& u, const QExpansion& g)
{
    const std::uint32_t p = g[0].p();
    const int prec = max_prec(g);
    const DualScalar one{Scalar::one(p, 0, prec), Scalar::zero(p, 0, prec)};
    std::vector<DualScalar> c;
    c.reserve(g.coeffs().size());
    DualScalar w = one;
    for (const auto& a : g.coeffs()) {
        c.push_back(DualScalar{w.a * a, w.b * a});
        w *= u;
    }
    return DualQExpansion(std::move(c));
}

Measure psi(const PadicContext& ctx, const QExpansion& g) { return Measure(ctx, Measure::Action{g}); }

DualQExpansion derivative_check(const QExpansion& g)
{
    const Scalar one = Scalar::one(g[0].p(), 0, max_prec(g));
    return act_dual(DualScalar{one, one}, g);
}

} // namespace padicmf
