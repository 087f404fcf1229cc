#pragma once

#include "padicmf/functions.hpp"
#include "padicmf/measures.hpp"
#include "padicmf/qseries.hpp"

namespace padicmf {

/// The Cont(Z_p)-algebra action on q-expansions: coefficient n becomes f(n) a_n.
QExpansion act(const ContinuousFn& f, const QExpansion& g);

/// sum a_n q^n -> sum zeta^n a_n q^n, the substitution q -> zeta q.
/// Throws NotRootOfUnity, or InvalidArgument above max_level.
QExpansion act_character(const Scalar& zeta, const QExpansion& g, int max_level = kDefaultMaxLevel);

/// Same substitution for a dual-number unit u: coefficient n is u^n a_n, with
/// the powers u^n built by repeated multiplication in the dual numbers.
DualQExpansion act_dual(const DualScalar& u, const QExpansion& g);

/// The measure f -> act(f, g).
Measure psi(const PadicContext& ctx, const QExpansion& g);

/// act_dual(1 + eps, g). This is the left action q -> zeta q, whose derivative
/// at the identity is +theta: the result is g + eps theta(g).
DualQExpansion derivative_check(const QExpansion& g);

} // namespace padicmf
