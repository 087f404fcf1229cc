#include "padicmf/kummer.hpp"

#include <sstream>
#include <stdexcept>

#include "padicmf/context.hpp"
#include "padicmf/errors.hpp"
#include "padicmf/parallel.hpp"

namespace padicmf {

namespace {

std::string pair_string(const KummerElement& e)
{
    return "(" + std::to_string(e.a) + "," + std::to_string(e.j) + ")";
}

} // namespace

// ---------------------------------------------------------------------------
// LaurentCyclo

LaurentCyclo::LaurentCyclo(std::uint32_t p, int K, int N) : p_(p), K_(K), N_(N)
{
    if (p < 2 || K < 0 || N < 1)
        fail(ErrorCode::InvalidArgument, "bad Laurent ring parameters");
}

LaurentCyclo LaurentCyclo::constant(std::uint32_t p, int K, int N, const CyclotomicElem& c)
{
    return monomial(p, K, N, c, 0);
}

LaurentCyclo LaurentCyclo::monomial(std::uint32_t p, int K, int N, const CyclotomicElem& c, std::int64_t num)
{
    LaurentCyclo out(p, K, N);
    if (c.p() != p || c.level() > K)
        fail(ErrorCode::BaseMismatch, "coefficient does not live in the level-K cyclotomics");
    CyclotomicElem v = c.lifted(K);
    if (v.prec() > N)
        v = v.with_prec(N);
    if (!v.is_zero())
        out.terms_.emplace(num, std::move(v));
    return out;
}

LaurentCyclo LaurentCyclo::q_power(std::uint32_t p, int K, int N, std::int64_t num, int den_exp)
{
    if (den_exp < 0 || den_exp > K)
        fail(ErrorCode::InvalidArgument, "q exponent denominator exceeds the depth");
    return monomial(p, K, N, CyclotomicElem::one(p, K, N), num * static_cast<std::int64_t>(ipow(p, K - den_exp)));
}

void LaurentCyclo::check_compatible(const LaurentCyclo& o) const
{
    if (p_ != o.p_ || K_ != o.K_ || N_ != o.N_)
        fail(ErrorCode::BaseMismatch, "Laurent elements over different rings");
}

bool LaurentCyclo::is_unit_monomial() const
{
    return terms_.size() == 1 && terms_.begin()->second.is_unit();
}

bool LaurentCyclo::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

CyclotomicElem LaurentCyclo::constant_term() const
{
    const auto it = terms_.find(0);
    return it == terms_.end() ? CyclotomicElem::zero(p_, K_, N_) : it->second;
}

LaurentCyclo& LaurentCyclo::operator+=(const LaurentCyclo& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

LaurentCyclo LaurentCyclo::operator*(const LaurentCyclo& o) const
{
    check_compatible(o);
    LaurentCyclo out(p_, K_, N_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            CyclotomicElem c = c1 * c2;
            auto it = out.terms_.find(e1 + e2);
            if (it == out.terms_.end())
                out.terms_.emplace(e1 + e2, std::move(c));
            else
                it->second += c;
        }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

LaurentCyclo LaurentCyclo::pow(std::uint64_t e) const
{
    LaurentCyclo result = constant(p_, K_, N_, CyclotomicElem::one(p_, K_, N_));
    LaurentCyclo base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

LaurentCyclo LaurentCyclo::inverse() const
{
    if (!is_unit_monomial())
        fail(ErrorCode::NotUnit, to_string() + " is not a unit monomial");
    const auto& [e, c] = *terms_.begin();
    return monomial(p_, K_, N_, c.inverse(), -e);
}

LaurentCyclo LaurentCyclo::substitute(const CyclotomicElem& w, int d) const
{
    if (d < 0 || d > K_)
        fail(ErrorCode::InvalidArgument, "substitution depth exceeds the ring depth");
    const std::int64_t step = static_cast<std::int64_t>(ipow(p_, K_ - d));
    const CyclotomicElem wl = w.lifted(K_).with_prec(N_);
    const CyclotomicElem winv = wl.inverse();
    LaurentCyclo out(p_, K_, N_);
    for (const auto& [e, c] : terms_) {
        if (e % step != 0)
            fail(ErrorCode::UnsupportedShape, "exponent is not a multiple of 1/p^d");
        const std::int64_t s = e / step;
        const CyclotomicElem factor = s >= 0 ? wl.pow(static_cast<std::uint64_t>(s)) : winv.pow(static_cast<std::uint64_t>(-s));
        out += monomial(p_, K_, N_, c * factor, e);
    }
    return out;
}

bool operator==(const LaurentCyclo& a, const LaurentCyclo& b)
{
    return a.p_ == b.p_ && a.K_ == b.K_ && a.N_ == b.N_ && a.terms_ == b.terms_;
}

std::string LaurentCyclo::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*q^(" << e << "/" << ipow(p_, K_) << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bases and elements

std::uint64_t KummerBase::order() const { return ipow(p, k); }

CyclotomicElem KummerBase::zeta_k(std::int64_t j) const
{
    return CyclotomicElem::zeta_power(p, K, N, j * static_cast<std::int64_t>(ipow(p, K - k)));
}

bool operator==(const KummerBase& a, const KummerBase& b)
{
    return a.p == b.p && a.k == b.k && a.K == b.K && a.N == b.N && a.param == b.param && a.root == b.root;
}

KummerBasePtr kummer_base(std::uint32_t p, int k, int K, int N)
{
    if (k < 1 || K < k)
        fail(ErrorCode::InvalidArgument, "need 1 <= k <= K");
    return kummer_base(p, k, K, N, LaurentCyclo::q_power(p, K, N, 1, 0), LaurentCyclo::q_power(p, K, N, 1, k));
}

KummerBasePtr kummer_base(std::uint32_t p, int k, int K, int N, LaurentCyclo param, LaurentCyclo root)
{
    if (k < 1 || K < k)
        fail(ErrorCode::InvalidArgument, "need 1 <= k <= K");
    if (param.p() != p || param.depth() != K || param.prec() != N || root.p() != p || root.depth() != K || root.prec() != N)
        fail(ErrorCode::BaseMismatch, "parameter and root must live in the base ring");
    if (!root.is_unit_monomial() || !(root.pow(ipow(p, k)) == param))
        fail(ErrorCode::IncompatibleRoots, "chosen root is not a p^k-th root of the parameter");

    auto base = std::make_shared<KummerBase>();
    base->p = p;
    base->k = k;
    base->K = K;
    base->N = N;
    base->param = std::move(param);
    base->root = std::move(root);
    const std::uint64_t n = base->order();
    const LaurentCyclo rinv = base->root.inverse();
    LaurentCyclo up = LaurentCyclo::constant(p, K, N, CyclotomicElem::one(p, K, N));
    LaurentCyclo down = up;
    for (std::uint64_t a = 0; a < n; ++a) {
        base->root_powers.push_back(up);
        base->root_inverse_powers.push_back(down);
        up = up * base->root;
        down = down * rinv;
    }
    base->param_inverse = base->param.inverse();
    for (std::uint64_t j = 0; j < n; ++j)
        base->zeta_powers.push_back(base->zeta_k(static_cast<std::int64_t>(j)));
    return base;
}

KummerBasePtr dual_base(const KummerBasePtr& base)
{
    return kummer_base(base->p, base->k, base->K, base->N, *base->param_inverse, base->root.inverse());
}

std::uint64_t KummerElement::index() const { return a * base->order() + j; }

bool operator==(const KummerElement& x, const KummerElement& y)
{
    return x.a == y.a && x.j == y.j && (x.base == y.base || *x.base == *y.base);
}

KummerElement kummer_element(const KummerBasePtr& base, std::uint64_t a, std::uint64_t j)
{
    const std::uint64_t n = base->order();
    if (a >= n || j >= n)
        fail(ErrorCode::InvalidArgument, "Kummer indices must lie in [0, p^k)");
    return KummerElement{base, a, j};
}

KummerElement kummer_element_at(const KummerBasePtr& base, std::uint64_t index)
{
    const std::uint64_t n = base->order();
    return kummer_element(base, index / n, index % n);
}

std::vector<KummerElement> all_elements(const KummerBasePtr& base)
{
    const std::uint64_t n = base->order();
    std::vector<KummerElement> out;
    out.reserve(n * n);
    for (std::uint64_t i = 0; i < n * n; ++i)
        out.push_back(kummer_element_at(base, i));
    return out;
}

LaurentCyclo realize(const KummerElement& e)
{
    const auto& b = *e.base;
    return LaurentCyclo::constant(b.p, b.K, b.N, b.zeta_powers[e.j]) * b.root_powers[e.a];
}

std::optional<KummerElement> decode(const KummerBasePtr& base, const LaurentCyclo& x, std::uint64_t a)
{
    if (a >= base->order())
        return std::nullopt;
    const LaurentCyclo c = x * base->root_inverse_powers[a];
    if (!c.is_constant() || c.is_zero())
        return std::nullopt;
    const CyclotomicElem v = c.constant_term();
    for (std::uint64_t j = 0; j < base->zeta_powers.size(); ++j)
        if (v == base->zeta_powers[j])
            return KummerElement{base, a, j};
    return std::nullopt;
}

KummerElement carrying_law(const KummerElement& e1, const KummerElement& e2)
{
    const std::uint64_t n = e1.base->order();
    std::uint64_t a = e1.a + e2.a;
    if (a >= n)
        a -= n;
    return KummerElement{e1.base, a, (e1.j + e2.j) % n};
}

KummerElement kummer_mul(const KummerElement& e1, const KummerElement& e2, const KummerLaw& law)
{
    if (!(e1.base == e2.base || *e1.base == *e2.base))
        fail(ErrorCode::BaseMismatch, "elements of different Kummer groups");
    return law(e1, e2);
}

std::optional<KummerElement> realized_mul(const KummerElement& e1, const KummerElement& e2)
{
    if (!(e1.base == e2.base || *e1.base == *e2.base))
        fail(ErrorCode::BaseMismatch, "elements of different Kummer groups");
    const std::uint64_t n = e1.base->order();
    LaurentCyclo x = realize(e1) * realize(e2);
    std::uint64_t a = e1.a + e2.a;
    if (a >= n) {
        x = x * *e1.base->param_inverse;
        a -= n;
    }
    return decode(e1.base, x, a);
}

std::uint64_t kummer_pair(const KummerElement& e, const KummerElement& e2)
{
    const auto& b1 = *e.base;
    const auto& b2 = *e2.base;
    if (b1.p != b2.p || b1.k != b2.k || b1.K != b2.K || b1.N != b2.N || !(b2.param == *b1.param_inverse) ||
        !(b2.root == b1.root_inverse_powers[1]))
        fail(ErrorCode::BaseMismatch, "second argument must lie over the inverted parameter");
    const std::uint64_t n = b1.order();
    const LaurentCyclo value = realize(e).pow(e2.a) * realize(e2).pow(e.a);
    std::optional<std::uint64_t> realized;
    if (value.is_constant() && !value.is_zero())
        for (std::uint64_t v = 0; v < n; ++v)
            if (value.constant_term() == b1.zeta_powers[v]) {
                realized = v;
                break;
            }
    const std::uint64_t closed = (e.j * e2.a + e2.j * e.a) % n;
    if (!realized || *realized != closed)
        throw std::logic_error("pairing realization disagrees with the closed form at " + pair_string(e) + "," +
                               pair_string(e2));
    return closed;
}

// ---------------------------------------------------------------------------
// Isomorphisms from root systems

void validate_roots(const RootSystem& rs)
{
    if (rs.roots.empty())
        fail(ErrorCode::IncompatibleRoots, "empty root system");
    for (const auto& r : rs.roots)
        if (!r.is_unit_monomial())
            fail(ErrorCode::IncompatibleRoots, "root " + r.to_string() + " is not a unit monomial");
    for (std::size_t n = 0; n + 1 < rs.roots.size(); ++n)
        if (!(rs.roots[n + 1].pow(rs.roots[n].p()) == rs.roots[n]))
            fail(ErrorCode::IncompatibleRoots, "root " + std::to_string(n + 1) + " raised to p is not root " + std::to_string(n));
}

namespace {

void check_root_system_for(const RootSystem& rs, const KummerBase& b)
{
    validate_roots(rs);
    if (rs.roots.size() < static_cast<std::size_t>(b.k) + 1)
        fail(ErrorCode::IncompatibleRoots, "root system is shallower than the torsion level");
    const auto& t = rs.roots.front();
    if (t.p() != b.p || t.depth() != b.K || t.prec() != b.N)
        fail(ErrorCode::BaseMismatch, "root system lives in a different ring");
}

} // namespace

KummerBasePtr iso_target(const RootSystem& rs, const KummerBasePtr& source)
{
    check_root_system_for(rs, *source);
    return kummer_base(source->p, source->k, source->K, source->N, rs.roots.front() * source->param,
                       rs.roots[static_cast<std::size_t>(source->k)] * source->root);
}

KummerElement kummer_iso(const RootSystem& rs, const KummerElement& e, const KummerBasePtr& target)
{
    const auto& b = *e.base;
    check_root_system_for(rs, b);
    if (target->p != b.p || target->k != b.k || target->K != b.K || target->N != b.N ||
        !(target->param == rs.roots.front() * b.param))
        fail(ErrorCode::BaseMismatch, "target parameter is not t times the source parameter");
    const LaurentCyclo y = realize(e) * rs.roots[static_cast<std::size_t>(b.k)].pow(e.a);
    auto out = decode(target, y, e.a);
    if (!out)
        fail(ErrorCode::IncompatibleRoots, "image of " + pair_string(e) + " is not a point of the target group");
    return *out;
}

KummerElement kummer_iso(const RootSystem& rs, const KummerElement& e)
{
    return kummer_iso(rs, e, iso_target(rs, e.base));
}

// ---------------------------------------------------------------------------
// Exhaustive checks

void KummerReport::fail(const std::string& check, const std::string& detail)
{
    if (passed) {
        passed = false;
        failed_check = check;
        counterexample = detail;
    }
    log.push_back("FAIL " + check + ": " + detail);
}

std::vector<std::vector<std::uint64_t>> cayley_table(const KummerBasePtr& base, const KummerLaw& law)
{
    const auto elems = all_elements(base);
    const std::size_t n = elems.size();
    std::vector<std::vector<std::uint64_t>> table(n, std::vector<std::uint64_t>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            table[x][y] = kummer_mul(elems[x], elems[y], law).index();
    return table;
}

std::vector<int> p_group_invariants(const std::vector<std::vector<std::uint64_t>>& table, std::uint64_t identity, std::uint32_t p)
{
    const std::size_t n = table.size();
    // count[i] = |G[p^i]|, from the order of every element.
    std::vector<std::uint64_t> count;
    std::vector<int> order_exp(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        std::uint64_t y = x;
        std::uint64_t order = 1;
        while (y != identity) {
            y = table[y][x];
            if (++order > n)
                return {};
        }
        int e = 0;
        while (order % p == 0) {
            order /= p;
            ++e;
        }
        if (order != 1)
            return {};
        order_exp[x] = e;
    }
    int max_e = 0;
    for (int e : order_exp)
        max_e = std::max(max_e, e);
    for (int i = 0; i <= max_e; ++i) {
        std::uint64_t c = 0;
        for (int e : order_exp)
            if (e <= i)
                ++c;
        count.push_back(c);
    }
    // Parts of size >= i number log_p(count[i] / count[i-1]).
    std::vector<int> at_least;
    for (int i = 1; i <= max_e; ++i) {
        std::uint64_t ratio = count[i] / count[i - 1];
        int parts = 0;
        while (ratio > 1) {
            if (ratio % p != 0)
                return {};
            ratio /= p;
            ++parts;
        }
        at_least.push_back(parts);
    }
    std::vector<int> invariants;
    for (int i = max_e; i >= 1; --i) {
        const int here = at_least[i - 1] - (i < max_e ? at_least[i] : 0);
        for (int r = 0; r < here; ++r)
            invariants.push_back(i);
    }
    return invariants;
}

std::vector<std::vector<std::uint64_t>> pairing_matrix(const KummerBasePtr& base)
{
    const auto dual = dual_base(base);
    const auto left = all_elements(base);
    const auto right = all_elements(dual);
    std::vector<std::vector<std::uint64_t>> m(left.size(), std::vector<std::uint64_t>(right.size()));
    parallel_for(left.size(), [&](std::size_t x) {
        for (std::size_t y = 0; y < right.size(); ++y)
            m[x][y] = kummer_pair(left[x], right[y]);
    });
    return m;
}

bool pairing_is_perfect(const std::vector<std::vector<std::uint64_t>>& m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t x = 1; x < rows; ++x) {
        bool nonzero = false;
        for (std::size_t y = 0; y < cols && !nonzero; ++y)
            nonzero = m[x][y] != 0;
        if (!nonzero)
            return false;
    }
    for (std::size_t y = 1; y < cols; ++y) {
        bool nonzero = false;
        for (std::size_t x = 0; x < rows && !nonzero; ++x)
            nonzero = m[x][y] != 0;
        if (!nonzero)
            return false;
    }
    return true;
}

namespace {

/// Compares the law with the ring product on every pair and checks that
/// every realized point satisfies x^(p^k) = Q^a.
void check_realization(const KummerBasePtr& base, const KummerLaw& law, const std::string& label, KummerReport& report)
{
    const auto elems = all_elements(base);
    const std::size_t n = elems.size();
    const std::uint64_t order = base->order();
    for (const auto& e : elems) {
        ++report.checks;
        if (!(realize(e).pow(order) == base->param.pow(e.a))) {
            report.fail(label + " torsion equation", pair_string(e));
            return;
        }
    }
    // One slot per row keeps the first counterexample independent of scheduling.
    std::vector<std::string> row_failure(n);
    parallel_for(n, [&](std::size_t x) {
        for (std::size_t y = 0; y < n; ++y) {
            const auto ring = realized_mul(elems[x], elems[y]);
            const auto closed = kummer_mul(elems[x], elems[y], law);
            if (!ring || !(*ring == closed)) {
                row_failure[x] = pair_string(elems[x]) + "*" + pair_string(elems[y]) + ": law gives " + pair_string(closed) +
                                 ", ring gives " + (ring ? pair_string(*ring) : std::string("no point"));
                return;
            }
        }
    });
    report.checks += n * n;
    for (const auto& f : row_failure)
        if (!f.empty()) {
            report.fail(label + " law vs realization", f);
            return;
        }
    report.log.push_back(label + ": law agrees with ring arithmetic on " + std::to_string(n * n) + " pairs");
}

} // namespace

KummerReport kummer_structure_check(const KummerBasePtr& base, const KummerLaw& law)
{
    KummerReport report;
    const std::uint64_t order = base->order();
    const auto table = cayley_table(base, law);
    const std::size_t n = table.size();
    const std::string tag = "p=" + std::to_string(base->p) + " k=" + std::to_string(base->k);
    auto name = [&](std::uint64_t i) { return pair_string(kummer_element_at(base, i)); };

    report.log.push_back(tag + ": " + std::to_string(n) + " elements");
    if (n != order * order)
        report.fail("cardinality", std::to_string(n));

    for (std::size_t x = 0; x < n && report.passed; ++x) {
        ++report.checks;
        if (table[0][x] != x || table[x][0] != x)
            report.fail("identity", name(x));
    }
    for (std::size_t x = 0; x < n && report.passed; ++x) {
        bool has_inverse = false;
        for (std::size_t y = 0; y < n; ++y)
            has_inverse = has_inverse || table[x][y] == 0;
        ++report.checks;
        if (!has_inverse)
            report.fail("inverse", name(x));
    }
    for (std::size_t x = 0; x < n && report.passed; ++x)
        for (std::size_t y = 0; y < n && report.passed; ++y) {
            ++report.checks;
            if (table[x][y] != table[y][x])
                report.fail("commutativity", name(x) + "," + name(y));
            for (std::size_t z = 0; z < n && report.passed; ++z) {
                ++report.checks;
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    report.fail("associativity", name(x) + "," + name(y) + "," + name(z));
            }
        }
    if (!report.passed)
        return report;
    report.log.push_back(tag + ": group axioms hold");

    const auto inv = p_group_invariants(table, 0, base->p);
    ++report.checks;
    if (inv != std::vector<int>{base->k, base->k}) {
        std::string got;
        for (int e : inv)
            got += (got.empty() ? "" : ",") + std::to_string(e);
        report.fail("invariant factors", "got p-exponents [" + got + "]");
        return report;
    }
    report.log.push_back(tag + ": group is (Z/p^k)^2, every order divides p^k");

    // Projection to the marker is a homomorphism whose kernel is the mu_{p^k} subgroup.
    for (std::size_t x = 0; x < n && report.passed; ++x)
        for (std::size_t y = 0; y < n && report.passed; ++y) {
            ++report.checks;
            if (table[x][y] / order != (x / order + y / order) % order)
                report.fail("projection homomorphism", name(x) + "," + name(y));
            if (x < order && y < order && table[x][y] >= order)
                report.fail("mu subgroup closure", name(x) + "," + name(y));
        }
    if (!report.passed)
        return report;
    report.log.push_back(tag + ": extension by mu_{p^k} with quotient Z/p^k");

    check_realization(base, law, tag + " over Q", report);
    if (!report.passed)
        return report;

    std::vector<std::vector<std::uint64_t>> m;
    try {
        m = pairing_matrix(base);
    } catch (const std::logic_error& e) {
        report.fail("pairing closed form vs realization", e.what());
        return report;
    }
    report.checks += n * n;
    const auto dual_table = cayley_table(dual_base(base), carrying_law);
    for (std::size_t x = 0; x < n && report.passed; ++x)
        for (std::size_t x2 = 0; x2 < n && report.passed; ++x2)
            for (std::size_t y = 0; y < n && report.passed; ++y) {
                report.checks += 2;
                if (m[table[x][x2]][y] != (m[x][y] + m[x2][y]) % order)
                    report.fail("pairing bilinear (left)", name(x) + "," + name(x2) + "," + name(y));
                else if (m[y][dual_table[x][x2]] != (m[y][x] + m[y][x2]) % order)
                    report.fail("pairing bilinear (right)", name(y) + "," + name(x) + "," + name(x2));
            }
    ++report.checks;
    if (report.passed && !pairing_is_perfect(m))
        report.fail("pairing perfectness", "nontrivial kernel");
    if (report.passed)
        report.log.push_back(tag + ": pairing is bilinear and perfect, realization matches closed form");
    return report;
}

KummerReport serre_tate_action_check(const CyclotomicElem& zeta, int k, int N, const KummerLaw& law)
{
    const std::uint32_t p = zeta.p();
    if (k < 1 || zeta.level() > k)
        fail(ErrorCode::InvalidArgument, "zeta must have level at most k");
    const int K = 2 * k;
    const std::int64_t pk = static_cast<std::int64_t>(ipow(p, k));
    if (zeta.prec() < N)
        fail(ErrorCode::PrecisionExhausted, "zeta is known to less than the check precision");
    const CyclotomicElem z = zeta.lifted(K).with_prec(N);

    // zeta = zeta_{p^k}^e = zeta_{p^K}^(e p^k).
    std::optional<std::int64_t> found;
    for (std::int64_t e = 0; e < pk && !found; ++e)
        if (CyclotomicElem::zeta_power(p, K, N, e * pk) == z)
            found = e;
    if (!found)
        fail(ErrorCode::NotRootOfUnity, zeta.to_string() + " is not a p^k-th root of unity");
    const std::int64_t e = *found;

    KummerReport report;
    const auto source = kummer_base(p, k, K, N);
    // w = zeta^(-1/p^k) = zeta_{p^K}^(-e); the target parameter is zeta^(-1) q with root w q^(1/p^k).
    const CyclotomicElem w = CyclotomicElem::zeta_power(p, K, N, -e);
    const auto target = kummer_base(
        p, k, K, N,
        LaurentCyclo::constant(p, K, N, CyclotomicElem::zeta_power(p, K, N, -e * pk)) * LaurentCyclo::q_power(p, K, N, 1, 0),
        LaurentCyclo::constant(p, K, N, w) * LaurentCyclo::q_power(p, K, N, 1, k));
    const std::string tag = "p=" + std::to_string(p) + " k=" + std::to_string(k) + " e=" + std::to_string(e);

    check_realization(source, law, tag + " G_q", report);
    if (report.passed)
        check_realization(target, law, tag + " G_{zeta^-1 q}", report);
    if (!report.passed)
        return report;

    // (i) substitution q -> zeta^(-1) q carries the table of G_q onto that of G_{zeta^-1 q}.
    const auto elems = all_elements(source);
    const std::size_t n = elems.size();
    std::vector<KummerElement> image;
    std::vector<bool> hit(n, false);
    for (const auto& x : elems) {
        const LaurentCyclo y = realize(x).substitute(w, k);
        ++report.checks;
        if (!(y.pow(static_cast<std::uint64_t>(pk)) == target->param.pow(x.a))) {
            report.fail("substitution torsion equation", pair_string(x));
            return report;
        }
        const auto d = decode(target, y, x.a);
        if (!d) {
            report.fail("substitution lands in target group", pair_string(x));
            return report;
        }
        if (hit[d->index()]) {
            report.fail("substitution injective", pair_string(x));
            return report;
        }
        hit[d->index()] = true;
        image.push_back(*d);
    }
    for (const auto& x : elems)
        for (const auto& y : elems) {
            ++report.checks;
            const auto lhs = image[kummer_mul(x, y, law).index()];
            const auto rhs = kummer_mul(image[x.index()], image[y.index()], law);
            if (!(lhs == rhs)) {
                report.fail("substitution homomorphism", pair_string(x) + "*" + pair_string(y));
                return report;
            }
        }
    report.log.push_back(tag + ": substitution is a group isomorphism onto G_{zeta^-1 q}[p^k]");

    // (ii) kummer_iso along t = zeta, roots zeta^(1/p^n) = zeta_{p^K}^(e p^(k-n)), undoes it.
    RootSystem rs;
    for (int m = 0; m <= k; ++m)
        rs.roots.push_back(LaurentCyclo::constant(
            p, K, N, CyclotomicElem::zeta_power(p, K, N, e * static_cast<std::int64_t>(ipow(p, k - m)))));
    for (const auto& x : elems) {
        ++report.checks;
        const auto back = kummer_iso(rs, image[x.index()], source);
        if (!(back == x)) {
            report.fail("iso round trip", pair_string(x) + " -> " + pair_string(image[x.index()]) + " -> " + pair_string(back));
            return report;
        }
    }
    for (const auto& x : elems)
        for (const auto& y : elems) {
            ++report.checks;
            const auto lhs = kummer_iso(rs, kummer_mul(image[x.index()], image[y.index()], law), source);
            const auto rhs = kummer_mul(kummer_iso(rs, image[x.index()], source), kummer_iso(rs, image[y.index()], source), law);
            if (!(lhs == rhs)) {
                report.fail("iso homomorphism", pair_string(x) + "*" + pair_string(y));
                return report;
            }
        }
    report.log.push_back(tag + ": iso along t = zeta returns the original table");
    return report;
}

} // namespace padicmf
