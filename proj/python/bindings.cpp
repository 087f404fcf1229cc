#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padicmf/circle_action.hpp"
#include "padicmf/errors.hpp"
#include "padicmf/json_io.hpp"
#include "padicmf/kummer.hpp"
#include "padicmf/measures.hpp"
#include "padicmf/parallel.hpp"
#include "padicmf/rational.hpp"
#include "padicmf/verify.hpp"

namespace py = pybind11;
using namespace padicmf;
namespace pj = padicmf::json;

// Results cross the boundary as JSON text in the CLI schema; the Python
// wrapper decodes them.

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(); }

PadicContext ctx_of(std::uint32_t p, int N, int M) { return PadicContext::make(p, N, M); }

nlohmann::json report_json(const KummerReport& r)
{
    return {{"passed", r.passed}, {"checks", r.checks}, {"failed_check", r.failed_check},
            {"counterexample", r.counterexample}, {"log", r.log}};
}

} // namespace

PYBIND11_MODULE(_padicmf, m)
{
    m.doc() = "Exact p-adic modular form, measure and Kummer group computations";

    static py::exception<Error> exc(m, "PadicError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr)
                std::rethrow_exception(ptr);
        } catch (const Error& e) {
            py::set_error(exc, e.what());
        }
    });

    m.def("set_thread_count", &set_thread_count, py::arg("n"));

    m.def("bernoulli", [](int k) {
        const BigRational b = bernoulli(k);
        return py::make_tuple(numerator(b).str(), denominator(b).str());
    }, py::arg("k"), "B_k as (numerator, denominator) decimal strings.");

    m.def("reduce_rational", [](const std::string& num, const std::string& den, std::uint32_t p, int N) {
        return dump(pj::padic(reduce_rational(BigInt(num), BigInt(den), ctx_of(p, N, 1))));
    }, py::arg("num"), py::arg("den"), py::arg("p"), py::arg("N"));

    m.def("eisenstein_2G", [](std::uint32_t p, int N, int M, int k) {
        const auto ctx = ctx_of(p, N, M);
        return dump(pj::series(ctx, eisenstein_2G(ctx, k)));
    }, py::arg("p"), py::arg("N"), py::arg("M"), py::arg("k"));

    m.def("eisenstein_2G_twisted", [](std::uint32_t p, int N, int M, int k, const std::string& f) {
        const auto ctx = ctx_of(p, N, M);
        return dump(pj::series(ctx, eisenstein_2G_twisted(ctx, k, pj::parse_function(ctx, f))));
    }, py::arg("p"), py::arg("N"), py::arg("M"), py::arg("k"), py::arg("f"));

    m.def("eisenstein_eval", [](std::uint32_t p, int N, int M, std::int64_t a, const std::string& f, int m_max) {
        const auto ctx = ctx_of(p, N, M);
        return dump(pj::series(ctx, eisenstein_eval(PadicInt(ctx, a), pj::parse_function(ctx, f), m_max)));
    }, py::arg("p"), py::arg("N"), py::arg("M"), py::arg("a"), py::arg("f"), py::arg("m_max") = 3);

    m.def("kl_constant", [](std::uint32_t p, int N, std::int64_t a, const std::string& f, int m_max) {
        const auto ctx = ctx_of(p, N, 1);
        return dump(pj::scalar(kl_constant(PadicInt(ctx, a), pj::parse_function(ctx, f), m_max)));
    }, py::arg("p"), py::arg("N"), py::arg("a"), py::arg("f"), py::arg("m_max") = 3);

    m.def("act", [](std::uint32_t p, int N, const std::string& f, const std::vector<std::int64_t>& coeffs) {
        if (coeffs.empty())
            fail(ErrorCode::InvalidArgument, "empty series");
        const auto ctx = ctx_of(p, N, static_cast<int>(coeffs.size()) - 1);
        return dump(pj::series(ctx, act(pj::parse_function(ctx, f), series_from_integers(ctx, coeffs))));
    }, py::arg("p"), py::arg("N"), py::arg("f"), py::arg("coeffs"));

    m.def("theta", [](std::uint32_t p, int N, const std::vector<std::int64_t>& coeffs, int t) {
        if (coeffs.empty())
            fail(ErrorCode::InvalidArgument, "empty series");
        const auto ctx = ctx_of(p, N, static_cast<int>(coeffs.size()) - 1);
        return dump(pj::series(ctx, theta_power(series_from_integers(ctx, coeffs), t)));
    }, py::arg("p"), py::arg("N"), py::arg("coeffs"), py::arg("t") = 1);

    m.def("nu", [](std::uint32_t p, int N, int M, std::int64_t a, int s, int t, int m_max) {
        const auto ctx = ctx_of(p, N, M);
        const PadicInt pa(ctx, a);
        const auto conv = convolution_nu(pa, tensor(fn::monomial(ctx, s), fn::monomial(ctx, t)), m_max);
        const auto closed = nu_closed_form(ctx, pa, s, t);
        const int e = std::min(series_prec(conv), series_prec(closed));
        return dump({{"convolution", pj::series(ctx, conv)},
                     {"closed_form", pj::series(ctx, closed)},
                     {"agree", congruent(conv, closed, e)}});
    }, py::arg("p"), py::arg("N"), py::arg("M"), py::arg("a"), py::arg("s"), py::arg("t"), py::arg("m_max") = 3);

    m.def("two_variable_L", [](std::uint32_t p, int N, int M, std::int64_t a, const std::string& chi1, const std::string& chi2, int m_max) {
        const auto ctx = ctx_of(p, N, M);
        const auto L = two_variable_L(pj::parse_function(ctx, chi1), pj::parse_function(ctx, chi2), PadicInt(ctx, a), m_max);
        return dump({{"series", pj::series(ctx, L.series)}, {"factor", pj::scalar(L.factor)}, {"constant", pj::scalar(L.constant)}});
    }, py::arg("p"), py::arg("N"), py::arg("M"), py::arg("a"), py::arg("chi1"), py::arg("chi2"), py::arg("m_max") = 3);

    m.def("default_multiplier", &default_multiplier, py::arg("p"));

    m.def("kummer_mul", [](std::uint32_t p, int k, std::pair<std::uint64_t, std::uint64_t> x, std::pair<std::uint64_t, std::uint64_t> y) {
        const auto b = kummer_base(p, k, k, 3);
        const auto r = kummer_mul(kummer_element(b, x.first, x.second), kummer_element(b, y.first, y.second));
        return std::pair{r.a, r.j};
    }, py::arg("p"), py::arg("k"), py::arg("x"), py::arg("y"));

    m.def("kummer_pair", [](std::uint32_t p, int k, std::pair<std::uint64_t, std::uint64_t> x, std::pair<std::uint64_t, std::uint64_t> y) {
        const auto b = kummer_base(p, k, k, 3);
        return kummer_pair(kummer_element(b, x.first, x.second), kummer_element(dual_base(b), y.first, y.second));
    }, py::arg("p"), py::arg("k"), py::arg("x"), py::arg("y"));

    m.def("kummer_structure_check", [](std::uint32_t p, int k) {
        return dump(report_json(kummer_structure_check(kummer_base(p, k, k, 3))));
    }, py::arg("p"), py::arg("k"));

    m.def("serre_tate_action_check", [](std::uint32_t p, int k, std::int64_t power) {
        return dump(report_json(serre_tate_action_check(CyclotomicElem::zeta_power(p, k, 4, power), k)));
    }, py::arg("p"), py::arg("k"), py::arg("power") = 1);

    m.def("verify", [](const std::string& suite, std::uint32_t p, int N, int M, std::int64_t a, int kummer_k) {
        VerifyConfig cfg;
        cfg.ctx = ctx_of(p, N, M);
        cfg.a = a;
        cfg.kummer_k = kummer_k;
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : run_suite(suite, cfg))
            out.push_back({{"name", r.name}, {"passed", r.passed}, {"checks", r.checks},
                           {"failures", r.failures}, {"first_counterexample", r.first_failure}});
        return dump(out);
    }, py::arg("suite"), py::arg("p"), py::arg("N"), py::arg("M"), py::arg("a"), py::arg("kummer_k") = 1);
}
