// Command-line front end. Every command prints one JSON document on stdout;
// failures print {"code", "message"} on stderr and exit with
// 1 (verification failed), 2 (domain error), 3 (two computation paths
// disagree) or 4 (bad configuration).

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

#include "padicmf/circle_action.hpp"
#include "padicmf/errors.hpp"
#include "padicmf/json_io.hpp"
#include "padicmf/kummer.hpp"
#include "padicmf/measures.hpp"
#include "padicmf/parallel.hpp"
#include "padicmf/qseries.hpp"
#include "padicmf/verify.hpp"

using namespace padicmf;
namespace pj = padicmf::json;
using Json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kDomain = 2, kDisagree = 3, kConfig = 4 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int report_error(const std::string& code, const std::string& message, int exit_code)
{
    std::cerr << Json{{"code", code}, {"message", message}}.dump() << "\n";
    return exit_code;
}

struct Options {
    std::uint32_t p = 5;
    int N = 12;
    int M = 60;
    std::optional<std::int64_t> a;
    int mmax = 3;
    int threads = 1;

    int k = 0;
    std::string twist;
    int s = 1;
    int t = 0;
    std::string chi1 = "trivial";
    std::string chi2 = "trivial";
    std::string suite = "all";
    int kummer_k = 1;
    std::string kummer_what = "dump";
};

PadicContext make_context(const Options& o)
{
    try {
        return PadicContext::make(o.p, o.N, o.M);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

std::int64_t multiplier(const Options& o)
{
    const std::int64_t a = o.a ? *o.a : default_multiplier(o.p);
    if (a % static_cast<std::int64_t>(o.p) == 0)
        throw ConfigError("a must be prime to p");
    return a;
}

ContinuousFn parse_fn_arg(const PadicContext& ctx, const std::string& text)
{
    try {
        return pj::parse_function(ctx, text);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

Json header(const std::string& command, const Options& o, std::optional<std::int64_t> a)
{
    Json cfg{{"p", o.p}, {"N", o.N}, {"M", o.M}, {"mmax", o.mmax}};
    if (a)
        cfg["a"] = *a;
    return Json{{"schema_version", pj::kSchemaVersion}, {"command", command}, {"config", cfg}};
}

int emit(const Json& doc)
{
    std::cout << doc.dump() << "\n";
    return kOk;
}

int cmd_eisenstein(const Options& o)
{
    const auto ctx = make_context(o);
    auto doc = header("eisenstein", o, std::nullopt);
    doc["k"] = o.k;
    if (o.twist.empty()) {
        doc["result"] = pj::series(ctx, eisenstein_2G(ctx, o.k));
    } else {
        const auto f = parse_fn_arg(ctx, o.twist);
        doc["twist"] = nlohmann::json::parse(o.twist.front() == '{' ? o.twist : "\"" + o.twist + "\"");
        doc["result"] = pj::series(ctx, eisenstein_2G_twisted(ctx, o.k, f));
    }
    return emit(doc);
}

int cmd_moment(const Options& o)
{
    const auto ctx = make_context(o);
    const auto a = multiplier(o);
    if (o.k < 1)
        throw ConfigError("k must be >= 1");
    const PadicInt pa(ctx, a);
    const auto f = fn::monomial(ctx, o.k - 1);
    auto doc = header("moment", o, a);
    doc["k"] = o.k;
    doc["constant"] = pj::scalar(kl_constant(pa, f, o.mmax));
    doc["result"] = pj::series(ctx, eisenstein_eval(pa, f, o.mmax));
    return emit(doc);
}

int cmd_nu(const Options& o)
{
    const auto ctx = make_context(o);
    const auto a = multiplier(o);
    if (o.s < 0 || o.t < 0)
        throw ConfigError("s and t must be >= 0");
    const PadicInt pa(ctx, a);
    const auto conv = convolution_nu(pa, tensor(fn::monomial(ctx, o.s), fn::monomial(ctx, o.t)), o.mmax);
    const auto closed = nu_closed_form(ctx, pa, o.s, o.t);
    const int e = std::min(series_prec(conv), series_prec(closed));
    const bool agree = conv.truncation() == closed.truncation() && congruent(conv, closed, e);
    auto doc = header("nu", o, a);
    doc["s"] = o.s;
    doc["t"] = o.t;
    doc["convolution"] = pj::series(ctx, conv);
    doc["closed_form"] = pj::series(ctx, closed);
    doc["agree"] = agree;
    emit(doc);
    if (!agree)
        return report_error("PathDisagreement", "convolution and closed form differ", kDisagree);
    return kOk;
}

int cmd_lvalue(const Options& o)
{
    const auto ctx = make_context(o);
    const auto a = multiplier(o);
    const auto chi1 = parse_fn_arg(ctx, o.chi1);
    const auto chi2 = parse_fn_arg(ctx, o.chi2);
    const auto L = two_variable_L(chi1, chi2, PadicInt(ctx, a), o.mmax);
    auto doc = header("lvalue", o, a);
    doc["chi1"] = o.chi1;
    doc["chi2"] = o.chi2;
    doc["factor"] = pj::scalar(L.factor);
    doc["constant"] = pj::scalar(L.constant);
    doc["result"] = pj::series(ctx, L.series);
    return emit(doc);
}

int cmd_verify(const Options& o)
{
    VerifyConfig cfg;
    cfg.ctx = make_context(o);
    cfg.a = multiplier(o);
    cfg.m_max = o.mmax;
    cfg.kummer_k = o.kummer_k;
    const auto known = suite_names();
    if (o.suite != "all" && std::find(known.begin(), known.end(), o.suite) == known.end())
        throw ConfigError("unknown suite " + o.suite);
    if (o.suite == "all" || o.suite == "kummer")
        if (o.kummer_k < 1 || ipow(o.p, o.kummer_k) > 27)
            throw ConfigError("exhaustive Kummer checks need p^k <= 27");

    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_suite(o.suite, cfg);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    auto doc = header("verify", o, cfg.a);
    doc["suite"] = o.suite;
    bool all_passed = true;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    Json suites = Json::array();
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        checks += r.checks;
        failures += r.failures;
        Json s{{"name", r.name},      {"passed", r.passed},   {"checks", r.checks},
               {"failures", r.failures}, {"details", r.details}, {"seconds", r.seconds}};
        if (!r.first_failure.empty())
            s["first_counterexample"] = r.first_failure;
        suites.push_back(std::move(s));
    }
    doc["suites"] = suites;
    doc["checks"] = checks;
    doc["failures"] = failures;
    doc["passed"] = all_passed;
    doc["wall_seconds"] = wall;
    emit(doc);
    return all_passed ? kOk : kVerifyFailed;
}

int cmd_kummer(const Options& o)
{
    if (o.kummer_k < 1 || !is_prime(o.p) || o.p < 3 || ipow(o.p, o.kummer_k) > 81)
        throw ConfigError("kummer dump needs an odd prime p and p^k <= 81");
    const int N = std::min(o.N, 4);
    const auto base = kummer_base(o.p, o.kummer_k, o.kummer_k, N);
    auto doc = header("kummer", o, std::nullopt);
    doc["k"] = o.kummer_k;
    doc["modulus"] = base->order();
    if (o.kummer_what == "dump" || o.kummer_what == "table")
        doc["cayley"] = pj::cayley(base, cayley_table(base));
    if (o.kummer_what == "dump" || o.kummer_what == "pairing")
        doc["pairing"] = pairing_matrix(base);
    return emit(doc);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact p-adic modular form and measure computations"};
    app.fallthrough();
    app.require_subcommand(1);
    app.allow_config_extras(false);
    app.set_config("--config", "", "Flat key=value file; command-line flags override it");

    Options o;
    app.add_option("--p", o.p, "Odd prime")->capture_default_str();
    app.add_option("--N", o.N, "Precision exponent: scalars mod p^N")->capture_default_str();
    app.add_option("--M", o.M, "q-expansion truncation")->capture_default_str();
    app.add_option("--a", o.a, "Multiplier a (default: smallest generator of (Z/p^2)^x)");
    app.add_option("--mmax", o.mmax, "Largest level of the constant-term functional")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads for coefficient loops")->capture_default_str();

    auto* eis = app.add_subcommand("eisenstein", "2G_k, optionally twisted by a locally constant function");
    eis->add_option("--k", o.k, "Weight")->required();
    eis->add_option("--twist", o.twist, "Function descriptor JSON");

    auto* mom = app.add_subcommand("moment", "mu^(a)(z^(k-1)) and its regularized constant term");
    mom->add_option("--k", o.k, "Weight")->required();

    auto* nu = app.add_subcommand("nu", "nu(x^s y^t) by convolution and in closed form");
    nu->add_option("--s", o.s)->capture_default_str();
    nu->add_option("--t", o.t)->capture_default_str();

    auto* lval = app.add_subcommand("lvalue", "Two-variable L for a pair of characters");
    lval->add_option("--chi1", o.chi1, "\"trivial\", \"units\" or a function descriptor")->capture_default_str();
    lval->add_option("--chi2", o.chi2, "\"trivial\", \"units\" or a function descriptor")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "Run an invariant suite");
    ver->add_option("suite", o.suite, "moments|congruences|action|amice|kummer|nu|all")->capture_default_str();
    ver->add_option("--k", o.kummer_k, "Kummer torsion level")->capture_default_str();

    auto* kum = app.add_subcommand("kummer", "Dump the Cayley table and pairing matrix of G_q[p^k]");
    kum->add_option("what", o.kummer_what, "dump|table|pairing")
        ->check(CLI::IsMember({"dump", "table", "pairing"}))
        ->capture_default_str();
    kum->add_option("--k", o.kummer_k, "Torsion level")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("ConfigError", e.what(), kConfig);
    }

    if (o.threads < 1)
        return report_error("ConfigError", "--threads must be >= 1", kConfig);
    if (o.mmax < 1)
        return report_error("ConfigError", "--mmax must be >= 1", kConfig);
    set_thread_count(o.threads);

    try {
        if (*eis)
            return cmd_eisenstein(o);
        if (*mom)
            return cmd_moment(o);
        if (*nu)
            return cmd_nu(o);
        if (*lval)
            return cmd_lvalue(o);
        if (*ver)
            return cmd_verify(o);
        if (*kum)
            return cmd_kummer(o);
    } catch (const ConfigError& e) {
        return report_error("ConfigError", e.what(), kConfig);
    } catch (const Error& e) {
        return report_error(to_string(e.code()), e.what(), kDomain);
    } catch (const nlohmann::json::exception& e) {
        return report_error("ConfigError", e.what(), kConfig);
    }
    return kConfig;
}
