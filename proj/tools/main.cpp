// zpsym CLI: exact Bernoulli/Euler values, power sums, identity verification
// sweeps, and p-adic integral reports with machine-readable output.
//
// Exit codes: 0 = success / all reports pass, 1 = at least one identity
// failed, 2 = usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "zpsym/sampling.hpp"
#include "zpsym/zpsym.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<zpsym::rational> parse_x_list(const std::vector<std::string>& xs) {
    std::vector<zpsym::rational> out;
    for (const auto& s : xs)
        out.push_back(zpsym::rational::parse(s));
    if (out.empty())
        out.emplace_back(0);
    return out;
}

ordered_json valuation_json(long v) {
    if (v == zpsym::padic_infinity)
        return "inf";
    return v;
}

std::string side_csv(const zpsym::verification_report::side& s) {
    if (std::holds_alternative<zpsym::rational>(s))
        return std::get<zpsym::rational>(s).to_string();
    std::string out;
    for (const auto& c : std::get<zpsym::truncated_series>(s).coefficients()) {
        if (!out.empty())
            out += ';';
        out += c.to_string();
    }
    return out;
}

// Streams reports in grid order and keeps the pass/fail tally.
class report_sink {
public:
    explicit report_sink(const std::string& format) : csv_(format == "csv") {
        if (csv_)
            std::cout << "identity,n,w1,w2,x,lhs,rhs,pass\n";
    }

    void emit(const zpsym::verification_report& r) {
        if (r.pass)
            ++pass_;
        else
            ++fail_;
        if (!csv_) {
            std::cout << zpsym::to_json(r).dump() << "\n";
            return;
        }
        auto field = [&](const char* key) -> std::string {
            if (!r.params.contains(key))
                return "";
            const auto& v = r.params[key];
            return v.is_string() ? v.get<std::string>() : v.dump();
        };
        std::string n = field("n");
        if (n.empty())
            n = field("order");
        std::cout << r.identity << ',' << n << ',' << field("w1") << ',' << field("w2")
                  << ',' << field("x") << ',' << side_csv(r.lhs) << ',' << side_csv(r.rhs)
                  << ',' << (r.pass ? "true" : "false") << "\n";
    }

    int finish() const {
        if (csv_)
            std::cout << "# summary pass=" << pass_ << " fail=" << fail_ << "\n";
        else
            std::cout << ordered_json{{"summary", {{"pass", pass_}, {"fail", fail_}}}}.dump()
                      << "\n";
        return fail_ == 0 ? exit_ok : exit_verify_failed;
    }

private:
    bool csv_;
    unsigned long pass_ = 0;
    unsigned long fail_ = 0;
};

struct verify_options {
    std::string identity;
    unsigned n_max = 6;
    unsigned w_max = 4;
    std::vector<std::string> x_raw;
    unsigned order = 12;
    bool odd_only = false;
    std::string format = "json-lines";
    // shift-identity sweeps
    unsigned count = 100;
    std::uint64_t seed = zpsym::default_sampler_seed;
    unsigned degree_max = 10;
};

std::vector<unsigned> w_values(const verify_options& opt, bool euler_side, unsigned lo) {
    const bool odd_only = euler_side || opt.odd_only;
    if (euler_side && !opt.odd_only && opt.w_max % 2 == 0)
        throw usage_error("identity '" + opt.identity +
                          "' requires odd w; pass --odd-only to sweep odd w <= --w-max " +
                          std::to_string(opt.w_max));
    std::vector<unsigned> ws;
    for (unsigned w = lo; w <= opt.w_max; ++w)
        if (!odd_only || w % 2 == 1)
            ws.push_back(w);
    if (ws.empty())
        throw usage_error("identity '" + opt.identity + "': empty w grid (--w-max too small)");
    return ws;
}

int run_verify(const verify_options& opt) {
    using zpsym::rational;
    using zpsym::symmetry_params;
    using zpsym::verification_report;

    if (opt.format != "json-lines" && opt.format != "csv")
        throw usage_error("unknown --format '" + opt.format + "'");
    const std::vector<rational> xs = parse_x_list(opt.x_raw);
    report_sink sink(opt.format);

    using pair_op = std::function<verification_report(const symmetry_params&)>;
    using single_op = std::function<verification_report(unsigned, unsigned, const rational&)>;

    auto sweep_pairs = [&](const pair_op& op, bool euler_side) {
        const auto ws = w_values(opt, euler_side, 1);
        for (unsigned n = 0; n <= opt.n_max; ++n)
            for (unsigned w1 : ws)
                for (unsigned w2 : ws)
                    for (const auto& x : xs)
                        sink.emit(op(symmetry_params{n, w1, w2, x}));
    };
    auto sweep_single = [&](const single_op& op, bool euler_side) {
        const auto ws = w_values(opt, euler_side, 1);
        for (unsigned n = 0; n <= opt.n_max; ++n)
            for (unsigned w1 : ws)
                for (const auto& x : xs)
                    sink.emit(op(n, w1, x));
    };

    if (opt.identity == "corollary2") {
        sweep_pairs(zpsym::corollary2_sides, false);
    } else if (opt.identity == "corollary4") {
        sweep_pairs(zpsym::corollary4_sides, false);
    } else if (opt.identity == "theorem5") {
        sweep_pairs(zpsym::theorem5_sides, true);
    } else if (opt.identity == "theorem7") {
        sweep_pairs(zpsym::theorem7_sides, true);
    } else if (opt.identity == "bernoulli_multiplication") {
        sweep_single(zpsym::bernoulli_multiplication, false);
    } else if (opt.identity == "eq30") {
        sweep_single(zpsym::eq30_identity, true);
    } else if (opt.identity == "euler_multiplication") {
        sweep_single(zpsym::euler_multiplication, true);
    } else if (opt.identity == "theorem1") {
        const auto ws = w_values(opt, false, 1);
        for (unsigned w1 : ws)
            for (unsigned w2 : ws)
                for (const auto& x : xs)
                    sink.emit(zpsym::theorem1_series(w1, w2, x, opt.order));
    } else if (opt.identity == "bosonic_ratio") {
        const auto ws = w_values(opt, false, 1);
        for (unsigned w1 : ws)
            for (unsigned w2 : ws)
                sink.emit(zpsym::series_identity_bosonic_ratio(w1, w2, opt.order));
    } else if (opt.identity == "fermionic_ratio") {
        const auto ws = w_values(opt, true, 1);
        for (unsigned w1 : ws)
            for (unsigned w2 : ws)
                for (const auto& x : xs)
                    sink.emit(zpsym::series_identity_fermionic_ratio(w1, w2, x, opt.order));
    } else if (opt.identity == "deeba_rodriguez") {
        const auto ws = w_values(opt, false, 2);
        for (unsigned n = 1; n <= opt.n_max; ++n)
            for (unsigned w : ws)
                sink.emit(zpsym::make_report("deeba_rodriguez",
                                             ordered_json{{"n", n}, {"w1", w}},
                                             zpsym::deeba_rodriguez(n, w),
                                             zpsym::bernoulli_number(n)));
    } else if (opt.identity == "corollary6") {
        const auto ws = w_values(opt, true, 3);
        for (unsigned n = 1; n <= opt.n_max; ++n)
            for (unsigned w : ws)
                sink.emit(zpsym::make_report("corollary6",
                                             ordered_json{{"n", n}, {"w1", w}},
                                             zpsym::euler_from_corollary6(n, w),
                                             zpsym::euler_number(n)));
    } else if (opt.identity == "shift_bosonic" || opt.identity == "shift_fermionic") {
        const bool bosonic = opt.identity == "shift_bosonic";
        zpsym::polynomial_sampler sampler(opt.seed, opt.degree_max, 10, 10);
        const unsigned n_hi = opt.n_max == 0 ? 1 : opt.n_max;
        for (unsigned i = 0; i < opt.count; ++i) {
            const zpsym::polynomial f = sampler.next();
            for (unsigned n = 1; n <= n_hi; ++n)
                sink.emit(bosonic ? zpsym::verify_shift_bosonic(f, n)
                                  : zpsym::verify_shift_fermionic(f, n));
        }
    } else {
        throw usage_error("unknown identity '" + opt.identity + "'");
    }
    return sink.finish();
}

struct padic_options {
    std::string kind;
    unsigned long p = 3;
    unsigned long n = 0;
    unsigned N_max = 4;
    std::string q_raw;
    unsigned long m = 0;
    unsigned long m_max = 0;
    bool m_max_given = false;
    long prec = 48;
    std::string format = "json-lines";
};

// Accepts "1+P" or "1+P^J" with P equal to --p.
zpsym::q_parameter parse_q(const padic_options& opt) {
    const std::string& s = opt.q_raw;
    if (s.rfind("1+", 0) != 0)
        throw usage_error("--q must have the form 1+p or 1+p^j");
    const std::string rest = s.substr(2);
    unsigned long base = 0, j = 1;
    const auto caret = rest.find('^');
    try {
        base = std::stoul(rest.substr(0, caret));
        if (caret != std::string::npos)
            j = std::stoul(rest.substr(caret + 1));
    } catch (const std::exception&) {
        throw usage_error("--q must have the form 1+p or 1+p^j");
    }
    if (base != opt.p)
        throw usage_error("--q base must equal --p");
    if (j == 0)
        throw usage_error("--q exponent must be >= 1");
    return zpsym::q_parameter::one_plus_prime_power(opt.p, j, opt.prec);
}

int run_padic(const padic_options& opt) {
    if (!zpsym::is_prime(opt.p))
        throw usage_error("--p must be prime");
    const bool csv = opt.format == "csv";
    if (!csv && opt.format != "json-lines")
        throw usage_error("unknown --format '" + opt.format + "'");

    if (opt.kind == "volkenborn" || opt.kind == "fermionic") {
        if (opt.kind == "fermionic" && opt.p == 2)
            throw usage_error("fermionic integral requires an odd prime");
        const auto kind = opt.kind == "volkenborn" ? zpsym::integral_kind::volkenborn
                                                   : zpsym::integral_kind::fermionic;
        const auto report = zpsym::convergence_report(kind, opt.n, opt.p, opt.N_max);
        if (csv) {
            std::cout << "N,valuation\n";
            for (const auto& [N, v] : report)
                std::cout << N << ',' << valuation_json(v).dump() << "\n";
        } else {
            ordered_json vals = ordered_json::array();
            for (const auto& [N, v] : report)
                vals.push_back(valuation_json(v));
            std::cout << ordered_json{{"kind", opt.kind},
                                      {"p", opt.p},
                                      {"n", opt.n},
                                      {"valuations", vals}}
                             .dump()
                      << "\n";
        }
        return exit_ok;
    }
    if (opt.kind == "carlitz") {
        if (opt.q_raw.empty())
            throw usage_error("carlitz requires --q");
        const zpsym::q_parameter q = parse_q(opt);
        const unsigned long lo = opt.m_max_given ? 0 : opt.m;
        const unsigned long hi = opt.m_max_given ? opt.m_max : opt.m;
        zpsym::carlitz_cache betas(q);
        if (csv)
            std::cout << "m,val,unit,prec\n";
        for (unsigned long m = lo; m <= hi; ++m) {
            const zpsym::padic_scalar b = betas(m);
            if (csv) {
                const auto j = b.to_json();
                std::cout << m << ',' << j["val"].dump() << ',' << b.unit().get_str() << ','
                          << b.precision() << "\n";
            } else {
                std::cout << ordered_json{{"m", m}, {"beta", b.to_json()}}.dump() << "\n";
            }
        }
        return exit_ok;
    }
    throw usage_error("unknown padic kind '" + opt.kind + "'");
}

struct series_options {
    std::string kind;
    unsigned order = 8;
    std::string c_raw = "1";
    std::string format = "json-lines";
};

int run_series(const series_options& opt) {
    using zpsym::truncated_series;
    truncated_series s(0);
    if (opt.kind == "bernoulli") {
        // t / (e^t - 1): coefficient k is B_k / k!.
        s = zpsym::div_exact(truncated_series::monomial(1, opt.order + 1),
                             truncated_series::exponential(zpsym::rational(1), opt.order + 1) -
                                 truncated_series::one(opt.order + 1),
                             1);
    } else if (opt.kind == "euler") {
        // 2 / (e^t + 1): coefficient k is E_k(0) / k!.
        s = zpsym::div_exact(zpsym::rational(2) * truncated_series::one(opt.order),
                             truncated_series::exponential(zpsym::rational(1), opt.order) +
                                 truncated_series::one(opt.order),
                             0);
    } else if (opt.kind == "exp") {
        s = truncated_series::exponential(zpsym::rational::parse(opt.c_raw), opt.order);
    } else {
        throw usage_error("unknown series kind '" + opt.kind + "'");
    }
    if (opt.format == "csv") {
        std::cout << "k,coefficient\n";
        for (std::size_t k = 0; k <= s.order(); ++k)
            std::cout << k << ',' << s.coefficient(k).to_string() << "\n";
    } else if (opt.format == "json-lines") {
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : s.coefficients())
            coeffs.push_back(c.to_string());
        std::cout << ordered_json{{"series", opt.kind}, {"order", s.order()}, {"coefficients", coeffs}}
                         .dump()
                  << "\n";
    } else {
        throw usage_error("unknown --format '" + opt.format + "'");
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bernoulli/Euler numbers, power-sum symmetry identities, and "
                 "p-adic integral approximants"};
    app.require_subcommand(1);

    std::string number_kind;
    unsigned long number_n = 0;
    auto* number = app.add_subcommand("number", "Print B_n or E_n as an exact rational");
    number->add_option("kind", number_kind, "bernoulli | euler")->required();
    number->add_option("n", number_n, "index n >= 0")->required();

    std::string poly_kind;
    unsigned long poly_n = 0;
    std::string poly_x;
    auto* poly = app.add_subcommand("polynomial", "Print B_n(x) or E_n(x) coefficients");
    poly->add_option("kind", poly_kind, "bernoulli | euler")->required();
    poly->add_option("n", poly_n, "index n >= 0")->required();
    poly->add_option("--x", poly_x, "also evaluate at x (num/den)");

    unsigned long ps_k = 0, ps_n = 0;
    bool ps_alt = false, ps_closed = false;
    auto* powersum = app.add_subcommand("powersum", "Power sums S_k(n) / T_k(n)");
    powersum->add_option("--k", ps_k, "exponent")->required();
    powersum->add_option("--n", ps_n, "upper limit")->required();
    powersum->add_flag("--alternating", ps_alt, "alternating sum T_k");
    powersum->add_flag("--closed", ps_closed,
                       "closed form: (B_k(n)-B_k)/k, or (E_k(n)+E_k)/2 for odd n");

    verify_options vo;
    auto* verify = app.add_subcommand("verify", "Sweep an identity over a parameter grid");
    verify->add_option("identity", vo.identity,
                       "corollary2|corollary4|bernoulli_multiplication|theorem1|"
                       "bosonic_ratio|deeba_rodriguez|theorem5|theorem7|eq30|"
                       "euler_multiplication|fermionic_ratio|corollary6|"
                       "shift_bosonic|shift_fermionic")
        ->required();
    verify->add_option("--n-max", vo.n_max, "max coefficient index n (default 6)");
    verify->add_option("--w-max", vo.w_max, "max w1/w2 (default 4)");
    verify->add_option("--x", vo.x_raw, "polynomial argument, num/den (repeatable)");
    verify->add_option("--order", vo.order, "series truncation order (default 12)");
    verify->add_flag("--odd-only", vo.odd_only, "restrict the w grid to odd values");
    verify->add_option("--count", vo.count, "polynomials to sample for shift sweeps");
    verify->add_option("--seed", vo.seed, "sampler seed for shift sweeps");
    verify->add_option("--degree-max", vo.degree_max, "max sampled degree for shift sweeps");
    verify->add_option("--format", vo.format, "json-lines | csv");

    padic_options po;
    auto* padic = app.add_subcommand("padic", "p-adic approximants and Carlitz numbers");
    padic->add_option("kind", po.kind, "volkenborn | fermionic | carlitz")->required();
    padic->add_option("--p", po.p, "prime")->required();
    padic->add_option("--n", po.n, "monomial exponent (volkenborn/fermionic)");
    padic->add_option("--N-max", po.N_max, "deepest Riemann-sum level (default 4)");
    padic->add_option("--q", po.q_raw, "q parameter, form 1+p or 1+p^j (carlitz)");
    padic->add_option("--m", po.m, "Carlitz index m");
    padic->add_option("--m-max", po.m_max, "print beta_0..beta_{m-max}");
    padic->add_option("--prec", po.prec, "working precision in p-adic digits (default 48)");
    padic->add_option("--format", po.format, "json-lines | csv");

    series_options so;
    auto* series = app.add_subcommand("series", "Exact truncated generating functions");
    series->add_option("kind", so.kind, "bernoulli | euler | exp")->required();
    series->add_option("--order", so.order, "truncation order (default 8)");
    series->add_option("--c", so.c_raw, "scale c for exp (e^(c t))");
    series->add_option("--format", so.format, "json-lines | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (number->parsed()) {
            if (number_kind == "bernoulli")
                std::cout << zpsym::bernoulli_number(number_n).to_string() << "\n";
            else if (number_kind == "euler")
                std::cout << zpsym::euler_number(number_n).to_string() << "\n";
            else
                throw usage_error("kind must be bernoulli or euler");
            return exit_ok;
        }
        if (poly->parsed()) {
            if (poly_kind != "bernoulli" && poly_kind != "euler")
                throw usage_error("kind must be bernoulli or euler");
            const zpsym::polynomial pn = poly_kind == "bernoulli"
                                             ? zpsym::bernoulli_polynomial(poly_n)
                                             : zpsym::euler_polynomial(poly_n);
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : pn.coefficients())
                coeffs.push_back(c.to_string());
            ordered_json out{{"kind", poly_kind}, {"n", poly_n}, {"coefficients", coeffs}};
            if (!poly_x.empty()) {
                const zpsym::rational x = zpsym::rational::parse(poly_x);
                out["x"] = x.to_string();
                out["value"] = pn(x).to_string();
            }
            std::cout << out.dump() << "\n";
            return exit_ok;
        }
        if (powersum->parsed()) {
            zpsym::rational v;
            if (ps_closed)
                v = ps_alt ? zpsym::alt_power_sum_closed(ps_k, ps_n)
                           : zpsym::power_sum_closed(ps_k, ps_n);
            else
                v = ps_alt ? zpsym::alt_power_sum_direct(ps_k, ps_n)
                           : zpsym::power_sum_direct(ps_k, ps_n);
            std::cout << v.to_string() << "\n";
            return exit_ok;
        }
        if (verify->parsed())
            return run_verify(vo);
        if (padic->parsed()) {
            po.m_max_given = padic->count("--m-max") > 0;
            return run_padic(po);
        }
        if (series->parsed())
            return run_series(so);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const zpsym::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const zpsym::degenerate_divisor_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const zpsym::precision_exhausted_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
