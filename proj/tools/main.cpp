// Command-line front end: construct and verify constant-weight families,
// encode Reed-Solomon codewords, evaluate size bounds, compute rate metrics,
// run seeded pairwise simulations, and produce the comparison sweep.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cwid/bounds.hpp"
#include "cwid/concat.hpp"
#include "cwid/constructions.hpp"
#include "cwid/io.hpp"
#include "cwid/sweep.hpp"

using namespace cwid;

namespace {

void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

CodeSize parse_size(const std::string& s) {
    auto caret = s.find('^');
    if (caret != std::string::npos)
        return CodeSize::power(std::stoull(s.substr(0, caret)), std::stoull(s.substr(caret + 1)));
    return CodeSize(BigUint::from_string(s));
}

OuterVariant parse_variant(const std::string& v) {
    if (v == "rs") return OuterVariant::rs;
    if (v == "dext" || v == "dext_rs") return OuterVariant::dext_rs;
    throw CLI::ValidationError("--variant", "expected rs or dext");
}

RsVariant parse_rs_variant(const std::string& v) {
    if (v == "standard") return RsVariant::standard;
    if (v == "extended") return RsVariant::extended;
    if (v == "doubly-extended") return RsVariant::doubly_extended;
    throw CLI::ValidationError("--variant", "expected standard, extended or doubly-extended");
}

struct SchemeArgs {
    std::string scheme;
    uint64_t p = 0;
    int m = 0;
    uint64_t ko = 0;
    uint64_t koo = 0;
    std::string variant = "rs";
    std::optional<uint64_t> truncate;
};

CodeParams scheme_params(const SchemeArgs& a) {
    if (a.scheme == "c1") return construction1_full_params(a.p, a.ko, a.koo, parse_variant(a.variant));
    if (a.scheme == "c2")
        return construction2_full_params(a.p, a.m, a.ko, a.koo, parse_variant(a.variant), a.truncate);
    if (a.scheme == "ppm-bench") return ppm_bench_params(a.p, a.ko, a.koo);
    throw CLI::ValidationError("--scheme", "expected c1, c2 or ppm-bench");
}

ConcatSpec scheme_concat(const SchemeArgs& a) {
    OuterVariant var = parse_variant(a.variant);
    RsVariant rsvar = var == OuterVariant::rs ? RsVariant::standard : RsVariant::doubly_extended;
    if (a.scheme == "c1") {
        CwcFamily inner = modified_prime_cwc(a.p);
        uint64_t q2 = checked_pow_u64(a.p, a.ko);
        return make_concat(std::move(inner), {RsSpec{a.p, a.ko, rsvar}, RsSpec{q2, a.koo, rsvar}});
    }
    if (a.scheme == "c2") {
        uint64_t q = checked_pow_u64(a.p, uint64_t(a.m));
        CwcFamily inner = a.truncate ? construction2_truncated(a.p, a.m, *a.truncate)
                                     : construction2_cwc(a.p, a.m);
        uint64_t size = a.truncate ? *a.truncate : q - 2;
        uint64_t q2 = checked_pow_u64(size, a.ko);
        return make_concat(std::move(inner), {RsSpec{size, a.ko, rsvar}, RsSpec{q2, a.koo, rsvar}});
    }
    if (a.scheme == "ppm-bench") {
        CwcFamily inner = ppm_cwc(a.p);
        uint64_t q2 = checked_pow_u64(a.p, a.ko);
        return make_concat(std::move(inner), {RsSpec{a.p, a.ko, RsVariant::extended},
                                              RsSpec{q2, a.koo, RsVariant::extended}});
    }
    throw CLI::ValidationError("--scheme", "expected c1, c2 or ppm-bench");
}

void add_scheme_options(CLI::App* cmd, SchemeArgs& a, bool need_dims) {
    cmd->add_option("--scheme", a.scheme, "c1 | c2 | ppm-bench")->required();
    cmd->add_option("--p", a.p, "prime (or PPM alphabet size for ppm-bench)")->required();
    cmd->add_option("--m", a.m, "extension degree for c2");
    if (need_dims) {
        cmd->add_option("--ko", a.ko, "first outer code dimension")->required();
        cmd->add_option("--koo", a.koo, "second outer code dimension")->required();
    }
    cmd->add_option("--variant", a.variant, "rs | dext (c1/c2 outer codes)");
    cmd->add_option("--truncate", [&a](const std::vector<std::string>& vals) {
        a.truncate = std::stoull(vals.at(0));
        return true;
    }, "truncate the c2 inner family to this size");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-weight identification code toolbox"};
    app.require_subcommand(1);

    // field info
    auto* field_cmd = app.add_subcommand("field", "finite field inspection");
    field_cmd->require_subcommand(1);
    auto* field_info = field_cmd->add_subcommand("info", "print field parameters");
    uint64_t fi_p = 0;
    int fi_m = 1;
    std::string fi_out;
    field_info->add_option("--p", fi_p)->required();
    field_info->add_option("--m", fi_m);
    field_info->add_option("--out", fi_out);
    field_info->callback([&] {
        FieldCtx f = make_field(fi_p, fi_m);
        Json j{{"p", f.p()}, {"m", f.m()}, {"q", f.q()}, {"modulus", f.modulus()}, {"alpha", f.alpha()}};
        emit(j, fi_out);
    });

    // construct
    auto* construct = app.add_subcommand("construct", "generate an inner family as JSON");
    std::string c_scheme, c_out;
    uint64_t c_p = 0;
    int c_m = 1;
    std::optional<uint64_t> c_trunc;
    construct->add_option("--scheme", c_scheme, "prime | modified-prime | construction2 | ppm")->required();
    construct->add_option("--p", c_p)->required();
    construct->add_option("--m", c_m);
    construct->add_option("--truncate", [&c_trunc](const std::vector<std::string>& vals) {
        c_trunc = std::stoull(vals.at(0));
        return true;
    }, "truncate construction2 to this size");
    construct->add_option("--out", c_out);
    construct->callback([&] {
        CwcFamily fam;
        if (c_scheme == "prime")
            fam = prime_sequence_cwc(c_p);
        else if (c_scheme == "modified-prime")
            fam = modified_prime_cwc(c_p);
        else if (c_scheme == "construction2")
            fam = c_trunc ? construction2_truncated(c_p, c_m, *c_trunc) : construction2_cwc(c_p, c_m);
        else if (c_scheme == "ppm")
            fam = ppm_cwc(c_p);
        else
            throw CLI::ValidationError("--scheme", "expected prime, modified-prime, construction2 or ppm");
        if (c_out.empty())
            std::cout << family_to_json(fam).dump(2) << "\n";
        else
            write_family(fam, c_out);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "verify a family file against its claims");
    std::string v_in, v_out;
    bool v_cyclic = false;
    verify->add_option("--in", v_in)->required();
    verify->add_flag("--cyclic", v_cyclic, "also report cyclic correlations");
    verify->add_option("--out", v_out);
    verify->callback([&] {
        CwcFamily fam = read_family(v_in);
        VerificationReport rep = verify_cwc(fam);
        std::optional<CyclicCorrelations> cyc;
        if (v_cyclic) cyc = cyclic_correlations(fam);
        emit(report_to_json(rep, cyc, fam.claimed), v_out);
    });

    // rs encode
    auto* rs_cmd = app.add_subcommand("rs", "Reed-Solomon encoders");
    rs_cmd->require_subcommand(1);
    auto* rs_encode = rs_cmd->add_subcommand("encode", "encode one message");
    uint64_t r_q = 0, r_k = 0;
    std::string r_variant = "standard", r_message, r_out;
    rs_encode->add_option("--q", r_q)->required();
    rs_encode->add_option("--k", r_k)->required();
    rs_encode->add_option("--variant", r_variant, "standard | extended | doubly-extended");
    rs_encode->add_option("--message", r_message, "comma-separated field elements")->required();
    rs_encode->add_option("--out", r_out);
    rs_encode->callback([&] {
        auto pp = is_prime_power(r_q);
        if (!pp) throw CLI::ValidationError("--q", "not a prime power");
        FieldCtx field = make_field(pp->first, pp->second);
        std::vector<FieldElem> msg;
        std::istringstream ss(r_message);
        std::string tok;
        while (std::getline(ss, tok, ',')) msg.push_back(FieldElem(std::stoul(tok)));
        RsSpec spec{r_q, r_k, parse_rs_variant(r_variant)};
        auto cw = rs_codeword(spec, field, msg);
        RsParams par = rs_params(spec);
        Json j{{"q", r_q}, {"k", r_k}, {"variant", r_variant}, {"n", par.n}, {"d", par.d},
               {"codeword", cw}};
        emit(j, r_out);
    });

    // params
    auto* params_cmd = app.add_subcommand("params", "composed code parameters and metrics");
    SchemeArgs p_args;
    std::string p_out;
    unsigned p_prec = 96;
    add_scheme_options(params_cmd, p_args, true);
    params_cmd->add_option("--precision-bits", p_prec);
    params_cmd->add_option("--out", p_out);
    params_cmd->callback([&] {
        CodeParams params = scheme_params(p_args);
        Json j = metrics_to_json(id_metrics(params, p_prec), params);
        j["scheme"] = p_args.scheme;
        j["k_o"] = p_args.ko;
        j["k_oo"] = p_args.koo;
        if (p_args.scheme == "c1") {
            OptimalityRatios r = id_optimality_report(p_args.p, p_args.ko, p_args.koo);
            j["optimality_ratios"] = Json{{"log2_koo", round_real(r.log2_koo)},
                                          {"log2_koo_over_ko", round_real(r.log2_koo_over_ko)},
                                          {"ko_over_p", round_real(r.ko_over_p)},
                                          {"koo_over_p_ko", round_real(r.koo_over_p_ko)}};
        }
        emit(j, p_out);
    });

    // codeword
    auto* codeword_cmd = app.add_subcommand("codeword", "support of one identifier's codeword");
    SchemeArgs cw_args;
    std::string cw_id = "0", cw_out;
    add_scheme_options(codeword_cmd, cw_args, true);
    codeword_cmd->add_option("--id", cw_id, "identifier index (decimal)")->required();
    codeword_cmd->add_option("--out", cw_out);
    codeword_cmd->callback([&] {
        ConcatSpec spec = scheme_concat(cw_args);
        CwCodeword cw = concat_codeword(spec, BigUint::from_string(cw_id));
        Json j{{"id", cw_id}, {"blocklength", cw.blocklength}, {"weight", cw.weight()},
               {"support", cw.support}};
        emit(j, cw_out);
    });

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "size bounds / distance lower bound");
    int64_t b_S = 0, b_W = 0, b_K = 0;
    uint64_t b_ell = 8;
    std::string b_N, b_out;
    bool b_invert = false;
    bound_cmd->add_option("--S", b_S)->required();
    bound_cmd->add_option("--W", b_W)->required();
    bound_cmd->add_option("--K", b_K);
    bound_cmd->add_option("--N", b_N, "code size for --invert");
    bound_cmd->add_option("--ell-max", b_ell);
    bound_cmd->add_flag("--invert", b_invert, "minimum-distance lower bound from (S, N, W)");
    bound_cmd->add_option("--out", b_out);
    bound_cmd->callback([&] {
        if (b_invert) {
            if (b_N.empty()) throw CLI::ValidationError("--N", "required with --invert");
            DistanceLowerBound lb = min_distance_lower_bound(b_S, BigUint::from_string(b_N), b_W, b_ell);
            emit(Json{{"S", b_S}, {"N", b_N}, {"W", b_W}, {"K_star", lb.K_star}, {"d_lower", lb.d_lower}},
                 b_out);
        } else {
            emit(bound_report_to_json(bound_report(b_S, b_W, b_K, b_ell)), b_out);
        }
    });

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "identification rate metrics");
    SchemeArgs m_args;
    std::string m_N, m_out;
    int64_t m_S = 0, m_W = 0, m_K = 0;
    unsigned m_prec = 96;
    metrics_cmd->add_option("--scheme", m_args.scheme, "c1 | c2 | ppm-bench");
    metrics_cmd->add_option("--p", m_args.p);
    metrics_cmd->add_option("--m", m_args.m);
    metrics_cmd->add_option("--ko", m_args.ko);
    metrics_cmd->add_option("--koo", m_args.koo);
    metrics_cmd->add_option("--variant", m_args.variant);
    metrics_cmd->add_option("--S", m_S);
    metrics_cmd->add_option("--N", m_N, "decimal or base^exp");
    metrics_cmd->add_option("--W", m_W);
    metrics_cmd->add_option("--K", m_K);
    metrics_cmd->add_option("--precision-bits", m_prec);
    metrics_cmd->add_option("--out", m_out);
    metrics_cmd->callback([&] {
        CodeParams params;
        if (!m_args.scheme.empty()) {
            params = scheme_params(m_args);
        } else {
            params = CodeParams{m_S, parse_size(m_N), m_W, m_K};
        }
        emit(metrics_to_json(id_metrics(params, m_prec), params), m_out);
    });

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "seeded pairwise error simulation");
    SchemeArgs s_args;
    std::string s_in, s_i = "0", s_iprime = "1", s_out;
    uint64_t s_trials = 10000, s_seed = 1;
    sim_cmd->add_option("--scheme", s_args.scheme, "c1 | c2 | ppm-bench");
    sim_cmd->add_option("--p", s_args.p);
    sim_cmd->add_option("--m", s_args.m);
    sim_cmd->add_option("--ko", s_args.ko);
    sim_cmd->add_option("--koo", s_args.koo);
    sim_cmd->add_option("--variant", s_args.variant);
    sim_cmd->add_option("--in", s_in, "family JSON instead of a scheme");
    sim_cmd->add_option("--i", s_i)->required();
    sim_cmd->add_option("--iprime", s_iprime)->required();
    sim_cmd->add_option("--trials", s_trials);
    sim_cmd->add_option("--seed", s_seed);
    sim_cmd->add_option("--out", s_out);
    sim_cmd->callback([&] {
        IdCode code = s_in.empty() ? IdCode::from_concat(scheme_concat(s_args))
                                   : IdCode::from_family(read_family(s_in));
        BigUint i = BigUint::from_string(s_i), ip = BigUint::from_string(s_iprime);
        BigRat exact = exact_pairwise_type2(code, i, ip);
        SimResult res = simulate_id(code, i, ip, s_trials, s_seed);
        Json j{{"i", s_i}, {"iprime", s_iprime}, {"trials", res.trials}, {"seed", s_seed},
               {"exact_type2", exact.to_string()},
               {"empirical_type1", std::to_string(res.type1_errors) + "/" + std::to_string(res.trials)},
               {"empirical_type2", std::to_string(res.type2_accepts) + "/" + std::to_string(res.trials)}};
        emit(j, s_out);
    });

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "rate/exponent comparison table");
    SweepConfig cfg;
    std::string sw_out = "sweep.csv", sw_variant = "dext";
    sweep_cmd->add_option("--c1-p", cfg.c1_p);
    sweep_cmd->add_option("--c2-p", cfg.c2_p);
    sweep_cmd->add_option("--c2-m", cfg.c2_m);
    sweep_cmd->add_option("--ppm-q", cfg.ppm_q);
    sweep_cmd->add_option("--variant", sw_variant, "rs | dext for c1/c2 outer codes");
    sweep_cmd->add_option("--ko", cfg.ko_values, "first outer dimensions");
    sweep_cmd->add_option("--koo", cfg.koo_values, "second outer dimensions");
    sweep_cmd->add_option("--schemes", cfg.schemes);
    sweep_cmd->add_option("--precision-bits", cfg.precision_bits);
    sweep_cmd->add_option("--out", sw_out, "CSV path; manifest lands next to it");
    sweep_cmd->callback([&] {
        cfg.variant = parse_variant(sw_variant);
        SweepResult result = run_sweep(cfg);
        emit_plotdata(result, sw_out);
        std::cout << "rows=" << result.rows.size() << " warnings=" << result.skips.size() << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
