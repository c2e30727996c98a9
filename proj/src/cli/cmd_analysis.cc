#include "common.hh"
#include "shq/analysis.hh"
#include "shq/sweep.hh"

#include <array>

namespace shqcli {

namespace {

struct curves_opts {
    std::string z1, z2;
    unsigned samples = 400;
    std::string format = "csv";
};

void run_curves(const curves_opts& o, const global& g) {
    unsigned bits = g.resolve_precision();
    shq::precision_guard pg(bits);
    shq::real z1 = shq::to_real(parse_rat(o.z1));
    shq::real z2 = shq::to_real(parse_rat(o.z2));
    shq::critical_data cd = shq::thresholds(z1, z2);
    if (o.samples < 2 || o.samples > 100000)
        throw std::domain_error("samples must be between 2 and 100000");

    std::vector<std::array<shq::real, 7>> rows(o.samples);
    unsigned jobs = g.jobs ? g.jobs : shq::hardware_jobs();
    shq::parallel_map(o.samples, bits, jobs, [&](std::size_t i) {
        shq::real t = cd.T * static_cast<long>(i) / static_cast<long>(o.samples - 1);
        shq::cplx s1 = shq::zeta1(cd, t);
        shq::cplx s2 = shq::zeta2(cd, t);
        shq::cplx ph = shq::phi(cd, s1, t);
        rows[i][0] = t;
        rows[i][1] = shq::re(s1);
        rows[i][2] = shq::im(s1);
        rows[i][3] = shq::re(s2);
        rows[i][4] = shq::im(s2);
        rows[i][5] = shq::re(ph);
        rows[i][6] = shq::im(ph);
    });

    nlohmann::json cfg = {{"z1", o.z1},
                          {"z2", o.z2},
                          {"samples", o.samples},
                          {"format", o.format},
                          {"precision", bits}};
    static const char* cols[7] = {"t",       "re_zeta1", "im_zeta1", "re_zeta2",
                                  "im_zeta2", "re_phi",   "im_phi"};
    if (o.format == "csv") {
        std::string s = shq::header_csv("analysis curves", cfg);
        s += "t,re_zeta1,im_zeta1,re_zeta2,im_zeta2,re_phi,im_phi\n";
        for (const auto& r : rows) {
            for (int c = 0; c < 7; ++c)
                s += (c ? "," : "") + shq::real_str(r[c]);
            s += "\n";
        }
        shq::write_output(g.output, s);
    } else {
        nlohmann::json out = shq::header_json("analysis curves", cfg);
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row;
            for (int c = 0; c < 7; ++c)
                row[cols[c]] = shq::real_str(r[c]);
            jr.push_back(row);
        }
        out["rows"] = jr;
        shq::write_output(g.output, out.dump(2) + "\n");
    }
}

struct compare_opts {
    std::string z1, z2, t;
    unsigned n = 0;
    std::string method;
    std::string layer = "T";
    bool ignore_gates = false;
};

void run_compare(const compare_opts& o, const global& g) {
    unsigned bits = g.resolve_precision();
    shq::precision_guard pg(std::max(bits, 320u));
    shq::real z1 = shq::to_real(parse_rat(o.z1));
    shq::real z2 = shq::to_real(parse_rat(o.z2));
    shq::critical_data cd = shq::thresholds(z1, z2);
    shq::real t = shq::to_real(parse_rat(o.t));
    if (o.n < 3)
        throw std::domain_error("n must be at least 3");

    shq::analysis_config cfg;
    cfg.enforce_gates = !o.ignore_gates;

    shq::contour_result cr = shq::contour_integral(cd, o.n, t, cfg);

    nlohmann::json extra;
    shq::cplx approx;
    if (o.method == "saddle") {
        shq::saddle_result sr = shq::saddle_approx(cd, o.n, t, cfg);
        if (!sr.admissible && cfg.enforce_gates)
            throw std::domain_error("saddle approximant refused: " + sr.diagnostic);
        approx = sr.chosen;
        extra["plus"] = shq::cplx_json(sr.plus);
        extra["minus"] = shq::cplx_json(sr.minus);
        extra["diagnostic"] = sr.diagnostic;
    } else if (o.method == "layer") {
        shq::layer_kind kind = shq::layer_kind::atT;
        if (o.layer == "T1minus")
            kind = shq::layer_kind::atT1_minus;
        else if (o.layer == "T1plus")
            kind = shq::layer_kind::atT1_plus;
        else if (o.layer != "T")
            throw std::domain_error("layer must be T, T1minus or T1plus");
        shq::layer_result lr = shq::boundary_layer_approx(cd, o.n, t, kind, cfg);
        if (!lr.admissible && cfg.enforce_gates)
            throw std::domain_error("layer approximant refused: " + lr.diagnostic);
        approx = lr.value;
        extra["curve_residual_max"] = shq::real_str(lr.residual_max);
        extra["layer_est_error"] = shq::real_str(lr.est_error);
        if (!lr.diagnostic.empty())
            extra["diagnostic"] = lr.diagnostic;
    } else if (o.method == "smallt") {
        shq::smallt_result sr = shq::smallt_approx(cd, o.n, t, cfg);
        if (!sr.admissible && cfg.enforce_gates)
            throw std::domain_error("small-t approximant refused: " + sr.diagnostic);
        approx = sr.value;
        if (!sr.diagnostic.empty())
            extra["diagnostic"] = sr.diagnostic;
    } else {
        throw std::domain_error("method must be saddle, layer or smallt");
    }

    shq::cplx ratio = approx / cr.integral;
    nlohmann::json jcfg = {{"z1", o.z1},        {"z2", o.z2},
                           {"n", o.n},          {"t", o.t},
                           {"method", o.method}, {"layer", o.layer},
                           {"ignore_gates", o.ignore_gates}};
    nlohmann::json out = shq::header_json("analysis compare", jcfg);
    out["contour"] = shq::cplx_json(cr.integral);
    out["approximant"] = shq::cplx_json(approx);
    out["ratio"] = shq::cplx_json(ratio);
    out["est_error"] = shq::real_str(cr.est_error);
    out["est_error_rel"] = shq::real_str(cr.est_error / abs(cr.integral));
    out["contour_bits"] = cr.bits;
    out["detail"] = extra;
    shq::write_output(g.output, out.dump(2) + "\n");
}

} // namespace

void register_analysis(CLI::App& app, global& g) {
    auto* analysis = app.add_subcommand("analysis", "saddle geometry and approximants");
    analysis->require_subcommand(1);

    auto co = std::make_shared<curves_opts>();
    auto* cu = analysis->add_subcommand("curves",
                                        "saddle curves zeta_1, zeta_2 and phi "
                                        "along [0, T]");
    cu->add_option("--z1", co->z1, "smaller zero of Q")->required();
    cu->add_option("--z2", co->z2, "larger zero of Q")->required();
    cu->add_option("--samples", co->samples, "grid points on [0, T]");
    cu->add_option("--format", co->format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cu->callback([co, &g] { run_curves(*co, g); });

    auto cm = std::make_shared<compare_opts>();
    auto* cp = analysis->add_subcommand("compare",
                                        "contour integral against one asymptotic "
                                        "approximant");
    cp->add_option("--z1", cm->z1, "smaller zero of Q")->required();
    cp->add_option("--z2", cm->z2, "larger zero of Q")->required();
    cp->add_option("--n", cm->n, "degree")->required();
    cp->add_option("--t", cm->t, "height parameter, x = 1/2 + int")->required();
    cp->add_option("--method", cm->method, "saddle | layer | smallt")->required();
    cp->add_option("--layer", cm->layer, "T | T1minus | T1plus (layer method)");
    cp->add_flag("--ignore-gates", cm->ignore_gates,
                 "compute outside the admissible window anyway");
    cp->callback([cm, &g] { run_compare(*cm, g); });
}

} // namespace shqcli
