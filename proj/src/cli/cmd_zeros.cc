#include "common.hh"
#include "shq/zeros.hh"

namespace shqcli {

namespace {

const char* class_name(shq::zero_class c) {
    switch (c) {
    case shq::zero_class::trivial_zero: return "trivial_zero";
    case shq::zero_class::trivial_one: return "trivial_one";
    case shq::zero_class::trivial_half: return "trivial_half";
    case shq::zero_class::on_line: return "on_line";
    case shq::zero_class::off_line: return "off_line";
    }
    return "?";
}

struct verify_opts {
    std::string z1, z2;
    unsigned n = 0;
    std::string tol = "1e-8";
    std::string format = "json";
};

void run_verify(const verify_opts& o, const global& g) {
    unsigned bits = g.resolve_precision(256);
    shq::precision_guard pg(bits);
    shq::rat z1 = parse_rat(o.z1), z2 = parse_rat(o.z2);
    shq::quadratic_q q = shq::quadratic_q::make_z(z1, z2);
    if (o.n < 1 || o.n > 400)
        throw std::domain_error("n must be between 1 and 400");
    shq::real tol;
    try {
        tol = shq::real(o.tol);
    } catch (...) {
        throw std::domain_error("tol is not a number: " + o.tol);
    }
    if (!(tol > 0))
        throw std::domain_error("tol must be positive");

    shq::line_report rep = shq::critical_line_report(q, o.n, bits, tol);

    nlohmann::json cfg = {{"z1", o.z1},   {"z2", o.z2},       {"n", o.n},
                          {"tol", o.tol}, {"precision", bits}, {"format", o.format}};
    if (o.format == "json") {
        nlohmann::json out = shq::header_json("zeros verify", cfg);
        out["n"] = rep.n;
        out["on_line"] = rep.on_line;
        out["off_line"] = rep.off_line;
        out["trivial"] = rep.trivial;
        out["symmetric"] = rep.symmetric;
        out["max_line_distance"] = shq::real_str(rep.max_line_distance);
        out["vieta_gap"] = shq::real_str(rep.vieta_gap);
        out["residual_max"] = shq::real_str(rep.residual_max);
        nlohmann::json jz = nlohmann::json::array();
        for (const auto& zi : rep.zeros)
            jz.push_back({{"x", shq::cplx_json(zi.x)},
                          {"class", class_name(zi.cls)},
                          {"line_distance", shq::real_str(zi.line_distance)}});
        out["zeros"] = jz;
        shq::write_output(g.output, out.dump(2) + "\n");
    } else {
        std::string s = shq::header_csv("zeros verify", cfg) +
                        "re,im,class,line_distance\n";
        for (const auto& zi : rep.zeros)
            s += shq::real_str(shq::re(zi.x)) + "," + shq::real_str(shq::im(zi.x)) + "," +
                 class_name(zi.cls) + "," + shq::real_str(zi.line_distance) + "\n";
        shq::write_output(g.output, s);
    }
}

struct count_opts {
    std::string z1, z2;
    unsigned n = 0;
    unsigned grid = 64;
    std::string tmax; // empty = T
};

void run_count(const count_opts& o, const global& g) {
    unsigned bits = g.resolve_precision(256);
    shq::precision_guard pg(bits);
    shq::real z1 = shq::to_real(parse_rat(o.z1));
    shq::real z2 = shq::to_real(parse_rat(o.z2));
    shq::critical_data cd = shq::thresholds(z1, z2);
    if (o.n < 1 || o.n > 400)
        throw std::domain_error("n must be between 1 and 400");
    shq::real tmax = o.tmax.empty() ? cd.T : shq::to_real(parse_rat(o.tmax));
    if (!(tmax > 0))
        throw std::domain_error("tmax must be positive");

    shq::count_result res = shq::line_zero_count(cd, o.n, o.grid, tmax);

    nlohmann::json cfg = {{"z1", o.z1},     {"z2", o.z2}, {"n", o.n},
                          {"grid", o.grid}, {"tmax", o.tmax.empty() ? "T" : o.tmax},
                          {"precision", bits}};
    nlohmann::json out = shq::header_json("zeros count", cfg);
    out["n"] = res.n;
    out["sign_changes"] = res.sign_changes;
    out["grid"] = res.grid;
    out["refined_stable"] = res.refined_stable;
    out["scale_warning"] = res.scale_warning;
    out["tmax"] = shq::real_str(res.tmax);
    shq::write_output(g.output, out.dump(2) + "\n");
}

} // namespace

void register_zeros(CLI::App& app, global& g) {
    auto* zeros = app.add_subcommand("zeros", "critical-line verification");
    zeros->require_subcommand(1);

    auto vo = std::make_shared<verify_opts>();
    auto* ve = zeros->add_subcommand("verify",
                                     "root H_n and classify every zero against "
                                     "Re x = 1/2");
    ve->add_option("--z1", vo->z1, "smaller zero of Q")->required();
    ve->add_option("--z2", vo->z2, "larger zero of Q")->required();
    ve->add_option("--n", vo->n, "degree")->required();
    ve->add_option("--tol", vo->tol, "on-line tolerance for |Re x - 1/2|");
    ve->add_option("--format", vo->format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    ve->callback([vo, &g] { run_verify(*vo, g); });

    auto co = std::make_shared<count_opts>();
    auto* ct = zeros->add_subcommand("count",
                                     "sign changes of the line-restricted pi H_n "
                                     "over a t grid");
    ct->add_option("--z1", co->z1, "smaller zero of Q")->required();
    ct->add_option("--z2", co->z2, "larger zero of Q")->required();
    ct->add_option("--n", co->n, "degree")->required();
    ct->add_option("--grid", co->grid, "base grid size (refined by doubling)");
    ct->add_option("--tmax", co->tmax, "upper end of the t grid (default T)");
    ct->callback([co, &g] { run_count(*co, g); });
}

} // namespace shqcli
