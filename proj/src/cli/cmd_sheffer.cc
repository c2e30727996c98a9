#include "common.hh"
#include "shq/sheffer.hh"

namespace shqcli {

namespace {

struct coeffs_opts {
    std::string a, b;
    unsigned nmax = 8;
    std::string basis = "power";
    std::string format = "json";
};

void run_coeffs(const coeffs_opts& o, const global& g) {
    shq::precision_guard pg(g.resolve_precision());
    shq::rat a = parse_rat(o.a), b = parse_rat(o.b);
    if (a + b == 0)
        throw std::domain_error("a + b must be nonzero");
    if (o.nmax > 400)
        throw std::domain_error("nmax is capped at 400");

    std::vector<std::vector<shq::rat>> rows;
    for (unsigned n = 0; n <= o.nmax; ++n)
        rows.push_back(o.basis == "power" ? shq::hn_poly(a, b, n).c
                                          : shq::falling_factorial_coeffs(a, b, n));

    nlohmann::json cfg = {{"a", o.a},         {"b", o.b},
                          {"nmax", o.nmax},   {"basis", o.basis},
                          {"format", o.format}};
    if (o.format == "json") {
        nlohmann::json out = shq::header_json("sheffer coeffs", cfg);
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& v : r)
                row.push_back(shq::rat_str(v));
            jr.push_back(row);
        }
        out["rows"] = jr;
        shq::write_output(g.output, out.dump(2) + "\n");
    } else {
        std::string s = shq::header_csv("sheffer coeffs", cfg) + "n,k,value\n";
        for (unsigned n = 0; n < rows.size(); ++n)
            for (unsigned k = 0; k < rows[n].size(); ++k)
                s += std::to_string(n) + "," + std::to_string(k) + "," +
                     shq::rat_str(rows[n][k]) + "\n";
        shq::write_output(g.output, s);
    }
}

} // namespace

void register_sheffer(CLI::App& app, global& g) {
    auto* sheffer = app.add_subcommand("sheffer", "the Sheffer sequence H_n");
    sheffer->require_subcommand(1);

    auto o = std::make_shared<coeffs_opts>();
    auto* co = sheffer->add_subcommand("coeffs",
                                       "coefficients of H_0..H_nmax, power or "
                                       "falling-factorial basis");
    co->add_option("--a", o->a, "parameter a of Q = (1+az)(1+bz)")->required();
    co->add_option("--b", o->b, "parameter b")->required();
    co->add_option("--nmax", o->nmax, "largest degree")->required();
    co->add_option("--basis", o->basis, "power | falling")
        ->check(CLI::IsMember({"power", "falling"}));
    co->add_option("--format", o->format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    co->callback([o, &g] { run_coeffs(*o, g); });
}

} // namespace shqcli
