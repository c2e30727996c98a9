#include "common.hh"
#include "shq/sheffer.hh"

namespace shqcli {

namespace {

struct prod_opts {
    std::string a, b;
    unsigned rows = 8;
    std::string format = "json";
};

void run_production(const prod_opts& o, const global& g) {
    shq::precision_guard pg(g.resolve_precision());
    shq::rat a = parse_rat(o.a), b = parse_rat(o.b);
    if (a + b == 0)
        throw std::domain_error("a + b must be nonzero");
    if (o.rows < 2 || o.rows > 128)
        throw std::domain_error("rows must be between 2 and 128");

    shq::exp_riordan lq = shq::lq_matrix(a, b, o.rows);
    shq::production_matrix pm = shq::horizontal_pair(lq);

    nlohmann::json cfg = {{"a", o.a}, {"b", o.b}, {"rows", o.rows}, {"format", o.format}};
    auto rows_json = [](const shq::rat_matrix& m) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& r : m) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& v : r)
                row.push_back(shq::rat_str(v));
            jr.push_back(row);
        }
        return jr;
    };
    if (o.format == "json") {
        nlohmann::json out = shq::header_json("riordan production", cfg);
        nlohmann::json c = nlohmann::json::array(), r = nlohmann::json::array();
        for (const auto& v : pm.c)
            c.push_back(shq::rat_str(v));
        for (const auto& v : pm.r)
            r.push_back(shq::rat_str(v));
        out["c"] = c;
        out["r"] = r;
        out["production"] = rows_json(pm.p);
        out["matrix"] = rows_json(lq.b);
        shq::write_output(g.output, out.dump(2) + "\n");
    } else {
        std::string s = shq::header_csv("riordan production", cfg) + "i,j,value\n";
        for (unsigned i = 0; i < pm.p.size(); ++i)
            for (unsigned j = 0; j < pm.p[i].size(); ++j)
                s += std::to_string(i) + "," + std::to_string(j) + "," +
                     shq::rat_str(pm.p[i][j]) + "\n";
        shq::write_output(g.output, s);
    }
}

} // namespace

void register_riordan(CLI::App& app, global& g) {
    auto* riordan = app.add_subcommand("riordan", "exponential Riordan arrays");
    riordan->require_subcommand(1);

    auto o = std::make_shared<prod_opts>();
    auto* pr = riordan->add_subcommand("production",
                                       "production matrix of L_Q with its "
                                       "horizontal pair (c, r)");
    pr->add_option("--a", o->a, "parameter a of Q = (1+az)(1+bz)")->required();
    pr->add_option("--b", o->b, "parameter b")->required();
    pr->add_option("--rows", o->rows, "rows of L_Q to materialize");
    pr->add_option("--format", o->format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    pr->callback([o, &g] { run_production(*o, g); });
}

} // namespace shqcli
