#include "common.hh"
#include "shq/combinat.hh"

namespace shqcli {

namespace {

struct tree_opts {
    std::string a, b;
    unsigned depth = 5;
    std::string format = "json";
};

void run_tree(const tree_opts& o, const global& g) {
    shq::precision_guard pg(g.resolve_precision());
    shq::rat a = parse_rat(o.a), b = parse_rat(o.b);
    if (a + b == 0)
        throw std::domain_error("a + b must be nonzero");
    if (o.depth > 8)
        throw std::domain_error("tree depth is capped at 8");

    shq::production_matrix pm =
        shq::horizontal_pair(shq::lq_matrix(a, b, o.depth + 4));
    std::vector<shq::marked_level> levels = shq::tree_levels(pm.p, o.depth);

    nlohmann::json cfg = {{"a", o.a}, {"b", o.b}, {"depth", o.depth}, {"format", o.format}};
    if (o.format == "json") {
        nlohmann::json out = shq::header_json("combinat tree", cfg);
        nlohmann::json jl = nlohmann::json::array();
        for (unsigned i = 0; i < levels.size(); ++i) {
            nlohmann::json nodes = nlohmann::json::array();
            for (unsigned k = 0; k < levels[i].unmarked.size(); ++k) {
                shq::bigint q = levels[i].unmarked[k] - levels[i].marked[k];
                nodes.push_back({{"label", k},
                                 {"unmarked", levels[i].unmarked[k].str()},
                                 {"marked", levels[i].marked[k].str()},
                                 {"q", q.str()}});
            }
            jl.push_back({{"level", i}, {"nodes", nodes}});
        }
        out["levels"] = jl;
        shq::write_output(g.output, out.dump(2) + "\n");
    } else {
        std::string s = shq::header_csv("combinat tree", cfg) +
                        "level,label,unmarked,marked,q\n";
        for (unsigned i = 0; i < levels.size(); ++i)
            for (unsigned k = 0; k < levels[i].unmarked.size(); ++k) {
                shq::bigint q = levels[i].unmarked[k] - levels[i].marked[k];
                s += std::to_string(i) + "," + std::to_string(k) + "," +
                     levels[i].unmarked[k].str() + "," + levels[i].marked[k].str() +
                     "," + q.str() + "\n";
            }
        shq::write_output(g.output, s);
    }
}

struct paths_opts {
    std::string a, b;
    unsigned nmax = 12;
    std::string format = "json";
};

void run_paths(const paths_opts& o, const global& g) {
    shq::precision_guard pg(g.resolve_precision());
    shq::rat a = parse_rat(o.a), b = parse_rat(o.b);
    if (a + b == 0)
        throw std::domain_error("a + b must be nonzero");
    if (o.nmax > 64)
        throw std::domain_error("nmax is capped at 64");

    shq::rat_matrix sigma = shq::lattice_sigma(a, b, o.nmax);

    nlohmann::json cfg = {{"a", o.a}, {"b", o.b}, {"nmax", o.nmax}, {"format", o.format}};
    if (o.format == "json") {
        nlohmann::json out = shq::header_json("combinat paths", cfg);
        nlohmann::json js = nlohmann::json::array(), jh = nlohmann::json::array();
        for (const auto& row : sigma) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row)
                r.push_back(shq::rat_str(v));
            js.push_back(r);
        }
        for (unsigned n = 0; n <= o.nmax; ++n) {
            shq::poly_x h = shq::hn_from_sigma(a, b, n);
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : h.c)
                r.push_back(shq::rat_str(v));
            jh.push_back(r);
        }
        out["sigma"] = js;
        out["h_rows"] = jh;
        shq::write_output(g.output, out.dump(2) + "\n");
    } else {
        std::string s = shq::header_csv("combinat paths", cfg) + "n,k,sigma\n";
        for (unsigned n = 0; n < sigma.size(); ++n)
            for (unsigned k = 0; k < sigma[n].size(); ++k)
                s += std::to_string(n) + "," + std::to_string(k) + "," +
                     shq::rat_str(sigma[n][k]) + "\n";
        shq::write_output(g.output, s);
    }
}

} // namespace

void register_combinat(CLI::App& app, global& g) {
    auto* combinat = app.add_subcommand("combinat", "generating tree and lattice paths");
    combinat->require_subcommand(1);

    auto to = std::make_shared<tree_opts>();
    auto* tr = combinat->add_subcommand("tree",
                                        "marked generating tree expanded level "
                                        "by level");
    tr->add_option("--a", to->a, "parameter a of Q = (1+az)(1+bz)")->required();
    tr->add_option("--b", to->b, "parameter b")->required();
    tr->add_option("--depth", to->depth, "levels to expand (<= 8)");
    tr->add_option("--format", to->format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    tr->callback([to, &g] { run_tree(*to, g); });

    auto po = std::make_shared<paths_opts>();
    auto* pa = combinat->add_subcommand("paths",
                                        "weighted lattice-path table sigma(n,k) "
                                        "and the H rows it reconstructs");
    pa->add_option("--a", po->a, "parameter a of Q = (1+az)(1+bz)")->required();
    pa->add_option("--b", po->b, "parameter b")->required();
    pa->add_option("--nmax", po->nmax, "largest row (<= 64)");
    pa->add_option("--format", po->format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    pa->callback([po, &g] { run_paths(*po, g); });
}

} // namespace shqcli
