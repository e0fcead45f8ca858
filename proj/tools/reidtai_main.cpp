// reidtai: c(tau) evaluation and the bounded compensation search.

#include "msd/json_io.hpp"
#include "msd/reidtai.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace msd;

namespace {

std::vector<long long> parse_ll_csv(const std::string& csv) {
    std::vector<long long> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoll(item));
    return v;
}

std::vector<Rat> parse_rat_csv(const std::string& csv) {
    std::vector<Rat> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reid-Tai ages and the non-canonical compensation functional"};
    app.require_subcommand(1);

    auto* ev = app.add_subcommand("eval", "evaluate c(tau) on a multi-level graph");
    std::string graph_path, orders, ages, s_args, dnc = "v1";
    std::string pairs;
    bool minimal = false;
    ev->add_option("--graph", graph_path, "graph JSON")->required();
    ev->add_option("--orders", orders, "per-vertex orders k_v")->required();
    ev->add_option("--ages", ages, "per-vertex age contributions")->required();
    ev->add_option("--s", s_args, "per-passage arguments c1/k1,c2/k2,...")->required();
    ev->add_option("--dnc", dnc, "v1|v2|refined");
    ev->add_option("--swapped", pairs, "swapped edge pairs, e.g. 0-1,2-3");
    ev->add_flag("--minimal", minimal, "minimal-stratum context (refined coefficients)");

    auto* ag = app.add_subcommand("age", "age of an eigenvalue spectrum");
    long long order = 1, proj = 0;
    std::string expon;
    ag->add_option("--order", order)->required();
    ag->add_option("--exponents", expon)->required();
    ag->add_option("--projectivizer", proj);

    auto* se = app.add_subcommand("search", "bounded exhaustive minimum of c(tau)");
    SearchBounds bounds;
    std::string sdnc = "v1";
    se->add_option("--max-levels", bounds.max_levels);
    se->add_option("--max-edges", bounds.max_edges);
    se->add_option("--max-prong", bounds.max_prong);
    se->add_option("--dnc", sdnc, "v1|v2");
    std::string orders_csv = "1,2,3,4,6";
    se->add_option("--orders", orders_csv, "vertex orders");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*ev) {
            MultiLevelGraph g = parse_graph_file_as_multi_level(graph_path);
            AutomorphismProfile p;
            p.vertex_order = parse_ll_csv(orders);
            for (const auto& r : parse_rat_csv(ages)) p.vertex_age.push_back(r);
            p.s = parse_rat_csv(s_args);
            if (!pairs.empty()) {
                std::stringstream ss(pairs);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto dash = item.find('-');
                    p.swapped_pairs.push_back({std::stoi(item.substr(0, dash)),
                                               std::stoi(item.substr(dash + 1))});
                }
            }
            Rat c = c_tau(g, p, parse_dnc(dnc), minimal);
            std::cout << "c(tau) = " << to_string(c) << "\n";
            return 0;
        }
        if (*ag) {
            EigenSpectrum spec{order, parse_ll_csv(expon)};
            std::cout << "age = " << to_string(age(spec, proj)) << "\n";
            return 0;
        }
        if (*se) {
            bounds.version = parse_dnc(sdnc);
            bounds.orders = parse_ll_csv(orders_csv);
            SearchResult r = search_min_c(bounds);
            nlohmann::json j;
            j["min_c"] = r.any_feasible ? to_string(r.min_c) : "none";
            j["feasible_profiles"] = r.feasible_profiles;
            j["structures"] = r.structures;
            j["denominator_bound"] = r.denominator_bound;
            j["witness"] = {{"description", r.witness.description},
                            {"value", to_string(r.witness.value)}};
            j["bounds"] = {{"max_levels", bounds.max_levels},
                           {"max_edges", bounds.max_edges},
                           {"max_prong", bounds.max_prong},
                           {"dnc", sdnc}};
            std::cout << j.dump(2) << "\n";
            return r.any_feasible && r.min_c < 1 ? 2 : 0;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
