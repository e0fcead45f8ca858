// toric: cyclic quotient singularity calculators.

#include "msd/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace msd;

namespace {

nlohmann::json ledger_json(const ResolutionLedger& ledger) {
    nlohmann::json j;
    j["rays"] = nlohmann::json::array();
    for (const auto& ray : ledger.rays) {
        nlohmann::json r;
        r["point"] = nlohmann::json::array();
        for (const auto& c : ray.point) r["point"].push_back(to_string(c));
        r["discrepancy"] = to_string(ray.discrepancy);
        r["pullback"] = nlohmann::json::array();
        for (const auto& c : ray.pullback) r["pullback"].push_back(to_string(c));
        j["rays"].push_back(r);
    }
    if (!ledger.hj_expansion.empty()) j["hj_expansion"] = ledger.hj_expansion;
    return j;
}

std::vector<long long> parse_csv(const std::string& csv) {
    std::vector<long long> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoll(item));
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic quotient singularities: resolutions, discrepancies, extension tests"};
    app.require_subcommand(1);

    auto* res = app.add_subcommand("resolve", "minimal resolution of 1/n(1,q)");
    long long n = 0, q = 0;
    res->add_option("--n", n)->required();
    res->add_option("--q", q)->required();

    auto* dis = app.add_subcommand("discrepancy", "interior orbit rays of 1/n(a_1,...)");
    long long dn = 0;
    std::string weights;
    dis->add_option("--n", dn)->required();
    dis->add_option("--weights", weights)->required();

    auto* ext = app.add_subcommand("extends", "pluricanonical extension test");
    long long en = 0;
    std::string eweights, bvec;
    ext->add_option("--n", en)->required();
    ext->add_option("--weights", eweights)->required();
    ext->add_option("--b", bvec)->required();

    auto* cherry = app.add_subcommand("cherry", "cherry-graph quotient type");
    long long ca = 0, cb = 0;
    cherry->add_option("--a", ca)->required();
    cherry->add_option("--b", cb)->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*res) {
            std::cout << ledger_json(hj_resolve(n, q)).dump(2) << "\n";
        } else if (*dis) {
            CyclicQuotient cq(dn, parse_csv(weights));
            std::cout << ledger_json(discrepancies(cq)).dump(2) << "\n";
        } else if (*ext) {
            CyclicQuotient cq(en, parse_csv(eweights));
            bool ok = extends(cq, parse_csv(bvec));
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 2;
        } else if (*cherry) {
            auto c = cherry_quotient(ca, cb);
            nlohmann::json j;
            j["n"] = c.n;
            j["q"] = c.q;
            j["l1"] = c.l1;
            j["l2"] = c.l2;
            j["generator"] = {{"exp1", c.exp1}, {"exp2", c.exp2}};
            std::cout << j.dump(2) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
