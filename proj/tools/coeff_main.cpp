// coeff: evaluate divisor-class coefficients on a two-level boundary graph.

#include "msd/divisors.hpp"
#include "msd/json_io.hpp"
#include "msd/nccomp.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace msd;

int main(int argc, char** argv) {
    CLI::App app{"exact divisor-class coefficients on the multi-scale compactification"};
    std::string mu, graph_path, cls = "canonical";
    std::string alpha_csv;
    app.add_option("--mu", mu, "signature, comma-separated orders")->required();
    app.add_option("--graph", graph_path, "two-level graph JSON file");
    app.add_option("--class", cls,
                   "canonical|logcanonical|bn|hur|nf|wmid|wapp|walpha|xi|kappa1|delta|psi|"
                   "dnc-v1|dnc-v2|dnc-refined");
    app.add_option("--alpha", alpha_csv, "weights for --class walpha (comma-separated)");
    int psi_index = 0;
    app.add_option("--index", psi_index, "marked point for --class psi (0-based)");
    CLI11_PARSE(app, argc, argv);

    try {
        Signature sig = Signature::parse(mu);
        std::optional<GraphData> data;
        if (!graph_path.empty())
            data = validate(parse_graph_file_as_two_level(graph_path), sig);

        if (cls.rfind("dnc-", 0) == 0) {
            if (!data) throw std::runtime_error("--graph is required for D_NC coefficients");
            DncVersion v = parse_dnc(cls.substr(4));
            std::cout << "R_NC     = " << to_string(r_nc(*data, v)) << "\n";
            std::cout << "b_NC     = " << to_string(b_nc(*data, v)) << "\n";
            std::cout << "R*       = " << to_string(r_star(*data, v)) << "\n";
            std::cout << "R upper  = " << to_string(r_upper_bound(*data)) << "\n";
            return 0;
        }

        DivisorClassVector vec;
        if (cls == "canonical") vec = canonical_class(sig);
        else if (cls == "logcanonical") vec = log_canonical_class(sig);
        else if (cls == "bn") vec = bn_class(sig);
        else if (cls == "hur") vec = hur_class(sig);
        else if (cls == "nf") vec = nf_class(sig.genus());
        else if (cls == "wmid") vec = w_mid_class(sig);
        else if (cls == "wapp") vec = w_app_class(sig);
        else if (cls == "xi") vec = xi_in_lambda(sig);
        else if (cls == "kappa1") vec = kappa1_class(sig);
        else if (cls == "delta") vec = delta_pullback(sig);
        else if (cls == "psi") vec = psi_to_lambda(sig, psi_index);
        else if (cls == "walpha") {
            WeightVector w;
            for (auto& part : {alpha_csv}) (void)part;
            std::stringstream ss(alpha_csv);
            std::string item;
            while (std::getline(ss, item, ',')) w.alpha.push_back(std::stoll(item));
            vec = w_alpha_class(sig, w);
        } else throw std::runtime_error("unknown class '" + cls + "'");

        std::cout << "lambda   = " << to_string(vec.lambda) << "\n";
        std::cout << "psi_-1   = " << to_string(vec.psi_minus1) << "\n";
        std::cout << "D_h      = " << to_string(vec.d_h) << "\n";
        if (data) std::cout << "D_Gamma  = " << to_string(vec.gamma(*data)) << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
