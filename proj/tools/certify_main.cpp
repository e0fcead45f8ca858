// certify: general-type certification for strata of Abelian differentials.
// Exit codes: 0 certified, 2 failed, 3 out of supported range.

#include "msd/certifier.hpp"
#include "msd/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace msd;

namespace {

int finish(const Certificate& cert, const std::string& out_path) {
    if (!out_path.empty()) write_file(out_path, cert.to_json() + "\n");
    std::cout << cert.to_json() << "\n";
    if (cert.certified()) return 0;
    return cert.verdict == "out-of-range" ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positivity certificates for the canonical-class decomposition"};
    app.require_subcommand(1);

    auto* mi = app.add_subcommand("minimal", "minimal stratum (2g-2), odd spin");
    long long genus = 0;
    std::string y_str, dnc, divisor = "auto", out_path;
    bool interval = false, conservative = false;
    int jobs = 1;
    mi->add_option("--genus", genus)->required();
    mi->add_option("--y", y_str, "mixing parameter (exact rational or decimal)");
    mi->add_flag("--interval", interval, "compute the full feasible y-interval");
    mi->add_option("--dnc", dnc, "v1|v2|refined (default by genus)");
    mi->add_option("--divisor", divisor, "auto|bn|hur|nf");
    mi->add_flag("--conservative-hyp", conservative, "flag delta_H on any doubt");
    mi->add_option("--jobs", jobs, "worker threads");
    mi->add_option("--out", out_path, "write the certificate JSON here");

    auto* eq = app.add_subcommand("equidistributed", "stratum (s^n)");
    long long s = 0, n = 0;
    std::string eq_out;
    eq->add_option("--s", s)->required();
    eq->add_option("--n", n)->required();
    eq->add_option("--out", eq_out);

    auto* fz = app.add_subcommand("few-zeros", "stratum with few zeros");
    std::string mu, fz_out;
    fz->add_option("--mu", mu)->required();
    fz->add_option("--out", fz_out);

    CLI11_PARSE(app, argc, argv);
    try {
        if (*mi) {
            CertificationOptions options;
            if (!dnc.empty()) options.dnc = parse_dnc(dnc);
            options.divisor = parse_divisor(divisor);
            options.conservative_delta_h = conservative;
            options.jobs = jobs;
            if (interval) return finish(certify_minimal_interval(genus, options), out_path);
            if (y_str.empty()) throw std::runtime_error("provide --y or --interval");
            return finish(certify_minimal(genus, parse_rational(y_str), options), out_path);
        }
        if (*eq) return finish(certify_equidistributed(s, n, {}), eq_out);
        if (*fz) return finish(certify_few_zeros(Signature::parse(mu), {}), fz_out);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
