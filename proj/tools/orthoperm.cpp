// Command-line driver: params, dims, verify and suite.
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "orthoperm/harness.hpp"

using namespace orthoperm;

namespace {

std::vector<Kappa> parse_kappa(const std::string& s) {
    if (s == "both") return {1, -1};
    if (s == "+1" || s == "1") return {1};
    if (s == "-1") return {-1};
    throw CLI::ValidationError("--kappa", "expected +1, -1 or both");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Submodule structure of orthogonal-group permutation modules in cross characteristic"};
    app.require_subcommand(1);

    std::string family = "plus", kappa = "both", json_path;
    int m = 6;
    std::uint32_t ell = 2;
    std::uint64_t seed = 1;
    bool order_check = false, enum_lattice = false, quiet = false, timings = false, no_rational = false,
         stretch = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto geometry_flags = [&](CLI::App* sc) {
        sc->add_option("--family", family, "plus, minus or odd")->check(CLI::IsMember({"plus", "minus", "odd"}));
        sc->add_option("--m", m, "dimension of the F_3 space");
        sc->add_option("--seed", seed, "random seed");
        sc->add_option("--json", json_path, "write the JSON report to this path");
    };
    auto run_flags = [&](CLI::App* sc) {
        sc->add_flag("--order-check", order_check, "Schreier-Sims order of the full reflection set");
        sc->add_flag("--enum-lattice", enum_lattice, "enumerate submodule lattices (GF(2), dim <= 130)");
        sc->add_flag("--quiet", quiet, "print only the summary line");
        sc->add_flag("--timings", timings, "record stage timings in the report");
        sc->add_flag("--no-rational", no_rational, "skip the exact integer checks");
    };

    CLI::App* params = app.add_subcommand("params", "point counts, rank-3 parameters and roots");
    geometry_flags(params);
    params->add_flag("--order-check", order_check, "Schreier-Sims order of the full reflection set");

    CLI::App* dims = app.add_subcommand("dims", "graph submodule dimensions over the integers and mod l");
    geometry_flags(dims);
    dims->add_option("--ell", ell, "coefficient prime");

    CLI::App* verify = app.add_subcommand("verify", "full structure verification of one configuration");
    geometry_flags(verify);
    verify->add_option("--ell", ell, "coefficient prime");
    verify->add_option("--kappa", kappa, "+1, -1 or both");
    run_flags(verify);

    CLI::App* suite = app.add_subcommand("suite", "the default configuration matrix");
    suite->add_option("--seed", seed, "random seed");
    suite->add_option("--json", json_path, "write a JSON array of reports to this path");
    suite->add_option("--jobs", jobs, "worker threads");
    suite->add_flag("--stretch", stretch, "also run plus-8 at l = 2");
    run_flags(suite);

    CLI11_PARSE(app, argc, argv);

    try {
        if (params->parsed()) {
            const std::string out = params_json(parse_family(family), m, seed, order_check);
            if (!json_path.empty()) write_file(json_path, out);
            std::cout << out << "\n";
            return 0;
        }
        if (dims->parsed()) {
            const std::string out = dims_json(parse_family(family), m, ell, seed);
            if (!json_path.empty()) write_file(json_path, out);
            std::cout << out << "\n";
            return 0;
        }
        auto configure = [&](Config& c) {
            c.order_check = order_check;
            c.lattice_enum = enum_lattice;
            c.timings = timings;
            c.rational = !no_rational;
        };
        if (verify->parsed()) {
            Config c;
            c.family = parse_family(family);
            c.m = m;
            c.ell = ell;
            c.kappas = parse_kappa(kappa);
            c.seed = seed;
            configure(c);
            const StructureReport r = run_verification(c);
            if (!json_path.empty()) write_file(json_path, to_json(r));
            if (quiet)
                std::cout << (r.passed() ? "PASS " : "FAIL ") << config_label(c) << "\n";
            else
                std::cout << to_text(r);
            return r.passed() ? 0 : 1;
        }
        std::vector<Config> configs = default_suite(seed);
        if (stretch) {
            Config c;
            c.family = Family::Plus;
            c.m = 8;
            c.ell = 2;
            c.seed = seed;
            configs.push_back(c);
        }
        for (Config& c : configs) configure(c);
        const auto reports = run_suite(configs, jobs);
        bool ok = true;
        std::string all = "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            ok = ok && reports[i].passed();
            all += (i ? ",\n" : "\n") + to_json(reports[i]);
            if (quiet)
                std::cout << (reports[i].passed() ? "PASS " : "FAIL ") << config_label(reports[i].config) << "\n";
            else
                std::cout << to_text(reports[i]) << "\n";
        }
        if (!json_path.empty()) write_file(json_path, all + "\n]");
        std::cout << (ok ? "suite passed" : "suite failed") << "\n";
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
