#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "liaison/acceptance.hpp"
#include "liaison/io.hpp"
#include "liaison/scenarios.hpp"

namespace {

std::string scenario_list() {
    std::string s;
    for (const std::string& name : liaison::scenario_names()) {
        if (!s.empty()) s += ", ";
        s += name;
    }
    return s;
}

void write_json_atomic(const std::string& path, const nlohmann::json& j) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw liaison::error("cannot open " + tmp + " for writing");
        os << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw liaison::error("cannot move " + tmp + " to " + path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact complete-intersection liaison computations over GF(p)"};
    app.require_subcommand(1);

    std::string scenario;
    liaison::ScenarioParams P;
    std::string json_path;
    CLI::App* run = app.add_subcommand("run", "run a named scenario and check its invariants");
    run->add_option("scenario", scenario, "one of: " + scenario_list())->required();
    run->add_option("--d", P.d, "degree parameter")->capture_default_str();
    run->add_option("--e", P.e, "secondary degree parameter (-1 = scenario default)")
        ->capture_default_str();
    run->add_option("--n", P.n, "point count parameter")->capture_default_str();
    run->add_option("--s", P.s, "skew matrix size (odd)")->capture_default_str();
    run->add_option("--seed", P.seed, "random seed")->capture_default_str();
    run->add_option("--prime", P.prime, "field characteristic")->capture_default_str();
    run->add_option("--max-steps", P.max_steps, "double-link budget")->capture_default_str();
    run->add_option("--json", json_path, "also write the report as JSON to this file");

    std::string betti_file;
    CLI::App* betti = app.add_subcommand("betti", "print the minimal graded Betti table of an ideal");
    betti->add_option("ideal-file", betti_file, "ideal in the text format (see README)")
        ->required();

    std::string link_file;
    std::vector<int> degrees;
    std::uint64_t link_seed = 1;
    CLI::App* link_cmd =
        app.add_subcommand("link", "link an ideal through a sampled complete intersection");
    link_cmd->add_option("ideal-file", link_file, "ideal in the text format")->required();
    link_cmd->add_option("--degrees", degrees, "complete intersection degrees, e.g. 2,3,4")
        ->required()
        ->delimiter(',');
    link_cmd->add_option("--seed", link_seed, "sampling seed")->capture_default_str();

    app.add_subcommand("verify-all", "run the full acceptance suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            liaison::ScenarioReport rep = liaison::run_scenario(scenario, P);
            std::cout << liaison::report_text(rep);
            if (!json_path.empty()) write_json_atomic(json_path, liaison::report_json(rep));
            return rep.all_pass() ? 0 : 1;
        }
        if (betti->parsed()) {
            liaison::Ideal I = liaison::read_ideal_file(betti_file);
            std::cout << liaison::minimal_betti(I).str();
            return 0;
        }
        if (link_cmd->parsed()) {
            liaison::Ideal I = liaison::read_ideal_file(link_file);
            liaison::CompleteIntersection ci = liaison::sample_ci(I, degrees, link_seed);
            liaison::LinkResult res = liaison::link(I, ci);
            std::cout << "# linked through complete intersection of degrees "
                      << liaison::detail::fmt_ints(res.step.ci_degrees) << "\n";
            for (const liaison::Polynomial& f : res.step.ci_forms)
                std::cout << "#   " << f.str() << "\n";
            std::cout << "# residual: " << res.step.mu_after << " minimal generators, degree "
                      << res.step.degree_after << "\n";
            liaison::write_ideal(std::cout, res.residual);
            return 0;
        }
        // verify-all
        std::vector<liaison::CriterionResult> rs = liaison::run_acceptance_suite(std::cout);
        bool ok = liaison::acceptance_passed(rs);
        int passed = 0;
        for (const liaison::CriterionResult& r : rs) passed += r.pass ? 1 : 0;
        std::cout << "acceptance: " << passed << "/" << rs.size() << " criteria passed\n";
        return ok ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
