// tropgr: fans of the totally positive tropical Grassmannian.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.
#include "tropgr/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"exact fans of the totally positive tropical Grassmannian"};
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads, "worker threads (default: sequential)");

    int k = 0, n = 0, bound = 3;
    std::string out_path, method = "refine", inner_csv, outer_csv, fixtures, file_a, file_b;

    auto* web = app.add_subcommand("web", "print a web diagram and its regions");
    web->add_option("--k", k)->required();
    web->add_option("--n", n)->required();

    auto* fan = app.add_subcommand("fan", "compute the fan F_{k,n}");
    fan->add_option("--k", k)->required();
    fan->add_option("--n", n)->required();
    fan->add_option("--out", out_path, "write JSON here instead of stdout");
    fan->add_option("--method", method, "refine (default) or minkowski");

    auto* fvector = app.add_subcommand("fvector", "print the f-vector of a fan file");
    fvector->add_option("file", file_a)->required();

    auto* rays = app.add_subcommand("rays", "print the rays of a fan file");
    rays->add_option("file", file_a)->required();

    auto* report = app.add_subcommand("report", "summarize a fan file (TSV + JSON)");
    report->add_option("file", file_a)->required();

    auto* param = app.add_subcommand("param", "evaluate the positive parameterization");
    param->add_option("--k", k)->required();
    param->add_option("--n", n)->required();
    param->add_option("--inner", inner_csv, "comma-separated inner region values")->required();
    param->add_option("--outer", outer_csv, "outer region values (default: all 1)");

    auto* invert = app.add_subcommand("invert", "recover region values from Pluecker TSV on stdin");
    invert->add_option("--k", k)->required();
    invert->add_option("--n", n)->required();

    auto* sp = app.add_subcommand("sp-check", "compare F_{2,n} with the Stanley-Pitman fan");
    sp->add_option("--n", n)->required();

    auto* refine = app.add_subcommand("refine", "refine F_{3,6} or F_{3,7} by cluster variables");
    refine->add_option("--k", k)->required();
    refine->add_option("--n", n)->required();
    refine->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* split = app.add_subcommand("split-report", "how a refinement splits each facet");
    split->add_option("before", file_a)->required();
    split->add_option("after", file_b)->required();

    auto* check = app.add_subcommand("check-tables", "verify the published ray tables");
    check->add_option("--k", k)->required();
    check->add_option("--n", n)->required();
    check->add_option("--fixtures", fixtures, "fixture directory (default: $TROPGR_FIXTURES)");

    auto* oracle = app.add_subcommand("oracle", "Gr_{2,4} initial-form positivity oracle");
    oracle->add_option("--b", bound, "grid bound (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        using namespace tropgr;
        if (web->parsed()) return cli::cmd_web(k, n, std::cout);
        if (fan->parsed()) return cli::cmd_fan(k, n, method, threads, out_path, std::cout);
        if (fvector->parsed()) return cli::cmd_fvector(file_a, std::cout);
        if (rays->parsed()) return cli::cmd_rays(file_a, std::cout);
        if (report->parsed()) return cli::cmd_report(file_a, std::cout);
        if (param->parsed()) return cli::cmd_param(k, n, inner_csv, outer_csv, std::cout);
        if (invert->parsed()) return cli::cmd_invert(k, n, std::cin, std::cout);
        if (sp->parsed()) return cli::cmd_sp_check(n, threads, std::cout);
        if (refine->parsed()) return cli::cmd_refine(k, n, threads, out_path, std::cout);
        if (split->parsed()) return cli::cmd_split_report(file_a, file_b, std::cout);
        if (check->parsed()) {
            std::string dir = fixtures.empty() ? default_fixture_dir() : fixtures;
            return cli::cmd_check_tables(k, n, dir, threads, std::cout);
        }
        if (oracle->parsed()) return cli::cmd_oracle(bound, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
