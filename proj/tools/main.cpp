#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ginwb/runner.hpp"

namespace {

void add_input_options(CLI::App* cmd, ginwb::RunConfig& config, std::string& inline_input,
                       std::string& input_path) {
    cmd->add_option("--inline", inline_input, "';'-separated polynomials");
    cmd->add_option("--input", input_path, "file with one polynomial per line");
    cmd->add_option("-n,--vars", config.n, "number of variables (inferred when omitted)");
}

void add_random_options(CLI::App* cmd, ginwb::RunConfig& config) {
    cmd->add_option("--seed", config.seed, "base seed (default: GINWB_SEED or 42)");
    cmd->add_option("--trials", config.trials, "independent random trials")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--coeff-bound", config.coeff_bound,
                    "coefficients are drawn from [-bound, bound]");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ginwb: generic initial ideals of complete intersections (revlex)"};
    app.require_subcommand(1);

    ginwb::RunConfig config;
    std::string inline_input, input_path, format = "text", kind = "general", lef_kind = "slp",
                element;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* gin = app.add_subcommand("gin", "generic initial ideal by random specialization");
    add_input_options(gin, config, inline_input, input_path);
    add_random_options(gin, config);
    gin->add_option("--degree-bound", config.degree_bound, "truncation degree");
    gin->add_option("--kind", kind, "coordinate change kind")
        ->check(CLI::IsMember({"general", "upper-triangular"}));
    gin->add_flag("--expect-ci", config.expect_ci,
                  "fail unless the quotient has the (n,d) complete intersection series");
    add_format(gin);

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert table of an (n,d) complete intersection");
    hilbert->add_option("-n,--vars", config.n, "number of variables")->required();
    hilbert->add_option("-d,--degree", config.d, "degree of the forms")->required();
    add_format(hilbert);

    CLI::App* reconstruct =
        app.add_subcommand("reconstruct", "candidate generic initial ideals from the Hilbert "
                                          "table, strong stability and the x_n constraint");
    reconstruct->add_option("-n,--vars", config.n, "number of variables")->required();
    reconstruct->add_option("-d,--degree", config.d, "degree of the forms")->required();
    add_format(reconstruct);

    CLI::App* lefschetz = app.add_subcommand("lefschetz", "weak/strong Lefschetz check");
    add_input_options(lefschetz, config, inline_input, input_path);
    lefschetz->add_option("--kind", lef_kind, "wlp or slp")
        ->check(CLI::IsMember({"wlp", "slp"}));
    lefschetz->add_option("--element", element, "Lefschetz element (default: x_n for monomial "
                                                "ideals, a seeded random linear form otherwise)");
    lefschetz->add_option("--degree-bound", config.degree_bound, "truncation degree");
    lefschetz->add_option("--seed", config.seed, "seed for the random element");
    add_format(lefschetz);

    CLI::App* criterion =
        app.add_subcommand("criterion", "determinant certificate for the degree-d revlex segment");
    add_input_options(criterion, config, inline_input, input_path);
    add_random_options(criterion, config);
    criterion->add_option("--kind", kind, "coordinate change kind")
        ->check(CLI::IsMember({"general", "upper-triangular"}));
    add_format(criterion);

    CLI11_PARSE(app, argc, argv);

    if (!inline_input.empty()) config.inline_input = inline_input;
    if (!input_path.empty()) config.input_path = input_path;
    if (!element.empty()) config.element = element;
    config.format = format == "json" ? ginwb::OutputFormat::json : ginwb::OutputFormat::text;
    config.kind = kind == "upper-triangular" ? ginwb::ChangeKind::triangular
                                             : ginwb::ChangeKind::general;
    config.lefschetz_kind =
        lef_kind == "wlp" ? ginwb::LefschetzKind::weak : ginwb::LefschetzKind::strong;

    if (gin->parsed()) config.command = ginwb::Command::gin;
    if (hilbert->parsed()) config.command = ginwb::Command::hilbert;
    if (reconstruct->parsed()) config.command = ginwb::Command::reconstruct;
    if (lefschetz->parsed()) config.command = ginwb::Command::lefschetz;
    if (criterion->parsed()) config.command = ginwb::Command::criterion;

    ginwb::RunReport report = ginwb::run(config);
    std::cout << report.output;
    return report.exit_code;
}
