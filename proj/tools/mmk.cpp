#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mmk/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with G-constellation families on toric crepant resolutions"};
    app.name("mmk");

    std::string command, sub, config_path;
    mmk::RunOptions opt;
    std::string theta, out_path, dot_path;

    app.add_option("command", command,
                   "group-info | resolve | quiver | family | fibers | moduli | lift")
        ->required();
    app.add_option("subcommand", sub, "for `family`: validate | canonical | special | walk");
    app.add_option("--config", config_path, "job config JSON file")->required();
    app.add_option("--theta", theta, "stability parameter, comma-separated rationals");
    app.add_option("--out", out_path, "also write the JSON report to this file");
    app.add_option("--dot", dot_path, "write DOT output to this file (quiver)");

    CLI11_PARSE(app, argc, argv);

    if (!theta.empty()) opt.theta = theta;
    if (!out_path.empty()) opt.out_path = out_path;
    if (!dot_path.empty()) opt.dot_path = dot_path;

    std::ifstream f(config_path);
    if (!f) {
        std::cerr << "mmk: cannot open config file " << config_path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << f.rdbuf();

    mmk::Json config;
    try {
        config = mmk::parse_config_text(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "mmk: " << e.what() << "\n";
        return 1;
    }

    mmk::RunResult res = mmk::run_command(command, sub, config, opt);
    if (res.exit_code == 0) {
        std::cout << res.output;
    } else {
        std::cerr << "mmk: " << res.error << "\n";
    }
    return res.exit_code;
}
