#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cqs/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Cyclic quotient surface singularities 1/n(1,q)"};
    app.require_subcommand(1);

    cqs::cli::RunRequest req;
    std::string out_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format,-f", req.format, "json, text or dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        sub->add_option("--output,-o", out_path, "write the report here instead of stdout");
    };
    for (auto& name : cqs::cli::subcommands()) {
        if (name == "batch") continue;
        auto* sub = app.add_subcommand(name);
        sub->add_option("n", req.n, "group order")->required();
        sub->add_option("q", req.q, "weight, coprime to n")->required();
        add_common(sub);
    }
    auto* batch = app.add_subcommand("batch", "verify every coprime pair with min_n <= n <= max_n");
    batch->add_option("--min-n", req.min_n)->default_val(2);
    batch->add_option("--max-n", req.max_n)->required();
    add_common(batch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cqs::cli::invalid_input;
    }
    req.subcommand = app.get_subcommands().front()->get_name();

    auto res = cqs::cli::run(req);
    if (!res.error.empty()) std::cerr << "error: " << res.error << '\n';
    if (!res.output.empty()) {
        if (out_path.empty()) {
            std::cout << res.output;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!(f << res.output)) {
                std::cerr << "error: cannot write " << out_path << '\n';
                return cqs::cli::invalid_input;
            }
        }
    }
    return res.exit_code;
}
