#include "affinegerm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

int main(int argc, char** argv) {
    CLI::App app{"Exact local classification of logarithmic affine structures and webs"};
    std::string group, sub, path;
    std::optional<int> order;
    bool pretty = false;
    app.add_option("group", group, "riccati | pencil | normalize | web")->required();
    app.add_option("command", sub, "subcommand, e.g. induce or classify")->required();
    app.add_option("job", path, "job file, '-' for standard input")->required();
    app.add_option("--order", order, "truncation order (default 16, or $AFFINEGERM_ORDER)");
    auto* json_flag = app.add_flag("--json", "compact JSON output (default)");
    app.add_flag("--pretty", pretty, "indented JSON output")->excludes(json_flag);
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot read " << path << "\n";
            return 1;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    ag::cli::Outcome o = ag::cli::run(group + " " + sub, text, order);
    std::cout << ag::cli::render(o, pretty);
    return o.exit_code;
}
