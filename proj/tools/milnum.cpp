#include "cli_app.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv)
{
    using namespace milnum::cli;

    CLI::App app{"Mixed Newton numbers and Milnor numbers of non-degenerate ICIS germs"};
    RunConfig config;

    std::string input_path, expression;
    auto* input = app.add_option("--input", input_path, "Read the germ from a file");
    auto* expr = app.add_option("--expr", expression, "Germ as text, components separated by ';'");
    input->excludes(expr);
    expr->excludes(input);

    const std::map<std::string, InputFormat> formats{{"text", InputFormat::text}, {"json", InputFormat::json}};
    app.add_option("--format", config.format, "Input format: text or json (support format)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    const std::map<std::string, Mode> modes{{"milnor", Mode::milnor},
                                            {"newton", Mode::newton},
                                            {"kouchnirenko", Mode::kouchnirenko},
                                            {"covolume", Mode::covolume},
                                            {"export-faces", Mode::export_faces}};
    app.add_option("--mode", config.mode, "milnor | newton | kouchnirenko | covolume | export-faces")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

    std::int64_t n0 = 0;
    auto* n0_opt = app.add_option("--n0", n0, "Initial axis extension exponent for non-convenient input")
                       ->check(CLI::PositiveNumber);
    app.add_option("--max-doublings", config.max_doublings, "Doublings of the extension before giving up")
        ->check(CLI::Range(1, 62));
    std::string json_out;
    auto* json_out_opt = app.add_option("--json-out", json_out, "Write the JSON report here; print a summary instead");
    app.add_flag("--verbose", config.verbose, "Print every subset contribution and mixed covolume to stderr");
    bool serial = false;
    app.add_flag("--serial", serial, "Use the serial reference evaluation path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    if (*input) config.input_path = input_path;
    if (*expr) config.expression = expression;
    if (!*input && !*expr) {
        std::cerr << "error: one of --input or --expr is required\n";
        return exit_input_error;
    }
    if (*n0_opt) config.initial_extension = n0;
    if (*json_out_opt) config.json_out = json_out;
    if (serial) config.execution = milnum::Execution::serial;

    return run(config, std::cout, std::cerr);
}
