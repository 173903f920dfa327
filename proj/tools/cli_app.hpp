#pragma once

#include "milnum/mixed.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace milnum::cli {

enum class InputFormat { text, json };
enum class Mode { milnor, newton, kouchnirenko, covolume, export_faces };

struct RunConfig {
    std::optional<std::string> input_path;
    std::optional<std::string> expression;
    InputFormat format = InputFormat::text;
    Mode mode = Mode::milnor;
    std::optional<std::int64_t> initial_extension;
    int max_doublings = 8;
    bool verbose = false;
    std::optional<std::string> json_out;
    Execution execution = Execution::parallel;
};

enum ExitStatus : int { exit_ok = 0, exit_input_error = 1, exit_no_stabilization = 2 };

const char* mode_name(Mode mode);

/// Runs one computation. The JSON document goes to `out` (or to json_out, in
/// which case `out` receives a short human-readable summary); diagnostics and
/// the verbose breakdown go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace milnum::cli
