#include "cli_app.hpp"

#include "milnum/covolume.hpp"
#include "milnum/nondegen.hpp"
#include "milnum/parser.hpp"
#include "milnum/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace milnum::cli {
namespace {

std::string read_input(const RunConfig& config)
{
    if (config.expression) return *config.expression;
    if (!config.input_path) throw Error(ErrorCode::io_error, "no input: pass --input or --expr");
    std::ifstream in(*config.input_path);
    if (!in) throw Error(ErrorCode::io_error, "cannot read '" + *config.input_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

AnalyticMapGerm load_germ(const RunConfig& config)
{
    const std::string text = read_input(config);
    return config.format == InputFormat::json ? parse_support_json(text) : parse_map(text);
}

std::string composition_key(const Composition& k)
{
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

void print_breakdown(const NewtonNumberReport& report, std::ostream& err)
{
    for (const auto& c : report.per_subset) {
        err << "I = {";
        for (std::size_t i = 0; i < c.subset.size(); ++i) err << (i ? "," : "") << c.subset[i];
        err << "}  contribution " << to_string(c.contribution) << "\n";
        for (const auto& [k, value] : c.table.entries()) err << "    covol" << composition_key(k) << " = " << to_string(value) << "\n";
    }
    err << "constant term " << to_string(report.constant_term) << "\n";
    for (const auto& [n, nu] : report.stabilization_trace) err << "N = " << n << "  nu = " << to_string(nu) << "\n";
}

std::string summary(const nlohmann::json& doc)
{
    std::ostringstream s;
    s << "mode " << doc.value("mode", "") << ":";
    if (doc.contains("nu")) s << " nu = " << doc["nu"].get<std::string>();
    if (doc.contains("mu")) s << ", mu = " << doc["mu"].get<long>();
    if (doc.contains("extension_used")) s << " (extension N = " << doc["extension_used"].get<long>() << ")";
    if (doc.contains("covolumes")) s << " covolumes " << doc["covolumes"].dump();
    if (doc.contains("faces")) s << " " << doc["faces"].size() << " compact faces exported";
    return s.str();
}

void emit(const RunConfig& config, const nlohmann::json& doc, std::ostream& out)
{
    const std::string text = doc.dump(2) + "\n";
    if (config.json_out) {
        std::ofstream file(*config.json_out);
        if (!file) throw Error(ErrorCode::io_error, "cannot write '" + *config.json_out + "'");
        file << text;
        out << summary(doc) << "\n";
    } else {
        out << text;
    }
}

nlohmann::json compute(const RunConfig& config, std::ostream& err)
{
    const AnalyticMapGerm germ = load_germ(config);
    const MixedOptions options{.execution = config.execution};
    StabilizationPolicy policy;
    policy.initial_extension = config.initial_extension;
    policy.max_doublings = config.max_doublings;
    const std::string mode = mode_name(config.mode);

    switch (config.mode) {
    case Mode::milnor:
    case Mode::newton: {
        NewtonNumberReport report = config.mode == Mode::milnor
                                        ? milnor_number(germ, policy, options)
                                        : newton_number_nonconvenient(newton_polyhedra(germ), germ.dimension(), policy, options);
        if (config.verbose) print_breakdown(report, err);
        return report_to_json(report, mode);
    }
    case Mode::kouchnirenko: {
        if (germ.component_count() != 1) throw Error(ErrorCode::mode_requires_p1, "mode requires p=1");
        NewtonNumberReport report = kouchnirenko_report(newton_polyhedron(germ.component(0)));
        if (config.verbose) print_breakdown(report, err);
        return report_to_json(report, mode);
    }
    case Mode::covolume: {
        nlohmann::json doc;
        doc["n"] = germ.dimension();
        doc["p"] = germ.component_count();
        doc["mode"] = mode;
        std::vector<std::string> covols;
        std::vector<bool> flags;
        for (const auto& g : newton_polyhedra(germ)) {
            flags.push_back(g.is_convenient());
            covols.push_back(to_string(covolume(g)));
            if (config.verbose) err << g.to_json() << "\n";
        }
        doc["covolumes"] = covols;
        doc["convenient"] = flags;
        doc["warnings"] = nlohmann::json::array();
        return doc;
    }
    case Mode::export_faces: {
        nlohmann::json doc = nlohmann::json::parse(export_face_systems(germ));
        doc["mode"] = mode;
        return doc;
    }
    }
    throw Error(ErrorCode::invalid_argument, "unknown mode");
}

}  // namespace

const char* mode_name(Mode mode)
{
    switch (mode) {
    case Mode::milnor: return "milnor";
    case Mode::newton: return "newton";
    case Mode::kouchnirenko: return "kouchnirenko";
    case Mode::covolume: return "covolume";
    case Mode::export_faces: return "export-faces";
    }
    return "unknown";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        emit(config, compute(config, err), out);
        return exit_ok;
    } catch (const Error& e) {
        err << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
        const int status = e.code() == ErrorCode::no_stabilization ? exit_no_stabilization : exit_input_error;
        if (status == exit_no_stabilization && config.verbose) {
            for (const auto& [n, nu] : static_cast<const StabilizationError&>(e).trace())
                err << "N = " << n << "  nu = " << to_string(nu) << "\n";
        }
        try {
            emit(config, error_to_json(e), out);
        } catch (const Error& io) {
            err << "error (" << error_code_name(io.code()) << "): " << io.what() << "\n";
        }
        return status;
    }
}

}  // namespace milnum::cli
