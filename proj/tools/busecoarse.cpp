// busecoarse: run one toolkit check from a JSON config or from flags.
//
//   busecoarse run config.json          (use - for stdin)
//   busecoarse net --space lp:2:2 --epsilon 1.5 --window '[[0,0],[1,0]]'
//
// Flag values are read as JSON when they parse, otherwise as strings; dashes in
// flag names become underscores. Reports go to stdout, diagnostics to stderr.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "busecoarse/errors.hpp"
#include "busecoarse/runner.hpp"

namespace {

using busecoarse::io::Json;
namespace cli = busecoarse::cli;

Json flag_value(const std::string& text) {
    Json v = Json::parse(text, nullptr, false);
    return v.is_discarded() ? Json(text) : v;
}

/// Turns leftover "--key value" tokens into a parameter object.
Json parameters_from_extras(const std::vector<std::string>& extras) {
    Json params = Json::object();
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const std::string& tok = extras[i];
        if (tok.rfind("--", 0) != 0 || tok.size() < 3)
            throw busecoarse::UsageError("unexpected argument '" + tok + "'");
        std::string key = tok.substr(2);
        std::string value;
        bool has_value = false;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key = key.substr(0, eq);
            has_value = true;
        } else if (i + 1 < extras.size() && extras[i + 1].rfind("--", 0) != 0) {
            value = extras[++i];
            has_value = true;
        }
        std::replace(key.begin(), key.end(), '-', '_');
        params[key] = has_value ? flag_value(value) : Json(true);
    }
    return params;
}

int emit(const cli::RunOutcome& out) {
    std::cout << out.report.dump(2) << '\n';
    if (out.report.contains("error"))
        std::cerr << "busecoarse: " << out.report["error"]["kind"].get<std::string>() << ": "
                  << out.report["error"]["message"].get<std::string>() << '\n';
    return out.exit_code;
}

int usage_failure(const std::string& message) {
    std::cerr << "busecoarse: " << message << '\n';
    return cli::kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coarse-geometry toolkit for Busemann spaces"};
    app.set_version_flag("--version", std::string(cli::kVersion));
    app.require_subcommand(1);

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "Run a JSON experiment config");
    run_cmd->add_option("config", config_path, "Config file, or - for stdin")->required();

    app.add_subcommand("commands", "List the available commands and their parameters");

    struct FlagForm {
        std::string space;
        std::uint64_t seed = 0;
        std::optional<double> tolerance;
    };
    std::vector<FlagForm> forms(cli::command_names().size());
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < cli::command_names().size(); ++i) {
        const std::string& name = cli::command_names()[i];
        auto* sub = app.add_subcommand(name, "Run '" + name + "' with parameters given as --key value");
        sub->add_option("--space", forms[i].space, "lp:P:N, raw-lp:P:N, halfline or xp:P");
        sub->add_option("--seed", forms[i].seed, "Random seed");
        sub->add_option("--tolerance", forms[i].tolerance, "Tolerance override");
        sub->allow_extras();
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kUsage;
    }

    double tolerance = busecoarse::kDefaultTolerance;
    try {
        tolerance = cli::tolerance_from_env();
    } catch (const busecoarse::UsageError& e) {
        return usage_failure(e.what());
    }

    if (app.got_subcommand("commands")) {
        for (const auto& name : cli::command_names()) {
            std::cout << name;
            for (const auto& key : cli::parameter_names(name)) std::cout << ' ' << key;
            std::cout << '\n';
        }
        return 0;
    }

    if (run_cmd->parsed()) {
        std::string text;
        if (config_path == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream in(config_path);
            if (!in) return usage_failure("cannot read config '" + config_path + "'");
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        const Json config = Json::parse(text, nullptr, false);
        if (config.is_discarded()) return usage_failure("config '" + config_path + "' is not valid JSON");
        return emit(cli::run_guarded(config, tolerance));
    }

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        Json config = Json::object();
        config["command"] = cli::command_names()[i];
        try {
            config["parameters"] = parameters_from_extras(subs[i]->remaining());
        } catch (const busecoarse::UsageError& e) {
            return usage_failure(e.what());
        }
        if (!forms[i].space.empty()) config["space"] = forms[i].space;
        config["seed"] = forms[i].seed;
        if (forms[i].tolerance) config["tolerance"] = *forms[i].tolerance;
        return emit(cli::run_guarded(config, tolerance));
    }
    return usage_failure("no command given");
}
