#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gq/error.hpp"
#include "gq/expr.hpp"
#include "gq/io.hpp"

namespace {

struct Options {
    long order = 8;
    bool json = false;
};

gq::EvalConfig config_of(const Options& o) {
    gq::EvalConfig cfg;
    cfg.order = gq::Rat(o.order);
    return cfg;
}

int eval_one(const std::string& text, const Options& opts) {
    gq::Env env;
    try {
        gq::Statement st = gq::parse_statement(text);
        gq::Value v = gq::run_statement(st, env, config_of(opts));
        std::cout << (opts.json ? gq::value_json(v) : gq::print_value(v)) << "\n";
        return 0;
    } catch (const gq::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int repl(const Options& opts) {
    gq::Env env;
    gq::EvalConfig cfg = config_of(opts);
    std::string line;
    std::cout << "gq (order " << opts.order << "); empty line or 'exit' quits\n";
    while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
        if (line.empty() || line == "exit" || line == "quit") break;
        try {
            gq::Statement st = gq::parse_statement(line);
            gq::Value v = gq::run_statement(st, env, cfg);
            std::cout << (opts.json ? gq::value_json(v) : gq::print_value(v)) << "\n";
        } catch (const gq::Error& e) {
            std::cout << e.what() << "\n";
        }
    }
    return 0;
}

/// Batch file: JSON array of command strings (or {"expr": "..."} objects).
/// Each command runs against its own copy of the empty environment; output is
/// a JSON array of {ok, result|error}. Exit code 0 iff no command failed.
int batch(const std::string& path, const Options& opts) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "cannot open " << path << "\n";
            return 2;
        }
        in = &file;
    }
    nlohmann::json commands;
    try {
        *in >> commands;
        if (!commands.is_array()) throw std::runtime_error("top level must be an array");
    } catch (const std::exception& e) {
        std::cerr << "bad batch file: " << e.what() << "\n";
        return 2;
    }
    gq::EvalConfig cfg = config_of(opts);
    nlohmann::json results = nlohmann::json::array();
    bool any_error = false;
    for (const auto& cmd : commands) {
        std::string text;
        if (cmd.is_string())
            text = cmd.get<std::string>();
        else if (cmd.is_object() && cmd.contains("expr"))
            text = cmd["expr"].get<std::string>();
        else {
            results.push_back({{"ok", false}, {"error", "command must be a string or {expr}"}});
            any_error = true;
            continue;
        }
        gq::Env env;  // commands are independent
        try {
            gq::Statement st = gq::parse_statement(text);
            gq::Value v = gq::run_statement(st, env, cfg);
            nlohmann::json r{{"ok", true}, {"result", gq::print_value(v)}};
            if (opts.json) r["value"] = nlohmann::json::parse(gq::value_json(v));
            results.push_back(std::move(r));
        } catch (const gq::Error& e) {
            results.push_back({{"ok", false}, {"error", e.what()}});
            any_error = true;
        }
    }
    std::cout << results.dump(2) << "\n";
    return any_error ? 1 : 0;
}

int oracle_cmd(std::uint64_t seed, int trials, const Options& opts) {
    gq::SuiteSummary sum = gq::cross_validate_suite(seed, trials);
    if (opts.json) {
        std::cout << gq::summary_json(sum) << "\n";
    } else {
        std::cout << "seed " << sum.seed << ", trials " << sum.trials << ", checks "
                  << sum.checks_run << ", mismatches " << sum.mismatches.size() << "\n";
        for (const auto& m : sum.mismatches)
            std::cout << "  trial " << m.trial << " " << m.decision << ": "
                      << gq::report_json(m.report) << "\n";
    }
    return sum.mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for generalized scalars and quaternions over asymptotic germs"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --order/--json after the subcommand

    Options opts;
    app.add_option("--order", opts.order, "truncation order for /, invert, sqrt, polar")
        ->capture_default_str();
    app.add_flag("--json", opts.json, "emit JSON instead of plain text");

    auto* repl_cmd = app.add_subcommand("repl", "interactive session with let-bindings");

    std::string expr_text;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
    eval_cmd->add_option("expr", expr_text, "expression")->required();

    std::string batch_path;
    auto* batch_cmd = app.add_subcommand("batch", "run a JSON array of commands");
    batch_cmd->add_option("file", batch_path, "path to JSON file, or - for stdin")->required();

    std::uint64_t seed = 42;
    int trials = 500;
    auto* oracle_sub = app.add_subcommand("oracle", "numeric cross-validation suite");
    oracle_sub->add_option("--seed", seed, "generator seed")->capture_default_str();
    oracle_sub->add_option("--trials", trials, "number of trials")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (repl_cmd->parsed()) return repl(opts);
    if (eval_cmd->parsed()) return eval_one(expr_text, opts);
    if (batch_cmd->parsed()) return batch(batch_path, opts);
    if (oracle_sub->parsed()) return oracle_cmd(seed, trials, opts);
    return 0;
}
