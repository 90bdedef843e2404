#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end for the expression language: single
 *        expression mode (--eval), batch mode (--file) and a REPL.
 *
 * Exit codes: 0 success, 1 evaluation error, 2 parse/lex error,
 * 3 I/O or usage error. In batch and file modes every line is
 * processed; the exit code reflects the first error encountered.
 */

#include "ternion/expr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

namespace ternion::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_eval_error = 1;
inline constexpr int exit_syntax_error = 2;
inline constexpr int exit_usage_error = 3;

namespace detail {

struct Session {
    expr::OutputMode mode = expr::OutputMode::Tuple;
    double tol = default_rel_tol;
    std::ostream& out;
    std::ostream& err;

    /// Evaluate one line and print the result (or the error). Returns
    /// the exit code the line would produce on its own. JSON mode keeps
    /// errors on stdout as {"expr", "kind": "error", ...} objects; the
    /// text modes report them on stderr.
    int process_line(const std::string& line) {
        try {
            const expr::ExprPtr ast = expr::parse_expression(line);
            const expr::EvalResult result = expr::evaluate(*ast, tol);
            if (mode == expr::OutputMode::Json) {
                nlohmann::ordered_json j;
                j["expr"] = line;
                const nlohmann::ordered_json body = expr::result_to_json(result);
                j["kind"] = body["kind"];
                j["value"] = body["value"];
                out << dump(j) << '\n';
            } else {
                out << expr::format_result(result, mode) << '\n';
            }
            return exit_ok;
        } catch (const expr::ExprError& e) {
            if (mode == expr::OutputMode::Json) {
                nlohmann::ordered_json j;
                j["expr"] = line;
                j["kind"] = "error";
                j["value"] = {{"message", std::string(e.what())},
                              {"pos", e.pos()}};
                out << dump(j) << '\n';
            } else {
                err << "error: " << e.what() << '\n';
            }
            return e.is_syntax_error() ? exit_syntax_error : exit_eval_error;
        }
    }

    /// The echoed expression is arbitrary user input; replace invalid
    /// UTF-8 instead of letting the serializer throw.
    static std::string dump(const nlohmann::ordered_json& j) {
        return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    }
};

inline bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n\v\f") == std::string::npos;
}

inline bool is_comment(const std::string& line) {
    const auto i = line.find_first_not_of(" \t");
    return i != std::string::npos && line[i] == '#';
}

inline void print_repl_help(std::ostream& err) {
    err << "Commands:\n"
           "  :mode tuple|split|json   select the output format\n"
           "  :help                    show this message\n"
           "  :quit                    leave the calculator\n"
           "Anything else is evaluated as an expression.\n"
           "Constants: one u v delta j oneD oneG iG zero\n"
           "Functions: conj norm A B projD projG inv reduce split\n";
}

/// REPL command handling; returns false when the session should end.
inline bool handle_command(const std::string& line, Session& session) {
    std::istringstream words(line);
    std::string cmd, arg;
    words >> cmd >> arg;
    if (cmd == ":quit" || cmd == ":q") return false;
    if (cmd == ":help") {
        print_repl_help(session.err);
        return true;
    }
    if (cmd == ":mode") {
        if (arg == "tuple") session.mode = expr::OutputMode::Tuple;
        else if (arg == "split") session.mode = expr::OutputMode::Split;
        else if (arg == "json") session.mode = expr::OutputMode::Json;
        else session.err << "error: unknown mode '" << arg
                         << "' (expected tuple, split or json)\n";
        return true;
    }
    session.err << "error: unknown command '" << cmd << "' (try :help)\n";
    return true;
}

inline int run_repl(std::istream& in, Session& session) {
#if defined(__unix__) || defined(__APPLE__)
    const bool interactive = (&in == &std::cin) && isatty(fileno(stdin)) != 0;
#else
    const bool interactive = false;
#endif
    std::string line;
    while (true) {
        if (interactive) session.err << "ternion> " << std::flush;
        if (!std::getline(in, line)) break;
        if (is_blank(line)) continue;
        const auto first = line.find_first_not_of(" \t");
        if (line[first] == ':') {
            if (!handle_command(line.substr(first), session)) break;
            continue;
        }
        session.process_line(line);
    }
    return exit_ok;
}

inline int run_file(const std::string& path, Session& session) {
    std::ifstream file(path);
    if (!file) {
        session.err << "error: cannot open file '" << path << "'\n";
        return exit_usage_error;
    }
    int result = exit_ok;
    std::string line;
    while (std::getline(file, line)) {
        if (is_blank(line) || is_comment(line)) continue;
        const int code = session.process_line(line);
        if (result == exit_ok) result = code;
    }
    return result;
}

}  // namespace detail

/// Entry point behind main(); args excludes the program name. Streams
/// are injectable so the whole CLI is testable in-process.
inline int run_cli(std::vector<std::string> args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
    CLI::App app{"Expression calculator for a three-dimensional "
                 "commutative algebra with C x R split structure."};
    app.set_version_flag("--version", "ternion-calc 1.0.0");

    std::string eval_expr;
    std::string file_path;
    bool json_output = false;
    double tol = default_rel_tol;

    auto* eval_opt = app.add_option("--eval", eval_expr,
                                    "Evaluate one expression and print the result");
    auto* file_opt = app.add_option("--file", file_path,
                                    "Evaluate one expression per nonblank, "
                                    "non-'#' line of a file");
    eval_opt->excludes(file_opt);
    file_opt->excludes(eval_opt);
    app.add_flag("--json", json_output,
                 "Emit one JSON object per result line");
    app.add_option("--tol", tol, "Tolerance forwarded to inversion")
        ->check(CLI::NonNegativeNumber);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::CallForVersion& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage_error;
    }

    detail::Session session{
        json_output ? expr::OutputMode::Json : expr::OutputMode::Tuple, tol,
        out, err};

    if (eval_opt->count() > 0) return session.process_line(eval_expr);
    if (file_opt->count() > 0) return detail::run_file(file_path, session);
    return detail::run_repl(in, session);
}

}  // namespace ternion::cli
