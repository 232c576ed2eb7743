#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chern/errors.hpp"
#include "chern/session.hpp"
#include "chern/version.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chern::user_error("cannot open script file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chern: Hilbert-Samuel coefficients, index of reducibility, and "
                 "Cohen-Macaulay verdicts for graded algebras"};
    app.set_version_flag("--version", chern::version_string);

    std::string script_path;
    std::string inline_script;
    bool json = false;
    long long seed = 0;
    long long ncap = 0;
    long long threads = 0;
    std::string order = "grevlex";

    app.add_option("script", script_path, "script file to execute ('-' for stdin)");
    app.add_option("-c,--command", inline_script, "inline script text");
    app.add_flag("--json", json, "emit JSON reports");
    app.add_option("--seed", seed, "seed for randomized corpus strategies");
    app.add_option("--ncap", ncap, "stabilization cap for table growth (default 40)");
    app.add_option("--threads", threads, "corpus batch parallelism");
    app.add_option("--order", order, "default monomial order: grevlex or lex");

    auto* corpus = app.add_subcommand("corpus", "browse and run the built-in corpus");
    auto* corpus_list = corpus->add_subcommand("list", "list corpus entries");
    auto* corpus_run = corpus->add_subcommand("run", "verify corpus entries");
    std::string run_id;
    bool run_all = false;
    std::string strategy;
    long long degree = 0;
    long long power = 0;
    corpus_run->add_option("id", run_id, "corpus entry id or family selector");
    corpus_run->add_flag("--all", run_all, "run every corpus entry");
    corpus_run->add_option("--strategy", strategy, "given, random, or powers");
    corpus_run->add_option("--degree", degree, "form degree for --strategy random");
    corpus_run->add_option("--power", power, "exponent for --strategy powers");
    corpus->require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        chern::SessionOptions options = chern::apply_environment(chern::SessionOptions{});
        options.json = json;
        if (seed != 0) options.seed = static_cast<std::uint64_t>(seed);
        if (app.count("--ncap")) {
            if (ncap <= 0) throw chern::user_error("--ncap must be positive");
            options.n_cap = ncap;
        }
        if (app.count("--threads")) {
            if (threads <= 0) throw chern::user_error("--threads must be positive");
            options.threads = static_cast<unsigned>(threads);
        }
        if (order == "lex") {
            options.default_order = chern::MonomialOrder::lex();
        } else if (order != "grevlex") {
            throw chern::user_error("unknown order '" + order +
                                    "' (expected grevlex or lex)");
        }

        std::string text;
        std::string source_name = "<command-line>";
        if (corpus->parsed()) {
            if (corpus_list->parsed()) {
                text = "corpus list;";
            } else if (corpus_run->parsed()) {
                std::ostringstream cmd;
                cmd << "corpus run";
                if (run_all) {
                    cmd << " --all";
                } else if (!run_id.empty()) {
                    cmd << " " << run_id;
                } else {
                    throw chern::user_error("corpus run needs an entry id or --all");
                }
                if (!strategy.empty()) cmd << " --strategy " << strategy;
                if (degree > 0) cmd << " --degree " << degree;
                if (power > 0) cmd << " --power " << power;
                cmd << ";";
                text = cmd.str();
            } else {
                throw chern::user_error("corpus needs an action: list or run");
            }
        } else if (!inline_script.empty()) {
            if (!script_path.empty()) {
                throw chern::user_error("give either a script file or --command, not both");
            }
            text = inline_script;
        } else if (!script_path.empty()) {
            text = read_input(script_path);
            source_name = script_path;
        } else {
            throw chern::user_error(
                "nothing to do: pass a script file, --command, or the corpus subcommand");
        }

        return chern::run_script_text(text, source_name, options, std::cout, std::cerr);
    } catch (const chern::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const chern::user_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
