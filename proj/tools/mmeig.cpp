// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0
//
// mmeig: dominant eigenvalue of a symmetric Matrix Market file, with the
// floating-point precision and index bit-width of the kernels chosen at run
// time.

#include <exception>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "forid/driver.hpp"
#include "forid/errors.hpp"
#include "forid/select.hpp"

namespace {

forid::index_width width_from_token(const std::string& token) {
    if (token == "8")
        return forid::index_width::u8;
    if (token == "16")
        return forid::index_width::u16;
    if (token == "32")
        return forid::index_width::u32;
    if (token == "64")
        return forid::index_width::u64;
    throw forid::usage_error("index width must be auto, 8, 16, 32 or 64, got \"" + token + "\"");
}

forid::direct_case parse_direct(const std::string& token) {
    const auto comma = token.find(',');
    if (comma == std::string::npos)
        throw forid::usage_error("--direct expects <precision>,<width>, e.g. double,32");
    return forid::direct_case{forid::precision_from_flag(token.substr(0, comma)),
                              width_from_token(token.substr(comma + 1))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dominant eigenvalue of a symmetric Matrix Market matrix; element types are "
                 "selected at run time."};

    std::string matrix_path;
    std::uint64_t iterations = 0;
    std::string precision_flag = "double";
    std::string index_flag = "auto";
    std::string direct_flag;
    bool stats = false;

    app.add_option("matrix", matrix_path, "Matrix Market coordinate file (square, symmetric)")
        ->required();
    app.add_option("iterations", iterations, "power method iteration count (>= 1)")->required();
    app.add_option("--precision", precision_flag, "floating-point precision: single or double")
        ->capture_default_str();
    app.add_option("--index", index_flag, "index width in bits: auto, 8, 16, 32 or 64")
        ->capture_default_str();
    app.add_option("--direct", direct_flag,
                   "bypass dispatch and call the <precision>,<width> instance directly");
    app.add_flag("--stats", stats, "emit a JSON stats object on stderr");

    try {
        app.parse(argc, argv);

        forid::run_config config;
        config.matrix_path = matrix_path;
        config.iterations = iterations;
        config.precision = forid::precision_from_flag(precision_flag);
        if (index_flag != "auto")
            config.width_override = width_from_token(index_flag);
        if (!direct_flag.empty())
            config.direct = parse_direct(direct_flag);
        config.emit_stats = stats;

        const forid::run_report report = forid::execute_run(config);

        if (config.emit_stats)
            std::cerr << forid::render_stats_json(report) << "\n";
        std::cout << "Lambda: " << std::setprecision(15) << report.lambda << "\n";
        return forid::exit_codes::ok;
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& parse) {
        std::cerr << parse.what() << "\n";
        return forid::exit_codes::usage;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return forid::exit_code_for(error);
    }
}
