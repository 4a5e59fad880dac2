// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#include "forid/driver.hpp"

#include <chrono>
#include <fstream>

#include <json.hpp>

#include "forid/dispatch.hpp"
#include "forid/eig.hpp"
#include "forid/errors.hpp"
#include "forid/mmio.hpp"

namespace forid {

namespace {

using steady_clock = std::chrono::steady_clock;

std::int64_t ns_between(steady_clock::time_point from, steady_clock::time_point to) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count();
}

} // namespace

run_report execute_run(const run_config& config) {
    if (config.iterations == 0)
        throw usage_error("the iteration count must be at least 1");

    std::ifstream in(config.matrix_path);
    if (!in)
        throw io_error("cannot open matrix file " + config.matrix_path.string());

    const matrix_header header = read_header(in);
    const index_width narrowest = min_index_width(header.order);

    float_precision precision;
    index_width width;
    if (config.direct) {
        precision = config.direct->precision;
        width = config.direct->width;
        if (bits(width) < bits(narrowest))
            throw usage_error("direct index width " + std::to_string(bits(width)) +
                              " cannot index " + std::to_string(header.order) + " rows");
    } else {
        precision = config.precision;
        if (config.width_override) {
            width = *config.width_override;
            if (bits(width) < bits(narrowest))
                throw usage_error("index width override " + std::to_string(bits(width)) +
                                  " cannot index " + std::to_string(header.order) + " rows");
        } else {
            width = width_from_id(static_cast<int>(select_id(index_width_ladder(header.order))));
        }
    }

    // Ids are computed once and reused by both kernel dispatches.
    const int fp_id = precision_id(precision);
    const int ind_id = width_id(width);

    coo_matrix matrix;
    matrix_entry_reader reader(in, header, matrix);

    power_method_result pm_result;
    steady_clock::time_point kernel_entry{};
    power_method_kernel pm(matrix, power_method_config{config.iterations}, pm_result,
                           &kernel_entry);

    run_report report;
    if (config.direct) {
        invoke_direct(precision, width, reader);
        const auto before = steady_clock::now();
        invoke_direct(precision, width, pm);
        const auto after = steady_clock::now();
        report.invocation_ns = ns_between(before, kernel_entry);
        report.application_ns = ns_between(before, after);
        report.dispatch_comparisons = 0;
    } else {
        dispatch_stats reader_stats;
        for_id<fp_types, ind_types>(reader_stats, reader, fp_id, ind_id);
        dispatch_stats pm_stats;
        const auto before = steady_clock::now();
        for_id<fp_types, ind_types>(pm_stats, pm, fp_id, ind_id);
        const auto after = steady_clock::now();
        report.invocation_ns = ns_between(before, kernel_entry);
        report.application_ns = ns_between(before, after);
        report.dispatch_comparisons = reader_stats.comparisons + pm_stats.comparisons;
    }

    report.lambda = pm_result.lambda;
    report.width = width;
    report.precision = precision;
    report.matrix_bytes = matrix_bytes(header, width, precision);
    return report;
}

std::string render_stats_json(const run_report& report) {
    nlohmann::ordered_json stats;
    stats["lambda"] = report.lambda;
    stats["width_bits"] = bits(report.width);
    stats["precision"] = precision_name(report.precision);
    stats["dispatch_comparisons"] = report.dispatch_comparisons;
    stats["invocation_ns"] = report.invocation_ns;
    stats["application_ns"] = report.application_ns;
    stats["matrix_bytes"] = report.matrix_bytes;
    return stats.dump();
}

int exit_code_for(const std::exception& error) noexcept {
    if (dynamic_cast<const usage_error*>(&error))
        return exit_codes::usage;
    if (dynamic_cast<const io_error*>(&error))
        return exit_codes::io;
    if (dynamic_cast<const parse_error*>(&error))
        return exit_codes::parse;
    if (dynamic_cast<const numerical_breakdown_error*>(&error))
        return exit_codes::numerical;
    return exit_codes::internal;
}

} // namespace forid
