// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#ifndef FORID_DRIVER_HPP
#define FORID_DRIVER_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "forid/select.hpp"

namespace forid {

/// In the direct mode both element types are fixed up front and the kernels
/// are entered through per-case calls instead of the dispatcher.
struct direct_case {
    float_precision precision;
    index_width width;
};

struct run_config {
    std::filesystem::path matrix_path;
    std::uint64_t iterations = 0;                         // q, must be >= 1
    float_precision precision = float_precision::f64;     // --precision
    std::optional<index_width> width_override;            // --index, auto when absent
    std::optional<direct_case> direct;                    // --direct, dispatched when absent
    bool emit_stats = false;                              // --stats
};

struct run_report {
    double lambda = 0.0;
    index_width width = index_width::u8;
    float_precision precision = float_precision::f64;
    std::uint64_t dispatch_comparisons = 0; // 0 in direct mode
    std::int64_t invocation_ns = 0;         // probe 1 -> kernel entry
    std::int64_t application_ns = 0;        // probe 1 -> kernel return
    std::uint64_t matrix_bytes = 0;         // modeled buffer memory
};

/// Reads the matrix, selects ids at run time (precision from the config,
/// index width from the order unless overridden), runs the reader and the
/// power-method kernels through the two-dimensional dispatcher (or directly),
/// and reports the eigenvalue plus instrumentation. Both kernels reuse the
/// ids, which are computed once.
run_report execute_run(const run_config& config);

/// The stats report as a single-line JSON object.
std::string render_stats_json(const run_report& report);

namespace exit_codes {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int io = 2;
inline constexpr int parse = 3;
inline constexpr int numerical = 4;
inline constexpr int internal = 5;
} // namespace exit_codes

/// Maps the library's error types onto the process exit codes above.
int exit_code_for(const std::exception& error) noexcept;

} // namespace forid

#endif // FORID_DRIVER_HPP
