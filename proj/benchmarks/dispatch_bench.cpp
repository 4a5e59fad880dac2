// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstdint>
#include <sstream>
#include <vector>

#include "forid/dispatch.hpp"
#include "forid/eig.hpp"
#include "forid/mmio.hpp"
#include "forid/select.hpp"

namespace {

using forid::fp_types;
using forid::ind_types;

// Minimal kernel family: the benchmarks time how it is entered, not what it does.
struct sink_kernel {
    std::uint64_t hits = 0;

    template <typename F, typename I>
    void operator()() {
        hits += sizeof(F) + sizeof(I);
    }
};

void direct_invocation(benchmark::State& state) {
    sink_kernel kernel;
    for (auto _ : state) {
        kernel.template operator()<double, std::uint32_t>();
        benchmark::DoNotOptimize(kernel.hits);
    }
}

// Ids cycle per iteration so the resolution branching cannot be folded away.
void for_id_invocation(benchmark::State& state) {
    sink_kernel kernel;
    std::uint64_t i = 0;
    for (auto _ : state) {
        const int fp = static_cast<int>(i & 1);
        const int ind = static_cast<int>((i >> 1) & 3);
        forid::for_id<fp_types, ind_types>(kernel, fp, ind);
        ++i;
        benchmark::DoNotOptimize(kernel.hits);
    }
}

void for_id_invocation_counted(benchmark::State& state) {
    sink_kernel kernel;
    forid::dispatch_stats stats;
    std::uint64_t i = 0;
    for (auto _ : state) {
        const int fp = static_cast<int>(i & 1);
        const int ind = static_cast<int>((i >> 1) & 3);
        forid::for_id<fp_types, ind_types>(stats, kernel, fp, ind);
        ++i;
        benchmark::DoNotOptimize(stats.comparisons);
    }
}

forid::coo_matrix banded_matrix(std::uint64_t order) {
    std::ostringstream text;
    text << order << " " << order << " " << 2 * order - 1 << "\n";
    for (std::uint64_t r = 1; r <= order; ++r)
        text << r << " " << r << " 4.0\n";
    for (std::uint64_t r = 2; r <= order; ++r)
        text << r << " " << r - 1 << " 1.0\n";
    std::istringstream in(text.str());
    const forid::matrix_header header = forid::read_header(in);
    return forid::read_entries(in, header, forid::min_index_width(order),
                               forid::float_precision::f64);
}

void power_method_application(benchmark::State& state) {
    const auto order = static_cast<std::uint64_t>(state.range(0));
    const forid::coo_matrix matrix = banded_matrix(order);
    for (auto _ : state) {
        forid::power_method_result result;
        forid::power_method_kernel kernel(matrix, {10}, result);
        forid::for_id<fp_types, ind_types>(kernel, 1,
                                           forid::width_id(forid::min_index_width(order)));
        benchmark::DoNotOptimize(result.lambda);
    }
    state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(direct_invocation);
BENCHMARK(for_id_invocation);
BENCHMARK(for_id_invocation_counted);
BENCHMARK(power_method_application)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

BENCHMARK_MAIN();
