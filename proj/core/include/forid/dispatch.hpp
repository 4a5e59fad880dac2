// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#ifndef FORID_DISPATCH_HPP
#define FORID_DISPATCH_HPP

#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <vector>

#include "forid/errors.hpp"
#include "forid/type_sequence.hpp"

namespace forid {

/// Highest supported number of dimensions (independent type sequences).
///
/// Raising it is mechanical: bump this constant. The resolver below is a
/// single pack-accumulating template, so no further definitions are needed;
/// only the number of instantiations grows (one kernel member per element of
/// the Cartesian product, as always).
inline constexpr std::size_t max_dimensions = 4;

/// Instrumentation filled by the counting `for_id` overload.
///
/// After a successful dispatch: comparisons == sum over dimensions of
/// (id_i + 1), and `resolved` holds the selected tag per dimension. After a
/// failed dispatch in dimension i: comparisons == sum over j < i of
/// (id_j + 1) plus n_i, and `resolved` is empty.
struct dispatch_stats {
    std::uint64_t comparisons = 0;
    std::vector<type_tag> resolved;
    std::chrono::nanoseconds resolve_duration{0};
};

namespace detail {

template <typename... Ts>
struct pack {};

struct null_recorder {
    static constexpr void on_begin() noexcept {}
    static constexpr void on_compare() noexcept {}
    static constexpr void on_resolve(type_tag) noexcept {}
    static constexpr void on_invoke() noexcept {}
    static constexpr void on_fail() noexcept {}
};

class stats_recorder {
public:
    explicit stats_recorder(dispatch_stats& stats) : stats_(stats) {}

    void on_begin() {
        stats_ = dispatch_stats{};
        start_ = std::chrono::steady_clock::now();
    }
    void on_compare() { ++stats_.comparisons; }
    void on_resolve(type_tag tag) { stats_.resolved.push_back(tag); }
    void on_invoke() {
        // resolve_duration covers everything up to handing control to the member.
        stats_.resolve_duration = std::chrono::steady_clock::now() - start_;
    }
    void on_fail() { stats_.resolved.clear(); }

private:
    dispatch_stats& stats_;
    std::chrono::steady_clock::time_point start_{};
};

// Resolves the remaining sequences against their ids, front first, carrying
// the already-resolved element types in `Resolved`. Scanning a sequence walks
// its positions in ascending order; each position costs one id comparison.
template <typename Recorder, typename Remaining, typename Resolved>
struct resolver;

// All dimensions resolved: invoke the one member of the kernel family that
// is specialized for the accumulated types.
template <typename Recorder, typename... Resolved>
struct resolver<Recorder, pack<>, pack<Resolved...>> {
    template <typename Kernel>
    static void run(Kernel& kernel, Recorder& recorder) {
        recorder.on_invoke();
        kernel.template operator()<Resolved...>();
    }
};

template <typename Recorder, typename Seq, typename... Rest, typename... Resolved>
struct resolver<Recorder, pack<Seq, Rest...>, pack<Resolved...>> {
    static constexpr std::size_t dimension = sizeof...(Resolved) + 1; // 1-based

    template <std::size_t Pos = 0, typename Kernel, typename... Ids>
    static void run(Kernel& kernel, Recorder& recorder, int id, Ids... rest) {
        recorder.on_compare();
        if (static_cast<int>(Pos) == id) {
            using element = sequence_element_t<Pos, Seq>;
            recorder.on_resolve(type_tag_of<element>());
            resolver<Recorder, pack<Rest...>, pack<Resolved..., element>>::run(kernel, recorder,
                                                                               rest...);
        } else if constexpr (Pos + 1 < Seq::size) {
            run<Pos + 1>(kernel, recorder, id, rest...);
        } else {
            recorder.on_fail();
            throw invalid_id_error(dimension, id, Seq::size);
        }
    }
};

template <typename... Seqs, typename Recorder, typename Kernel, typename... Ids>
void dispatch(Recorder& recorder, Kernel& kernel, Ids... ids) {
    recorder.on_begin();
    resolver<Recorder, pack<Seqs...>, pack<>>::run(kernel, recorder, static_cast<int>(ids)...);
}

} // namespace detail

/// Invokes the one member of `kernel` selected by the zero-based `ids`, one
/// id per type sequence. Resolution walks the dimensions in ascending order
/// and scans each sequence from position 0 upward, so a successful dispatch
/// costs exactly sum(id_i + 1) id comparisons — linear in the sequence
/// lengths, never the size of the Cartesian product.
///
/// The kernel is any object with a templated call operator taking
/// sizeof...(Seqs) type parameters and no value arguments:
///
///     struct kernel {
///         template <typename F, typename I>
///         void operator()();
///     };
///     for_id<type_sequence<float, double>,
///            type_sequence<std::uint8_t, std::uint16_t>>(k, fp_id, ind_id);
///
/// Every member of the product is instantiated at compile time; the ids pick
/// one at run time. An id outside [0, n_i) raises invalid_id_error naming the
/// first offending dimension; later dimensions are not examined and no member
/// runs.
///
/// Resolution is pure and reentrant: concurrent dispatches are safe provided
/// each call uses its own stats sink and the kernel's captured state
/// tolerates the concurrency the caller imposes.
template <typename... Seqs, typename Kernel, typename... Ids>
    requires(sizeof...(Seqs) >= 1 && sizeof...(Seqs) == sizeof...(Ids) &&
             sizeof...(Seqs) <= max_dimensions && (std::is_convertible_v<Ids, int> && ...))
void for_id(Kernel& kernel, Ids... ids) {
    detail::null_recorder recorder;
    detail::dispatch<Seqs...>(recorder, kernel, ids...);
}

/// Counting overload: like the above, but fills `stats`. The non-counting
/// overload compiles the bookkeeping out entirely.
template <typename... Seqs, typename Kernel, typename... Ids>
    requires(sizeof...(Seqs) >= 1 && sizeof...(Seqs) == sizeof...(Ids) &&
             sizeof...(Seqs) <= max_dimensions && (std::is_convertible_v<Ids, int> && ...))
void for_id(dispatch_stats& stats, Kernel& kernel, Ids... ids) {
    detail::stats_recorder recorder(stats);
    detail::dispatch<Seqs...>(recorder, kernel, ids...);
}

/// Number of kernel members a d-dimensional family owns: the product of the
/// sequence lengths. Throws std::overflow_error if the product exceeds the
/// 64-bit count range and std::invalid_argument on a zero length.
std::uint64_t instance_count(std::span<const std::uint64_t> lengths);

inline std::uint64_t instance_count(std::initializer_list<std::uint64_t> lengths) {
    return instance_count(std::span<const std::uint64_t>(lengths.begin(), lengths.size()));
}

} // namespace forid

#endif // FORID_DISPATCH_HPP
