// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#ifndef FORID_SELECT_HPP
#define FORID_SELECT_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "forid/type_sequence.hpp"

namespace forid {

/// Width of the unsigned type used for index arrays. The enumerator value is
/// the bit count; the dispatch id is the position in `ind_types` below.
enum class index_width : unsigned { u8 = 8, u16 = 16, u32 = 32, u64 = 64 };

/// Floating-point precision of the value arrays. Dispatch ids are the
/// positions in `fp_types` below.
enum class float_precision { f32, f64 };

/// Canonical sequences of the demo kernels: ids produced by this module are
/// positions into these.
using fp_types = type_sequence<float, double>;
using ind_types = type_sequence<std::uint8_t, std::uint16_t, std::uint32_t, std::uint64_t>;

constexpr unsigned bits(index_width w) noexcept { return static_cast<unsigned>(w); }

constexpr int width_id(index_width w) noexcept {
    // log2(bits) - 3: positions 0..3 in ind_types.
    unsigned b = bits(w);
    int id = -3;
    while (b > 1) {
        b >>= 1;
        ++id;
    }
    return id;
}

constexpr index_width width_from_id(int id) {
    switch (id) {
    case 0: return index_width::u8;
    case 1: return index_width::u16;
    case 2: return index_width::u32;
    case 3: return index_width::u64;
    default: throw std::invalid_argument("index width id must be in [0, 3]");
    }
}

constexpr int precision_id(float_precision p) noexcept {
    return p == float_precision::f32 ? 0 : 1;
}

constexpr float_precision precision_from_id(int id) {
    switch (id) {
    case 0: return float_precision::f32;
    case 1: return float_precision::f64;
    default: throw std::invalid_argument("precision id must be 0 or 1");
    }
}

constexpr std::size_t precision_bytes(float_precision p) noexcept {
    return p == float_precision::f32 ? 4 : 8;
}

constexpr std::string_view precision_name(float_precision p) noexcept {
    return p == float_precision::f32 ? "single" : "double";
}

/// Smallest width in {8, 16, 32, 64} whose unsigned type can index an array
/// of `element_count` elements, i.e. the least w with element_count <= 2^w.
/// Throws std::domain_error when element_count is zero.
index_width min_index_width(std::uint64_t element_count);

/// Maps the explicit precision token ("single" or "double") to its kind.
/// Any other token raises usage_error.
float_precision precision_from_flag(std::string_view flag);

/// Ordered ladder of deferred conditions selecting into a sequence of length
/// n: the first true predicate at position k yields id k; if none fires the
/// id is n - 1. Holds n - 1 predicates.
class selection_ladder {
public:
    selection_ladder(std::size_t sequence_length, std::vector<std::function<bool()>> predicates);

    std::size_t sequence_length() const noexcept { return sequence_length_; }
    const std::vector<std::function<bool()>>& predicates() const noexcept { return predicates_; }

private:
    std::size_t sequence_length_;
    std::vector<std::function<bool()>> predicates_;
};

/// Evaluates the ladder in order, stopping at the first true predicate.
/// Predicates past the first true one are never evaluated.
std::size_t select_id(const selection_ladder& ladder);

/// The width ladder of the demo program: element_count <= 2^8, <= 2^16,
/// <= 2^32, selecting into ind_types. select_id of it equals
/// width_id(min_index_width(element_count)).
selection_ladder index_width_ladder(std::uint64_t element_count);

/// Invokes the (F, I) member of `kernel` chosen by `precision` and `width`
/// through explicit per-case calls, bypassing for_id. This is the classical
/// compile-time route the dispatcher is measured against.
template <typename Kernel>
void invoke_direct(float_precision precision, index_width width, Kernel& kernel) {
    if (precision == float_precision::f32) {
        switch (width) {
        case index_width::u8: kernel.template operator()<float, std::uint8_t>(); return;
        case index_width::u16: kernel.template operator()<float, std::uint16_t>(); return;
        case index_width::u32: kernel.template operator()<float, std::uint32_t>(); return;
        case index_width::u64: kernel.template operator()<float, std::uint64_t>(); return;
        }
    } else {
        switch (width) {
        case index_width::u8: kernel.template operator()<double, std::uint8_t>(); return;
        case index_width::u16: kernel.template operator()<double, std::uint16_t>(); return;
        case index_width::u32: kernel.template operator()<double, std::uint32_t>(); return;
        case index_width::u64: kernel.template operator()<double, std::uint64_t>(); return;
        }
    }
    throw std::invalid_argument("unrepresentable precision/width pair");
}

} // namespace forid

#endif // FORID_SELECT_HPP
