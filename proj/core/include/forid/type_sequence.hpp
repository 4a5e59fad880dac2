// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#ifndef FORID_TYPE_SEQUENCE_HPP
#define FORID_TYPE_SEQUENCE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <type_traits>

#include "forid/type_tag.hpp"

namespace forid {

namespace detail {

template <typename... Ts>
struct all_distinct : std::true_type {};

template <typename T, typename... Rest>
struct all_distinct<T, Rest...>
    : std::bool_constant<(!std::is_same_v<T, Rest> && ...) && all_distinct<Rest...>::value> {};

} // namespace detail

/// Ordered, duplicate-free list of element types. Each position carries the
/// type's tag, so the sequence is inspectable at run time through `tags`.
template <typename... Ts>
struct type_sequence {
    static_assert(sizeof...(Ts) >= 1, "a type sequence holds at least one type");
    static_assert(detail::all_distinct<Ts...>::value,
                  "duplicate types in a sequence make the id-to-type mapping ambiguous");

    static constexpr std::size_t size = sizeof...(Ts);
    static constexpr std::array<type_tag, size> tags{type_tag_of<Ts>()...};

    using element_tuple = std::tuple<Ts...>;
};

template <std::size_t Pos, typename Seq>
using sequence_element_t = std::tuple_element_t<Pos, typename Seq::element_tuple>;

/// Zero-based position of the first occurrence of `tag`, or nullopt.
constexpr std::optional<std::size_t> index_of(std::span<const type_tag> sequence_tags,
                                              type_tag tag) noexcept {
    for (std::size_t pos = 0; pos < sequence_tags.size(); ++pos)
        if (sequence_tags[pos] == tag)
            return pos;
    return std::nullopt;
}

} // namespace forid

#endif // FORID_TYPE_SEQUENCE_HPP
