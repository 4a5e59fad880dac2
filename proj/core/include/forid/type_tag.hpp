// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#ifndef FORID_TYPE_TAG_HPP
#define FORID_TYPE_TAG_HPP

#include <cstdint>
#include <string_view>

namespace forid {

/// Symbolic identifier of a numeric element type. Tags compare by name;
/// their ordering is positional, given by the sequence that contains them.
struct type_tag {
    std::string_view name;

    friend constexpr bool operator==(type_tag lhs, type_tag rhs) noexcept {
        return lhs.name == rhs.name;
    }
};

/// Maps an element type to its tag. Specialize to register further types;
/// tag names must be distinct within any one sequence.
template <typename T>
struct tag_of;

template <> struct tag_of<float>         { static constexpr type_tag value{"f32"}; };
template <> struct tag_of<double>        { static constexpr type_tag value{"f64"}; };
template <> struct tag_of<std::uint8_t>  { static constexpr type_tag value{"u8"};  };
template <> struct tag_of<std::uint16_t> { static constexpr type_tag value{"u16"}; };
template <> struct tag_of<std::uint32_t> { static constexpr type_tag value{"u32"}; };
template <> struct tag_of<std::uint64_t> { static constexpr type_tag value{"u64"}; };

template <typename T>
constexpr type_tag type_tag_of() noexcept {
    return tag_of<T>::value;
}

} // namespace forid

#endif // FORID_TYPE_TAG_HPP
