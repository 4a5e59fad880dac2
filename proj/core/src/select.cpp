// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#include "forid/select.hpp"

#include <stdexcept>
#include <utility>

#include "forid/errors.hpp"

namespace forid {

index_width min_index_width(std::uint64_t element_count) {
    if (element_count == 0)
        throw std::domain_error("minimum index width is undefined for zero elements");
    if (element_count <= (std::uint64_t{1} << 8))
        return index_width::u8;
    if (element_count <= (std::uint64_t{1} << 16))
        return index_width::u16;
    if (element_count <= (std::uint64_t{1} << 32))
        return index_width::u32;
    return index_width::u64;
}

float_precision precision_from_flag(std::string_view flag) {
    if (flag == "double")
        return float_precision::f64;
    if (flag == "single")
        return float_precision::f32;
    throw usage_error("precision must be \"single\" or \"double\", got \"" + std::string(flag) +
                      "\"");
}

selection_ladder::selection_ladder(std::size_t sequence_length,
                                   std::vector<std::function<bool()>> predicates)
    : sequence_length_(sequence_length), predicates_(std::move(predicates)) {
    if (sequence_length_ == 0)
        throw std::invalid_argument("a selection ladder selects into a non-empty sequence");
    if (predicates_.size() + 1 != sequence_length_)
        throw std::invalid_argument("a ladder over a sequence of length n holds n - 1 predicates");
}

std::size_t select_id(const selection_ladder& ladder) {
    const auto& predicates = ladder.predicates();
    for (std::size_t k = 0; k < predicates.size(); ++k)
        if (predicates[k]())
            return k;
    return ladder.sequence_length() - 1; // otherwise-rule: the last position
}

selection_ladder index_width_ladder(std::uint64_t element_count) {
    std::vector<std::function<bool()>> predicates;
    for (unsigned shift : {8u, 16u, 32u})
        predicates.push_back(
            [element_count, shift] { return element_count <= (std::uint64_t{1} << shift); });
    return selection_ladder(ind_types::size, std::move(predicates));
}

} // namespace forid
