// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#include "forid/dispatch.hpp"

#include <stdexcept>

namespace forid {

std::uint64_t instance_count(std::span<const std::uint64_t> lengths) {
    std::uint64_t product = 1;
    for (std::uint64_t n : lengths) {
        if (n == 0)
            throw std::invalid_argument("sequence lengths must be at least 1");
        if (product > UINT64_MAX / n)
            throw std::overflow_error("instance count exceeds the 64-bit range");
        product *= n;
    }
    return product;
}

} // namespace forid
