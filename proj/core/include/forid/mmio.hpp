// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#ifndef FORID_MMIO_HPP
#define FORID_MMIO_HPP

#include <cstdint>
#include <istream>
#include <span>
#include <variant>
#include <vector>

#include "forid/errors.hpp"
#include "forid/select.hpp"

namespace forid {

/// Counts of a square symmetric coordinate-format file.
struct matrix_header {
    std::uint64_t order = 0;    // row count == column count
    std::uint64_t nonzeros = 0; // stored entries (one triangle)
};

/// Coordinate-format sparse matrix whose index and value element types were
/// fixed at dispatch time. The buffers are held behind a closed union; the
/// width/precision tags always describe the active alternatives, so a typed
/// view round-trips every element bit-exactly.
///
/// Stored indices are zero-based and < order. The file stores each symmetric
/// pair once; kernels mirror off-diagonal entries themselves. Immutable after
/// construction and safe to share read-only.
class coo_matrix {
public:
    template <typename I>
    using index_buffer = std::vector<I>;
    using index_storage = std::variant<index_buffer<std::uint8_t>, index_buffer<std::uint16_t>,
                                       index_buffer<std::uint32_t>, index_buffer<std::uint64_t>>;
    using value_storage = std::variant<std::vector<float>, std::vector<double>>;

    coo_matrix() = default;

    template <typename F, typename I>
    coo_matrix(matrix_header header, std::vector<I> rows, std::vector<I> cols,
               std::vector<F> values)
        : header_(header),
          width_(static_cast<index_width>(sizeof(I) * 8)),
          precision_(sizeof(F) == 4 ? float_precision::f32 : float_precision::f64),
          rows_(std::move(rows)),
          cols_(std::move(cols)),
          values_(std::move(values)) {
        const auto z = header_.nonzeros;
        if (std::get<std::vector<I>>(rows_).size() != z ||
            std::get<std::vector<I>>(cols_).size() != z ||
            std::get<std::vector<F>>(values_).size() != z)
            throw std::invalid_argument("coo_matrix buffers must hold exactly z elements");
    }

    const matrix_header& header() const noexcept { return header_; }
    std::uint64_t order() const noexcept { return header_.order; }
    std::uint64_t nonzeros() const noexcept { return header_.nonzeros; }
    index_width width() const noexcept { return width_; }
    float_precision precision() const noexcept { return precision_; }

    template <typename I>
    std::span<const I> row_indices() const {
        return std::get<std::vector<I>>(rows_);
    }
    template <typename I>
    std::span<const I> col_indices() const {
        return std::get<std::vector<I>>(cols_);
    }
    template <typename F>
    std::span<const F> values() const {
        return std::get<std::vector<F>>(values_);
    }

    /// Applies fn(rows, cols, values) with the spans typed per the stored
    /// width/precision.
    template <typename Fn>
    decltype(auto) visit(Fn&& fn) const {
        return std::visit(
            [&](const auto& rows, const auto& vals) -> decltype(auto) {
                const auto& cols = std::get<std::decay_t<decltype(rows)>>(cols_);
                return fn(std::span(rows.begin(), rows.end()), std::span(cols.begin(), cols.end()),
                          std::span(vals.begin(), vals.end()));
            },
            rows_, values_);
    }

private:
    matrix_header header_;
    index_width width_ = index_width::u8;
    float_precision precision_ = float_precision::f64;
    index_storage rows_;
    index_storage cols_;
    value_storage values_;
};

/// Consumes leading '%' comment lines and the "rows cols nnz" counts line,
/// leaving the stream at the first entry. Rejects non-square headers and
/// banners declaring complex or pattern payloads.
matrix_header read_header(std::istream& in);

namespace detail {

[[noreturn]] void throw_entry_read_failure(const std::istream& in, std::uint64_t entry);
void check_one_based_index(std::uint64_t value, std::uint64_t order, std::uint64_t entry);

} // namespace detail

/// Parses the header's z "i j value" triples with indices shifted to zero
/// base. Indices are extracted as wide integers and narrowed only after the
/// range check, so narrow index types never truncate file content.
template <typename F, typename I>
coo_matrix read_entries_typed(std::istream& in, matrix_header header) {
    if (bits(min_index_width(header.order)) > sizeof(I) * 8)
        throw std::invalid_argument("index type too narrow for the matrix order");
    const std::uint64_t z = header.nonzeros;
    std::vector<I> rows(z), cols(z);
    std::vector<F> values(z);
    for (std::uint64_t k = 0; k < z; ++k) {
        std::uint64_t i = 0, j = 0;
        F a{};
        if (!(in >> i)) detail::throw_entry_read_failure(in, k);
        if (!(in >> j)) detail::throw_entry_read_failure(in, k);
        if (!(in >> a)) detail::throw_entry_read_failure(in, k);
        detail::check_one_based_index(i, header.order, k);
        detail::check_one_based_index(j, header.order, k);
        rows[k] = static_cast<I>(i - 1); // 1- to 0-based shift
        cols[k] = static_cast<I>(j - 1);
        values[k] = a;
    }
    return coo_matrix(header, std::move(rows), std::move(cols), std::move(values));
}

/// Same as read_entries_typed with the element types picked by value.
/// Requires width wide enough to index `order` elements.
coo_matrix read_entries(std::istream& in, matrix_header header, index_width width,
                        float_precision precision);

/// Kernel family filling a coo_matrix from the stream left by read_header;
/// the (F, I) member is chosen by dispatch (or called directly).
class matrix_entry_reader {
public:
    matrix_entry_reader(std::istream& in, matrix_header header, coo_matrix& out)
        : in_(in), header_(header), out_(out) {}

    template <typename F, typename I>
    void operator()() {
        out_ = read_entries_typed<F, I>(in_, header_);
    }

private:
    std::istream& in_;
    matrix_header header_;
    coo_matrix& out_;
};

/// Bytes of the matrix buffers (two index arrays, one value array) plus the
/// two iteration vectors of length `order`. Throws std::overflow_error when
/// the total exceeds the 64-bit range.
std::uint64_t matrix_bytes(matrix_header header, index_width width, float_precision precision);

} // namespace forid

#endif // FORID_MMIO_HPP
