// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#include "forid/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

namespace forid {

namespace {

std::string to_lower(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return text;
}

// The banner is parsed leniently: only field words that this reader cannot
// honor are rejected; everything else is ignored.
void check_banner(const std::string& line) {
    if (line.rfind("%%", 0) != 0)
        return;
    std::istringstream words(line.substr(2));
    std::string word;
    while (words >> word) {
        const std::string lowered = to_lower(word);
        if (lowered == "complex" || lowered == "pattern")
            throw parse_error("unsupported matrix field \"" + lowered + "\"");
    }
}

} // namespace

matrix_header read_header(std::istream& in) {
    bool first_line = true;
    while (true) {
        const int next = in.peek();
        if (next == std::istream::traits_type::eof())
            throw empty_file_error("no matrix counts before end of file");
        if (next == '%') {
            std::string line;
            std::getline(in, line);
            if (first_line)
                check_banner(line);
            first_line = false;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(next))) {
            in.get();
            continue;
        }
        break;
    }

    std::uint64_t rows = 0, cols = 0, nonzeros = 0;
    if (!(in >> rows >> cols >> nonzeros)) {
        if (in.eof())
            throw empty_file_error("no matrix counts before end of file");
        throw parse_error("malformed matrix counts");
    }
    if (rows != cols)
        throw shape_error("matrix must be square, got " + std::to_string(rows) + " x " +
                          std::to_string(cols));
    if (rows == 0 || nonzeros == 0)
        throw parse_error("matrix counts must be positive");
    return matrix_header{rows, nonzeros};
}

namespace detail {

[[noreturn]] void throw_entry_read_failure(const std::istream& in, std::uint64_t entry) {
    if (in.eof())
        throw truncation_error("file ends before entry " + std::to_string(entry + 1));
    throw parse_error("malformed entry " + std::to_string(entry + 1));
}

void check_one_based_index(std::uint64_t value, std::uint64_t order, std::uint64_t entry) {
    if (value < 1 || value > order)
        throw range_error("entry " + std::to_string(entry + 1) + ": index " +
                          std::to_string(value) + " outside [1, " + std::to_string(order) + "]");
}

} // namespace detail

coo_matrix read_entries(std::istream& in, matrix_header header, index_width width,
                        float_precision precision) {
    coo_matrix matrix;
    matrix_entry_reader reader(in, header, matrix);
    invoke_direct(precision, width, reader);
    return matrix;
}

std::uint64_t matrix_bytes(matrix_header header, index_width width, float_precision precision) {
    const std::uint64_t index_bytes = bits(width) / 8;
    const std::uint64_t value_bytes = precision_bytes(precision);

    const auto checked_mul = [](std::uint64_t a, std::uint64_t b) {
        if (b != 0 && a > UINT64_MAX / b)
            throw std::overflow_error("matrix byte count exceeds the 64-bit range");
        return a * b;
    };
    const auto checked_add = [](std::uint64_t a, std::uint64_t b) {
        if (a > UINT64_MAX - b)
            throw std::overflow_error("matrix byte count exceeds the 64-bit range");
        return a + b;
    };

    // Two index arrays and one value array of z entries, plus the two
    // iteration vectors of length n.
    const std::uint64_t entries = checked_mul(header.nonzeros, 2 * index_bytes + value_bytes);
    const std::uint64_t vectors = checked_mul(checked_mul(header.order, 2), value_bytes);
    return checked_add(entries, vectors);
}

} // namespace forid
