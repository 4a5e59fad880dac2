// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#ifndef FORID_ERRORS_HPP
#define FORID_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forid {

/// A runtime id fell outside its sequence. Carries the 1-based dimension,
/// the offending id, and the length of the sequence that rejected it.
class invalid_id_error : public std::invalid_argument {
public:
    invalid_id_error(std::size_t dimension, int id, std::size_t sequence_length)
        : std::invalid_argument("invalid id " + std::to_string(id) + " for dimension " +
                                std::to_string(dimension) + " (sequence length " +
                                std::to_string(sequence_length) + ")"),
          dimension_(dimension),
          id_(id),
          sequence_length_(sequence_length) {}

    std::size_t dimension() const noexcept { return dimension_; }
    int id() const noexcept { return id_; }
    std::size_t sequence_length() const noexcept { return sequence_length_; }

private:
    std::size_t dimension_;
    int id_;
    std::size_t sequence_length_;
};

/// Unusable command-line input: unknown tokens, out-of-domain options.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input file could not be opened or read at the stream level.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed matrix file content. Base of the more specific parse failures.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class empty_file_error : public parse_error {
public:
    using parse_error::parse_error;
};

/// Header declares a non-square matrix.
class shape_error : public parse_error {
public:
    using parse_error::parse_error;
};

/// An entry's one-based index lies outside [1, n].
class range_error : public parse_error {
public:
    using parse_error::parse_error;
};

/// Fewer entries in the file than the header promised.
class truncation_error : public parse_error {
public:
    using parse_error::parse_error;
};

/// The iteration produced a zero or non-finite dominant component.
class numerical_breakdown_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace forid

#endif // FORID_ERRORS_HPP
