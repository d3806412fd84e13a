// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mdsc {

enum class Errc {
    invalid_degree,
    degree_mismatch,
    reducible_polynomial,
    zero_inverse,
    empty_row,
    not_power_of_two,
    type1_inner_row,
    parameter_domain,
    singular_generator,
    singular_matrix,
    non_square,
    dimension_mismatch,
    field_mismatch,
    index_out_of_range,
    duplicate_index,
    invalid_argument,
    budget_exceeded,
    odd_order,
    not_involutory,
    singular_block,
    not_hadamard,
    degenerate_input,
    unsupported_method,
    parse_error,
};

const char* errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// front ends can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace mdsc
