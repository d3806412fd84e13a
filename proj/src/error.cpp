// SPDX-License-Identifier: Apache-2.0
#include "mdsc/error.hpp"

namespace mdsc {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_degree: return "invalid_degree";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::reducible_polynomial: return "reducible_polynomial";
    case Errc::zero_inverse: return "zero_inverse";
    case Errc::empty_row: return "empty_row";
    case Errc::not_power_of_two: return "not_power_of_two";
    case Errc::type1_inner_row: return "type1_inner_row";
    case Errc::parameter_domain: return "parameter_domain";
    case Errc::singular_generator: return "singular_generator";
    case Errc::singular_matrix: return "singular_matrix";
    case Errc::non_square: return "non_square";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::duplicate_index: return "duplicate_index";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::odd_order: return "odd_order";
    case Errc::not_involutory: return "not_involutory";
    case Errc::singular_block: return "singular_block";
    case Errc::not_hadamard: return "not_hadamard";
    case Errc::degenerate_input: return "degenerate_input";
    case Errc::unsupported_method: return "unsupported_method";
    case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

} // namespace mdsc
