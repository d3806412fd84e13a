// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <doctest.h>

#include "mdsc/matrix.hpp"
#include "oracles.hpp"

#define CHECK_ERRC(expr, errc)                         \
    do {                                               \
        try {                                          \
            (void)(expr);                              \
            FAIL_CHECK("expected mdsc::Error " #errc); \
        } catch (const mdsc::Error& e_) {              \
            CHECK_MESSAGE(e_.code() == (errc), std::string(e_.what()));                                                             \
        }                                              \
    } while (0)

inline oracle::Gf oracle_of(const mdsc::Field& f) { return {f.degree(), f.poly()}; }

inline oracle::Mat to_oracle(const mdsc::Matrix& m) {
    oracle::Mat out(m.rows(), std::vector<oracle::Elem>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

inline mdsc::Matrix random_matrix(const mdsc::FieldPtr& f, std::size_t rows, std::size_t cols, oracle::Rng& rng) {
    mdsc::Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rng.below(f->size());
    return m;
}
