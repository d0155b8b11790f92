#pragma once

#include <string>
#include <vector>

#include "kvp/algebra.hpp"
#include "kvp/matrix.hpp"
#include "oracle.hpp"

namespace testing_support {

inline oracle::Table to_table(const kvp::BilinearStructure& mu) {
    oracle::Table t(mu.dim());
    for (std::size_t i = 0; i < mu.constants().size(); ++i) t.c[i] = mu.constants()[i].raw();
    return t;
}

inline oracle::Rows to_rows(const kvp::Matrix& m) {
    oracle::Rows out(m.rows(), oracle::Vec(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).raw();
    return out;
}

inline kvp::BilinearStructure family(long x, long y) {
    return kvp::plane_skew_structure(kvp::Rational(x), kvp::Rational(y));
}

inline std::string data_path(const std::string& name) { return std::string(KVP_TEST_DATA_DIR) + "/" + name; }

} // namespace testing_support
