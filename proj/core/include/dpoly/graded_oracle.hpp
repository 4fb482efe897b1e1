#pragma once

#include "dpoly/linalg.hpp"

#include <vector>

namespace dpoly {

// Brute-force Betti numbers of the cobar-type complex of the symmetric
// coalgebra on `k` weight-one generators (binomial coproduct), computed
// per (total weight, degree) slice with no truncation. Written directly
// against exponent vectors, independent of the PBW/tensor machinery, so
// it can serve as a second route for the cohomology table.
struct GradedBettiRow {
    int weight = 0;
    int degree = 0;
    long dim_h = 0;
};

struct GradedBettiTable {
    int k = 0;
    std::vector<GradedBettiRow> rows; // weight 0..w, degree 0..N-1
};

GradedBettiTable graded_oracle_betti(int k, int max_weight, int max_degree);

} // namespace dpoly
