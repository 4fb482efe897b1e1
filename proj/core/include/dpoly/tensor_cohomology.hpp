#pragma once

#include "dpoly/dtensor.hpp"
#include "dpoly/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dpoly {

// Coboundary, cup, coproduct, antipode and the h-action all preserve the
// total weight of a tensor and never raise any leg weight, so the
// truncated model splits into independent weight slices. Slices of total
// weight <= max_weight coincide with the corresponding slices of the full
// complex; heavier slices exist in the model but their kernels pick up
// boundaries of excluded generators, so cohomology is reported on the
// faithful range only.

// Degree-n tuples with every leg weight <= leg_cap and total weight equal
// to `total`, ordered leg by leg in graded-lex order.
std::vector<TensorKey> weight_slice_basis(const UEnv& env, int n, int total, int leg_cap);

// Matrix of the coboundary from the (degree n, weight `total`) slice to the
// (degree n+1, weight `total`) slice, leg weights capped at leg_cap.
SparseMatrix differential_slice_matrix(const UEnv& env, int n, int total, int leg_cap);

struct CohomologyRow {
    int degree = 0;
    long dim_space = 0; // dimension of the faithful (weight <= max_weight) part
    long dim_ker = 0;
    long dim_im = 0; // rank of the incoming coboundary
    long dim_h = 0;
};

struct CohomologyReport {
    TruncationSpec spec;
    std::vector<CohomologyRow> rows; // degrees 0..max_degree
};

CohomologyReport cohomology_report(const UEnv& env, const TruncationSpec& spec);

// A primitive Q inside the truncated model with dQ = c, or nullopt.
// Requires c to be a cocycle lying inside the truncation; the witness is
// re-verified exactly before being returned.
std::optional<DTensor> coboundary_witness_dpoly(const UEnv& env, const TruncationSpec& spec, const DTensor& c);

} // namespace dpoly
