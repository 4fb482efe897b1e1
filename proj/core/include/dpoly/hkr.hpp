#pragma once

#include "dpoly/dtensor.hpp"
#include "dpoly/tensor_cohomology.hpp"

#include <map>
#include <vector>

namespace dpoly {

// Element of the exterior algebra on the canonical complement basis;
// terms keyed by strictly increasing index tuples.
struct ExteriorElement {
    int degree = 0;
    std::map<std::vector<int>, Rational> terms;
};

// Skew-symmetrization into the tensor complex:
//   b_{i1} ^ .. ^ b_{in}  |->  (1/n!) sum_sigma sgn(sigma) b_{sigma(1)} (x) .. (x) b_{sigma(n)}.
// Images are homogeneous of degree n and weight n.
DTensor hkr_map(const UEnv& env, const ExteriorElement& x);

struct HkrRow {
    int n = 0;
    bool cocycle_pass = true;     // d(HKR(basis)) = 0 for all basis elements
    bool independent_pass = true; // no nonzero combination of images is a coboundary
    long dim_h = -1;              // truncated-model cohomology at this degree
    long expected_binomial = 0;   // C(k, n)
};

struct HkrReport {
    TruncationSpec spec;
    std::vector<HkrRow> rows;
    bool pass = false;
};

// Chain-map half (images are exact cocycles, n <= min(N, k)) plus the
// class half (images span C(k,n) independent classes and the truncated
// cohomology dimension matches, n <= min(N-1, w-1, k)).
HkrReport hkr_check(const UEnv& env, const TruncationSpec& spec);

} // namespace dpoly
