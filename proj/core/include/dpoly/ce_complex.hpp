#pragma once

#include "dpoly/lie_pair.hpp"
#include "dpoly/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dpoly {

// Finite-dimensional module over the subalgebra h of a LiePair: one action
// matrix per h-basis vector. Flatness (action of a bracket = commutator of
// actions) is a checkable invariant, not assumed.
struct HModule {
    std::size_t dim = 0;
    std::vector<DenseMatrix> action; // indexed by h-basis index

    Vec act(std::size_t h_index, const Vec& v) const { return action[h_index].apply(v); }
};

bool hmodule_is_flat(const LiePair& pair, const HModule& mod);

HModule trivial_module(const LiePair& pair, std::size_t dim);
HModule quotient_module(const LiePair& pair); // g/h with the induced action
HModule dual_module(const HModule& mod);      // action by negative transpose
// Tensor product with Leibniz action A(x)I + I(x)B; basis e_i(x)f_j at
// index i*b.dim + j.
HModule tensor_module(const HModule& a, const HModule& b);
// End(V) = V (x) V*; basis E_pq at index p*dim + q acts by commutator.
HModule end_module(const HModule& mod);

// Cochain in degree p of the Chevalley-Eilenberg complex of h with values
// in an HModule: values on strictly increasing index tuples only, signs
// recovered by permutation parity on access.
struct CECochain {
    std::size_t degree = 0;
    std::map<std::vector<std::size_t>, Vec> values; // key: increasing h-indices

    bool is_zero() const;
};

// Value on an arbitrary tuple (permutation parity applied; repeated index
// gives zero).
Vec ce_evaluate(const CECochain& c, std::vector<std::size_t> tuple, std::size_t mod_dim);

// Standard CE differential
//   (dc)(X_0..X_p) = sum_i (-1)^i X_i . c(..X^_i..)
//                  + sum_{i<j} (-1)^{i+j} c([X_i,X_j], ..X^_i..X^_j..).
CECochain ce_differential(const LiePair& pair, const HModule& mod, const CECochain& c);

// Basis/coordinate plumbing for the spaces Lambda^p h* (x) M with the fixed
// ordering (increasing tuple, then module index).
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t m, std::size_t p);
std::size_t ce_space_dim(const LiePair& pair, const HModule& mod, std::size_t p);
Vec ce_coordinates(const LiePair& pair, const HModule& mod, const CECochain& c);
CECochain ce_from_coordinates(const LiePair& pair, const HModule& mod, std::size_t degree, const Vec& coords);
SparseMatrix ce_differential_matrix(const LiePair& pair, const HModule& mod, std::size_t p);

std::size_t ce_cohomology_dim(const LiePair& pair, const HModule& mod, std::size_t p);

// A (p-1)-cochain phi with d(phi) = c, or nullopt when c is not exact.
// Requires c to be a cocycle; the returned witness is re-verified exactly.
std::optional<CECochain> ce_coboundary_witness(const LiePair& pair, const HModule& mod, const CECochain& c);

} // namespace dpoly
