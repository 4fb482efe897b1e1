#pragma once

#include "dpoly/ce_complex.hpp"
#include "dpoly/lie_pair.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpoly {

// g-connection on g/h extending the flat h-action: one k x k matrix per
// g-basis direction, forced to the quotient action on h-directions.
struct Connection {
    std::vector<DenseMatrix> nabla; // indexed by original g-basis index
};

// h-directions from the quotient action; complement directions from the
// canonical-section convention nabla_b(c) = (1/2) class([b, c]).
Connection canonical_connection(const LiePair& pair);
// Complement directions prescribed explicitly, one k x k matrix per
// complement basis vector.
Connection canonical_connection(const LiePair& pair, const std::vector<DenseMatrix>& complement_params);
// Zero on all complement directions.
Connection flat_complement_connection(const LiePair& pair);

bool connection_extends_action(const LiePair& pair, const Connection& conn);

// R(x,y) = nabla_x nabla_y - nabla_y nabla_x - nabla_[x,y]; bilinear and
// antisymmetric, vanishes on h x h for extending connections.
DenseMatrix curvature(const LiePair& pair, const Connection& conn, const Vec& x, const Vec& y);

// The coefficient module (g/h)* (x) End(g/h) with its forced functorial
// action; basis index i*k^2 + p*k + q for b_i* (x) E_pq.
HModule atiyah_module(const LiePair& pair);

// The curvature read as a CE 1-cochain valued in atiyah_module. Certifies
// that the curvature kills h x h (lift-independence) and that the cochain
// is closed; failure of either signals an invalid connection and throws.
CECochain atiyah_cocycle(const LiePair& pair, const Connection& conn);

struct ClassResult {
    bool nonzero = false;
    std::optional<CECochain> witness; // degree-0 primitive when the class vanishes
};

ClassResult class_is_nonzero(const LiePair& pair, const Connection& conn);

struct IndependenceResult {
    bool ok = false;
    std::optional<CECochain> witness; // phi with d(phi) = R1 - R2
};

// Cohomologous-ness of the cocycles of two extending connections; a
// missing witness signals an implementation bug, reported not thrown.
IndependenceResult independence_check(const LiePair& pair, const Connection& c1, const Connection& c2);

} // namespace dpoly
