#pragma once

#include "dpoly/uea.hpp"

#include <map>
#include <string>
#include <vector>

namespace dpoly {

// Element of the tensor complex over the quotient coalgebra: a sum of
// n-fold tensors of complement PBW monomials. Keys are the n legs
// concatenated into one exponent vector of length degree*leg_width, so
// degree-0 elements are scalars keyed by the empty vector.
struct DTensor {
    int degree = 0;
    int leg_width = 0; // complement dimension k of the owning pair
    std::map<std::vector<int>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
};

using TensorKey = std::vector<int>;
// Output of the shuffle coproduct: (left key, right key) -> coefficient.
// Leg widths match the input tensor; degrees are key length / leg_width.
using TensorSplitSum = std::map<std::pair<TensorKey, TensorKey>, Rational>;

enum class AntipodeConvention { Paper, Standard };

struct TruncationSpec {
    int max_weight = 3; // cap on each leg's weight
    int max_degree = 3;
};

void dt_add(DTensor& t, const TensorKey& key, const Rational& c);
DTensor dt_scale(const DTensor& t, const Rational& c);
DTensor dt_sum(const DTensor& a, const DTensor& b);
bool dt_equal(const DTensor& a, const DTensor& b);

int key_weight(const TensorKey& key); // total of all leg weights
int tensor_weight(const DTensor& t);  // max over terms

DTensor unit_tensor(int leg_width, const Rational& r); // eta: scalar in degree 0
DTensor d1_to_tensor(const UEnv& env, const UEnv::D1Elem& p);
DTensor mono_tensor(int leg_width, const TensorKey& key);

// Concatenation product; degrees and weights add, scalars act as the unit.
DTensor cup(const DTensor& a, const DTensor& b);

// Cobar-type coboundary: outer unit insertions at both ends plus signed
// inner coproduct expansions,
//   d(p1(x)..(x)pn) = 1(x)p1..pn + sum_i (-1)^i p1..(coprod p_i)..pn
//                   + (-1)^{n+1} p1..pn(x)1.
// On degree 0 the two outer terms cancel, so d = 0 there.
DTensor differential(const UEnv& env, const DTensor& t);

// Signed sum over (i,j)-unshuffles of the legs.
TensorSplitSum shuffle_coproduct(const DTensor& t);

// Leg reversal with global sign (-1)^{n(n-1)/2} (Paper) or
// (-1)^{n(n+1)/2} (Standard; differs by (-1)^n).
DTensor antipode(const DTensor& t, AntipodeConvention conv);

// Counit of the operation table: coefficient of the all-weight-zero tensor
// of the element's own degree.
Rational counit(const DTensor& t);
// Counit in its chain-map role (projection onto degree 0); this is the
// degree-preserving component of `counit` and the one the Hopf axioms use.
Rational counit_chain(const DTensor& t);

// Leibniz extension of the D1 action across legs; X in h-coordinates.
DTensor act_tensor(const UEnv& env, const Vec& X, const DTensor& t);

// All degree-n tuples over d1_basis_up_to_weight(max_weight), ordered
// lexicographically leg by leg; requires n <= max_degree + 1.
std::vector<TensorKey> truncated_basis(const UEnv& env, const TruncationSpec& spec, int n);

std::string print_tensor(const UEnv& env, const DTensor& t);

} // namespace dpoly
