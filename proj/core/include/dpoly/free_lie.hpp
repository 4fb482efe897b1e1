#pragma once

#include "dpoly/dtensor.hpp"
#include "dpoly/tensor_cohomology.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dpoly {

// Graded commutator under the concatenation product; inputs must be
// homogeneous.
DTensor lie_bracket_tensor(const DTensor& u, const DTensor& v);

// Basis word of the free graded Lie algebra on an odd alphabet: either a
// Lyndon word with its standard bracketing, or the self-bracket [u,u] of
// an odd-length Lyndon word (squared = true). Tensor degree = leaf count.
struct LieWord {
    std::vector<int> word; // letters index the alphabet
    bool squared = false;
    int degree() const { return static_cast<int>(word.size()) * (squared ? 2 : 1); }
};

std::vector<std::vector<int>> lyndon_words(int alphabet, int length);
// Lyndon words of the given degree plus, in even degrees 2d with d odd,
// the self-brackets of degree-d Lyndon words. All generators sit in odd
// tensor degree 1, so these self-brackets are nonzero and needed; the
// basis property is certified by rank, not assumed.
std::vector<LieWord> super_lyndon_basis(int alphabet, int degree);

// Expansion in the tensor complex over the given alphabet of D1 monomials.
DTensor expand_lie_word(const std::vector<UEnv::D1Mono>& alphabet, int leg_width, const LieWord& w);

// Koszul-signed symmetrization (1/r!) sum_sigma sgn(sigma; parities)
// z_{sigma(1)} u .. u z_{sigma(r)} of homogeneous tensors.
DTensor symmetrize_cup(const std::vector<DTensor>& factors);

struct LyndonCertificate {
    int degree = 0;
    long count = 0;            // super-Lyndon words
    long rank_lyndon = 0;      // rank of their expansions
    long rank_with_nested = 0; // rank after adjoining all right-nested brackets
    bool pass = false;         // independent and spanning
};

struct IsoRow {
    int degree = 0;
    long sym_monomials = 0;
    long tensor_dim = 0;
    long rank = 0;
    bool iso_pass = false;
};

struct IsoReport {
    TruncationSpec spec;
    std::vector<LyndonCertificate> certificates;
    std::vector<IsoRow> rows;
    bool pass = false;
};

// Certifies the symmetrization isomorphism degreewise: the Koszul-signed
// images of all symmetric monomials in the super-Lyndon basis span the
// full tensor space and are independent (rank = count = |V|^n).
IsoReport verify_I_iso(const UEnv& env, const TruncationSpec& spec);

struct DStabilityRow {
    int degree = 0;
    std::string word;
    bool member = false; // d(expansion) lies in the span of the next degree's basis
};

struct DStabilityReport {
    TruncationSpec spec;
    std::uint64_t seed = 0;
    std::vector<DStabilityRow> rows;
    long chain_map_samples = 0;
    bool chain_map_pass = false;
    bool pass = false;
};

// d-stability of the free Lie subalgebra within the truncation, plus the
// chain-map identity d[u,v] = [du,v] + (-1)^{|u|}[u,dv] on seeded samples.
DStabilityReport d_stability_check(const UEnv& env, const TruncationSpec& spec, std::uint64_t seed);

// Canonical-section embedding of a quotient class as a weight-one element.
UEnv::D1Elem beta(const UEnv& env, const Vec& q);

struct CompatibilityReport {
    bool identity_i_pass = false;
    std::string identity_i_counterexample;
    int sign = 0;               // the global sign of the second identity
    bool sign_determined = false; // false when every residual vanished
    bool identity_ii_pass = false;
    std::string identity_ii_counterexample;
    bool pass = false;
};

// Chain-level content of the bracket-compatibility diagram, with
// s(b1 . b2) = (1/2) reduce(lift(b1) lift(b2) + lift(b2) lift(b1)):
//  (i)  d(s(b1 . b2)) = -[beta(b1), beta(b2)] for all complement pairs;
//  (ii) act(X, s(b1 . b2)) - s(X.(b1 . b2)) = sign * beta(R(X)(b1)(b2))
//       for one global sign, R the curvature of the zero-parameter
//       connection.
CompatibilityReport bracket_compatibility_check(const UEnv& env, const TruncationSpec& spec);

} // namespace dpoly
