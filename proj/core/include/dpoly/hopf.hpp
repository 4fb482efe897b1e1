#pragma once

#include "dpoly/dtensor.hpp"
#include "dpoly/tensor_cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpoly {

enum class ConventionMode { Paper, Standard, Auto };

std::string convention_name(AntipodeConvention conv);

struct AxiomResult {
    std::string name;
    std::string convention = "n/a";
    bool strict_pass = false;
    bool homotopy_searched = false;
    bool homotopy_witness_found = false;
    std::string counterexample; // first failing basis element/pair, if any
    std::string note;
};

struct HopfReport {
    TruncationSpec spec;
    std::string requested_convention;
    std::string selected_convention; // convention the verdict is taken under
    std::vector<AxiomResult> axioms;
    bool pass = false;
};

// Chain-level checks, exhaustive over truncated basis tensors within the
// degree bounds of `spec`. The unit/counit in the axiom composites are the
// chain maps (unit into degree 0, counit = projection onto degree 0); the
// per-degree weight-zero counit is exposed separately as `counit`.
AxiomResult check_d_squared(const UEnv& env, const TruncationSpec& spec);
AxiomResult check_cup_leibniz(const UEnv& env, const TruncationSpec& spec);
AxiomResult check_cup_assoc(const UEnv& env, const TruncationSpec& spec);
AxiomResult check_coassoc(const UEnv& env, const TruncationSpec& spec);
AxiomResult check_coproduct_chain_map(const UEnv& env, const TruncationSpec& spec);
AxiomResult check_unit_counit_chain_maps(const UEnv& env, const TruncationSpec& spec);
AxiomResult check_bialgebra_compat(const UEnv& env, const TruncationSpec& spec);
AxiomResult check_counit_axioms(const UEnv& env, const TruncationSpec& spec);
AxiomResult check_antipode(const UEnv& env, const TruncationSpec& spec, AntipodeConvention conv,
                           bool search_homotopy_on_failure);

// Full table. Under Auto the verdict convention is whichever antipode sign
// passes strictly, with the other sign's outcome recorded alongside.
// Policy: the reversal-only antipode sign ("paper") is recorded but never
// fails the report; it is a documented ambiguity, not a defect.
HopfReport hopf_axiom_report(const UEnv& env, const TruncationSpec& spec, ConventionMode mode);

} // namespace dpoly
