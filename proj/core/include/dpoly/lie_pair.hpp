#pragma once

#include "dpoly/linalg.hpp"
#include "dpoly/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dpoly {

// A violated structural constraint, reported with the indices involved and
// the exact nonzero defect.
struct Violation {
    enum class Kind { Antisymmetry, Jacobi, SubalgebraClosure };
    Kind kind;
    std::vector<std::size_t> indices; // (i,j[,k]) basis indices, 0-based
    std::string detail;               // human-readable defect description
};

std::string violation_to_string(const Violation& v);

struct PairValidation;

// Structure-constant table of a finite-dimensional Lie algebra g over Q
// together with a distinguished subalgebra h spanned by the first
// `dim_h` basis vectors (adapted basis). The anchor of the general theory
// is identically zero here and is recorded as such.
class LiePair {
public:
    // Validates antisymmetry, the Jacobi identity on all basis triples and
    // closure of the leading block. On failure the pair is absent and the
    // result lists every broken constraint.
    static PairValidation validate(std::size_t dim_g, std::size_t dim_h,
                                   const std::vector<std::vector<Vec>>& structure_constants,
                                   std::vector<std::string> basis_names = {});

    std::size_t dim_g() const { return dim_g_; }
    std::size_t dim_h() const { return dim_h_; }
    std::size_t dim_quotient() const { return dim_g_ - dim_h_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    bool anchor_is_zero() const { return true; } // point base: fixed

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return sc_[i][j][k]; }

    // [x, y] for coordinate vectors of length dim_g.
    Vec bracket(const Vec& x, const Vec& y) const;

    // Class of [X, q~] in g/h for X supported on h and q a complement
    // coordinate vector (length dim_g - dim_h); independent of the lift of q
    // because h is closed under the bracket.
    Vec quotient_action(const Vec& X, const Vec& q) const;

    // Matrix of quotient_action(x_h_index, -) on the canonical complement
    // basis images; columns index the argument.
    DenseMatrix quotient_action_matrix(std::size_t h_index) const;

private:
    LiePair() = default;
    std::size_t dim_g_ = 0, dim_h_ = 0;
    std::vector<std::vector<Vec>> sc_; // sc_[i][j][k]
    std::vector<std::string> names_;
};

struct PairValidation {
    std::optional<LiePair> pair;
    std::vector<Violation> violations;
    bool ok() const { return pair.has_value(); }
};

// Lie-pair JSON file format:
//   { "dim": n, "subalgebra_dim": m, "basis": ["h","e","f"],
//     "brackets": [ {"i": 0, "j": 1, "coeffs": ["0","2","0"]}, ... ] }
// Entries require i < j; omitted pairs have zero bracket. Rationals are
// "p/q" strings with "/q" omitted when q = 1.
//
// Throws std::invalid_argument / std::runtime_error on malformed input
// (I/O and format problems). Mathematical violations are returned in the
// ValidationResult, not thrown.
PairValidation load_lie_pair_file(const std::string& path);
PairValidation parse_lie_pair_json(const std::string& text);

} // namespace dpoly
