#include "dpoly/reports.hpp"

#include <random>
#include <sstream>

namespace dpoly {

AtiyahReport atiyah_report(const LiePair& pair, std::uint64_t seed, int independence_runs)
{
    AtiyahReport report;
    const std::size_t k = pair.dim_quotient();

    Connection conn = canonical_connection(pair);
    CECochain cocycle;
    try {
        cocycle = atiyah_cocycle(pair, conn);
        report.is_cocycle = true;
    } catch (const std::invalid_argument&) {
        report.is_cocycle = false;
        return report;
    }

    nlohmann::json table = nlohmann::json::array();
    std::ostringstream text;
    HModule mod = atiyah_module(pair);
    for (std::size_t x = 0; x < pair.dim_h(); ++x) {
        Vec value = ce_evaluate(cocycle, {x}, mod.dim);
        for (std::size_t i = 0; i < k; ++i) {
            nlohmann::json entry;
            entry["X"] = pair.basis_names()[x];
            entry["arg"] = pair.basis_names()[pair.dim_h() + i];
            nlohmann::json matrix = nlohmann::json::array();
            for (std::size_t p = 0; p < k; ++p) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t q = 0; q < k; ++q)
                    row.push_back(rational_to_string(value[i * k * k + p * k + q]));
                matrix.push_back(row);
            }
            entry["matrix"] = matrix;
            table.push_back(entry);
        }
    }
    report.cocycle_json = table;
    report.cocycle_table = table.dump();

    ClassResult cls = class_is_nonzero(pair, conn);
    report.class_nonzero = cls.nonzero;
    report.witness_present = cls.witness.has_value();
    report.h1_dim = static_cast<long>(ce_cohomology_dim(pair, mod, 1));

    std::mt19937_64 rng(seed);
    report.independence_runs = independence_runs;
    for (int run = 0; run < independence_runs; ++run) {
        std::vector<DenseMatrix> params;
        for (std::size_t i = 0; i < k; ++i) {
            DenseMatrix m(k, k);
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t q = 0; q < k; ++q)
                    m.at(p, q) = Rational(static_cast<long>(rng() % 7) - 3);
            params.push_back(m);
        }
        Connection other = canonical_connection(pair, params);
        IndependenceResult ind = independence_check(pair, conn, other);
        // also the class value must not depend on the parameters
        ClassResult other_cls = class_is_nonzero(pair, other);
        if (ind.ok && other_cls.nonzero == cls.nonzero)
            ++report.independence_passes;
    }

    report.pass = report.is_cocycle && report.independence_passes == report.independence_runs;
    return report;
}

CohomologySuite cohomology_suite(const UEnv& env, const TruncationSpec& spec)
{
    CohomologySuite suite;
    suite.model = cohomology_report(env, spec);
    suite.oracle = graded_oracle_betti(static_cast<int>(env.k()), spec.max_weight, spec.max_degree);

    suite.comparison_pass = true;
    const int k = static_cast<int>(env.k());
    const int safe = std::min(spec.max_degree - 1, spec.max_weight - 1);
    for (int n = 0; n <= safe; ++n) {
        long oracle_sum = 0;
        for (const auto& row : suite.oracle.rows)
            if (row.degree == n)
                oracle_sum += row.dim_h;
        long binom = 1;
        for (int i = 0; i < n; ++i)
            binom = binom * (k - i) / (i + 1);
        if (n > k)
            binom = 0;
        const long model_dim = suite.model.rows[static_cast<std::size_t>(n)].dim_h;
        if (model_dim != oracle_sum || model_dim != binom)
            suite.comparison_pass = false;
    }
    return suite;
}

nlohmann::json to_json(const PairValidation& v)
{
    nlohmann::json j;
    j["valid"] = v.ok();
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& viol : v.violations) {
        nlohmann::json entry;
        switch (viol.kind) {
        case Violation::Kind::Antisymmetry:
            entry["kind"] = "antisymmetry";
            break;
        case Violation::Kind::Jacobi:
            entry["kind"] = "jacobi";
            break;
        case Violation::Kind::SubalgebraClosure:
            entry["kind"] = "subalgebra_closure";
            break;
        }
        entry["indices"] = viol.indices;
        entry["detail"] = viol.detail;
        violations.push_back(entry);
    }
    j["violations"] = violations;
    if (v.ok()) {
        j["dim"] = v.pair->dim_g();
        j["subalgebra_dim"] = v.pair->dim_h();
    }
    return j;
}

nlohmann::json to_json(const CohomologySuite& s)
{
    nlohmann::json j;
    j["max_weight"] = s.model.spec.max_weight;
    j["max_degree"] = s.model.spec.max_degree;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : s.model.rows) {
        nlohmann::json r;
        r["degree"] = row.degree;
        r["dim_space"] = row.dim_space;
        r["dim_ker"] = row.dim_ker;
        r["dim_im"] = row.dim_im;
        r["dim_H"] = row.dim_h;
        rows.push_back(r);
    }
    j["table"] = rows;
    nlohmann::json oracle = nlohmann::json::array();
    for (const auto& row : s.oracle.rows) {
        nlohmann::json r;
        r["weight"] = row.weight;
        r["degree"] = row.degree;
        r["dim_H"] = row.dim_h;
        oracle.push_back(r);
    }
    j["graded_oracle"] = oracle;
    j["comparison_pass"] = s.comparison_pass;
    return j;
}

nlohmann::json to_json(const HopfReport& r)
{
    nlohmann::json j;
    j["max_weight"] = r.spec.max_weight;
    j["max_degree"] = r.spec.max_degree;
    j["requested_convention"] = r.requested_convention;
    j["selected_convention"] = r.selected_convention;
    nlohmann::json axioms = nlohmann::json::array();
    for (const auto& a : r.axioms) {
        nlohmann::json e;
        e["name"] = a.name;
        e["convention"] = a.convention;
        e["strict_pass"] = a.strict_pass;
        e["homotopy_witness_found"] = a.homotopy_witness_found;
        if (a.homotopy_searched)
            e["homotopy_searched"] = true;
        if (!a.counterexample.empty())
            e["counterexample"] = a.counterexample;
        if (!a.note.empty())
            e["note"] = a.note;
        axioms.push_back(e);
    }
    j["axioms"] = axioms;
    j["pass"] = r.pass;
    return j;
}

nlohmann::json to_json(const HkrReport& r)
{
    nlohmann::json j;
    j["max_weight"] = r.spec.max_weight;
    j["max_degree"] = r.spec.max_degree;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json e;
        e["n"] = row.n;
        e["cocycle_pass"] = row.cocycle_pass;
        e["independent_pass"] = row.independent_pass;
        e["dim_H"] = row.dim_h;
        e["expected_binomial"] = row.expected_binomial;
        rows.push_back(e);
    }
    j["rows"] = rows;
    j["pass"] = r.pass;
    return j;
}

nlohmann::json to_json(const IsoReport& r)
{
    nlohmann::json j;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json e;
        e["degree"] = row.degree;
        e["sym_monomials"] = row.sym_monomials;
        e["tensor_dim"] = row.tensor_dim;
        e["rank"] = row.rank;
        e["iso_pass"] = row.iso_pass;
        rows.push_back(e);
    }
    j["degrees"] = rows;
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : r.certificates) {
        nlohmann::json e;
        e["degree"] = c.degree;
        e["count"] = c.count;
        e["rank_lyndon"] = c.rank_lyndon;
        e["rank_with_nested"] = c.rank_with_nested;
        e["pass"] = c.pass;
        certs.push_back(e);
    }
    j["lyndon_certificates"] = certs;
    j["pass"] = r.pass;
    return j;
}

nlohmann::json to_json(const DStabilityReport& r)
{
    nlohmann::json j;
    j["seed"] = r.seed;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json e;
        e["degree"] = row.degree;
        e["word"] = row.word;
        e["member"] = row.member;
        rows.push_back(e);
    }
    j["words"] = rows;
    j["chain_map_samples"] = r.chain_map_samples;
    j["chain_map_pass"] = r.chain_map_pass;
    j["pass"] = r.pass;
    return j;
}

nlohmann::json to_json(const CompatibilityReport& r)
{
    nlohmann::json j;
    nlohmann::json id1;
    id1["identity"] = "d_of_s_equals_minus_bracket";
    id1["residual_zero"] = r.identity_i_pass;
    if (!r.identity_i_counterexample.empty())
        id1["counterexample"] = r.identity_i_counterexample;
    nlohmann::json id2;
    id2["identity"] = "equivariance_defect_matches_curvature";
    id2["sign"] = r.sign;
    id2["sign_determined"] = r.sign_determined;
    id2["residual_zero"] = r.identity_ii_pass;
    if (!r.identity_ii_counterexample.empty())
        id2["counterexample"] = r.identity_ii_counterexample;
    j["identities"] = nlohmann::json::array({id1, id2});
    j["pass"] = r.pass;
    return j;
}

nlohmann::json to_json(const AtiyahReport& r)
{
    nlohmann::json j;
    j["cocycle"] = r.cocycle_json;
    j["is_cocycle"] = r.is_cocycle;
    j["class_nonzero"] = r.class_nonzero;
    j["witness"] = r.witness_present ? "present" : "absent";
    j["dim_H1"] = r.h1_dim;
    j["independence_runs"] = r.independence_runs;
    j["independence_passes"] = r.independence_passes;
    j["pass"] = r.pass;
    return j;
}

namespace {

void render(const nlohmann::json& j, std::ostringstream& os, int depth)
{
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << pad << it.key() << ":\n";
                render(it.value(), os, depth + 1);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_object() || item.is_array()) {
                os << pad << "-\n";
                render(item, os, depth + 1);
            } else {
                os << pad << "- " << item.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

} // namespace

std::string to_text(const nlohmann::json& report, int indent)
{
    std::ostringstream os;
    render(report, os, indent);
    return os.str();
}

} // namespace dpoly
