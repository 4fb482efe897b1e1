#pragma once

#include "dpoly/atiyah.hpp"
#include "dpoly/free_lie.hpp"
#include "dpoly/graded_oracle.hpp"
#include "dpoly/hkr.hpp"
#include "dpoly/hopf.hpp"
#include "dpoly/lie_pair.hpp"
#include "dpoly/tensor_cohomology.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace dpoly {

// Atiyah suite outcome: cocycle table, class of the pair, and the
// connection-independence runs with seeded parameter choices.
struct AtiyahReport {
    bool is_cocycle = false;
    bool class_nonzero = false;
    bool witness_present = false;
    std::string cocycle_table; // printable matrix table R[X](b_i)
    nlohmann::json cocycle_json;
    long h1_dim = -1; // dim H^1(h; (g/h)* (x) End(g/h))
    int independence_runs = 0;
    int independence_passes = 0;
    bool pass = false; // internal certifications; the class value itself is data
};

AtiyahReport atiyah_report(const LiePair& pair, std::uint64_t seed, int independence_runs = 3);

// Cohomology suite: truncated-model table, the independent graded oracle,
// and their comparison on the faithful range.
struct CohomologySuite {
    CohomologyReport model;
    GradedBettiTable oracle;
    bool comparison_pass = false; // model dims match oracle sums and C(k, n)
};

CohomologySuite cohomology_suite(const UEnv& env, const TruncationSpec& spec);

nlohmann::json to_json(const PairValidation& v);
nlohmann::json to_json(const CohomologySuite& s);
nlohmann::json to_json(const HopfReport& r);
nlohmann::json to_json(const HkrReport& r);
nlohmann::json to_json(const IsoReport& r);
nlohmann::json to_json(const DStabilityReport& r);
nlohmann::json to_json(const CompatibilityReport& r);
nlohmann::json to_json(const AtiyahReport& r);

std::string to_text(const nlohmann::json& report, int indent = 0);

} // namespace dpoly
