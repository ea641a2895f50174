#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "equilab/equicert.hpp"
#include "equilab/graph.hpp"
#include "equilab/recognizers.hpp"

namespace equilab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
inline constexpr std::string_view kToolVersion = "1.0.0";

/// {"num": n, "den": d}; integers outside the 64-bit range become decimal strings.
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json certificate_json(const SetSystem& s, const ForcedValueCertificate& c);
Json not_forced_json(const SetSystem& s, const NotForced& nf);
/// Throws InputError on unknown labels or a malformed object.
ForcedValueCertificate certificate_from_json(const SetSystem& s, const Json& j);
NotForced not_forced_from_json(const SetSystem& s, const Json& j);

Json equi_witness_json(const SetSystem& s, const EquiWitness& w);
Json strong_witness_json(const SetSystem& s, const StrongWitness& w);
/// Parses a serialized witness back and re-checks it against s.
bool revalidate_equi_witness(const SetSystem& s, Answer answer, const Json& witness, int max_ground = kDefaultExhaustiveGround);
bool revalidate_strong_witness(const SetSystem& s, Answer answer, const Json& witness);

struct AnalyzeOptions {
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    int exhaustive_ground = kDefaultExhaustiveGround;
    int strong_ground = kDefaultStrongGround;
    std::uint64_t seed = 0;
    bool with_co_line = false;
    bool strong = false;
    std::string source;
};

struct PropertyReport {
    Json json;
    /// Some requested property ended as unknown.
    bool budget_exhausted = false;
};

/// Throws InputError when g has an isolated vertex.
PropertyReport analyze(const Graph& g, const AnalyzeOptions& options);
/// Re-checks every witness in an analyze report against g.
bool revalidate_report(const Json& report, const Graph& g);
std::string report_text(const Json& report);

Json table1_json(const Table1Report& r);

}  // namespace equilab
