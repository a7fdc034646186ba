#pragma once

#include <string>

#include "json.hpp"
#include "pwcenter/analysis.hpp"

// JSON/CSV encodings of the analysis types. All writers are deterministic:
// ordered keys, shortest round-trip number formatting, and non-finite values
// clamped to +/-1e308 so output stays valid JSON.
namespace pwcenter {

using json = nlohmann::ordered_json;

double finite_or_clamp(double v);

json to_json(const TrigPoly& p);
json to_json(const RealPoly& p);
json to_json(const BandStructure& bs);
json to_json(const HypothesisReport& rep);
json to_json(const DecompositionOutcome& out);
json to_json(const ClassificationReport& rep);

// Parsers throw std::invalid_argument on malformed documents.
TrigPoly trigpoly_from_json(const json& j);
RealPoly realpoly_from_json(const json& j);

struct PairInput {
    TrigPoly a;
    TrigPoly b;
};
PairInput pair_from_json(const json& j);
PairInput load_pair(const std::string& path);

CompositionWitness witness_from_json(const json& j);
CompositionWitness load_witness(const std::string& path);

json load_json(const std::string& path);
void write_text(const std::string& path, const std::string& content);

// CSV bodies with headers; doubles printed as %.17g.
std::string displacement_csv(const std::vector<DisplacementSample>& scan);
std::string trace_csv(const Trace& tr);

const char* verdict_name(Verdict v);
const char* outcome_kind_name(OutcomeKind k);
const char* profile_name(SignProfile p);

}  // namespace pwcenter
