// JSON certificates. Every report serializes with schema_version,
// engine, command, parameters, result, timings; witnesses are written as
// canonical element text so that they can be parsed back and recombined.
// Unknown fields are ignored on read.

#ifndef SKEWLAB_CERTIFICATE_HPP
#define SKEWLAB_CERTIFICATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "skewlab/certify.hpp"

namespace skewlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "skewlab 0.1.0";

Json to_json(const MembershipWitness& w);
Json to_json(const SearchStatus& s);
Json to_json(const HilbertProfile& h);
Json to_json(const GrowthEvidence& g);
Json to_json(const PhiReport& r);
Json to_json(const PsiReport& r);
Json to_json(const PertinencyReport& r);
Json to_json(const AdmissibilityReport& r);
Json to_json(const ClaimResult& c);
Json to_json(const PresentationReport& r);
Json to_json(const TildeReport& r);

Json make_certificate(const std::string& command, Json parameters, const std::string& result_kind, Json body,
                      double seconds);

/// Reads a witness back; coefficients and elements are re-parsed.
MembershipWitness witness_from_json(const Json& j, const AlgebraContext& ctx);

struct RecheckResult {
  bool ok = true;
  std::vector<std::string> messages;

  void fail(const std::string& m) {
    ok = false;
    messages.push_back(m);
  }
};

/// Re-validates every witness and claim in a certificate without trusting
/// any of its verdicts.
RecheckResult recheck_certificate(const Json& cert);

}  // namespace skewlab

#endif  // SKEWLAB_CERTIFICATE_HPP
