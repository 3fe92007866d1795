#pragma once

#include <json.hpp>
#include <string>

#include "clusterdenom/disc.hpp"
#include "clusterdenom/exmat.hpp"
#include "clusterdenom/pattern.hpp"
#include "clusterdenom/reconstruct.hpp"
#include "clusterdenom/verifier.hpp"

namespace clusterdenom {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";
/// "clusterdenom 1.0.0 (report schema 1)"
std::string version_string();

using Json = nlohmann::json;

/// Integers that fit int64 become JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& v);

/// {"n": .., "b": [[..]], "symmetrizer": [..]}
Json to_json(const ExchangeMatrix& b);
/// Accepts the same shape; "symmetrizer" is optional. Throws InvalidMatrix.
ExchangeMatrix matrix_from_json(const Json& j);

Json to_json(const Report& r);
Json to_json(const ClusterPattern& p, const std::string& type_name);

namespace disc {
Json to_json(const TaggedArc& a);
TaggedArc arc_from_json(const Json& j, int n);
Json to_json(const ArcMultiset& m);
}  // namespace disc

Json to_json(const reconstruct::InjectivityReport& r);
Json to_json(const reconstruct::CorrespondenceTable& t);

}  // namespace clusterdenom
