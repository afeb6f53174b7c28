#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tangles/enumerate.hpp"

namespace tangles {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent JSON input.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json to_json(const QSqrt3& x);
Json to_json(const VertexId& v);
Json to_json(Tiling t, const CellId& c);
Json to_json(const AreaValue& a);
Json to_json(const DualPolyform& p);
Json to_json(const Tangle& t);
Json to_json(const TangleOp& op, Tiling t);
Json to_json(const OpSequence& seq);
Json to_json(const ValidityReport& r);
Json to_json(const TangleMetrics& m);

QSqrt3 qsqrt3_from_json(const Json& j);
VertexId vertex_from_json(const Json& j);
CellId cell_from_json(Tiling t, const Json& j);
AreaValue area_from_json(const Json& j);
DualPolyform polyform_from_json(const Json& j);
Tangle tangle_from_json(const Json& j);
OpSequence ops_from_json(const Json& j);

enum class FileKind { Polyform, Tangle, Ops };

/// Sniffs by top-level keys: "cells", "links" or "steps".
FileKind sniff(const Json& j);

/// One JSON-lines record for an enumerated Tangle.
Json enumeration_record(const CanonicalForm& form);
Json enumeration_summary(const EnumerationTable& table);
Json verification_summary(const VerificationReport& report, const EnumerationTable& table);

}  // namespace tangles
