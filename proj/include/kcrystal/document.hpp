// JSON documents for the CLI and the Python module.
//
// Every document is {"schema_version", "kind", "payload"}. Rationals are
// "p/q" strings, abelian groups "Z^r + Z/d1 + ...".
#ifndef KCRYSTAL_DOCUMENT_HPP_
#define KCRYSTAL_DOCUMENT_HPP_

#include <string>
#include <string_view>
#include <vector>
#include <json.hpp>
#include "verify.hpp"

namespace kcrystal {

inline constexpr const char* kSchemaVersion = "1";

struct OutputDocument {
  std::string schema_version = kSchemaVersion;
  std::string kind;  // group_spec, conj_classes, k_result, verification_reports, ...
  nlohmann::ordered_json payload;

  bool operator==(const OutputDocument& o) const {
    return schema_version == o.schema_version && kind == o.kind && payload == o.payload;
  }
};

OutputDocument make_document(const GroupSpec& spec);
OutputDocument make_document(const std::vector<ConjClass>& classes);
OutputDocument make_document(const KResult& r);
OutputDocument make_document(const std::vector<VerificationReport>& reports);

// 2-space indented
std::string render_document(const OutputDocument& doc);
// ParseError on malformed text or an unknown schema version
OutputDocument parse_document(std::string_view text);

// ParseError when the kind does not match
GroupSpec spec_from(const OutputDocument& doc);
std::vector<ConjClass> classes_from(const OutputDocument& doc);
KResult kresult_from(const OutputDocument& doc);
std::vector<VerificationReport> reports_from(const OutputDocument& doc);

} // namespace kcrystal
#endif
