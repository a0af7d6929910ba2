#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxlor/associated.hpp"
#include "maxlor/verify.hpp"

namespace maxlor {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

// Unreadable files (IOError) and malformed documents (SchemaError).
class FormatError : public std::runtime_error {
public:
    FormatError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct Document {
    std::string schema_version = kSchemaVersion;
    std::string kind;  // pattern, sisothermic, congruence, associated, incircular, xfield, report
    json payload = json::object();
    json metadata = json::object();

    bool operator==(const Document&) const = default;
};

// Sorted keys, two-space indent, doubles at 17 significant digits.
std::string emit_json(const json& j);
std::string emit(const Document& d);
Document parse_document(const std::string& text);
// "-" means stdin / stdout.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
Document read_document(const std::string& path);

json to_json(const DiskCirclePattern& p);
DiskCirclePattern pattern_from_json(const json& j);
json to_json(const SIsothermicNet& n);
SIsothermicNet sisothermic_from_json(const json& j);
json to_json(const Congruence& c);
Congruence congruence_from_json(const json& j);
json to_json(const IncircularNet& n);
IncircularNet incircular_from_json(const json& j);
json to_json(const AssociatedSurface& s);
json xfield_to_json(const Patch& p, const std::map<int, double>& x);
json to_json(const std::vector<SuiteReport>& reports);

// The pattern itself, or the source pattern embedded by derived documents.
DiskCirclePattern source_pattern(const Document& d);

// Second net, when given, is drawn with stroke class "net2".
std::string export_svg(const IncircularNet& net, const IncircularNet* second = nullptr);
// White centres as vertices (x3 as height), white-sublattice quads around interior blacks as faces.
std::string export_obj(const Patch& p, const std::vector<LVec3>& white_centers);

}  // namespace maxlor
