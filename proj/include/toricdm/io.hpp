#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "toricdm/crepant.hpp"
#include "toricdm/inertia.hpp"

namespace toricdm {

using json = nlohmann::ordered_json;

struct InputDocument {
    FgAbelianGroup group;
    std::vector<GroupElement> rays;
    std::vector<Cone> cones;  // 0-based
    struct Subdivision {
        std::vector<GroupElement> rays;  // appended after the coarse rays
        std::vector<Cone> cones;         // 0-based into the combined ray list
    };
    std::optional<Subdivision> subdivision;
};

/// Accepts a bare document or any report carrying one under "document". Throws ParseError.
InputDocument parse_document(const json& j);
InputDocument read_document(const std::string& path);
json to_json(const InputDocument& doc);
InputDocument document_of(const StackyFan& s);

StackyFan build_fan(const InputDocument& doc);
/// Throws ParseError if the document has no subdivision block.
SubdivisionPair build_pair(const InputDocument& doc);

std::string rational_string(const Rational& q);
std::string dims_string(const GradedDims& dims);
std::string cone_string(const Cone& c);  // 1-based

json to_json(const Rational& q);
json to_json(const FgAbelianGroup& g);
json to_json(const GroupElement& e);
json to_json(const BoxElement& b);
json to_json(const GradedDims& dims);
json to_json(const GradedPresentation& p, bool table);
json to_json(const FamilyReport& r);

}  // namespace toricdm
