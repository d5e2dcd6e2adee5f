// JSON formats.
//
//   group      {"name": s, "order": n, "table": [[...], ...], "names": [s, ...]}
//   ordering   {"group": <group or name>, "kind": "arrangement" | "inhom" | "hom", "data": ...}
//   extension  {"base": <group or name>, "cocycle": [[...], ...], "coefficients": "Z" | {"Zn": n}}
//   element    {"M": "I" | "A" | "B" | "AB", "w": [x, y, z]}
//
// Group names are "trivial" or factors "Z/k" joined by "x", e.g. "Z/2xZ/2".

#ifndef CIRCORD_IO_HPP_
#define CIRCORD_IO_HPP_

#include <string>

#include <json.hpp>

#include "circord/cohomology.hpp"
#include "circord/extensions.hpp"
#include "circord/obstruction.hpp"
#include "circord/orders.hpp"
#include "circord/promislow.hpp"

namespace circord {

using Json = nlohmann::json;

// All loaders throw InvalidInput naming the offending field.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);
FiniteGroup named_group(const std::string& name);
// Reads a group file, or falls back to named_group when no such file exists.
FiniteGroup load_group(const std::string& path_or_name);
Json read_json_file(const std::string& path);

struct ParsedOrdering {
  FiniteGroup group;
  InhomCircularOrder order;
};
ParsedOrdering ordering_from_json(const Json& j);
// kind is "arrangement", "inhom" or "hom".
Json ordering_to_json(const InhomCircularOrder& f, const std::string& kind);

CentralExtension extension_from_json(const Json& j);
Json extension_to_json(const CentralExtension& e);

Json integer_to_json(const Integer& v);
Json class_to_json(const CohomologyClass& c);
Json spectrum_to_json(const ObstructionSpectrum& s);
Json prom_to_json(const PromElement& x);
PromElement prom_from_json(const Json& j);

}  // namespace circord

#endif  // CIRCORD_IO_HPP_
