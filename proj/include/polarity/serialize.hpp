#ifndef POLARITY_SERIALIZE_HPP_
#define POLARITY_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "polarity/parser.hpp"

namespace polarity {

using Json = nlohmann::ordered_json;

Json formula_to_json(const Formula& f);
Formula formula_from_json(const Json& j);

Json structure_to_json(const Structure& s);
Structure structure_from_json(const Json& j);

Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

Json reading_to_json(const Reading& r);
Json parse_result_to_json(const ParseResult& r);

/// Indented proof tree, conclusion first, two spaces per level:
/// "<sequent>  [rule]".
std::string render_derivation(const Derivation& d);

}  // namespace polarity

#endif  // POLARITY_SERIALIZE_HPP_
