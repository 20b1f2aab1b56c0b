#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "centralaut/abelian.hpp"
#include "centralaut/endomat.hpp"
#include "centralaut/extension.hpp"
#include "centralaut/oracle.hpp"

namespace centralaut {

using json = nlohmann::json;

// {"p": <int>, "exponents": [<int>, ...]}
json group_to_json(const AbelianPGroup& g);
AbelianPGroup group_from_json(const json& j);

// {"group": <descriptor>, "entries": [[...], ...]} with canonical entries;
// values that do not fit a JSON number are emitted as decimal strings.
json matrix_to_json(const EndoMatrix& m);
EndoMatrix matrix_from_json(const json& j);

// {"p":3, "q":{"type":...}, "z":<descriptor>, "cocycle":{"type":...}}
// q types: {"type":"trivial"}, {"type":"cyclic","order":m},
// {"type":"elementary","rank":r}, {"type":"table","table":[[...]]}.
// cocycle types: {"type":"zero"},
// {"type":"bilinear","scale":s,"matrix":[[...]],"coordinate":c} (elementary q),
// {"type":"table","entries":[[[z coords],...],...]}.
json extension_to_json(const CentralExtensionGroup& g);  // always table form
CentralExtensionGroup extension_from_json(const json& j);

// {"order": m, "table": [[...], ...], "labels": [...]?}
json table_to_json(const TableGroup& t);
TableGroup table_from_json(const json& j);

json lift_to_json(const CentralExtensionGroup& g, const LiftedAutomorphism& gamma);

Int int_from_json(const json& j);
json int_to_json(const Int& v);

} // namespace centralaut
