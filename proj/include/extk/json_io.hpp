#pragma once

#include <string>

#include <json.hpp>

#include "extk/cubic.hpp"
#include "extk/germ.hpp"
#include "extk/moduli.hpp"
#include "extk/numcheck.hpp"

namespace extk {

using ojson = nlohmann::ordered_json;

/// Germ spec wire format (sigma is never serialized; it is recomputed on
/// load through the validating constructors):
///   {"kind":"einstein","K0":1.0}
///   {"kind":"generic","C":1.0,"Cprime":0.0,"K0":1.0}
///   {"kind":"exceptional","C":1.0,"Cprime":0.6666666666666666,"K0":2.0,"lambda":1.0}
ojson to_json(const GermSpec& spec);
GermSpec germ_from_json(const ojson& j);
GermSpec germ_from_json_text(const std::string& text);

ojson to_json(const RootStructure& rs);
ojson to_json(const VerificationReport& report);
ojson to_json(const HcmuClass& hcmu);
ojson to_json(const ModuliCoords& coords);

const char* component_name(Component c);

}  // namespace extk
