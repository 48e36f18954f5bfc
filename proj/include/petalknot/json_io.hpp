#pragma once

#include "petalknot/invariants.hpp"
#include "petalknot/petalperm.hpp"
#include "petalknot/planar.hpp"
#include "petalknot/uberdiag.hpp"
#include "petalknot/unknot.hpp"

#include <json.hpp>

namespace petalknot {

nlohmann::ordered_json to_json(const PetalPermutation& sigma);
nlohmann::ordered_json to_json(const UbercrossingDiagram& d);
nlohmann::ordered_json to_json(const PlanarDiagram& pd);
nlohmann::ordered_json to_json(const Laurent& poly, const std::string& var);
nlohmann::ordered_json to_json(const Fingerprint& f);
nlohmann::ordered_json to_json(const UnknottingCertificate& cert);

PetalPermutation permutation_from_json(const nlohmann::json& j);
UbercrossingDiagram diagram_from_json(const nlohmann::json& j);
PlanarDiagram pd_from_json(const nlohmann::json& j);
Laurent laurent_from_json(const nlohmann::json& j);
Fingerprint fingerprint_from_json(const nlohmann::json& j);
UnknottingCertificate certificate_from_json(const nlohmann::json& j);

} // namespace petalknot
