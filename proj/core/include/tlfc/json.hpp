#pragma once

#include <nlohmann/json.hpp>

#include "tlfc/bijection.hpp"
#include "tlfc/diagram.hpp"
#include "tlfc/fc_element.hpp"
#include "tlfc/lattice.hpp"
#include "tlfc/tl_algebra.hpp"

namespace tlfc {

// {"n":5,"pairs":[[4,5],[3,3],[1,1]]}
nlohmann::json to_json(const FCElement& w);
FCElement fc_from_json(const nlohmann::json& j);

// {"strings":2,"partner":[2,1,4,3]}: dots numbered 1..k on top and
// k+1..2k on the bottom, partner[d-1] is the dot joined to d.
nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BijectionTrace& trace);
nlohmann::json to_json(const DeltaPoly& p);
nlohmann::json to_json(const TLElement& x);
nlohmann::json to_json(const DyckPath& path);
nlohmann::json to_json(const Ballot& ballot);

}  // namespace tlfc
