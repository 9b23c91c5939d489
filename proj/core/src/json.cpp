#include "tlfc/json.hpp"

#include "tlfc/error.hpp"

namespace tlfc {

using nlohmann::json;

json to_json(const FCElement& w) {
  json pairs = json::array();
  for (const Block& b : w.blocks()) pairs.push_back({b.i, b.j});
  return {{"n", w.rank()}, {"pairs", std::move(pairs)}};
}

FCElement fc_from_json(const json& j) {
  try {
    std::vector<Block> blocks;
    for (const auto& pair : j.at("pairs")) {
      if (pair.size() != 2) fail(ErrorCode::ParseError, "pair needs two entries: " + pair.dump());
      blocks.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return FCElement::validate(j.at("n").get<int>(), std::move(blocks));
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

json to_json(const Diagram& d) {
  json partner = json::array();
  for (int p : d.partners()) partner.push_back(p + 1);
  return {{"strings", d.strings()}, {"partner", std::move(partner)}};
}

Diagram diagram_from_json(const json& j) {
  try {
    std::vector<int> partner;
    for (const auto& p : j.at("partner")) partner.push_back(p.get<int>() - 1);
    return Diagram::from_partners(j.at("strings").get<int>(), std::move(partner));
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

namespace {

json to_json(const RowChoice& c) {
  json out = {{"block", c.block}, {"candidates", c.candidates}};
  out["chosen"] = c.chosen ? json(*c.chosen) : json(nullptr);
  return out;
}

}  // namespace

json to_json(const BijectionTrace& trace) {
  json positive = json::array();
  for (const auto& [s, t] : trace.positive) positive.push_back({{"s", s}, {"t", t}});
  json top = json::array(), bottom = json::array();
  for (const RowChoice& c : trace.top) top.push_back(to_json(c));
  for (const RowChoice& c : trace.bottom) bottom.push_back(to_json(c));
  return {{"positive", std::move(positive)}, {"top", std::move(top)}, {"bottom", std::move(bottom)}};
}

// Coefficients are strings so that values past 64 bits survive.
json to_json(const DeltaPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.str();
  return out;
}

json to_json(const TLElement& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) {
    terms.push_back({{"element", to_json(w)}, {"coefficient", to_json(c)}});
  }
  return {{"n", x.rank()}, {"terms", std::move(terms)}};
}

json to_json(const DyckPath& path) { return to_string(path); }

json to_json(const Ballot& ballot) { return to_string(ballot); }

}  // namespace tlfc
