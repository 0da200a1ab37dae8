#pragma once

#include <json.hpp>
#include <string>

#include "knotcarve/carving.hpp"
#include "knotcarve/curves.hpp"
#include "knotcarve/diagram.hpp"
#include "knotcarve/heegaard.hpp"
#include "knotcarve/layered.hpp"
#include "knotcarve/spheres.hpp"
#include "knotcarve/subdivide.hpp"

// Versioned JSON schemas.  Field names are part of the interface and are
// documented in the README; every object carries a "schema" tag of the form
// "knotcarve.<type>/1".
namespace knotcarve {

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SimpleDiagramGraph& g);
nlohmann::json to_json(const CarvingDecomposition& dec, const Graph& g);
nlohmann::json to_json(const CurveFamily& fam);
nlohmann::json to_json(const SphereDecomposition& sd);
nlohmann::json to_json(const MultipleHeegaardSplitting& mhs);
nlohmann::json to_json(const Triangulation& t);
nlohmann::json to_json(const TheoremMainReport& r);

}  // namespace knotcarve
