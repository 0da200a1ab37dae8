#pragma once

#include <string>

#include "knotcarve/carving.hpp"
#include "knotcarve/curves.hpp"
#include "knotcarve/diagram.hpp"
#include "knotcarve/heegaard.hpp"
#include "knotcarve/spheres.hpp"
#include "knotcarve/subdivide.hpp"
#include "knotcarve/triangulation.hpp"

namespace knotcarve {

// graphviz exports
std::string dot_graph(const Diagram& d);
std::string dot_graph(const SimpleDiagramGraph& g);
std::string dot_dual(const SimpleDiagramGraph& g);
std::string dot_carving(const Graph& g, const CarvingDecomposition& dec);
std::string dot_face_pairing(const Graph& fpg);
// component adjacency tree of a splitting (pieces as nodes, thin spheres as
// edges annotated with weights)
std::string dot_component_tree(const SphereDecomposition& sd);

// Schematic picture: the subdivided diagram laid out by a Tutte embedding
// (largest face outside), with the realized curves drawn through their edge
// crossing points.  Intended for documentation, not precision drawing.
std::string svg_curves(const SimpleDiagramGraph& g, const CurveFamily& fam);
// Same picture with sphere weights as labels.
std::string svg_spheres(const SimpleDiagramGraph& g, const CurveFamily& fam,
                        const SphereDecomposition& sd);

}  // namespace knotcarve
