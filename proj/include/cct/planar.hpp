#ifndef CCT_PLANAR_HPP
#define CCT_PLANAR_HPP

#include <cstddef>
#include <vector>

#include "cct/census.hpp"
#include "cct/geometry.hpp"

namespace cct {

struct GraphNode {
  int colour = 0;
  std::size_t point_index = 0;
  Point point;
};

/// Orientation digraph of a planar configuration: one node per point, one arc
/// per differently coloured pair, directed so the origin lies strictly on the
/// right of the arc's line. Node ids are colour-major.
struct OrientedGraph {
  std::vector<GraphNode> nodes;
  std::vector<std::vector<std::size_t>> out;  // ascending neighbour ids
  std::vector<std::vector<std::size_t>> in;
};

/// Throws WrongDimension unless d = 2 and DegenerateInput when the origin
/// lies on a line through two differently coloured points.
OrientedGraph build_digraph(const Configuration& config);

/// Shortest directed circuit as a node sequence (first node not repeated),
/// rotated so the smallest id leads; among equally short circuits the
/// lexicographically smallest. The result always has length 3 or 4, and a
/// length-4 circuit uses exactly two colours. Throws NoCircuit when the graph
/// is acyclic, which refutes the planar line condition.
std::vector<std::size_t> shortest_circuit(const OrientedGraph& g);

/// Constructive planar search: the shortest circuit directly gives a
/// colourful triangle containing the origin, or, for a 2-coloured 4-circuit,
/// the ray opposite a missing-colour point w crosses one of its arcs and the
/// arc's endpoints together with w do. Throws ConditionViolated when no
/// circuit exists and NonGenericDirection when every choice of w produces a
/// degenerate crossing (impossible in general position).
ColourfulSimplex find_triangle_2d(const Configuration& config);

}  // namespace cct

#endif  // CCT_PLANAR_HPP
