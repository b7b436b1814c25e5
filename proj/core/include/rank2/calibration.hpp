#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rank2/torus.hpp"

namespace rank2 {

struct CalibrationGraph {
    System system;
    TorusWeight base;
    std::vector<OrbitEntry> vertices;
    struct Edge {
        int u, v;       // vertex indices, u < v
        int simple;     // the simple reflection labelling the edge
    };
    std::vector<Edge> edges;
};

/// Vertices are the orbit of t; an edge joins wt and s_i wt whenever
/// (wt)(X^{alpha_i}) != q^{+-2} (and the two weights differ).
CalibrationGraph build_graph(const RootSystem& rs, const TorusWeight& t);

/// Connected components as sorted vertex-index lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const CalibrationGraph& g);

struct PlacedShape {
    TorusWeight t;
    std::vector<int> j;          // subset of P(t), sorted root indices
    std::vector<int> tableaux;   // Weyl indices with R(w) cap Z = empty, R(w) cap P = J
};

/// The tableau set of (t, J); nullopt when empty (not a placed shape).
/// Throws std::invalid_argument when J is not contained in P(t).
std::optional<PlacedShape> tableaux(const RootSystem& rs, const TorusWeight& t,
                                    const std::vector<int>& j);

/// Every placed shape of t (one per connected component of the graph).
std::vector<PlacedShape> all_placed_shapes(const RootSystem& rs, const TorusWeight& t);

/// Local condition on the rank-two subsystem spanned by simple roots i, j.
bool is_calibratable(const RootSystem& rs, const TorusWeight& t, int i, int j);

/// All tableau weights calibratable for all simple pairs.
bool is_placed_skew(const RootSystem& rs, const PlacedShape& shape);

/// Deterministic DOT rendering (vertices by minimal word, then index).
std::string to_dot(const RootSystem& rs, const CalibrationGraph& g, const std::string& name);

}  // namespace rank2
