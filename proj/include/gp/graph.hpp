// graph.hpp -- generalised Petersen graphs P(n,k): parameter validation,
// construction, dense adjacency, DOT export.
//
// Vertex indexing is fixed everywhere: outer vertex a_i -> i, inner vertex
// b_i -> n + i, for 0 <= i < n.  Edges: a_i a_{i+1}, a_i b_i, b_i b_{i+k},
// indices mod n.  Every P(n,k) here is cubic with 3n edges.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gp {

struct GpParams {
    std::int64_t n = 0;  // outer cycle length, n >= 3
    std::int64_t k = 0;  // inner skip, 1 <= k and 2k < n
};

// Throws OutOfRange unless n >= 3, k >= 1, 2k <= n.
// Throws DegenerateParams for 2k = n (inner edges would coincide in pairs).
GpParams validate_params(std::int64_t n, std::int64_t k);

struct Graph {
    GpParams params;
    std::int64_t vertex_count = 0;                     // = 2n
    std::vector<std::vector<std::int32_t>> adjacency;  // sorted neighbour lists
};

Graph build_graph(const GpParams& p);

// Dense symmetric 0/1 matrix of side 2n.  Oracle scale only: O(n^2) memory.
std::vector<std::vector<int>> adjacency_matrix(const Graph& g);

// Undirected DOT document.  Edge lines are emitted outer cycle first, then
// spokes, then inner edges, each family by ascending i; inner edges keep the
// unnormalised form "b{i} -- b{(i+k) mod n}".
std::string export_dot(const Graph& g, const GpParams& p);

}  // namespace gp
