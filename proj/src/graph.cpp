#include "gp/graph.hpp"

#include <algorithm>
#include <sstream>

#include "gp/errors.hpp"

namespace gp {

GpParams validate_params(std::int64_t n, std::int64_t k) {
    if (n < 3 || k < 1 || 2 * k > n) {
        std::ostringstream msg;
        msg << "out of range: need n >= 3, k >= 1, 2k < n (got n=" << n
            << ", k=" << k << ")";
        throw OutOfRange(msg.str());
    }
    if (2 * k == n) {
        std::ostringstream msg;
        msg << "degenerate: 2k = n (n=" << n << ", k=" << k << ")";
        throw DegenerateParams(msg.str());
    }
    return GpParams{n, k};
}

Graph build_graph(const GpParams& p) {
    const std::int64_t n = p.n, k = p.k;
    Graph g;
    g.params = p;
    g.vertex_count = 2 * n;
    g.adjacency.assign(static_cast<std::size_t>(2 * n), {});
    for (std::int64_t i = 0; i < n; ++i) {
        const auto a = static_cast<std::int32_t>(i);
        const auto b = static_cast<std::int32_t>(n + i);
        g.adjacency[a] = {static_cast<std::int32_t>((i + n - 1) % n),
                          static_cast<std::int32_t>((i + 1) % n), b};
        g.adjacency[b] = {a, static_cast<std::int32_t>(n + (i + n - k) % n),
                          static_cast<std::int32_t>(n + (i + k) % n)};
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
    const auto m = static_cast<std::size_t>(g.vertex_count);
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    for (std::size_t v = 0; v < m; ++v)
        for (auto w : g.adjacency[v]) a[v][static_cast<std::size_t>(w)] = 1;
    return a;
}

std::string export_dot(const Graph& g, const GpParams& p) {
    (void)g;
    const std::int64_t n = p.n, k = p.k;
    std::ostringstream out;
    out << "graph G {\n";
    for (std::int64_t i = 0; i < n; ++i)
        out << "  a" << i << " -- a" << (i + 1) % n << ";\n";
    for (std::int64_t i = 0; i < n; ++i)
        out << "  a" << i << " -- b" << i << ";\n";
    for (std::int64_t i = 0; i < n; ++i)
        out << "  b" << i << " -- b" << (i + k) % n << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gp
