#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "gp/errors.hpp"
#include "gp/graph.hpp"

namespace {

bool connected(const gp::Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count), 0);
    std::queue<std::int32_t> work;
    work.push(0);
    seen[0] = 1;
    std::int64_t visited = 1;
    while (!work.empty()) {
        const auto v = work.front();
        work.pop();
        for (auto w : g.adjacency[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                work.push(w);
            }
        }
    }
    return visited == g.vertex_count;
}

using EdgeSet = std::set<std::pair<std::int32_t, std::int32_t>>;

EdgeSet edge_set(const gp::Graph& g) {
    EdgeSet edges;
    for (std::int64_t v = 0; v < g.vertex_count; ++v)
        for (auto w : g.adjacency[static_cast<std::size_t>(v)])
            edges.emplace(std::min<std::int32_t>(static_cast<std::int32_t>(v), w),
                          std::max<std::int32_t>(static_cast<std::int32_t>(v), w));
    return edges;
}

// minimal reader for the DOT text this library emits
EdgeSet parse_dot_edges(const std::string& dot, std::int64_t n) {
    EdgeSet edges;
    std::istringstream in(dot);
    std::string line;
    auto vertex_of = [n](const std::string& name) -> std::int32_t {
        const std::int64_t i = std::stoll(name.substr(1));
        return static_cast<std::int32_t>(name[0] == 'a' ? i : n + i);
    };
    while (std::getline(in, line)) {
        const auto sep = line.find(" -- ");
        if (sep == std::string::npos) continue;
        const auto start = line.find_first_not_of(' ');
        const auto end = line.find(';');
        const std::string lhs = line.substr(start, sep - start);
        const std::string rhs = line.substr(sep + 4, end - sep - 4);
        const auto a = vertex_of(lhs), b = vertex_of(rhs);
        edges.emplace(std::min(a, b), std::max(a, b));
    }
    return edges;
}

}  // namespace

TEST_CASE("parameter validation accepts the documented range") {
    CHECK(gp::validate_params(3, 1).n == 3);
    CHECK(gp::validate_params(5, 2).k == 2);
    CHECK(gp::validate_params(2000, 999).n == 2000);
    // odd n admits k up to (n-1)/2
    for (std::int64_t k = 1; k <= 20; ++k) CHECK_NOTHROW(gp::validate_params(2 * k + 1, k));
}

TEST_CASE("parameter validation rejects out-of-range input") {
    CHECK_THROWS_AS(gp::validate_params(2, 1), gp::OutOfRange);
    CHECK_THROWS_AS(gp::validate_params(-5, 1), gp::OutOfRange);
    CHECK_THROWS_AS(gp::validate_params(5, 0), gp::OutOfRange);
    CHECK_THROWS_AS(gp::validate_params(5, -2), gp::OutOfRange);
    CHECK_THROWS_AS(gp::validate_params(5, 3), gp::OutOfRange);
    CHECK_THROWS_AS(gp::validate_params(4, 3), gp::OutOfRange);
}

TEST_CASE("2k = n is rejected as degenerate, not merely out of range") {
    CHECK_THROWS_AS(gp::validate_params(4, 2), gp::DegenerateParams);
    CHECK_THROWS_AS(gp::validate_params(10, 5), gp::DegenerateParams);
    try {
        gp::validate_params(8, 4);
        FAIL("expected a throw");
    } catch (const gp::DegenerateParams& e) {
        CHECK(std::string(e.what()).find("degenerate: 2k = n") != std::string::npos);
    }
}

TEST_CASE("Petersen graph adjacency") {
    const auto g = gp::build_graph(gp::validate_params(5, 2));
    CHECK(g.vertex_count == 10);
    CHECK(g.adjacency[0] == std::vector<std::int32_t>{1, 4, 5});
    // b_0 = vertex 5: spoke a_0, inner b_2 and b_3 (indices 7, 8)
    CHECK(g.adjacency[5] == std::vector<std::int32_t>{0, 7, 8});
    CHECK(edge_set(g).size() == 15);
}

TEST_CASE("every valid graph is cubic, has 3n edges and is connected") {
    auto check_one = [](std::int64_t n, std::int64_t k) {
        const auto g = gp::build_graph(gp::validate_params(n, k));
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(g.vertex_count == 2 * n);
        for (const auto& nbrs : g.adjacency) {
            REQUIRE(nbrs.size() == 3);
            REQUIRE(std::is_sorted(nbrs.begin(), nbrs.end()));
            REQUIRE(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
        }
        REQUIRE(edge_set(g).size() == static_cast<std::size_t>(3 * n));
        REQUIRE(connected(g));
        // symmetry: w in adj[v] iff v in adj[w]
        for (std::int64_t v = 0; v < g.vertex_count; ++v)
            for (auto w : g.adjacency[static_cast<std::size_t>(v)]) {
                const auto& back = g.adjacency[static_cast<std::size_t>(w)];
                REQUIRE(std::binary_search(back.begin(), back.end(),
                                           static_cast<std::int32_t>(v)));
            }
    };
    for (std::int64_t n = 3; n <= 40; ++n)
        for (std::int64_t k = 1; 2 * k < n; ++k) check_one(n, k);
    check_one(997, 12);
    check_one(1000, 499);
}

TEST_CASE("non-coprime inner skip still yields a connected cubic graph") {
    // gcd(k,n) > 1: inner edges form several cycles, spokes join everything
    for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{10, 4},
                        {12, 3},
                        {15, 6},
                        {100, 35}}) {
        const auto g = gp::build_graph(gp::validate_params(n, k));
        CHECK(connected(g));
        CHECK(edge_set(g).size() == static_cast<std::size_t>(3 * n));
    }
}

TEST_CASE("dense adjacency matrix agrees with the lists") {
    const auto g = gp::build_graph(gp::validate_params(7, 3));
    const auto m = gp::adjacency_matrix(g);
    REQUIRE(m.size() == 14);
    std::int64_t ones = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        REQUIRE(m[i].size() == 14);
        CHECK(m[i][i] == 0);
        for (std::size_t j = 0; j < m.size(); ++j) {
            CHECK(m[i][j] == m[j][i]);
            ones += m[i][j];
        }
    }
    CHECK(ones == 2 * 3 * 7);
    for (std::int64_t v = 0; v < g.vertex_count; ++v)
        for (auto w : g.adjacency[static_cast<std::size_t>(v)])
            CHECK(m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] == 1);
}

TEST_CASE("DOT text for the triangular prism is stable") {
    const auto p = gp::validate_params(3, 1);
    const std::string expected =
        "graph G {\n"
        "  a0 -- a1;\n"
        "  a1 -- a2;\n"
        "  a2 -- a0;\n"
        "  a0 -- b0;\n"
        "  a1 -- b1;\n"
        "  a2 -- b2;\n"
        "  b0 -- b1;\n"
        "  b1 -- b2;\n"
        "  b2 -- b0;\n"
        "}\n";
    CHECK(gp::export_dot(gp::build_graph(p), p) == expected);
}

TEST_CASE("DOT edges reparse to exactly the graph's edge set") {
    for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{10, 3}, {12, 5}, {9, 4}}) {
        const auto p = gp::validate_params(n, k);
        const auto g = gp::build_graph(p);
        const std::string dot = gp::export_dot(g, p);
        CHECK(parse_dot_edges(dot, n) == edge_set(g));
        // one line per edge
        std::int64_t edge_lines = 0;
        for (auto pos = dot.find(" -- "); pos != std::string::npos;
             pos = dot.find(" -- ", pos + 1))
            ++edge_lines;
        CHECK(edge_lines == 3 * n);
    }
}

TEST_CASE("inner DOT edges keep the unnormalised wraparound form") {
    const auto p = gp::validate_params(10, 3);
    const std::string dot = gp::export_dot(gp::build_graph(p), p);
    CHECK(dot.find("b7 -- b0;") != std::string::npos);
    CHECK(dot.back() == '\n');
}
