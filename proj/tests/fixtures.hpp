#ifndef NESTGEN_TESTS_FIXTURES_HPP
#define NESTGEN_TESTS_FIXTURES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nestgen/embedding.hpp"
#include "nestgen/graph.hpp"

namespace fixtures {

using namespace nestgen;

inline Multigraph from_pairs(int n, std::vector<std::pair<VertexId, VertexId>> pairs) {
    std::vector<VertexId> vs;
    for (VertexId v = 1; v <= n; ++v) vs.push_back(v);
    std::vector<EdgeRec> es;
    EdgeId id = 1;
    for (auto [u, v] : pairs) es.push_back({id++, u, v});
    return Multigraph::build(vs, es);
}

inline Multigraph k4() {
    return from_pairs(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline Multigraph k5() {
    return from_pairs(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                          {4, 5}});
}

inline Multigraph digon() { return from_pairs(2, {{1, 2}, {1, 2}}); }

inline Multigraph single_edge() { return from_pairs(2, {{1, 2}}); }

inline Multigraph path3() { return from_pairs(3, {{1, 2}, {2, 3}}); }

inline Multigraph cycle_n(int n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 1; i < n; ++i) pairs.push_back({i, i + 1});
    pairs.push_back({n, 1});
    return from_pairs(n, pairs);
}

inline Multigraph c4() { return cycle_n(4); }

// two vertices joined by three internally disjoint length-2 paths
inline Multigraph theta() {
    return from_pairs(5, {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}});
}

// two hubs 1, 2 joined by four length-2 paths through midpoints 3..6;
// path p_i uses edges {2i-1, 2i}
inline Multigraph star4paths() {
    return from_pairs(6, {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}, {1, 6}, {6, 2}});
}

inline Multigraph diamond() {
    return from_pairs(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

inline Multigraph bowtie() {
    return from_pairs(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

// outer rim 1..n, inner vertices n+1..2n, skip k
inline Multigraph generalized_petersen(int n, int k) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back({i + 1, (i + 1) % n + 1});
    for (int i = 0; i < n; ++i) pairs.push_back({i + 1, n + i + 1});
    for (int i = 0; i < n; ++i) pairs.push_back({n + i + 1, n + (i + k) % n + 1});
    return from_pairs(2 * n, pairs);
}

inline Multigraph prism() { return generalized_petersen(3, 1); }
inline Multigraph cube() { return generalized_petersen(4, 1); }
inline Multigraph dodecahedron() { return generalized_petersen(10, 2); }

// rim 1..k plus hub k+1
inline Multigraph wheel(int k) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < k; ++i) pairs.push_back({i + 1, (i + 1) % k + 1});
    for (int i = 0; i < k; ++i) pairs.push_back({i + 1, k + 1});
    return from_pairs(k + 1, pairs);
}

inline Multigraph forest() {
    std::vector<VertexId> vs{1, 2, 3, 4, 5, 6, 7};
    std::vector<EdgeRec> es{{1, 1, 2}, {2, 2, 3}, {3, 4, 5}, {4, 4, 6}};
    return Multigraph::build(vs, es);
}

inline Multigraph triangle_with_loop() {
    std::vector<VertexId> vs{1, 2, 3};
    std::vector<EdgeRec> es{{1, 1, 2}, {2, 2, 3}, {3, 1, 3}, {4, 1, 1}};
    return Multigraph::build(vs, es);
}

// two triangles joined by a bridge, a pendant edge, and two loops
inline Multigraph loops_and_bridges() {
    std::vector<VertexId> vs{1, 2, 3, 4, 5, 6, 7};
    std::vector<EdgeRec> es{{1, 1, 2}, {2, 2, 3}, {3, 1, 3},  {4, 3, 4},  {5, 4, 5},
                            {6, 5, 6}, {7, 4, 6}, {8, 6, 7},  {9, 1, 1},  {10, 5, 5}};
    return Multigraph::build(vs, es);
}

// planar triangulation grown from K4 by repeated vertex insertion into a
// random face; 3-connected for every size >= 4
inline Multigraph random_triangulation(int target_vertices, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> pairs = {{1, 2}, {1, 3}, {1, 4},
                                                        {2, 3}, {2, 4}, {3, 4}};
    std::vector<std::array<VertexId, 3>> faces = {
        {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    int n = 4;
    while (n < target_vertices) {
        std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
        size_t fi = pick(rng);
        auto f = faces[fi];
        faces.erase(faces.begin() + static_cast<long>(fi));
        VertexId v = ++n;
        pairs.push_back({f[0], v});
        pairs.push_back({f[1], v});
        pairs.push_back({f[2], v});
        faces.push_back({f[0], f[1], v});
        faces.push_back({f[0], f[2], v});
        faces.push_back({f[1], f[2], v});
    }
    return from_pairs(n, pairs);
}

// simple 2-connected planar graph grown from a cycle by ear additions,
// retrying any ear that would break planarity or simplicity
inline Multigraph random_two_connected(int max_vertices, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> base_len(3, 5);
    int n = base_len(rng);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 1; i < n; ++i) pairs.push_back({i, i + 1});
    pairs.push_back({n, 1});

    std::uniform_int_distribution<int> ear_count(2, 5);
    int ears = ear_count(rng);
    for (int t = 0; t < ears && n < max_vertices; ++t) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            std::uniform_int_distribution<int> vd(1, n);
            VertexId a = vd(rng), b = vd(rng);
            if (a == b) continue;
            std::uniform_int_distribution<int> ld(1, 3);
            int len = std::min(ld(rng), max_vertices - n + 1);
            auto candidate = pairs;
            int cn = n;
            if (len == 1) {
                bool dup = false;
                for (auto [u, v] : pairs)
                    if ((u == a && v == b) || (u == b && v == a)) dup = true;
                if (dup) continue;
                candidate.push_back({a, b});
            } else {
                VertexId prev = a;
                for (int i = 1; i < len; ++i) {
                    candidate.push_back({prev, cn + 1});
                    prev = ++cn;
                }
                candidate.push_back({prev, b});
            }
            try {
                Multigraph g = from_pairs(cn, candidate);
                planar_embed(g);
                pairs = candidate;
                n = cn;
                break;
            } catch (const nonplanar_error&) {
                continue;
            }
        }
    }
    return from_pairs(n, pairs);
}

struct Named {
    std::string name;
    Multigraph graph;
};

inline std::vector<Named> three_connected_fixtures() {
    std::vector<Named> out = {{"k4", k4()},       {"prism", prism()},
                              {"cube", cube()},   {"dodecahedron", dodecahedron()},
                              {"wheel4", wheel(4)}, {"wheel5", wheel(5)},
                              {"wheel6", wheel(6)}, {"wheel7", wheel(7)},
                              {"wheel8", wheel(8)}};
    for (int i = 0; i < 5; ++i)
        out.push_back({"triangulation" + std::to_string(i),
                       random_triangulation(8 + i, 1000 + static_cast<std::uint64_t>(i))});
    return out;
}

inline std::vector<Named> two_connected_fixtures() {
    std::vector<Named> out = {{"theta", theta()}, {"star4paths", star4paths()}, {"c4", c4()}};
    for (int i = 0; i < 10; ++i)
        out.push_back({"random2c" + std::to_string(i),
                       random_two_connected(14, 2000 + static_cast<std::uint64_t>(i))});
    return out;
}

} // namespace fixtures

#endif
