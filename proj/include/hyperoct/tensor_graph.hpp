#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hyperoct/numeric.hpp"
#include "hyperoct/partition.hpp"

namespace hyperoct {

Bipartition trivial_bipartition(int n);  // ((N), empty)
Bipartition natural_bipartition(int n);  // ((N-1), (1))
Bipartition sign_bipartition(int n);     // ((1^N), empty)

/// Constituents of V tensor V_(alpha,beta): move one box alpha -> beta or
/// beta -> alpha, multiplicity-free.
std::set<Bipartition> pieri_neighbors(const Bipartition& b);

/// Vertices are all bipartitions of N, edges given by pieri_neighbors.
/// Built eagerly; immutable afterwards. Guarded at N <= 30.
struct TensorGraph {
    int n = 0;
    std::vector<Bipartition> vertices;
    std::map<Bipartition, std::set<Bipartition>> adjacency;

    static TensorGraph build(int n);
};

/// Exact shortest-path distances from the source set to every vertex.
/// Throws std::out_of_range for an unknown source, std::logic_error if the
/// graph turns out disconnected.
std::map<Bipartition, int> bfs(const TensorGraph& g, const std::set<Bipartition>& sources);

/// Distance from ((N), empty) in closed form: 2(N - alpha_1) - |beta|.
int distance_formula(const Bipartition& b);

/// Multiplicities of the irreducible constituents of V^t.
struct MultiplicityVector {
    int n = 0;
    int t = 0;
    std::map<Bipartition, BigInt> entries;

    BigInt total_dimension() const;  // sum of entry * dim, should equal N^t
};

/// Iterate the multiplicity-free tensor rule t-1 times from V itself.
MultiplicityVector multiplicity_evolution(int n, int t);

/// Irreps appearing in some V^s, s <= t: BFS distance <= t-1 from V.
std::set<Bipartition> spectral_reach(int n, int t);

/// Identification success probability after t queries, exact.
Rational p_opt(int n, int t);

struct QlvResult {
    int qlv = 0;
    std::set<Bipartition> bottlenecks;
};

/// Eccentricity of {V} in the tensor product graph, plus one; bottlenecks are
/// the full argmax set.
QlvResult qlv_graph(int n);

std::string to_dot(const TensorGraph& g);

}  // namespace hyperoct
