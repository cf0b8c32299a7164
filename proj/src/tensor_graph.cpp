#include "hyperoct/tensor_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hyperoct/errors.hpp"

namespace hyperoct {

Bipartition trivial_bipartition(int n) {
    return {Partition(std::vector<int>{n}), Partition{}};
}

Bipartition natural_bipartition(int n) {
    return {Partition(std::vector<int>{n - 1}), Partition(std::vector<int>{1})};
}

Bipartition sign_bipartition(int n) {
    return {Partition(std::vector<int>(n, 1)), Partition{}};
}

std::set<Bipartition> pieri_neighbors(const Bipartition& b) {
    std::set<Bipartition> out;
    for (const Box& r : removable_boxes(b.alpha)) {
        Partition a2 = remove_box(b.alpha, r);
        for (const Box& a : addable_boxes(b.beta)) out.insert({a2, add_box(b.beta, a)});
    }
    for (const Box& r : removable_boxes(b.beta)) {
        Partition b2 = remove_box(b.beta, r);
        for (const Box& a : addable_boxes(b.alpha)) out.insert({add_box(b.alpha, a), b2});
    }
    return out;
}

TensorGraph TensorGraph::build(int n) {
    if (n < 1) throw std::invalid_argument("TensorGraph: n < 1");
    if (n > 30) throw capacity_error("TensorGraph: vertex set too large for N > 30");
    TensorGraph g;
    g.n = n;
    g.vertices = enumerate_bipartitions(n);
    for (const auto& v : g.vertices) g.adjacency[v] = pieri_neighbors(v);
    return g;
}

std::map<Bipartition, int> bfs(const TensorGraph& g, const std::set<Bipartition>& sources) {
    if (sources.empty()) throw std::invalid_argument("bfs: empty source set");
    std::map<Bipartition, int> dist;
    std::deque<Bipartition> queue;
    for (const auto& s : sources) {
        if (!g.adjacency.count(s)) throw std::out_of_range("bfs: source not a vertex");
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Bipartition v = queue.front();
        queue.pop_front();
        int d = dist[v];
        for (const auto& w : g.adjacency.at(v)) {
            if (!dist.count(w)) {
                dist[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    if (dist.size() != g.vertices.size()) throw std::logic_error("bfs: graph not connected");
    return dist;
}

int distance_formula(const Bipartition& b) {
    return 2 * (b.n() - b.alpha.first()) - b.beta.sum();
}

BigInt MultiplicityVector::total_dimension() const {
    BigInt total = 0;
    for (const auto& [b, m] : entries) total += m * dim_irrep(b);
    return total;
}

MultiplicityVector multiplicity_evolution(int n, int t) {
    if (n < 2 || t < 1) throw std::invalid_argument("multiplicity_evolution: need n >= 2, t >= 1");
    TensorGraph g = TensorGraph::build(n);
    MultiplicityVector mv;
    mv.n = n;
    mv.t = t;
    mv.entries[natural_bipartition(n)] = 1;
    for (int s = 1; s < t; ++s) {
        std::map<Bipartition, BigInt> next;
        for (const auto& [b, m] : mv.entries)
            for (const auto& w : g.adjacency.at(b)) next[w] += m;
        mv.entries = std::move(next);
    }
    return mv;
}

std::set<Bipartition> spectral_reach(int n, int t) {
    if (n < 2 || t < 1) throw std::invalid_argument("spectral_reach: need n >= 2, t >= 1");
    TensorGraph g = TensorGraph::build(n);
    auto dist = bfs(g, {natural_bipartition(n)});
    std::set<Bipartition> reach;
    for (const auto& [b, d] : dist)
        if (d <= t - 1) reach.insert(b);
    return reach;
}

Rational p_opt(int n, int t) {
    BigInt mass = 0;
    for (const auto& b : spectral_reach(n, t)) {
        BigInt d = dim_irrep(b);
        mass += d * d;
    }
    return Rational(mass, int_pow(2, n) * factorial(n));
}

QlvResult qlv_graph(int n) {
    if (n < 2) throw std::invalid_argument("qlv_graph: n < 2");
    TensorGraph g = TensorGraph::build(n);
    auto dist = bfs(g, {natural_bipartition(n)});
    int ecc = 0;
    for (const auto& [b, d] : dist) ecc = std::max(ecc, d);
    QlvResult r;
    r.qlv = ecc + 1;
    for (const auto& [b, d] : dist)
        if (d == ecc) r.bottlenecks.insert(b);
    return r;
}

std::string to_dot(const TensorGraph& g) {
    std::string s = "graph tensor_product_graph {\n";
    for (const auto& v : g.vertices) s += "  \"" + v.to_string() + "\";\n";
    for (const auto& [v, nbrs] : g.adjacency) {
        for (const auto& w : nbrs)
            if (v < w) s += "  \"" + v.to_string() + "\" -- \"" + w.to_string() + "\";\n";
    }
    return s + "}\n";
}

}  // namespace hyperoct
