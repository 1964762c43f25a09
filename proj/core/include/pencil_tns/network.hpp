#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pencil_tns/matrix.hpp"
#include "pencil_tns/rng.hpp"
#include "pencil_tns/tensor.hpp"

namespace ptns {

struct Edge {
    std::size_t u, v;
    std::size_t m;  // bond dimension
};

// Tensor network graph: vertex i carries a physical dimension n_i, each edge a bond.
// The auxiliary space W_i is the tensor product of the bonds at i, ordered by
// (min endpoint, max endpoint, insertion index).
class Network {
public:
    Network() = default;
    Network(std::vector<std::size_t> dims, std::vector<Edge> edges);
    static Network triangle(std::size_t m01, std::size_t m12, std::size_t m02, std::size_t n0, std::size_t n1,
                            std::size_t n2);

    std::size_t vertex_count() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t add_vertex(std::size_t n);
    void add_edge(std::size_t u, std::size_t v, std::size_t m);
    void set_dim(std::size_t i, std::size_t n) { dims_.at(i) = n; }

    // Edge indices incident to vertex i in slot order.
    std::vector<std::size_t> incident_edges(std::size_t i) const;
    std::size_t bond_space_dim(std::size_t i) const;
    bool connected() const;

private:
    std::vector<std::size_t> dims_;
    std::vector<Edge> edges_;
};

enum class Criticality { subcritical, critical, supercritical };
std::vector<Criticality> criticality(const Network& net);

// Tensor of shape (dim W_0, ..., dim W_{d-1}): the product of identities on all bonds.
template <class S>
Tensor<S> graph_tensor(const Network& net) {
    if (!net.connected()) throw Error("disconnected", "network graph must be connected");
    std::size_t d = net.vertex_count();
    Shape shape(d);
    std::vector<std::vector<std::size_t>> inc(d);
    for (std::size_t i = 0; i < d; ++i) {
        shape[i] = net.bond_space_dim(i);
        inc[i] = net.incident_edges(i);
    }
    Tensor<S> t(shape);
    const auto& edges = net.edges();
    std::vector<std::size_t> bond(edges.size(), 0);
    Index idx(d);
    for (;;) {
        for (std::size_t i = 0; i < d; ++i) {
            std::size_t w = 0;
            for (auto e : inc[i]) w = w * edges[e].m + bond[e];
            idx[i] = w;
        }
        t.at(idx) = S(1);
        std::size_t e = 0;
        while (e < edges.size() && ++bond[e] == edges[e].m) bond[e++] = 0;
        if (e == edges.size()) break;
    }
    return t;
}

// (X_0 (x) ... (x) X_{d-1}) applied to the graph tensor; X_i is n_i x dim W_i.
template <class S>
Tensor<S> network_state(const Network& net, const std::vector<Matrix<S>>& maps) {
    if (maps.size() != net.vertex_count()) throw InputError("one map per vertex expected");
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (maps[i].rows() != net.dims()[i] || maps[i].cols() != net.bond_space_dim(i))
            throw InputError("map " + std::to_string(i) + " has the wrong shape");
    return apply_maps(graph_tensor<S>(net), maps);
}

std::vector<Matrix<Rational>> random_maps(const Network& net, Rng& rng, long lo = -10000, long hi = 10000);

long long ambient_dim(const Network& net);
// sum_i (n_i dim W_i - 1) - sum_e (m_e^2 - 1) + 1
long long parameter_count(const Network& net);
long long expected_dim(const Network& net);

// Rank over F_p of the differential of the parametrization at random maps.
std::size_t jacobian_rank_dim(const Network& net, std::uint64_t seed, std::uint64_t modulus = Fp::kDefaultModulus);

struct OracleResult {
    std::vector<std::size_t> ranks;  // one per seed
    std::size_t dim = 0;             // maximum over seeds
    bool consistent = true;          // all seeds agree
};
OracleResult jacobian_oracle(const Network& net, const std::vector<std::uint64_t>& seeds,
                             std::uint64_t modulus = Fp::kDefaultModulus);

// New vertex 0 with n = 2 joined to the old vertices i and j by bonds of size m.
// Old vertex k becomes k + 1.
Network augment(const Network& net, std::size_t i, std::size_t j, std::size_t m);

struct Pin {
    std::size_t i, j;  // endpoints of an edge of the base network
    std::size_t m;     // bond size of the new vertex
};

struct AugmentedDefect {
    long long defect = 0;
    Network network;  // augmented, all old vertices at critical dimension
};

// Defect sum_r (m_r - 1)(m_{i_r j_r}^2 - 1) for pins at pairwise distinct endpoints.
AugmentedDefect augmented_defect(const Network& base, const std::vector<Pin>& pins);

}  // namespace ptns
