#include "pencil_tns/network.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace ptns {

Network::Network(std::vector<std::size_t> dims, std::vector<Edge> edges) : dims_(std::move(dims)) {
    for (std::size_t n : dims_)
        if (n == 0) throw InputError("physical dimensions must be positive");
    for (const auto& e : edges) add_edge(e.u, e.v, e.m);
}

Network Network::triangle(std::size_t m01, std::size_t m12, std::size_t m02, std::size_t n0, std::size_t n1,
                          std::size_t n2) {
    return Network({n0, n1, n2}, {{0, 1, m01}, {0, 2, m02}, {1, 2, m12}});
}

std::size_t Network::add_vertex(std::size_t n) {
    if (n == 0) throw InputError("physical dimensions must be positive");
    dims_.push_back(n);
    return dims_.size() - 1;
}

void Network::add_edge(std::size_t u, std::size_t v, std::size_t m) {
    if (u >= dims_.size() || v >= dims_.size()) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self loops are not allowed");
    if (m == 0) throw InputError("bond dimensions must be positive");
    edges_.push_back({u, v, m});
}

std::vector<std::size_t> Network::incident_edges(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].u == i || edges_[e].v == i) out.push_back(e);
    auto key = [&](std::size_t e) {
        return std::make_tuple(std::min(edges_[e].u, edges_[e].v), std::max(edges_[e].u, edges_[e].v), e);
    };
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    return out;
}

std::size_t Network::bond_space_dim(std::size_t i) const {
    std::size_t d = 1;
    for (auto e : incident_edges(i)) d *= edges_[e].m;
    return d;
}

bool Network::connected() const {
    if (dims_.empty()) return false;
    std::vector<std::size_t> parent(dims_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges_) parent[find(e.u)] = find(e.v);
    for (std::size_t i = 0; i < dims_.size(); ++i)
        if (find(i) != find(0)) return false;
    return true;
}

std::vector<Criticality> criticality(const Network& net) {
    std::vector<Criticality> out;
    for (std::size_t i = 0; i < net.vertex_count(); ++i) {
        std::size_t w = net.bond_space_dim(i), n = net.dims()[i];
        out.push_back(n < w ? Criticality::subcritical : (n == w ? Criticality::critical : Criticality::supercritical));
    }
    return out;
}

std::vector<Matrix<Rational>> random_maps(const Network& net, Rng& rng, long lo, long hi) {
    std::vector<Matrix<Rational>> maps;
    for (std::size_t i = 0; i < net.vertex_count(); ++i)
        maps.push_back(random_matrix(net.dims()[i], net.bond_space_dim(i), rng, lo, hi));
    return maps;
}

long long ambient_dim(const Network& net) {
    long long a = 1;
    for (auto n : net.dims()) a *= static_cast<long long>(n);
    return a;
}

long long parameter_count(const Network& net) {
    long long c = 1;
    for (std::size_t i = 0; i < net.vertex_count(); ++i)
        c += static_cast<long long>(net.dims()[i] * net.bond_space_dim(i)) - 1;
    for (const auto& e : net.edges()) c -= static_cast<long long>(e.m * e.m) - 1;
    return c;
}

long long expected_dim(const Network& net) { return std::min(parameter_count(net), ambient_dim(net)); }

std::size_t jacobian_rank_dim(const Network& net, std::uint64_t seed, std::uint64_t modulus) {
    Fp::check_modulus(modulus);
    Rng rng(seed, 0x6a6163);
    std::size_t d = net.vertex_count();
    std::vector<Matrix<Fp>> maps;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix<Fp> x(net.dims()[i], net.bond_space_dim(i));
        for (auto& v : x.data()) v = Fp(rng.next() % modulus, modulus);
        maps.push_back(std::move(x));
    }
    Tensor<Fp> g = graph_tensor<Fp>(net);
    std::size_t ambient = static_cast<std::size_t>(ambient_dim(net));

    // Column for E_ab at vertex i: apply every map except X_i, then put the b-th
    // slice of slot i at row a.
    std::vector<std::vector<Fp>> columns;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Matrix<Fp>> partial = maps;
        partial[i] = Matrix<Fp>();
        Tensor<Fp> r = apply_maps(g, partial);
        std::size_t outer = 1, inner = 1;
        for (std::size_t s = 0; s < i; ++s) outer *= net.dims()[s];
        for (std::size_t s = i + 1; s < d; ++s) inner *= net.dims()[s];
        std::size_t n = net.dims()[i], w = net.bond_space_dim(i);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < w; ++b) {
                std::vector<Fp> col(ambient, Fp(0, modulus));
                for (std::size_t o = 0; o < outer; ++o)
                    for (std::size_t k = 0; k < inner; ++k)
                        col[(o * n + a) * inner + k] = r.entries()[(o * w + b) * inner + k];
                columns.push_back(std::move(col));
            }
    }
    Matrix<Fp> jac(columns.size(), ambient);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t k = 0; k < ambient; ++k) jac(c, k) = columns[c][k];
    return rank(jac);
}

OracleResult jacobian_oracle(const Network& net, const std::vector<std::uint64_t>& seeds, std::uint64_t modulus) {
    OracleResult r;
    for (auto s : seeds) {
        r.ranks.push_back(jacobian_rank_dim(net, s, modulus));
        r.dim = std::max(r.dim, r.ranks.back());
    }
    r.consistent = std::all_of(r.ranks.begin(), r.ranks.end(), [&](std::size_t x) { return x == r.dim; });
    return r;
}

Network augment(const Network& net, std::size_t i, std::size_t j, std::size_t m) {
    if (i >= net.vertex_count() || j >= net.vertex_count() || i == j) throw InputError("bad augmentation endpoints");
    std::vector<std::size_t> dims{2};
    dims.insert(dims.end(), net.dims().begin(), net.dims().end());
    std::vector<Edge> edges;
    for (const auto& e : net.edges()) edges.push_back({e.u + 1, e.v + 1, e.m});
    edges.push_back({0, i + 1, m});
    edges.push_back({0, j + 1, m});
    return Network(dims, edges);
}

AugmentedDefect augmented_defect(const Network& base, const std::vector<Pin>& pins) {
    auto crit = criticality(base);
    for (std::size_t v = 0; v < crit.size(); ++v)
        if (crit[v] != Criticality::critical)
            throw Error("non-critical", "vertex " + std::to_string(v) + " is not at critical dimension");
    std::set<std::size_t> used;
    AugmentedDefect out;
    out.network = base;
    for (const auto& pin : pins) {
        if (!used.insert(pin.i).second || !used.insert(pin.j).second)
            throw InputError("pin endpoints must be pairwise distinct");
        const Edge* bond = nullptr;
        for (const auto& e : base.edges())
            if ((e.u == pin.i && e.v == pin.j) || (e.u == pin.j && e.v == pin.i)) {
                bond = &e;
                break;
            }
        if (!bond) throw InputError("pins must sit on edges of the base network");
        out.defect += static_cast<long long>((pin.m - 1) * (bond->m * bond->m - 1));
    }
    // Earlier pins shift by one with every later augmentation.
    std::size_t shift = 0;
    for (const auto& pin : pins) {
        out.network = augment(out.network, pin.i + shift, pin.j + shift, pin.m);
        ++shift;
    }
    for (std::size_t v = 0; v < out.network.vertex_count(); ++v)
        if (v >= pins.size()) out.network.set_dim(v, out.network.bond_space_dim(v));
    return out;
}

}  // namespace ptns
