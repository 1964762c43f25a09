#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "pencil_tns/error.hpp"
#include "pencil_tns/matrix.hpp"
#include "pencil_tns/rational.hpp"

namespace ptns {

using Shape = std::vector<std::size_t>;
using Index = std::vector<std::size_t>;

// Dense tensor with row-major entries (last slot fastest).
template <class S>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Shape shape, const S& fill = S{}) : shape_(std::move(shape)) {
        e_.assign(count(shape_), fill);
    }
    Tensor(Shape shape, std::vector<S> entries) : shape_(std::move(shape)), e_(std::move(entries)) {
        if (e_.size() != count(shape_)) throw InputError("entry count does not match shape");
    }

    static std::size_t count(const Shape& s) {
        return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
    }

    std::size_t order() const { return shape_.size(); }
    const Shape& shape() const { return shape_; }
    std::size_t dim(std::size_t slot) const { return shape_.at(slot); }
    std::size_t size() const { return e_.size(); }
    std::vector<S>& entries() { return e_; }
    const std::vector<S>& entries() const { return e_; }

    std::size_t offset(const Index& idx) const {
        if (idx.size() != shape_.size()) throw Error("index-order");
        std::size_t off = 0;
        for (std::size_t s = 0; s < shape_.size(); ++s) {
            if (idx[s] >= shape_[s]) throw Error("index-range");
            off = off * shape_[s] + idx[s];
        }
        return off;
    }
    Index unravel(std::size_t off) const {
        Index idx(shape_.size());
        for (std::size_t s = shape_.size(); s-- > 0;) {
            idx[s] = off % shape_[s];
            off /= shape_[s];
        }
        return idx;
    }
    S& at(const Index& idx) { return e_[offset(idx)]; }
    const S& at(const Index& idx) const { return e_[offset(idx)]; }

    Tensor reshaped(Shape s) const {
        if (count(s) != e_.size()) throw Error("shape-mismatch", "reshape");
        return Tensor(std::move(s), e_);
    }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const S& x) { return x.is_zero(); });
    }

    friend Tensor operator+(Tensor a, const Tensor& b) {
        if (a.shape_ != b.shape_) throw Error("shape-mismatch", "tensor sum");
        for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
        return a;
    }
    friend Tensor operator-(Tensor a, const Tensor& b) {
        if (a.shape_ != b.shape_) throw Error("shape-mismatch", "tensor difference");
        for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
        return a;
    }
    friend Tensor operator*(Tensor a, const S& s) {
        for (auto& x : a.e_) x = x * s;
        return a;
    }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.shape_ == b.shape_ && a.e_ == b.e_; }

private:
    Shape shape_;
    std::vector<S> e_;
};

template <class To, class From, class F>
Tensor<To> map_entries(const Tensor<From>& t, F&& f) {
    std::vector<To> out;
    out.reserve(t.size());
    for (const auto& x : t.entries()) out.push_back(f(x));
    return Tensor<To>(t.shape(), std::move(out));
}

// Result slot s is slot perm[s] of t.
template <class S>
Tensor<S> permute_slots(const Tensor<S>& t, const std::vector<std::size_t>& perm) {
    if (perm.size() != t.order()) throw Error("bad-permutation");
    Shape shape(perm.size());
    for (std::size_t s = 0; s < perm.size(); ++s) shape[s] = t.dim(perm[s]);
    Tensor<S> r(shape);
    Index dst(perm.size());
    for (std::size_t off = 0; off < t.size(); ++off) {
        Index src = t.unravel(off);
        for (std::size_t s = 0; s < perm.size(); ++s) dst[s] = src[perm[s]];
        r.at(dst) = t.entries()[off];
    }
    return r;
}

// Matrix with rows indexed by the slots in `row_slots` (increasing order) and columns by the rest.
template <class S>
Matrix<S> flatten(const Tensor<S>& t, std::vector<std::size_t> row_slots) {
    std::sort(row_slots.begin(), row_slots.end());
    row_slots.erase(std::unique(row_slots.begin(), row_slots.end()), row_slots.end());
    if (row_slots.empty() || row_slots.size() >= t.order() || row_slots.back() >= t.order())
        throw Error("bad-flattening", "row slots must form a nonempty proper subset");
    std::vector<std::size_t> perm = row_slots;
    for (std::size_t s = 0; s < t.order(); ++s)
        if (!std::binary_search(row_slots.begin(), row_slots.end(), s)) perm.push_back(s);
    Tensor<S> p = permute_slots(t, perm);
    std::size_t rows = 1;
    for (auto s : row_slots) rows *= t.dim(s);
    Matrix<S> m(rows, t.size() / rows);
    m.data() = p.entries();
    return m;
}

// Contracts slot pairs (slot of t1, slot of t2); result has t1's free slots, then t2's.
template <class S>
Tensor<S> contract(const Tensor<S>& t1, const Tensor<S>& t2,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<bool> used1(t1.order(), false), used2(t2.order(), false);
    std::vector<std::size_t> c1, c2;
    for (auto [a, b] : pairs) {
        if (a >= t1.order() || b >= t2.order() || used1[a] || used2[b])
            throw Error("bad-contraction", "slot out of range or repeated");
        if (t1.dim(a) != t2.dim(b)) throw Error("bad-contraction", "paired slots differ in dimension");
        used1[a] = used2[b] = true;
        c1.push_back(a);
        c2.push_back(b);
    }
    std::vector<std::size_t> perm1, perm2 = c2;
    Shape out_shape;
    for (std::size_t s = 0; s < t1.order(); ++s)
        if (!used1[s]) perm1.push_back(s), out_shape.push_back(t1.dim(s));
    perm1.insert(perm1.end(), c1.begin(), c1.end());
    for (std::size_t s = 0; s < t2.order(); ++s)
        if (!used2[s]) perm2.push_back(s), out_shape.push_back(t2.dim(s));

    std::size_t inner = 1;
    for (auto s : c1) inner *= t1.dim(s);
    Matrix<S> m1(t1.size() / inner, inner), m2(inner, t2.size() / inner);
    m1.data() = permute_slots(t1, perm1).entries();
    m2.data() = permute_slots(t2, perm2).entries();
    Matrix<S> prod = m1 * m2;
    return Tensor<S>(out_shape, std::move(prod.data()));
}

// Applies the map m (new_dim x dim(slot)) to one slot.
template <class S>
Tensor<S> mode_product(const Tensor<S>& t, std::size_t slot, const Matrix<S>& m) {
    if (slot >= t.order() || m.cols() != t.dim(slot)) throw Error("shape-mismatch", "mode product");
    std::size_t outer = 1, inner = 1;
    for (std::size_t s = 0; s < slot; ++s) outer *= t.dim(s);
    for (std::size_t s = slot + 1; s < t.order(); ++s) inner *= t.dim(s);
    Shape shape = t.shape();
    shape[slot] = m.rows();
    Tensor<S> r(shape);
    std::size_t old_dim = t.dim(slot), new_dim = m.rows();
    const auto& src = t.entries();
    auto& dst = r.entries();
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t k = 0; k < old_dim; ++k)
            for (std::size_t a = 0; a < new_dim; ++a) {
                const S& f = m(a, k);
                if (f.is_zero()) continue;
                std::size_t sbase = (o * old_dim + k) * inner, dbase = (o * new_dim + a) * inner;
                for (std::size_t i = 0; i < inner; ++i)
                    if (!src[sbase + i].is_zero()) dst[dbase + i] += f * src[sbase + i];
            }
    return r;
}

// maps[s] acts on slot s; an empty (0 x 0) matrix leaves the slot untouched.
template <class S>
Tensor<S> apply_maps(Tensor<S> t, const std::vector<Matrix<S>>& maps) {
    if (maps.size() != t.order()) throw Error("shape-mismatch", "one map per slot expected");
    for (std::size_t s = 0; s < maps.size(); ++s)
        if (maps[s].rows() != 0 || maps[s].cols() != 0) t = mode_product(t, s, maps[s]);
    return t;
}

// Block sum: slots listed in `shared` must agree and are not enlarged.
template <class S>
Tensor<S> direct_sum(const Tensor<S>& a, const Tensor<S>& b, const std::vector<std::size_t>& shared = {}) {
    if (a.order() != b.order()) throw Error("shape-mismatch", "direct sum");
    std::vector<bool> is_shared(a.order(), false);
    for (auto s : shared) is_shared.at(s) = true;
    Shape shape(a.order());
    for (std::size_t s = 0; s < a.order(); ++s) {
        if (is_shared[s] && a.dim(s) != b.dim(s)) throw Error("shape-mismatch", "shared slot differs");
        shape[s] = is_shared[s] ? a.dim(s) : a.dim(s) + b.dim(s);
    }
    Tensor<S> r(shape);
    for (std::size_t off = 0; off < a.size(); ++off) r.at(a.unravel(off)) = a.entries()[off];
    for (std::size_t off = 0; off < b.size(); ++off) {
        Index idx = b.unravel(off);
        for (std::size_t s = 0; s < idx.size(); ++s)
            if (!is_shared[s]) idx[s] += a.dim(s);
        r.at(idx) = b.entries()[off];
    }
    return r;
}

// Per-slot conciseness: the flattening at each slot has full row rank.
template <class S>
std::vector<bool> concise_slots(const Tensor<S>& t) {
    std::vector<bool> out(t.order());
    for (std::size_t s = 0; s < t.order(); ++s) {
        if (t.order() == 1) {
            out[s] = t.dim(0) == 0 || (t.dim(0) == 1 && !t.is_zero());
            continue;
        }
        out[s] = t.dim(s) == 0 || (t.size() > 0 && rank(flatten(t, {s})) == t.dim(s));
    }
    return out;
}

template <class S>
bool is_concise(const Tensor<S>& t) {
    auto c = concise_slots(t);
    return std::all_of(c.begin(), c.end(), [](bool b) { return b; });
}

class Rng;
// Integer entries drawn uniformly from [lo, hi].
Tensor<Rational> random_tensor(const Shape& shape, Rng& rng, long lo = -10000, long hi = 10000);
Tensor<Rational> random_tensor(const Shape& shape, std::uint64_t seed, long lo = -10000, long hi = 10000);
Matrix<Rational> random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long lo = -10000, long hi = 10000);
// Rejection-sampled invertible matrix with entries in [lo, hi].
Matrix<Rational> random_invertible(std::size_t n, Rng& rng, long lo = -5, long hi = 5);

Tensor<Fp> reduce_mod(const Tensor<Rational>& t, std::uint64_t p);
Matrix<Fp> reduce_mod(const Matrix<Rational>& m, std::uint64_t p);

}  // namespace ptns
