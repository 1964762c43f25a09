#include "pencil_tns/binary_form.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pencil_tns/error.hpp"

namespace ptns {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (degree < 0 || c_.size() != static_cast<size_t>(degree) + 1)
        throw InputError("binary form of degree " + std::to_string(degree) + " needs " +
                         std::to_string(degree + 1) + " coefficients");
}

BinaryForm BinaryForm::zero(int degree) {
    return BinaryForm(degree, std::vector<Rational>(static_cast<size_t>(degree) + 1));
}

BinaryForm BinaryForm::homogenize(const Poly& p, int degree) {
    if (p.degree() > degree) throw Error("degree-overflow");
    std::vector<Rational> c(static_cast<size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) c[static_cast<size_t>(i)] = p.coeff(degree - i);
    return BinaryForm(degree, std::move(c));
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

int BinaryForm::v1_multiplicity() const {
    if (is_zero()) throw Error("zero-form");
    int e = 0;
    while (c_[static_cast<size_t>(e)].is_zero()) ++e;
    return e;
}

Poly BinaryForm::dehomogenize() const {
    std::vector<Rational> p(c_.size());
    for (int i = 0; i <= degree_; ++i) p[static_cast<size_t>(degree_ - i)] = c_[static_cast<size_t>(i)];
    return Poly(std::move(p));
}

Rational BinaryForm::eval(const Rational& v0, const Rational& v1) const {
    Rational acc;
    for (int i = 0; i <= degree_; ++i) {
        Rational term = c_[static_cast<size_t>(i)];
        if (term.is_zero()) continue;
        for (int k = 0; k < degree_ - i; ++k) term *= v0;
        for (int k = 0; k < i; ++k) term *= v1;
        acc += term;
    }
    return acc;
}

BinaryForm BinaryForm::substitute(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d) const {
    BinaryForm x = linear(a, b), y = linear(c, d);
    BinaryForm acc = zero(degree_);
    for (int i = 0; i <= degree_; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        acc = acc + pow(x, degree_ - i) * pow(y, i) * c_[static_cast<size_t>(i)];
    }
    return acc;
}

BinaryForm BinaryForm::normalized() const {
    if (is_zero()) return *this;
    return *this * c_[static_cast<size_t>(v1_multiplicity())].inverse();
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    BinaryForm r = BinaryForm::zero(f.degree_ + g.degree_);
    for (int i = 0; i <= f.degree_; ++i) {
        if (f.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j <= g.degree_; ++j)
            r.c_[static_cast<size_t>(i + j)] += f.c_[static_cast<size_t>(i)] * g.c_[static_cast<size_t>(j)];
    }
    return r;
}

BinaryForm operator*(BinaryForm f, const Rational& s) {
    for (auto& c : f.c_) c *= s;
    return f;
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree_ != g.degree_) throw Error("degree-mismatch");
    BinaryForm r = f;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += g.c_[i];
    return r;
}

std::string BinaryForm::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree_; ++i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        int e0 = degree_ - i, e1 = i;
        if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        std::string cs = (c.sign() < 0 ? -c : c).str();
        std::string mono;
        auto var = [&](const char* v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        var("v0", e0);
        var("v1", e1);
        if (mono.empty()) out += cs;
        else out += (cs == "1" ? "" : cs + "*") + mono;
    }
    return out;
}

BinaryForm pow(const BinaryForm& f, int e) {
    BinaryForm acc = BinaryForm::constant(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * f;
    return acc;
}

namespace {

BinaryForm v1_power(int e) {
    std::vector<Rational> c(static_cast<size_t>(e) + 1);
    c.back() = Rational(1);
    return BinaryForm(e, std::move(c));
}

}  // namespace

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    Poly p = gcd(f.dehomogenize(), g.dehomogenize());
    int e = std::min(f.v1_multiplicity(), g.v1_multiplicity());
    return (BinaryForm::homogenize(p, p.degree()) * v1_power(e)).normalized();
}

bool divides(const BinaryForm& d, const BinaryForm& f) {
    if (d.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (d.v1_multiplicity() > f.v1_multiplicity()) return false;
    return (f.dehomogenize() % d.dehomogenize()).is_zero();
}

BinaryForm exact_quotient(const BinaryForm& f, const BinaryForm& d) {
    if (!divides(d, f) || d.is_zero()) throw Error("not-divisible");
    if (f.is_zero()) return BinaryForm::zero(f.degree() - d.degree());
    Poly q = f.dehomogenize() / d.dehomogenize();
    int e = f.v1_multiplicity() - d.v1_multiplicity();
    return BinaryForm::homogenize(q, q.degree()) * v1_power(e);
}

MultiplicityProfile squarefree_decompose(const BinaryForm& f) {
    if (f.is_zero()) throw Error("zero-form");
    int e_inf = f.v1_multiplicity();
    Poly p = f.dehomogenize();

    std::map<int, BinaryForm> by_mult;
    for (auto& [a, i] : squarefree_factors(p)) by_mult.emplace(i, BinaryForm::homogenize(a, a.degree()));
    if (e_inf > 0) {
        auto it = by_mult.find(e_inf);
        if (it == by_mult.end()) by_mult.emplace(e_inf, v1_power(1));
        else it->second = it->second * v1_power(1);
    }

    MultiplicityProfile prof;
    BinaryForm product = BinaryForm::constant(Rational(1));
    for (auto& [mult, form] : by_mult) {
        BinaryForm g = form.normalized();
        prof.factors.push_back({g, mult});
        prof.roots_by_multiplicity[mult] = g.degree();
        for (int k = 0; k < g.degree(); ++k) prof.partition.push_back(mult);
        product = product * pow(g, mult);
    }
    std::sort(prof.partition.rbegin(), prof.partition.rend());
    int lead = product.v1_multiplicity();
    prof.content = f.coeff(lead) / product.coeff(lead);
    return prof;
}

BinaryForm squarefree_part(const BinaryForm& f) {
    BinaryForm acc = BinaryForm::constant(Rational(1));
    for (auto& fac : squarefree_decompose(f).factors) acc = acc * fac.form;
    return acc;
}

bool merge_coarsening(const std::vector<int>& mu, const std::vector<int>& lambda) {
    long smu = std::accumulate(mu.begin(), mu.end(), 0L);
    long slam = std::accumulate(lambda.begin(), lambda.end(), 0L);
    if (smu != slam) throw Error("size-mismatch", "partitions of different totals");
    std::vector<int> parts(lambda);
    std::sort(parts.rbegin(), parts.rend());
    std::vector<int> room(mu);
    std::sort(room.rbegin(), room.rend());

    // Place the largest remaining part into some bin with enough room; skip bins whose
    // remaining room equals an earlier bin's (symmetric states).
    std::function<bool(size_t)> place = [&](size_t k) {
        if (k == parts.size())
            return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; });
        for (size_t b = 0; b < room.size(); ++b) {
            if (room[b] < parts[k]) continue;
            bool seen = false;
            for (size_t c = 0; c < b; ++c) seen = seen || room[c] == room[b];
            if (seen) continue;
            room[b] -= parts[k];
            bool ok = place(k + 1);
            room[b] += parts[k];
            if (ok) return true;
        }
        return false;
    };
    return place(0);
}

}  // namespace ptns
