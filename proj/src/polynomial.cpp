#include "relroots/polynomial.hpp"

#include <algorithm>

#include "relroots/errors.hpp"

namespace relroots {

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Int v) {
    Poly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

Poly Poly::monomial(Int v, int k) {
    Poly p;
    if (v != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
        p.c_.back() = std::move(v);
    }
    return p;
}

Poly Poly::one_minus_q_pow(int k) {
    if (k < 0) throw DomainError("negative exponent for (1-q)^k");
    std::vector<Int> c(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        c[i] = binomial(k, i);
        if (i & 1) c[i] = -c[i];
    }
    return Poly(std::move(c));
}

Int Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] -= o.c_[i];
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Int& s) const {
    if (s == 0) return {};
    std::vector<Int> r(c_);
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw DomainError("negative shift");
    std::vector<Int> r(c_.size() + static_cast<size_t>(k));
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int>(i);
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int Poly::eval_int(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + static_cast<double>(*it);
    return acc;
}

bool Poly::divide_one_minus_q() {
    if (is_zero()) return false;
    Int total = 0;
    for (const auto& x : c_) total += x;
    if (total != 0) return false;
    // p = (1-q) r  <=>  r_i = p_0 + ... + p_i  (the top prefix sum is 0).
    std::vector<Int> r(c_.size() - 1);
    Int acc = 0;
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        acc += c_[i];
        r[i] = acc;
    }
    c_ = std::move(r);
    normalize();
    return true;
}

int Poly::strip_unit_root_factor() {
    int t = 0;
    while (divide_one_minus_q()) ++t;
    return t;
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.str());
    return out;
}

Coeffs f_to_h(const Coeffs& f) {
    if (f.empty()) throw DomainError("f_to_h needs a nonempty F-vector");
    const int d = static_cast<int>(f.size()) - 1;
    Coeffs h(f.size());
    for (int k = 0; k <= d; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) {
            Int term = binomial(d - i, k - i) * f[i];
            if ((k - i) & 1) acc -= term; else acc += term;
        }
        h[k] = acc;
    }
    return h;
}

Coeffs h_to_f(const Coeffs& h) {
    if (h.empty()) throw DomainError("h_to_f needs a nonempty H-vector");
    const int d = static_cast<int>(h.size()) - 1;
    Coeffs f(h.size());
    for (int k = 0; k <= d; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) acc += binomial(d - i, k - i) * h[i];
        f[k] = acc;
    }
    return f;
}

Poly poly_from(const Coeffs& v) { return Poly(v); }

Poly RelPoly::expand() const {
    if (h.is_zero()) return {};
    return h * Poly::one_minus_q_pow(unit_mult);
}

std::vector<BrownColbournEntry> brown_colbourn_check(const Coeffs& h, const Rat& b) {
    if (h.empty()) throw DomainError("empty H-vector");
    if (b < 1) throw DomainError("Brown-Colbourn evaluation needs b >= 1");
    std::vector<BrownColbournEntry> out(h.size());
    Rat pw = 1;   // (-b)^i
    Rat sum = 0;  // sum_{i<=j} (-b)^i H_i
    for (size_t j = 0; j < h.size(); ++j) {
        sum += pw * Rat(h[j]);
        pw *= -b;
        Rat v = (j & 1) ? -sum : sum;
        out[j] = {v, v >= 0};
    }
    return out;
}

}  // namespace relroots
