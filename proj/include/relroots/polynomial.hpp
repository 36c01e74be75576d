#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "relroots/bigint.hpp"

namespace relroots {

// Dense univariate polynomial in q with exact integer coefficients,
// stored ascending with no trailing zeros (the zero polynomial is empty).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(Int v);
    static Poly monomial(Int v, int k);
    static Poly one_minus_q_pow(int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Int& s) const;
    Poly shifted(int k) const;  // multiply by q^k
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;
    std::complex<double> eval(std::complex<double> z) const;

    // Divides by (1-q); returns false (and leaves *this alone) unless p(1) == 0.
    bool divide_one_minus_q();
    // Strips the maximal (1-q)^t factor and returns t.
    int strip_unit_root_factor();

    std::vector<std::string> coeff_strings() const;

private:
    void normalize();
    std::vector<Int> c_;
};

// F- and H-vectors are coefficient lists F_0..F_d resp. H_0..H_d (d implicit).
// H_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) F_i, the q/(1-q) change of basis.
Coeffs f_to_h(const Coeffs& f);
// Inverse transform, F_k = sum_{i<=k} C(d-i, k-i) H_i.
Coeffs h_to_f(const Coeffs& h);

Poly poly_from(const Coeffs& v);

// Reliability in factored form (1-q)^unit_mult * h(q).  A zero h encodes
// the identically-zero reliability of the void complex.
struct RelPoly {
    Poly h;
    int unit_mult = 0;

    bool is_zero() const { return h.is_zero(); }
    Poly expand() const;  // multiply the factors back out
    bool operator==(const RelPoly& o) const { return h == o.h && unit_mult == o.unit_mult; }
};

struct BrownColbournEntry {
    Rat value;     // (-1)^j sum_{i<=j} (-b)^i H_i
    bool nonneg;
};

// Per-j partial alternating sums at rational b >= 1 (DomainError below 1).
std::vector<BrownColbournEntry> brown_colbourn_check(const Coeffs& h, const Rat& b);

}  // namespace relroots
