#include "relroots/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "relroots/errors.hpp"

namespace relroots {

const char* verdict_name(DiskVerdict v) {
    switch (v) {
        case DiskVerdict::all_in_closed_disk: return "all-in-closed-disk";
        case DiskVerdict::root_outside: return "root-outside";
        case DiskVerdict::boundary_uncertain: return "boundary-uncertain";
    }
    return "?";
}

const char* decided_by_name(DecidedBy d) {
    switch (d) {
        case DecidedBy::numeric: return "numeric";
        case DecidedBy::hurwitz: return "hurwitz";
        case DecidedBy::farebrother_cubic: return "farebrother_cubic";
        case DecidedBy::farebrother_quartic: return "farebrother_quartic";
        case DecidedBy::enestrom_kakeya: return "enestrom_kakeya";
        case DecidedBy::exact_unit: return "exact_unit";
        case DecidedBy::degenerate: return "degenerate";
    }
    return "?";
}

bool hurwitz_quadratic_in_disk(const Rat& b, const Rat& c) {
    return abs(c) <= 1 && abs(b) <= c + 1;
}

bool farebrother_cubic(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3) {
    if (a0 <= 0 || a1 <= 0 || a2 <= 0 || a3 <= 0)
        throw DomainError("cubic criterion needs positive coefficients");
    return a0 + a1 + a2 + a3 >= 0 && a0 - a1 + a2 - a3 >= 0 &&
           3 * a0 + a1 - a2 - 3 * a3 >= 0 && a0 * a0 - a3 * a3 + a1 * a3 - a0 * a2 >= 0;
}

bool farebrother_quartic(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4) {
    return 1 > a4 && 3 + 3 * a4 >= a2 && 1 + a1 + a2 + a3 + a4 >= 0 &&
           1 - a1 + a2 - a3 + a4 >= 0 &&
           (1 - a4) * (1 - a4 * a4) - a2 * (1 - a4) * (1 - a4) +
                   (a1 - a3) * (a3 - a1 * a4) >
               0;
}

bool enestrom_kakeya_applies(const Poly& p) {
    if (p.degree() < 0) return false;
    const auto& c = p.coeffs();
    if (c[0] <= 0) return false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] < c[i - 1]) return false;
    return true;
}

namespace {

using Cplx = std::complex<double>;
using CplxL = std::complex<long double>;

// Integer coefficients rounded into doubles, globally rescaled when they
// would overflow.  The common scale cancels in every root computation.
std::vector<double> to_doubles(const Coeffs& c) {
    unsigned max_bits = 0;
    for (const Int& x : c)
        if (x != 0) max_bits = std::max(max_bits, static_cast<unsigned>(msb(abs(x)) + 1));
    unsigned shift = max_bits > 900 ? max_bits - 900 : 0;
    std::vector<double> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        Int v = shift ? Int(abs(c[i]) >> shift) : abs(c[i]);
        out[i] = v.convert_to<double>();
        if (c[i] < 0) out[i] = -out[i];
        if (c[i] != 0 && (out[i] == 0.0 || !std::isfinite(out[i])))
            throw ResourceError("coefficient magnitude spread exceeds the numeric range");
    }
    return out;
}

struct EvalL {
    CplxL value;
    CplxL deriv;
    long double coeff_mag;  // sum |a_i| |z|^i
};

EvalL eval_with_deriv(const std::vector<double>& a, CplxL z) {
    CplxL v = 0, d = 0;
    long double s = 0;
    const long double az = std::abs(z);
    for (size_t i = a.size(); i-- > 0;) {
        d = d * z + v;
        v = v * z + static_cast<long double>(a[i]);
        s = s * az + std::fabs(static_cast<long double>(a[i]));
    }
    return {v, d, s};
}

}  // namespace

RootReport find_roots(const Poly& p) {
    if (p.degree() < 1) throw DomainError("root finding needs degree >= 1");
    const std::vector<double> a = to_doubles(p.coeffs());
    const int deg = p.degree();

    RootReport rep;
    rep.decided_by = DecidedBy::numeric;

    // Exact zero roots come off first.
    int zero_mult = 0;
    while (zero_mult < deg && p.coeffs()[zero_mult] == 0) ++zero_mult;
    std::vector<double> b(a.begin() + zero_mult, a.end());
    const int n = static_cast<int>(b.size()) - 1;

    std::vector<Cplx> z(n);
    std::vector<double> res(n, 0.0);
    bool converged = true;
    if (n >= 1) {
        // Aberth simultaneous iteration with Gauss-Seidel updates from
        // points on a circle of the geometric-mean root radius; the offset
        // angle breaks any symmetry with the real axis.
        double r = std::pow(std::fabs(b[0] / b[n]), 1.0 / n);
        r = std::clamp(r, 1e-6, 1e6);
        for (int k = 0; k < n; ++k) {
            double ang = 2.0 * M_PI * k / n + 0.41 / n + 0.5;
            z[k] = r * Cplx(std::cos(ang), std::sin(ang));
        }
        if (n == 1) {
            z[0] = Cplx(-b[0] / b[1], 0.0);
        } else {
            const int max_iter = 400;
            int it = 0;
            for (; it < max_iter; ++it) {
                double worst = 0.0;
                for (int k = 0; k < n; ++k) {
                    auto ev = eval_with_deriv(b, CplxL(z[k]));
                    if (std::abs(ev.value) == 0.0L) continue;
                    CplxL w;
                    if (std::abs(ev.deriv) == 0.0L)
                        w = CplxL(0.001, 0.001) * (1.0L + std::abs(CplxL(z[k])));
                    else
                        w = ev.value / ev.deriv;
                    CplxL s = 0;
                    for (int j = 0; j < n; ++j) {
                        if (j == k) continue;
                        CplxL d = CplxL(z[k]) - CplxL(z[j]);
                        if (std::abs(d) < 1e-300) d = CplxL(1e-300, 0);
                        s += CplxL(1.0L) / d;
                    }
                    CplxL denom = CplxL(1.0L) - w * s;
                    CplxL corr = std::abs(denom) < 1e-300 ? w : w / denom;
                    z[k] -= Cplx(corr);
                    worst = std::max(worst,
                                     static_cast<double>(std::abs(corr)) / (1.0 + std::abs(z[k])));
                }
                if (worst <= 1e-13) break;
            }
            converged = it < max_iter;
        }

        // Newton polish in extended precision.
        for (int k = 0; k < n; ++k) {
            CplxL zk(z[k]);
            for (int step = 0; step < 4; ++step) {
                auto ev = eval_with_deriv(b, zk);
                if (std::abs(ev.deriv) == 0.0L) break;
                CplxL corr = ev.value / ev.deriv;
                if (std::abs(corr) > 0.1L * (1.0L + std::abs(zk))) break;
                zk -= corr;
            }
            z[k] = Cplx(zk);
        }

        // Per-root error radius.  Simple roots use the Newton-style bound
        // n |p| / |p'|; clustered or flat spots fall back to the distance
        // bound through the product of the separations to the other roots.
        const long double eps = std::numeric_limits<double>::epsilon();
        const long double lead = std::fabs(static_cast<long double>(b[n]));
        for (int k = 0; k < n; ++k) {
            auto ev = eval_with_deriv(b, CplxL(z[k]));
            long double perr = std::abs(ev.value) + (2.0L * n + 2.0L) * eps * ev.coeff_mag;
            long double scale = 1.0L + std::abs(CplxL(z[k]));
            double cluster_radius = 1e-3 * static_cast<double>(scale);
            int mult = 0;
            long double far_product = lead;
            for (int j = 0; j < n; ++j) {
                double d = std::abs(z[k] - z[j]);
                if (j == k || d <= cluster_radius)
                    ++mult;
                else
                    far_product *= d;
            }
            long double bound;
            if (mult == 1 && std::abs(ev.deriv) > 0.0L) {
                bound = n * perr / std::abs(ev.deriv);
                if (bound > cluster_radius && far_product > 0.0L)
                    bound = std::pow(perr / far_product, 1.0L / mult);
            } else if (far_product > 0.0L) {
                bound = std::pow(perr / far_product, 1.0L / std::max(mult, 1));
            } else {
                bound = scale;
            }
            bound = std::max(bound, 16.0L * eps * scale);
            res[k] = static_cast<double>(bound);
        }
    }

    rep.converged = converged;
    for (int i = 0; i < zero_mult; ++i) rep.roots.push_back(Cplx(0.0, 0.0));
    for (int k = 0; k < n; ++k) rep.roots.push_back(z[k]);
    std::sort(rep.roots.begin(), rep.roots.end(), [](const Cplx& x, const Cplx& y) {
        double mx = std::abs(x), my = std::abs(y);
        if (mx != my) return mx < my;
        return std::arg(x) < std::arg(y);
    });
    rep.max_modulus = rep.roots.empty() ? 0.0 : std::abs(rep.roots.back());
    rep.residual_bound = 0.0;
    for (double rv : res) rep.residual_bound = std::max(rep.residual_bound, rv);
    if (!converged) rep.residual_bound = std::max(rep.residual_bound, 1.0);

    // Verdict: the numeric bound decides when the extreme modulus clears
    // the boundary band; otherwise exact criteria on the integer
    // coefficients take over.
    if (rep.max_modulus - rep.residual_bound > 1.0) {
        rep.verdict = DiskVerdict::root_outside;
        return rep;
    }
    if (rep.max_modulus + rep.residual_bound < 1.0) {
        rep.verdict = DiskVerdict::all_in_closed_disk;
        return rep;
    }

    const auto& c = p.coeffs();
    if (deg == 2) {
        Rat lead(c[2]);
        rep.decided_by = DecidedBy::hurwitz;
        rep.verdict = hurwitz_quadratic_in_disk(Rat(c[1]) / lead, Rat(c[0]) / lead)
                          ? DiskVerdict::all_in_closed_disk
                          : DiskVerdict::root_outside;
        return rep;
    }
    if (enestrom_kakeya_applies(p)) {
        rep.decided_by = DecidedBy::enestrom_kakeya;
        rep.verdict = DiskVerdict::all_in_closed_disk;
        return rep;
    }
    if (deg == 3 && c[0] > 0 && c[1] > 0 && c[2] > 0 && c[3] > 0 &&
        farebrother_cubic(Rat(c[3]), Rat(c[2]), Rat(c[1]), Rat(c[0]))) {
        rep.decided_by = DecidedBy::farebrother_cubic;
        rep.verdict = DiskVerdict::all_in_closed_disk;
        return rep;
    }
    if (deg == 4 && c[4] != 0) {
        Rat lead(c[4]);
        if (lead < 0) lead = -lead;
        Coeffs cc = c;
        if (c[4] < 0)
            for (auto& x : cc) x = -x;
        if (farebrother_quartic(Rat(cc[3]) / lead, Rat(cc[2]) / lead, Rat(cc[1]) / lead,
                                Rat(cc[0]) / lead)) {
            rep.decided_by = DecidedBy::farebrother_quartic;
            rep.verdict = DiskVerdict::all_in_closed_disk;
            return rep;
        }
    }
    rep.verdict = DiskVerdict::boundary_uncertain;
    return rep;
}

RootReport reliability_roots(const RelPoly& rel) {
    if (rel.is_zero()) throw DomainError("the zero reliability has no root report");
    RootReport rep;
    if (rel.h.degree() < 1) {
        rep.decided_by = rel.unit_mult > 0 ? DecidedBy::exact_unit : DecidedBy::degenerate;
    } else {
        rep = find_roots(rel.h);
    }
    for (int i = 0; i < rel.unit_mult; ++i) rep.roots.push_back(std::complex<double>(1.0, 0.0));
    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const std::complex<double>& x, const std::complex<double>& y) {
                  double mx = std::abs(x), my = std::abs(y);
                  if (mx != my) return mx < my;
                  return std::arg(x) < std::arg(y);
              });
    if (rel.unit_mult > 0) rep.max_modulus = std::max(rep.max_modulus, 1.0);
    return rep;
}

namespace {

// Exact real-root machinery over the rationals.
using RPoly = std::vector<Rat>;  // ascending, normalized

void rnormalize(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int rdeg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat reval(const RPoly& p, const Rat& x) {
    Rat v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

RPoly rderiv(const RPoly& p) {
    RPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    rnormalize(d);
    return d;
}

RPoly rrem(RPoly a, const RPoly& b) {
    while (rdeg(a) >= rdeg(b) && rdeg(a) >= 0) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        rnormalize(a);
    }
    return a;
}

RPoly rgcd(RPoly a, RPoly b) {
    rnormalize(a);
    rnormalize(b);
    while (!b.empty()) {
        RPoly r = rrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& x : a) x /= lead;
    }
    return a;
}

int sign_changes(const std::vector<RPoly>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& s : chain) {
        Rat v = reval(s, x);
        int sg = v > 0 ? 1 : v < 0 ? -1 : 0;
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++changes;
        prev = sg;
    }
    return changes;
}

// Synthetic division by (q - r); exact when r is a root.
bool deflate_at(Coeffs& c, int r, int* mult) {
    bool any = false;
    while (c.size() > 1) {
        Int v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * r + c[i];
        if (v != 0) break;
        Coeffs q(c.size() - 1);
        Int carry = 0;
        for (size_t i = c.size() - 1; i >= 1; --i) {
            carry = c[i] + carry * r;
            q[i - 1] = carry;
        }
        c = std::move(q);
        ++*mult;
        any = true;
    }
    return any;
}

}  // namespace

RealRootReport real_root_classification(const RelPoly& rel) {
    if (rel.is_zero()) throw DomainError("the zero reliability has no real-root report");
    RealRootReport out;
    out.mult_at_one = rel.unit_mult;

    Coeffs c = rel.h.coeffs();
    if (c.empty()) c = {Int(1)};
    while (c.size() > 1 && c.front() == 0) {
        c.erase(c.begin());
        ++out.mult_at_zero;
    }
    deflate_at(c, 1, &out.mult_at_one);
    deflate_at(c, -1, &out.mult_at_minus_one);

    if (c.size() > 1) {
        RPoly s(c.size());
        for (size_t i = 0; i < c.size(); ++i) s[i] = Rat(c[i]);
        RPoly g = rgcd(s, rderiv(s));
        if (rdeg(g) > 0) {
            // Square-free part s / g by long division.
            RPoly quo(s.size() - g.size() + 1, Rat(0));
            RPoly rem = s;
            while (rdeg(rem) >= rdeg(g)) {
                Rat f = rem.back() / g.back();
                size_t shift = rem.size() - g.size();
                quo[shift] = f;
                for (size_t i = 0; i < g.size(); ++i) rem[shift + i] -= f * g[i];
                rem.pop_back();
                rnormalize(rem);
            }
            s = quo;
            rnormalize(s);
        }

        std::vector<RPoly> chain{s, rderiv(s)};
        while (rdeg(chain.back()) > 0) {
            RPoly r = rrem(chain[chain.size() - 2], chain.back());
            if (r.empty()) break;
            for (auto& x : r) x = -x;
            chain.push_back(std::move(r));
        }

        Rat bound = 1;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
            Rat q = abs(s[i] / s.back());
            if (q + 1 > bound) bound = q + 1;
        }

        auto count_in = [&](const Rat& lo, const Rat& hi) {
            return sign_changes(chain, lo) - sign_changes(chain, hi);
        };

        // Isolate, then shrink each interval until it avoids -1, 0 and 1
        // entirely; the roots at those points were deflated exactly above.
        std::vector<std::pair<Rat, Rat>> work{{-bound, bound}}, isolated;
        while (!work.empty()) {
            auto [lo, hi] = work.back();
            work.pop_back();
            int k = count_in(lo, hi);
            if (k == 0) continue;
            if (k == 1 && reval(s, lo) != 0 && reval(s, hi) != 0) {
                isolated.push_back({lo, hi});
                continue;
            }
            Rat mid = (lo + hi) / 2;
            int guard = 0;
            while (reval(s, mid) == 0 && guard++ < 64) mid = (lo + 2 * mid) / 3;
            work.push_back({lo, mid});
            work.push_back({mid, hi});
        }
        for (auto& [lo, hi] : isolated) {
            auto straddles = [&](int t) { return lo < t && Rat(t) < hi; };
            int guard = 0;
            while ((straddles(-1) || straddles(0) || straddles(1) || hi - lo > Rat(1, 1 << 20)) &&
                   guard++ < 256) {
                Rat mid = (lo + hi) / 2;
                int g2 = 0;
                while (reval(s, mid) == 0 && g2++ < 64) mid = (lo + 2 * mid) / 3;
                if (count_in(lo, mid) == 1)
                    hi = mid;
                else
                    lo = mid;
            }
            double v = (lo.convert_to<double>() + hi.convert_to<double>()) / 2;
            if (Rat(-1) <= lo && hi <= Rat(0))
                out.in_range.push_back(v);
            else
                out.violations.push_back(v);
        }
        std::sort(out.in_range.begin(), out.in_range.end());
        std::sort(out.violations.begin(), out.violations.end());
    }

    out.all_in_allowed = out.violations.empty() && out.mult_at_zero == 0;
    return out;
}

bool dim2_outside_predicate(int m, const Int& f2) {
    if (m < 3) throw DomainError("dimension-2 predicate needs m >= 3");
    return (2 * f2 >= m && f2 <= m - 2) || (f2 >= m && f2 <= 2 * m - 5);
}

}  // namespace relroots
