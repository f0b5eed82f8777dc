#pragma once

#include <stdexcept>
#include <string>

#include "qcrystal/qseries.hpp"

namespace qcrystal {

/// Descriptor of a specialized theta series f(eq^r, eq^s) where
/// f(u,v) = sum_{k in Z} u^{k(k-1)/2} v^{k(k+1)/2} and e = +-1 is the
/// common sign of both arguments.  r + s > 0 keeps only finitely many
/// bilateral terms below any exponent bound.
struct ThetaSpec {
    int sign;  // +1 or -1
    long r;
    long s;

    bool operator==(const ThetaSpec&) const = default;
};

inline std::string to_string(const ThetaSpec& t) {
    auto arg = [&](long e) {
        std::string a = t.sign < 0 ? "-" : "";
        if (e == 0) return a + "1";
        a += "q";
        if (e != 1) a += "^" + std::to_string(e);
        return a;
    };
    return "f(" + arg(t.r) + "," + arg(t.s) + ")";
}

/// Exponent of the k-th bilateral term: r*k(k-1)/2 + s*k(k+1)/2.
inline long theta_term_exponent(const ThetaSpec& t, long k) {
    return t.r * (k * (k - 1) / 2) + t.s * (k * (k + 1) / 2);
}

/// Sign of the k-th bilateral term: e^(k(k-1)/2 + k(k+1)/2) = e^(k^2) = e^k.
inline int theta_term_sign(const ThetaSpec& t, long k) {
    return (t.sign < 0 && (k % 2 != 0)) ? -1 : 1;
}

/// Minimum exponent attained by any bilateral term (negative when r or s
/// is); the exponent is a convex parabola in k with vertex (r-s)/(2(r+s)).
inline long theta_min_exponent(const ThetaSpec& t) {
    if (t.r + t.s <= 0)
        throw std::domain_error("theta_min_exponent: r + s <= 0");
    long num = t.r - t.s, den = 2 * (t.r + t.s);
    long kf = num / den - ((num % den != 0 && (num < 0) != (den < 0)) ? 1 : 0);
    return std::min(theta_term_exponent(t, kf), theta_term_exponent(t, kf + 1));
}

/// Bilateral expansion of f(eq^r, eq^s) with all terms of exponent
/// <= target_order.  The valuation is the minimum exponent attained over
/// all k.
inline QSeries theta_expand(const ThetaSpec& t, long target_order) {
    if (t.r + t.s <= 0)
        throw std::domain_error("theta_expand: r + s <= 0, bilateral sum diverges");
    long num = t.r - t.s, den = 2 * (t.r + t.s);
    long kf = num / den - ((num % den != 0 && (num < 0) != (den < 0)) ? 1 : 0);
    long vmin = std::min(theta_term_exponent(t, kf), theta_term_exponent(t, kf + 1));
    if (target_order < vmin)
        throw std::out_of_range("theta_expand: target order below valuation");
    QSeries out = QSeries::zero(vmin, target_order);
    for (long k = kf; theta_term_exponent(t, k) <= target_order; --k)
        out.mutable_coeff(theta_term_exponent(t, k)) += theta_term_sign(t, k);
    for (long k = kf + 1; theta_term_exponent(t, k) <= target_order; ++k)
        out.mutable_coeff(theta_term_exponent(t, k)) += theta_term_sign(t, k);
    return out;
}

/// Jacobi triple product form: prod_{k>=1} (1 - u^k v^k)(1 + u^(k-1) v^k)
/// (1 + u^k v^(k-1)) under u = eq^r, v = eq^s.  Requires r, s >= 0; callers
/// with a negative exponent normalize through shift_normalize first.
inline QSeries theta_triple_product(const ThetaSpec& t, long target_order) {
    if (t.r + t.s <= 0)
        throw std::domain_error("theta_triple_product: r + s <= 0");
    if (t.r < 0 || t.s < 0)
        throw std::domain_error("theta_triple_product: negative argument exponent, normalize first");
    if (target_order < 0) throw std::invalid_argument("theta_triple_product: negative order");
    std::vector<Int> c(static_cast<size_t>(target_order) + 1);
    c[0] = 1;
    const long period = t.r + t.s;
    const Int eps = t.sign;
    // multiply the accumulator in place by (1 + coef*q^e)
    auto mul_binomial = [&](long e, const Int& coef) {
        if (e > target_order) return;
        if (e == 0) {
            Int f = 1 + coef;
            for (auto& x : c) x *= f;
            return;
        }
        for (long d = target_order; d >= e; --d) c[d] += coef * c[d - e];
    };
    for (long k = 1; period * k - std::max(t.r, t.s) <= target_order; ++k) {
        mul_binomial(period * k, -1);            // (1 - (uv)^k), sign e^(2k) = 1
        mul_binomial(period * k - t.r, eps);     // (1 + u^(k-1) v^k)
        mul_binomial(period * k - t.s, eps);     // (1 + u^k v^(k-1))
    }
    return QSeries(0, target_order, std::move(c));
}

/// A theta spec rewritten with nonnegative argument exponents:
/// expand(original) = unit_sign * q^power * expand(spec).
struct NormalizedTheta {
    int unit_sign;
    long power;
    ThetaSpec spec;
};

/// Iterates the reindexing f(eq^r, eq^s) = e * q^r * f(eq^(2r+s), eq^(-r))
/// (and its mirrored form for s < 0) until both exponents are nonnegative.
/// Each application contributes a factor e to the unit sign; r + s is
/// invariant, so termination is by steps of r + s > 0.
inline NormalizedTheta shift_normalize(const ThetaSpec& t) {
    if (t.r + t.s <= 0)
        throw std::domain_error("shift_normalize: r + s <= 0");
    NormalizedTheta n{1, 0, t};
    while (n.spec.r < 0 || n.spec.s < 0) {
        long r = n.spec.r, s = n.spec.s;
        if (r < 0) {
            n.unit_sign *= n.spec.sign;
            n.power += r;
            n.spec.r = 2 * r + s;
            n.spec.s = -r;
        } else {
            n.unit_sign *= n.spec.sign;
            n.power += s;
            n.spec.r = -s;
            n.spec.s = r + 2 * s;
        }
    }
    return n;
}

}  // namespace qcrystal
