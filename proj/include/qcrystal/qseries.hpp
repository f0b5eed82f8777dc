#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcrystal {

using Int = boost::multiprecision::cpp_int;

/// Truncated Laurent series in q with exact integer coefficients.
///
/// A QSeries tracks coefficients on the inclusive exponent window
/// [valuation, order].  Below the valuation the series is exactly zero;
/// above the order it is unknown, and reading there throws.  Binary
/// operations shrink the window to what both operands determine, so an
/// identity check can never pass on coefficients that were not computed.
class QSeries {
public:
    QSeries(long valuation, long order, std::vector<Int> coeffs)
        : val_(valuation), order_(order), c_(std::move(coeffs)) {
        if (order_ < val_)
            throw std::out_of_range("QSeries: order < valuation");
        if (static_cast<long>(c_.size()) != order_ - val_ + 1)
            throw std::invalid_argument("QSeries: coefficient count does not match range");
    }

    static QSeries zero(long valuation, long order) {
        return QSeries(valuation, order, std::vector<Int>(order - valuation + 1));
    }

    static QSeries one(long order) { return monomial(1, 0, order); }

    static QSeries monomial(Int coeff, long exponent, long order) {
        if (order < exponent)
            throw std::out_of_range("QSeries::monomial: order below exponent");
        long lo = std::min(exponent, 0L);
        QSeries r = zero(lo, order);
        r.c_[exponent - lo] = std::move(coeff);
        return r;
    }

    long valuation() const { return val_; }
    long order() const { return order_; }

    /// Coefficient of q^e.  Exact zero below the valuation; reading above
    /// the order is an error, never a silent zero.
    const Int& coeff(long e) const {
        if (e > order_)
            throw std::out_of_range("QSeries::coeff: exponent " + std::to_string(e) +
                                    " above tracked order " + std::to_string(order_));
        if (e < val_) return zero_int();
        return c_[e - val_];
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
    }

    /// Exponent of the lowest nonzero coefficient, if any.
    std::optional<long> first_nonzero() const {
        for (long e = val_; e <= order_; ++e)
            if (c_[e - val_] != 0) return e;
        return std::nullopt;
    }

    /// Raise the valuation past leading zero coefficients (all-zero series
    /// collapse to a single zero at the order).
    QSeries trimmed() const {
        long lo = first_nonzero().value_or(order_);
        return QSeries(lo, order_, std::vector<Int>(c_.begin() + (lo - val_), c_.end()));
    }

    /// Restrict the tracked window to [valuation, new_order].
    QSeries truncated(long new_order) const {
        if (new_order > order_ || new_order < val_)
            throw std::out_of_range("QSeries::truncated: bad order");
        return QSeries(val_, new_order,
                       std::vector<Int>(c_.begin(), c_.begin() + (new_order - val_ + 1)));
    }

    Int& mutable_coeff(long e) {
        if (e < val_ || e > order_)
            throw std::out_of_range("QSeries::mutable_coeff: outside range");
        return c_[e - val_];
    }

    bool operator==(const QSeries& o) const {
        return val_ == o.val_ && order_ == o.order_ && c_ == o.c_;
    }

private:
    static const Int& zero_int() {
        static const Int z = 0;
        return z;
    }

    long val_;
    long order_;
    std::vector<Int> c_;
};

/// Coefficientwise equality on the explicit exponent range [lo, hi].
/// Both operands must track through hi.
inline bool equal_on(const QSeries& a, const QSeries& b, long lo, long hi) {
    if (hi > a.order() || hi > b.order())
        throw std::out_of_range("equal_on: range exceeds a tracked order");
    for (long e = lo; e <= hi; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

/// First exponent in [lo, hi] where the two series differ, if any.
inline std::optional<long> first_difference(const QSeries& a, const QSeries& b, long lo, long hi) {
    if (hi > a.order() || hi > b.order())
        throw std::out_of_range("first_difference: range exceeds a tracked order");
    for (long e = lo; e <= hi; ++e)
        if (a.coeff(e) != b.coeff(e)) return e;
    return std::nullopt;
}

inline QSeries add(const QSeries& a, const QSeries& b) {
    long lo = std::min(a.valuation(), b.valuation());
    long hi = std::min(a.order(), b.order());
    if (hi < lo) throw std::out_of_range("add: empty overlap range");
    QSeries r = QSeries::zero(lo, hi);
    for (long e = lo; e <= hi; ++e) r.mutable_coeff(e) = a.coeff(e) + b.coeff(e);
    return r;
}

inline QSeries scale(const QSeries& a, const Int& c) {
    QSeries r = a;
    for (long e = r.valuation(); e <= r.order(); ++e) r.mutable_coeff(e) *= c;
    return r;
}

inline QSeries neg(const QSeries& a) { return scale(a, -1); }

inline QSeries sub(const QSeries& a, const QSeries& b) { return add(a, neg(b)); }

/// Cauchy product.  The result is known exactly through
/// min(a.val + b.order, b.val + a.order).
inline QSeries mul(const QSeries& a, const QSeries& b) {
    long lo = a.valuation() + b.valuation();
    long hi = std::min(a.valuation() + b.order(), b.valuation() + a.order());
    if (hi < lo) throw std::out_of_range("mul: empty overlap range");
    QSeries r = QSeries::zero(lo, hi);
    for (long i = a.valuation(); i <= a.order(); ++i) {
        const Int& ai = a.coeff(i);
        if (ai == 0) continue;
        long jmax = std::min(b.order(), hi - i);
        for (long j = b.valuation(); j <= jmax; ++j) {
            const Int& bj = b.coeff(j);
            if (bj != 0) r.mutable_coeff(i + j) += ai * bj;
        }
    }
    return r;
}

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return neg(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

/// Reciprocal through q^target_order.  The lowest nonzero coefficient must
/// be a unit (+1 or -1); the result has valuation -v for input valuation v
/// and satisfies mul(a, invert(a, N)) = 1 on [0, N].
inline QSeries invert(const QSeries& a, long target_order) {
    QSeries t = a.trimmed();
    auto lead = t.first_nonzero();
    if (!lead) throw std::domain_error("invert: series is zero on its tracked range");
    long v = *lead;
    const Int& L = t.coeff(v);
    if (L != 1 && L != -1)
        throw std::domain_error("invert: leading coefficient is not a unit");
    if (t.order() < v + target_order)
        throw std::out_of_range("invert: input order insufficient for target");
    // relative coefficients e_m of the inverse of q^-v * a
    std::vector<Int> e(static_cast<size_t>(target_order) + 1);
    e[0] = L;  // 1/L for L = +-1
    for (long m = 1; m <= target_order; ++m) {
        Int s = 0;
        for (long k = 1; k <= m; ++k) {
            const Int& ck = t.coeff(v + k);
            if (ck != 0) s += ck * e[m - k];
        }
        e[m] = -L * s;
    }
    return QSeries(-v, target_order - v, std::move(e));
}

/// Substitution q -> q^n.
inline QSeries dilate(const QSeries& a, long n) {
    if (n < 1) throw std::invalid_argument("dilate: n must be >= 1");
    QSeries r = QSeries::zero(n * a.valuation(), n * a.order());
    for (long e = a.valuation(); e <= a.order(); ++e) r.mutable_coeff(n * e) = a.coeff(e);
    return r;
}

/// Like dilate but keeps the between-multiples zeros above n*order in the
/// window (they are exact zeros: the next support point is n*(order+1)).
inline QSeries dilate_padded(const QSeries& a, long n) {
    if (n < 1) throw std::invalid_argument("dilate_padded: n must be >= 1");
    QSeries r = QSeries::zero(n * a.valuation(), n * a.order() + n - 1);
    for (long e = a.valuation(); e <= a.order(); ++e) r.mutable_coeff(n * e) = a.coeff(e);
    return r;
}

/// Multiply by q^m.
inline QSeries qshift(const QSeries& a, long m) {
    std::vector<Int> c;
    c.reserve(a.order() - a.valuation() + 1);
    for (long e = a.valuation(); e <= a.order(); ++e) c.push_back(a.coeff(e));
    return QSeries(a.valuation() + m, a.order() + m, std::move(c));
}

/// Euler product prod_{j>=1} (1 - q^j), expanded term by term.
inline QSeries euler_phi(long target_order) {
    if (target_order < 0) throw std::invalid_argument("euler_phi: negative order");
    std::vector<Int> c(static_cast<size_t>(target_order) + 1);
    c[0] = 1;
    for (long j = 1; j <= target_order; ++j)
        for (long e = target_order; e >= j; --e) c[e] -= c[e - j];
    return QSeries(0, target_order, std::move(c));
}

/// Determinant by cofactor expansion (division-free), dimension 1..8.
inline QSeries det_series(const std::vector<std::vector<QSeries>>& m) {
    size_t d = m.size();
    if (d < 1 || d > 8) throw std::invalid_argument("det_series: dimension must be 1..8");
    for (const auto& row : m)
        if (row.size() != d) throw std::invalid_argument("det_series: ragged matrix");
    if (d == 1) return m[0][0];
    std::optional<QSeries> acc;
    for (size_t j = 0; j < d; ++j) {
        std::vector<std::vector<QSeries>> minor;
        minor.reserve(d - 1);
        for (size_t r = 1; r < d; ++r) {
            std::vector<QSeries> row;
            row.reserve(d - 1);
            for (size_t c = 0; c < d; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        QSeries term = mul(m[0][j], det_series(minor));
        if (j % 2) term = neg(term);
        acc = acc ? add(*acc, term) : term;
    }
    return *acc;
}

/// Render in increasing exponent order: "1 - q - q^3 + q^6", "2q^2",
/// "q^-4", zero series as "0".
inline std::string to_string(const QSeries& a) {
    std::ostringstream os;
    bool first = true;
    for (long e = a.valuation(); e <= a.order(); ++e) {
        const Int& c = a.coeff(e);
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) os << mag.str();
        if (e != 0) {
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace qcrystal
