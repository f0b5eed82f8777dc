#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcrystal/decomp.hpp"
#include "qcrystal/qseries.hpp"
#include "qcrystal/theta.hpp"

namespace qcrystal {

inline long floor_div(long a, long b) {
    long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

/// The residue-class theta series Psi^i_{tj}(q) = f(eq^r, eq^s) with
/// e = (-1)^n, r = n(n+3)/2 - 2t + i - (n+2)j, s = n(n+1)/2 + 2t - i + (n+2)j.
/// Always r + s = n(n+2) > 0.
inline ThetaSpec psi_spec(int n, int i, int t, int j) {
    check_t_range(n, i, t);
    if (j < 0 || j > n - 1) throw std::out_of_range("psi_spec: j outside [0, n)");
    long N = n;
    return ThetaSpec{n % 2 == 0 ? 1 : -1,
                     N * (N + 3) / 2 - 2 * t + i - (N + 2) * j,
                     N * (N + 1) / 2 + 2 * t - i + (N + 2) * j};
}

/// mu(t,i,k) = k(k-1)/2 + floor((t+k-i)(t+k)/n), floor toward -infinity
/// (the numerator is negative when k < i - t).
inline long mu_exponent(int t, int i, long k, int n) {
    return k * (k - 1) / 2 + floor_div((t + k - i) * (t + static_cast<long>(k)), n);
}

namespace detail {

inline int mod_n(long v, int n) { return static_cast<int>(((v % n) + n) % n); }

// One assembled term (-1)^kbar q^(mu - corr) Psi^i_{t,kbar}(q) of an
// a-matrix entry, tracked through at least `order`.  When the term's
// whole support sits above `order` the expansion clamps to its first
// exponent instead of asking for an empty window.
inline QSeries a_term(int n, int i, int t, int kbar, long order) {
    long corr = t <= i ? static_cast<long>(t - i) : 0;
    long shift = mu_exponent(t, i, kbar, n) - corr;
    ThetaSpec spec = psi_spec(n, i, t, kbar);
    QSeries th = theta_expand(spec, std::max(order - shift, theta_min_exponent(spec)));
    QSeries r = qshift(th, shift);
    if (kbar % 2) r = neg(r);
    return r;
}

}  // namespace detail

/// Entry a^i_{tj}(q) of the residue-sorted linear system: the
/// (j-t mod n)-indexed term, plus its (i-j-t mod n) partner unless j is
/// self-paired (2j = i mod n); the exponent correction -(t-i) applies for
/// t <= i.  The assembled entry is a power series (valuation >= 0).
inline QSeries a_entry(int n, int i, int t, int j, long order) {
    check_t_range(n, i, t);
    check_t_range(n, i, j);
    int k1 = detail::mod_n(j - t, n);
    int k2 = detail::mod_n(i - j - t, n);
    bool self_paired = detail::mod_n(2L * j - i, n) == 0;
    QSeries e = detail::a_term(n, i, t, k1, order);
    if (!self_paired) e = add(e, detail::a_term(n, i, t, k2, order));
    auto lead = e.first_nonzero();
    if (lead && *lead < 0)
        throw std::logic_error("a_entry: assembled entry has negative valuation");
    return e.valuation() < 0 ? e.trimmed() : e;
}

/// The matrix A^i(q): rows indexed by j, columns by t, both over
/// {ceil(i/2)..floor((n+i)/2)}; entry (j,t) = a^i_{tj}(q).
struct AMatrix {
    int n = 0;
    int i = 0;
    int lo = 0;
    int hi = 0;
    long order = 0;
    std::vector<std::vector<QSeries>> entries;  // entries[j-lo][t-lo]

    int dim() const { return hi - lo + 1; }
};

inline AMatrix build_A(int n, int i, long order) {
    check_params(n, i);
    AMatrix m{n, i, label_t_min(n, i), label_t_max(n, i), order, {}};
    for (int j = m.lo; j <= m.hi; ++j) {
        std::vector<QSeries> row;
        row.reserve(m.dim());
        for (int t = m.lo; t <= m.hi; ++t) row.push_back(a_entry(n, i, t, j, order));
        m.entries.push_back(std::move(row));
    }
    return m;
}

/// Does (j'-j)(j'+j-i) = 0 (mod n) have only the trivial solutions
/// j' = j, j' = i-j?  Exhaustive over Z_n x Z_n.
inline bool propmod_brute(int n, int i) {
    check_params(n, i);
    for (long j = 0; j < n; ++j)
        for (long jp = 0; jp < n; ++jp) {
            if ((jp - j) * (jp + j - i) % n != 0) continue;
            if ((jp - j) % n != 0 && detail::mod_n(jp + j - i, n) != 0) return false;
        }
    return true;
}

/// Closed-form classification: i even needs n prime or twice an odd
/// prime; i odd needs n prime or a power of 2.
inline bool propmod_classify(int n, int i) {
    check_params(n, i);
    auto is_prime = [](int v) {
        if (v < 2) return false;
        for (int d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    if (is_prime(n)) return true;
    if (i % 2 == 0) return n % 2 == 0 && (n / 2) % 2 == 1 && is_prime(n / 2);
    return (n & (n - 1)) == 0;
}

/// B_t^i(q) by Cramer's rule: (-1)^(i+t) phi(q) det(A-minor) / det(A),
/// computed as det(A with column t replaced by the phi right-hand side)
/// over det(A).  Requires the residue map to be injective (propmod).
/// det(A) may start at a positive power of q (the numerator then starts
/// at least as high); the working order grows by that much.
inline QSeries cramer_B(int n, int i, int t, long order) {
    check_t_range(n, i, t);
    if (!propmod_classify(n, i))
        throw std::domain_error("cramer_B: residues (j-i)j collide for this (n, i); "
                                "the linear system does not separate");
    long headroom = 0;
    for (int pass = 0; pass < 3; ++pass) {
        AMatrix m = build_A(n, i, order + headroom);
        QSeries det = det_series(m.entries);
        auto lead = det.first_nonzero();
        if (!lead)
            throw std::domain_error("cramer_B: det(A) vanishes through the working order");
        if (*lead > headroom) {
            headroom = *lead;
            continue;
        }
        auto replaced = m.entries;
        for (int j = m.lo; j <= m.hi; ++j)
            replaced[j - m.lo][t - m.lo] =
                (j == i) ? euler_phi(order + headroom) : QSeries::zero(0, order + headroom);
        QSeries num = det_series(replaced).trimmed();
        if (num.is_zero()) return QSeries::zero(0, order);
        return mul(num, invert(det, order)).truncated(order);
    }
    throw std::logic_error("cramer_B: determinant valuation did not stabilize");
}

/// Outcome of substituting enumerated B-series into the two master forms.
struct MasterReport {
    long order = 0;
    bool theta_ok = false;
    std::optional<long> theta_mismatch;
    bool psi_ok = false;
    std::optional<long> psi_mismatch;

    bool ok() const { return theta_ok && psi_ok; }
};

/// Substitutes the enumerated B_t^i(q^n) into the theta-product form and
/// into the Psi residue form of the master character equation and checks
/// both against phi(q^n) through `order`.  Valid for every (n, i),
/// including pairs where the Cramer route is unavailable.
inline MasterReport verify_master(int n, int i, long order, const MultiplicityTable& tbl) {
    check_params(n, i);
    if (tbl.n != n || tbl.i != i)
        throw std::invalid_argument("verify_master: table built for different (n, i)");
    int lo = label_t_min(n, i), hi = label_t_max(n, i);
    long want = order / n;  // complete B coefficients required per t

    // B_t^i(q^n) straight from the table, with the between-multiples zeros
    // kept in the window.
    std::vector<QSeries> bdil;
    for (int t = lo; t <= hi; ++t) {
        long r = label_k_min(i, t);
        long ck = tbl.complete_k.at(t);
        if (ck - r < want)
            throw std::out_of_range("verify_master: table completeness below order/n");
        QSeries b = QSeries::zero(0, n * (ck - r) + n - 1);
        int u = partner_u(n, i, t);
        for (long k = r; k <= ck; ++k) {
            auto it = tbl.counts.find(WeightLabel{t, u, k});
            if (it != tbl.counts.end()) b.mutable_coeff(n * (k - r)) = it->second;
        }
        bdil.push_back(std::move(b));
    }

    QSeries target = dilate_padded(euler_phi(order / n), n);

    MasterReport rep;
    rep.order = order;

    {  // theta-product form
        std::optional<QSeries> acc;
        for (int t = lo; t <= hi; ++t) {
            long et = t <= i ? static_cast<long>(t - n) * (t - i)
                             : static_cast<long>(t) * (t - i);
            ThetaSpec spec{-1, 2L * t - i + 1, n - 2L * t + i + 1};
            QSeries th = theta_expand(spec, std::max(order - et, 0L));
            QSeries piece = qshift(mul(bdil[t - lo], th), et);
            acc = acc ? add(*acc, piece) : piece;
        }
        rep.theta_mismatch = first_difference(*acc, target, 0, order);
        rep.theta_ok = !rep.theta_mismatch;
    }

    {  // Psi residue form
        std::optional<QSeries> acc;
        for (int t = lo; t <= hi; ++t) {
            std::optional<QSeries> inner;
            for (int j = 0; j < n; ++j) {
                long e = static_cast<long>(n) * j * (j - 1) / 2 +
                         (t + static_cast<long>(j) - i) * (t + static_cast<long>(j)) -
                         (t <= i ? static_cast<long>(n) * (t - i) : 0);
                long up = std::max(ceil_div(order - e, n), 0L);
                QSeries piece =
                    qshift(dilate_padded(theta_expand(psi_spec(n, i, t, j), up), n), e);
                if (j % 2) piece = neg(piece);
                inner = inner ? add(*inner, piece) : piece;
            }
            QSeries piece = mul(bdil[t - lo], *inner);
            acc = acc ? add(*acc, piece) : piece;
        }
        rep.psi_mismatch = first_difference(*acc, target, 0, order);
        rep.psi_ok = !rep.psi_mismatch;
    }
    return rep;
}

}  // namespace qcrystal
