#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcrystal/crystal.hpp"
#include "qcrystal/decomp.hpp"
#include "qcrystal/identities.hpp"
#include "qcrystal/qseries.hpp"
#include "qcrystal/theta.hpp"

namespace qcrystal {

/// One verification line: PASS/FAIL, a check name, and its parameters.
struct CheckResult {
    std::string name;
    std::string params;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<CheckResult>& v) {
    return std::all_of(v.begin(), v.end(), [](const CheckResult& c) { return c.pass; });
}

namespace detail {

inline std::string fmt_ni(int n, int i) {
    return "n=" + std::to_string(n) + " i=" + std::to_string(i);
}

/// Every Psi spec arising for 2 <= n <= nmax, plus the theta-form specs of
/// the master equation, deduplicated.
inline std::vector<ThetaSpec> specs_up_to(int nmax) {
    std::set<std::tuple<int, long, long>> seen;
    std::vector<ThetaSpec> out;
    auto push = [&](const ThetaSpec& s) {
        if (seen.insert({s.sign, s.r, s.s}).second) out.push_back(s);
    };
    for (int n = 2; n <= nmax; ++n)
        for (int i = 0; i < n; ++i)
            for (int t = label_t_min(n, i); t <= label_t_max(n, i); ++t) {
                push(ThetaSpec{-1, 2L * t - i + 1, n - 2L * t + i + 1});
                for (int j = 0; j < n; ++j) push(psi_spec(n, i, t, j));
            }
    return out;
}

/// Number of partitions of each m <= max into distinct parts.
inline std::vector<long long> distinct_part_counts(long max) {
    std::vector<long long> dp(max + 1, 0);
    dp[0] = 1;
    for (long p = 1; p <= max; ++p)
        for (long k = max; k >= p; --k) dp[k] += dp[k - p];
    return dp;
}

inline long long needed_boxes(int n, int i, long order) {
    long mb = 0;
    for (int t = label_t_min(n, i); t <= label_t_max(n, i); ++t)
        mb = std::max(mb, min_box_cost(n, i, t));
    return mb + n * (order / n);
}

}  // namespace detail

/// theta_expand agrees with the Jacobi triple product expansion for every
/// spec used by n <= nmax (normalized first when an exponent is negative)
/// and for the Euler spec f(-q,-q^2).
inline std::vector<CheckResult> suite_triple_product(long order, int nmax = 6) {
    std::vector<CheckResult> out;
    auto specs = detail::specs_up_to(nmax);
    specs.push_back(ThetaSpec{-1, 1, 2});
    for (const ThetaSpec& s : specs) {
        NormalizedTheta nrm = shift_normalize(s);
        QSeries lhs = theta_expand(nrm.spec, order);
        QSeries rhs = theta_triple_product(nrm.spec, order);
        auto diff = first_difference(lhs, rhs, std::min(lhs.valuation(), 0L), order);
        out.push_back({"triple-product", to_string(nrm.spec) + " order=" + std::to_string(order),
                       !diff, diff ? "first mismatch at q^" + std::to_string(*diff) : ""});
    }
    return out;
}

/// shift_normalize preserves the bilateral expansion:
/// expand(spec) = sign * q^power * expand(normalized) on [valuation, order].
inline std::vector<CheckResult> suite_shift_identity(long order, int nmax = 6) {
    std::vector<CheckResult> out;
    for (const ThetaSpec& s : detail::specs_up_to(nmax)) {
        NormalizedTheta nrm = shift_normalize(s);
        QSeries lhs = theta_expand(s, order);
        QSeries rhs = scale(qshift(theta_expand(nrm.spec, order - nrm.power), nrm.power),
                            nrm.unit_sign);
        auto diff = first_difference(lhs, rhs, std::min(lhs.valuation(), rhs.valuation()), order);
        std::ostringstream p;
        p << to_string(s) << " -> " << (nrm.unit_sign < 0 ? "-" : "") << "q^" << nrm.power
          << " * " << to_string(nrm.spec);
        out.push_back({"shift-identity", p.str(), !diff,
                       diff ? "first mismatch at q^" + std::to_string(*diff) : ""});
    }
    return out;
}

/// The number of n-regular charge-i diagrams with m boxes equals the
/// coefficient of q^m in phi(q^n)/phi(q), for m <= max_boxes.
inline std::vector<CheckResult> suite_character_count(long max_boxes,
                                                      const std::vector<int>& ranks = {2, 3}) {
    std::vector<CheckResult> out;
    for (int n : ranks) {
        std::vector<long long> byboxes(max_boxes + 1, 0);
        for (const Partition& p : regular_partitions_up_to(n, max_boxes)) ++byboxes[p.box_count()];
        QSeries ch = mul(dilate_padded(euler_phi(max_boxes / n), n),
                         invert(euler_phi(max_boxes), max_boxes));
        bool pass = true;
        long bad = -1;
        for (long m = 0; m <= max_boxes && pass; ++m)
            if (ch.coeff(m) != byboxes[m]) {
                pass = false;
                bad = m;
            }
        for (int i = 0; i < n; ++i) {
            // shapes do not depend on the charge; report one line per i anyway
            out.push_back({"character-count",
                           detail::fmt_ni(n, i) + " m<=" + std::to_string(max_boxes), pass,
                           pass ? "" : "count mismatch at m=" + std::to_string(bad)});
        }
    }
    return out;
}

/// The three maximality tests (run congruences, column conditions,
/// operator vanishing) agree on every n-regular diagram.
inline std::vector<CheckResult> suite_oracle_equivalence(long max_boxes,
                                                         const std::vector<int>& ranks = {2, 3,
                                                                                          4}) {
    std::vector<CheckResult> out;
    for (int n : ranks) {
        auto shapes = regular_partitions_up_to(n, max_boxes);
        for (int i = 0; i < n; ++i) {
            bool pass = true;
            std::string why;
            for (const Partition& p : shapes) {
                ExtendedYoungDiagram d(p, i, n);
                bool a = is_maximal_partition(p, n, i);
                bool b = d.maximal_by_columns();
                bool c = d.maximal_by_operators();
                if (a != b || b != c) {
                    pass = false;
                    why = "disagreement at " + p.to_string() + " (congruence=" +
                          std::to_string(a) + " columns=" + std::to_string(b) +
                          " operators=" + std::to_string(c) + ")";
                    break;
                }
            }
            out.push_back({"oracle-equivalence",
                           detail::fmt_ni(n, i) + " boxes<=" + std::to_string(max_boxes), pass,
                           why});
        }
    }
    return out;
}

/// Master character equation, both the theta-product and the Psi residue
/// form, from enumerated multiplicities.
inline std::vector<CheckResult> suite_master(int nmax = 6, long order_factor = 4,
                                             std::optional<long> fixed_order = std::nullopt) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= nmax; ++n)
        for (int i = 0; i < n; ++i) {
            long order = fixed_order.value_or(order_factor * n);
            MultiplicityTable tbl = multiplicity_table(n, i, detail::needed_boxes(n, i, order));
            MasterReport rep = verify_master(n, i, order, tbl);
            std::string d;
            if (!rep.theta_ok)
                d += "theta form mismatch at q^" + std::to_string(*rep.theta_mismatch) + " ";
            if (!rep.psi_ok)
                d += "psi form mismatch at q^" + std::to_string(*rep.psi_mismatch);
            out.push_back({"master", detail::fmt_ni(n, i) + " order=" + std::to_string(order),
                           rep.ok(), d});
        }
    return out;
}

/// det(A^1) closed forms: phi(q)^2 for n=3 and phi(q) f(-q,-q) for n=4.
inline std::vector<CheckResult> suite_dets(long order) {
    std::vector<CheckResult> out;
    QSeries phi = euler_phi(order);
    {
        QSeries det = det_series(build_A(3, 1, order).entries);
        auto diff = first_difference(det, mul(phi, phi), 0, order);
        out.push_back({"det-A", "n=3 i=1 det=phi^2 order=" + std::to_string(order), !diff,
                       diff ? "mismatch at q^" + std::to_string(*diff) : ""});
    }
    {
        QSeries det = det_series(build_A(4, 1, order).entries);
        QSeries rhs = mul(phi, theta_expand(ThetaSpec{-1, 1, 1}, order));
        auto diff = first_difference(det, rhs, 0, order);
        out.push_back({"det-A", "n=4 i=1 det=phi*f(-q,-q) order=" + std::to_string(order), !diff,
                       diff ? "mismatch at q^" + std::to_string(*diff) : ""});
    }
    return out;
}

namespace detail {

inline CheckResult series_match(const std::string& name, const std::string& params,
                                const QSeries& a, const QSeries& b, long lo, long hi) {
    auto diff = first_difference(a, b, lo, hi);
    return {name, params, !diff, diff ? "first mismatch at q^" + std::to_string(*diff) : ""};
}

}  // namespace detail

/// The closed B-series forms of the worked cases n = 2, 3, 4 (i = 1):
/// Cramer output against the displayed theta quotients, and enumerated
/// multiplicities against the product-form expansions.
inline std::vector<CheckResult> suite_closed_forms(long order, long enum_k = 10) {
    std::vector<CheckResult> out;
    QSeries inv_phi = invert(euler_phi(order), order);
    auto over_phi = [&](const QSeries& num) { return mul(num, inv_phi); };

    {  // n=2: B_1^1 = phi / f(-q,-q)
        QSeries b1 = cramer_B(2, 1, 1, order);
        QSeries rhs = mul(euler_phi(order), invert(theta_expand(ThetaSpec{-1, 1, 1}, order), order));
        out.push_back(detail::series_match("closed-form", "n=2 i=1 B1=phi/f(-q,-q)", b1, rhs, 0,
                                           order));
    }
    {  // n=3: B_1^1 = f(-q^6,-q^9)/phi, B_2^1 = f(-q^3,-q^12)/phi
        QSeries b1 = cramer_B(3, 1, 1, order);
        QSeries b2 = cramer_B(3, 1, 2, order);
        out.push_back(detail::series_match("closed-form", "n=3 i=1 B1=f(-q^6,-q^9)/phi", b1,
                                           over_phi(theta_expand(ThetaSpec{-1, 6, 9}, order)), 0,
                                           order));
        out.push_back(detail::series_match("closed-form", "n=3 i=1 B2=f(-q^3,-q^12)/phi", b2,
                                           over_phi(theta_expand(ThetaSpec{-1, 3, 12}, order)), 0,
                                           order));
        // partition identities: a(k) counts maximal partitions of 3k,
        // b(k) of 3k+2, against the (15;6,9) and (15;3,12) products
        MultiplicityTable tbl = multiplicity_table(3, 1, 3 * enum_k + 2);
        QSeries a_enum = series_from_table(tbl, 1);
        QSeries b_enum = series_from_table(tbl, 2);
        QSeries a_prod = over_phi(theta_triple_product(ThetaSpec{-1, 6, 9}, order));
        QSeries b_prod = over_phi(theta_triple_product(ThetaSpec{-1, 3, 12}, order));
        out.push_back(detail::series_match("partition-identity",
                                           "n=3 a(k) maximal of 3k, k<=" + std::to_string(enum_k),
                                           a_enum, a_prod, 0, enum_k));
        out.push_back(detail::series_match("partition-identity",
                                           "n=3 b(k) maximal of 3k+2, k<=" + std::to_string(enum_k),
                                           b_enum, b_prod, 0, enum_k));
    }
    {  // n=4: B_1^1 = (f(q^11,q^13)-q f(q^5,q^19))/f(-q,-q), B_2^1 likewise
        QSeries fm = theta_expand(ThetaSpec{-1, 1, 1}, order);
        QSeries inv_fm = invert(fm, order);
        QSeries b1 = cramer_B(4, 1, 1, order);
        QSeries b2 = cramer_B(4, 1, 2, order);
        QSeries num1 = sub(theta_expand(ThetaSpec{1, 11, 13}, order),
                           qshift(theta_expand(ThetaSpec{1, 5, 19}, order - 1), 1));
        QSeries num2 = sub(theta_expand(ThetaSpec{1, 7, 17}, order),
                           qshift(theta_expand(ThetaSpec{1, 1, 23}, order - 2), 2));
        out.push_back(detail::series_match("closed-form",
                                           "n=4 i=1 B1=(f(q^11,q^13)-q f(q^5,q^19))/f(-q,-q)", b1,
                                           mul(num1, inv_fm), 0, order));
        out.push_back(detail::series_match("closed-form",
                                           "n=4 i=1 B2=(f(q^7,q^17)-q^2 f(q,q^23))/f(-q,-q)", b2,
                                           mul(num2, inv_fm), 0, order));
    }
    return out;
}

/// Brute-force propmod agrees with the closed-form classification.
inline std::vector<CheckResult> suite_propmod(int max_n = 60) {
    std::vector<CheckResult> out;
    bool pass = true;
    std::string why;
    for (int n = 2; n <= max_n && pass; ++n)
        for (int i = 0; i < n && pass; ++i)
            if (propmod_brute(n, i) != propmod_classify(n, i)) {
                pass = false;
                why = "disagreement at " + detail::fmt_ni(n, i);
            }
    out.push_back({"propmod", "all n<=" + std::to_string(max_n), pass, why});
    return out;
}

/// Euler's identity at n=2, i=1: enumerated b_{1,k} equals the number of
/// partitions of k into distinct parts.
inline std::vector<CheckResult> suite_euler_n2(long max_k = 30) {
    std::vector<CheckResult> out;
    MultiplicityTable tbl = multiplicity_table(2, 1, 2 * max_k);
    QSeries b = series_from_table(tbl, 1);
    auto dp = detail::distinct_part_counts(max_k);
    bool pass = true;
    long bad = -1;
    for (long k = 0; k <= max_k && pass; ++k)
        if (b.coeff(k) != dp[k]) {
            pass = false;
            bad = k;
        }
    out.push_back({"euler-n2", "k<=" + std::to_string(max_k), pass,
                   pass ? "" : "mismatch at k=" + std::to_string(bad)});
    return out;
}

}  // namespace qcrystal
