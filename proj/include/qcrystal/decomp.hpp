#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcrystal/crystal.hpp"
#include "qcrystal/partition.hpp"
#include "qcrystal/qseries.hpp"

namespace qcrystal {

/// Names the irreducible summand Lambda_t + Lambda_u - k*delta of
/// V(Lambda_0) (x) V(Lambda_i).  t is the index inside the residue window
/// {ceil(i/2) .. floor((n+i)/2)}, u the partner residue, k the delta depth.
struct WeightLabel {
    int t;
    int u;
    long k;

    bool operator==(const WeightLabel&) const = default;
    auto operator<=>(const WeightLabel&) const = default;
};

inline int label_t_min(int /*n*/, int i) { return (i + 1) / 2; }
inline int label_t_max(int n, int i) { return (n + i) / 2; }

inline int partner_u(int n, int i, int t) { return t <= i ? i - t : n + i - t; }

/// Minimal delta depth for the (t, u) family.
inline long label_k_min(int i, int t) { return t <= i ? i - t : t - i; }

/// Box count of the unique minimal-depth maximal partition for column t.
inline long min_box_cost(int n, int i, int t) {
    return t <= i ? static_cast<long>(i - t) * (n - t) : static_cast<long>(t) * (t - i);
}

inline void check_params(int n, int i) {
    if (n < 2) throw std::invalid_argument("rank n must be >= 2");
    if (i < 0 || i >= n) throw std::invalid_argument("charge i must lie in [0, n)");
}

inline void check_t_range(int n, int i, int t) {
    check_params(n, i);
    if (t < label_t_min(n, i) || t > label_t_max(n, i))
        throw std::out_of_range("t outside {ceil(i/2)..floor((n+i)/2)}");
}

/// Congruence characterization of the maximal vectors of
/// B(Lambda_0) (x) B(Lambda_i): all multiplicities < n,
/// lambda_1 - f_1 + i = 0 (mod n), and
/// f_k + f_{k+1} + lambda_k - lambda_{k+1} = 0 (mod n) between
/// consecutive runs.  The empty partition qualifies.
inline bool is_maximal_partition(const Partition& p, int n, int i) {
    check_params(n, i);
    const auto& runs = p.runs();
    if (runs.empty()) return true;
    for (auto [part, mult] : runs)
        if (mult >= n) return false;
    if ((runs[0].first - runs[0].second + i) % n != 0) return false;
    for (size_t k = 0; k + 1 < runs.size(); ++k) {
        long v = runs[k].second + runs[k + 1].second + runs[k].first - runs[k + 1].first;
        if (v % n != 0) return false;
    }
    return true;
}

/// All maximal partitions with at most max_boxes boxes, in canonical
/// order.  Depth-first over runs: the congruences couple only adjacent
/// runs, so each extension is filtered locally and the box budget prunes.
inline std::vector<Partition> enumerate_maximal(int n, int i, long max_boxes) {
    check_params(n, i);
    if (max_boxes < 0) throw std::invalid_argument("enumerate_maximal: negative box bound");
    std::vector<Partition> out;
    std::vector<Partition::Run> stack;
    auto rec = [&](auto&& self, long budget) -> void {
        out.push_back(Partition(stack));
        long prev_part = stack.back().first;
        long prev_mult = stack.back().second;
        for (long part = prev_part - 1; part >= 1; --part) {
            if (part > budget) continue;
            for (long mult = 1; mult < n && part * mult <= budget; ++mult)
                if ((prev_mult + mult + prev_part - part) % n == 0) {
                    stack.push_back({part, mult});
                    self(self, budget - part * mult);
                    stack.pop_back();
                }
        }
    };
    out.push_back(Partition());
    for (long part = 1; part <= max_boxes; ++part)
        for (long mult = 1; mult < n && part * mult <= max_boxes; ++mult)
            if ((part - mult + i) % n == 0) {
                stack.push_back({part, mult});
                rec(rec, max_boxes - part * mult);
                stack.pop_back();
            }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

/// Summand label of a maximal partition.  The residues
/// rho1 = lambda_l - s_{l-1} + i and rho2 = i - s_l (s_r = f_1+..+f_r)
/// determine {t, u}; t is the one inside the residue window (they can
/// coincide, exactly when 2t = i mod n).  k counts the 0-colored boxes of
/// the charge-i diagram directly; the telescoped weight identity is
/// asserted separately by tests rather than trusted here.
inline WeightLabel weight_label(const Partition& p, int n, int i) {
    if (!is_maximal_partition(p, n, i))
        throw std::invalid_argument("weight_label: partition is not maximal for these (n, i)");
    if (p.empty()) {
        if (i == 0) return {0, 0, 0};
        return {i, 0, 0};
    }
    const auto& runs = p.runs();
    long s_all = p.num_rows();
    long s_prev = s_all - runs.back().second;
    auto res = [&](long v) { return static_cast<int>(((v % n) + n) % n); };
    int rho1 = res(runs.back().first - s_prev + i);
    int rho2 = res(i - s_all);
    int lo = label_t_min(n, i), hi = label_t_max(n, i);
    int t, u;
    if (rho1 == rho2) {
        t = u = rho1;
    } else if (rho1 >= lo && rho1 <= hi) {
        t = rho1;
        u = rho2;
    } else {
        t = rho2;
        u = rho1;
    }
    if (t < lo || t > hi)
        throw std::logic_error("weight_label: no residue falls in the t window");
    ExtendedYoungDiagram d(p, i, n);
    return {t, u, d.count_color(0)};
}

/// Outer multiplicities b^i_{tk} aggregated from enumeration, with
/// explicit per-t completeness so consumers can never read an
/// undercounted coefficient.
struct MultiplicityTable {
    int n = 0;
    int i = 0;
    long max_boxes = 0;
    std::map<WeightLabel, long long> counts;
    std::map<int, long> complete_k;  // t -> largest k with all candidates enumerated

    long long total() const {
        long long s = 0;
        for (const auto& [label, c] : counts) s += c;
        return s;
    }
};

inline MultiplicityTable multiplicity_table(int n, int i, long max_boxes) {
    MultiplicityTable tbl;
    tbl.n = n;
    tbl.i = i;
    tbl.max_boxes = max_boxes;
    for (const Partition& p : enumerate_maximal(n, i, max_boxes))
        ++tbl.counts[weight_label(p, n, i)];
    for (int t = label_t_min(n, i); t <= label_t_max(n, i); ++t) {
        // box cost grows by n per unit of k; largest k whose cost fits
        long num = max_boxes - min_box_cost(n, i, t);
        long q = num >= 0 ? num / n : -((-num + n - 1) / n);
        tbl.complete_k[t] = label_k_min(i, t) + q;
    }
    return tbl;
}

/// B_t^i(q) = sum_k b_{tk} q^(k-r), r = |i-t|, through the completeness
/// bound of column t.
inline QSeries series_from_table(const MultiplicityTable& tbl, int t) {
    check_t_range(tbl.n, tbl.i, t);
    long r = label_k_min(tbl.i, t);
    long hi = tbl.complete_k.at(t);
    if (hi < r)
        throw std::out_of_range("series_from_table: no complete coefficients at this max_boxes");
    QSeries s = QSeries::zero(0, hi - r);
    int u = partner_u(tbl.n, tbl.i, t);
    for (long k = r; k <= hi; ++k) {
        auto it = tbl.counts.find(WeightLabel{t, u, k});
        if (it != tbl.counts.end()) s.mutable_coeff(k - r) = it->second;
    }
    return s;
}

/// The unique minimal-depth maximal partition of column t: empty for
/// t = i, (i-t) rows of (n-t) for t < i, and t rows of (t-i) for t > i.
inline Partition minimal_rectangle(int n, int i, int t) {
    check_t_range(n, i, t);
    if (t == i) return Partition();
    if (t < i) return Partition({{static_cast<long>(n - t), static_cast<long>(i - t)}});
    return Partition({{static_cast<long>(t - i), static_cast<long>(t)}});
}

/// Verifies by enumeration that the minimal-depth summand is realized by
/// exactly one maximal partition and that it is the predicted rectangle;
/// returns it.
inline Partition rectangle_check(int n, int i, int t) {
    check_t_range(n, i, t);
    Partition expect = minimal_rectangle(n, i, t);
    long cost = min_box_cost(n, i, t);
    WeightLabel want{t, partner_u(n, i, t), label_k_min(i, t)};
    std::vector<Partition> hits;
    for (const Partition& p : enumerate_maximal(n, i, cost))
        if (weight_label(p, n, i) == want) hits.push_back(p);
    if (hits.size() != 1)
        throw std::logic_error("rectangle_check: minimal summand not realized exactly once");
    if (!(hits[0] == expect))
        throw std::logic_error("rectangle_check: minimal partition is not the predicted rectangle");
    return hits[0];
}

}  // namespace qcrystal
