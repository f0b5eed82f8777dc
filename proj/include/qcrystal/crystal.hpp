#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcrystal/partition.hpp"
#include "qcrystal/weight.hpp"

namespace qcrystal {

/// One +/- mark of a j-signature, tagged with the column it refers to.
struct SignatureMark {
    long column;
    bool plus;

    bool operator==(const SignatureMark&) const = default;
};

/// j-signature of a diagram: marks in scan order (columns right to left),
/// and the reduction after recursively canceling adjacent "+-" pairs,
/// which has the shape (-,...,-,+,...,+).
struct JSignature {
    std::vector<SignatureMark> raw;
    std::vector<SignatureMark> reduced;

    long minus_count() const {
        long c = 0;
        for (const auto& m : reduced)
            if (!m.plus) ++c;
        return c;
    }
    long plus_count() const { return static_cast<long>(reduced.size()) - minus_count(); }
};

inline std::string to_string(const std::vector<SignatureMark>& marks) {
    std::ostringstream os;
    for (size_t k = 0; k < marks.size(); ++k) {
        if (k) os << " ";
        os << (marks[k].plus ? "+" : "-") << "(" << marks[k].column << ")";
    }
    if (marks.empty()) return "(empty)";
    return os.str();
}

/// Charged, colored Young diagram: the box at row b, column c carries
/// color (charge + c - b) mod n.  Carrier of the crystal structure of
/// B(Lambda_charge) on n-regular diagrams.
class ExtendedYoungDiagram {
public:
    ExtendedYoungDiagram(Partition shape, int charge, int rank)
        : shape_(std::move(shape)), charge_(charge), rank_(rank) {
        if (rank_ < 2) throw std::invalid_argument("ExtendedYoungDiagram: rank must be >= 2");
        if (charge_ < 0 || charge_ >= rank_)
            throw std::invalid_argument("ExtendedYoungDiagram: charge must lie in [0, rank)");
    }

    const Partition& shape() const { return shape_; }
    int charge() const { return charge_; }
    int rank() const { return rank_; }

    /// At most n-1 rows of any one length.
    bool regular() const {
        for (auto [part, mult] : shape_.runs())
            if (mult > rank_ - 1) return false;
        return true;
    }

    int color_at(long row, long col) const {
        if (row < 1 || col < 1) throw std::out_of_range("color_at: box indices are 1-based");
        auto rows = shape_.rows();
        if (row > static_cast<long>(rows.size()) || col > rows[row - 1])
            throw std::out_of_range("color_at: box not in diagram");
        return color_of(row, col);
    }

    /// Heights h_c = number of rows of length >= c, for c = 1..lambda_1+1
    /// (index 0 unused; the last entry is the virtual empty column).
    std::vector<long> column_heights() const {
        long width = shape_.first_part();
        std::vector<long> h(width + 2, 0);
        for (auto [part, mult] : shape_.runs())
            for (long c = 1; c <= part; ++c) h[c] += mult;
        return h;
    }

    JSignature signature(int color) const {
        JSignature sig;
        scan_columns([&](long col, int mark_color, bool plus) {
            if (mark_color == color) sig.raw.push_back({col, plus});
        });
        // stack reduction of "+-" adjacencies
        for (const auto& m : sig.raw) {
            if (!m.plus && !sig.reduced.empty() && sig.reduced.back().plus)
                sig.reduced.pop_back();
            else
                sig.reduced.push_back(m);
        }
        return sig;
    }

    long epsilon(int color) const { return signature(color).minus_count(); }
    long phi(int color) const { return signature(color).plus_count(); }

    /// Kashiwara lowering operator: adds a box at the first surviving "+"
    /// in scan order (the largest such column); nothing if none survives.
    std::optional<ExtendedYoungDiagram> apply_f(int color) const {
        JSignature sig = signature(color);
        const SignatureMark* first_plus = nullptr;
        for (const auto& m : sig.reduced)
            if (m.plus) {
                first_plus = &m;
                break;
            }
        if (!first_plus) return std::nullopt;
        return with_box_added(first_plus->column);
    }

    /// Kashiwara raising operator: removes the box of the last surviving
    /// "-" in scan order (the smallest such column); nothing if none.
    std::optional<ExtendedYoungDiagram> apply_e(int color) const {
        JSignature sig = signature(color);
        const SignatureMark* last_minus = nullptr;
        for (const auto& m : sig.reduced)
            if (!m.plus) last_minus = &m;
        if (!last_minus) return std::nullopt;
        return with_box_removed(last_minus->column);
    }

    /// Lambda_charge minus sum over colors of (#colored boxes)*alpha_j.
    AffineWeight weight() const {
        std::vector<long long> count(rank_, 0);
        long b = 0;
        for (auto [part, mult] : shape_.runs())
            for (long m = 0; m < mult; ++m) {
                ++b;
                for (long c = 1; c <= part; ++c) ++count[color_of(b, c)];
            }
        AffineWeight w = AffineWeight::fundamental(rank_, charge_);
        for (int j = 0; j < rank_; ++j)
            if (count[j]) w.sub_alpha(j, count[j]);
        return w;
    }

    long count_color(int color) const {
        long total = 0;
        long b = 0;
        for (auto [part, mult] : shape_.runs())
            for (long m = 0; m < mult; ++m) {
                ++b;
                for (long c = 1; c <= part; ++c)
                    if (color_of(b, c) == color) ++total;
            }
        return total;
    }

    /// Column-condition maximality test: the rightmost removable column is
    /// 0-removable, and the k-th admissible column's color matches the
    /// (k+1)-st removable column's color whenever the latter exists.
    bool maximal_by_columns() const {
        std::vector<int> adm, rem;
        scan_columns([&](long, int mark_color, bool plus) {
            (plus ? adm : rem).push_back(mark_color);
        });
        if (!rem.empty() && rem[0] != 0) return false;
        for (size_t k = 1; k < rem.size(); ++k)
            if (adm[k - 1] != rem[k]) return false;
        return true;
    }

    /// Operator maximality test: eps_j <= [j = 0] for every color, i.e.
    /// all raising operators kill the diagram except possibly one 0-step.
    bool maximal_by_operators() const {
        for (int j = 0; j < rank_; ++j)
            if (epsilon(j) > (j == 0 ? 1 : 0)) return false;
        return true;
    }

    bool operator==(const ExtendedYoungDiagram&) const = default;

private:
    int color_of(long row, long col) const {
        long v = charge_ + col - row;
        return static_cast<int>(((v % rank_) + rank_) % rank_);
    }

    /// Visits admissible (+) and removable (-) columns right to left with
    /// their box colors.  Exactly one virtual addable column c = lambda_1+1
    /// participates; further empty columns never admit (h_{c-1} = 0).
    template <typename F>
    void scan_columns(F&& emit) const {
        std::vector<long> h = column_heights();
        long width = shape_.first_part();
        for (long c = width + 1; c >= 1; --c) {
            long hc = h[c];
            long left = (c == 1) ? hc + 1 : h[c - 1];  // h_0 treated as infinite
            long right = (c <= width) ? h[c + 1] : 0;
            if (left > hc) emit(c, color_of(hc + 1, c), true);
            if (hc > right) emit(c, color_of(hc, c), false);
        }
    }

    ExtendedYoungDiagram with_box_added(long col) const {
        std::vector<long> rows = shape_.rows();
        std::vector<long> h = column_heights();
        long row = h[col] + 1;
        if (row > static_cast<long>(rows.size()))
            rows.push_back(1);
        else
            rows[row - 1] += 1;
        return ExtendedYoungDiagram(Partition::from_rows(rows), charge_, rank_);
    }

    ExtendedYoungDiagram with_box_removed(long col) const {
        std::vector<long> rows = shape_.rows();
        std::vector<long> h = column_heights();
        long row = h[col];
        rows[row - 1] -= 1;
        if (rows[row - 1] == 0) rows.erase(rows.begin() + (row - 1));
        return ExtendedYoungDiagram(Partition::from_rows(rows), charge_, rank_);
    }

    Partition shape_;
    int charge_;
    int rank_;
};

/// All partitions with every multiplicity < rank and at most max_boxes
/// boxes, in canonical order.  These are the shapes underlying the crystal
/// B(Lambda_i) for any charge i.
inline std::vector<Partition> regular_partitions_up_to(int rank, long max_boxes) {
    if (rank < 2) throw std::invalid_argument("regular_partitions_up_to: rank must be >= 2");
    if (max_boxes < 0) throw std::invalid_argument("regular_partitions_up_to: negative box bound");
    std::vector<Partition> out;
    std::vector<Partition::Run> stack;
    auto emit = [&]() { out.push_back(Partition(stack)); };
    // extend with runs of strictly smaller part value
    auto rec = [&](auto&& self, long max_part, long budget) -> void {
        emit();
        for (long part = std::min(max_part, budget); part >= 1; --part)
            for (long mult = 1; mult <= rank - 1 && part * mult <= budget; ++mult) {
                stack.push_back({part, mult});
                self(self, part - 1, budget - part * mult);
                stack.pop_back();
            }
    };
    rec(rec, max_boxes, max_boxes);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace qcrystal
