#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcrystal {

/// Weight of affine sl(n) written in the (Lambda_0..Lambda_{n-1}, delta)
/// basis.  Simple roots enter through
/// alpha_j = 2*Lambda_j - Lambda_{j-1} - Lambda_{j+1} + [j=0]*delta,
/// indices mod n (which also covers n = 2, where the two neighbor terms
/// coincide).
class AffineWeight {
public:
    explicit AffineWeight(int rank) : lambda_(rank, 0) {
        if (rank < 2) throw std::invalid_argument("AffineWeight: rank must be >= 2");
    }

    static AffineWeight fundamental(int rank, int j) {
        AffineWeight w(rank);
        w.add_lambda(j, 1);
        return w;
    }

    int rank() const { return static_cast<int>(lambda_.size()); }
    long long lambda(int j) const { return lambda_[mod(j)]; }
    long long delta() const { return delta_; }

    void add_lambda(int j, long long c) { lambda_[mod(j)] += c; }
    void add_delta(long long c) { delta_ += c; }

    void sub_alpha(int j, long long count) {
        lambda_[mod(j)] -= 2 * count;
        lambda_[mod(j - 1)] += count;
        lambda_[mod(j + 1)] += count;
        if (mod(j) == 0) delta_ -= count;
    }

    /// Level = sum of Lambda coefficients; simple roots have level 0.
    long long level() const {
        long long s = 0;
        for (auto c : lambda_) s += c;
        return s;
    }

    bool operator==(const AffineWeight&) const = default;

    /// e.g. "-L0 + 2L1 - 4d"; the zero weight renders as "0".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        auto emit = [&](long long c, const std::string& sym) {
            if (c == 0) return;
            long long mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1) os << mag;
            os << sym;
        };
        for (int j = 0; j < rank(); ++j) emit(lambda_[j], "L" + std::to_string(j));
        emit(delta_, "d");
        if (first) return "0";
        return os.str();
    }

private:
    int mod(int j) const {
        int n = rank();
        return ((j % n) + n) % n;
    }

    std::vector<long long> lambda_;
    long long delta_ = 0;
};

}  // namespace qcrystal
