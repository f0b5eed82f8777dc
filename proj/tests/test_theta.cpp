#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "qcrystal/qseries.hpp"
#include "qcrystal/theta.hpp"

using namespace qcrystal;

namespace {

// independent bilateral-sum oracle: accumulate u^(k(k-1)/2) v^(k(k+1)/2)
// term by term into an exponent map
std::map<long, long> bilateral_oracle(int sign, long r, long s, long kmax) {
    std::map<long, long> acc;
    for (long k = -kmax; k <= kmax; ++k) {
        long e = r * (k * (k - 1) / 2) + s * (k * (k + 1) / 2);
        long sg = 1;
        // sign^(k(k-1)/2 + k(k+1)/2) = sign^(k^2)
        if (sign < 0 && (k * k) % 2 != 0) sg = -1;
        acc[e] += sg;
    }
    return acc;
}

void check_against_oracle(const ThetaSpec& t, long order) {
    QSeries got = theta_expand(t, order);
    auto oracle = bilateral_oracle(t.sign, t.r, t.s, 64);
    for (long e = got.valuation(); e <= order; ++e) {
        auto it = oracle.find(e);
        long want = it == oracle.end() ? 0 : it->second;
        INFO(to_string(t) << " at q^" << e);
        CHECK(got.coeff(e) == want);
    }
}

}  // namespace

TEST_CASE("theta_expand: bilateral sums") {
    CHECK(to_string(theta_expand(ThetaSpec{1, 50, 50}, 10)) == "1");
    CHECK(to_string(theta_expand(ThetaSpec{-1, 1, 3}, 10)) == "1 - q - q^3 + q^6 + q^10");
    // Laurent case; the q^33 term is negative (k = -3 has odd k)
    QSeries t = theta_expand(ThetaSpec{-1, -4, 19}, 33);
    CHECK(t.valuation() == -4);
    CHECK(to_string(t) == "-q^-4 + 1 + q^7 - q^19 - q^33");
    check_against_oracle(ThetaSpec{-1, -4, 19}, 60);
    check_against_oracle(ThetaSpec{1, -5, 29}, 60);
    check_against_oracle(ThetaSpec{-1, 1, 2}, 80);
    check_against_oracle(ThetaSpec{1, 0, 8}, 60);
    CHECK_THROWS_AS(theta_expand(ThetaSpec{1, 3, -3}, 10), std::domain_error);
    CHECK_THROWS_AS(theta_expand(ThetaSpec{-1, -8, 4}, 10), std::domain_error);
}

TEST_CASE("theta_expand is symmetric in its arguments") {
    for (auto [sign, r, s] : {std::tuple<int, long, long>{-1, 1, 2},
                              {-1, 6, 9},
                              {1, 4, 4},
                              {-1, -4, 19},
                              {1, -7, 31}}) {
        QSeries a = theta_expand(ThetaSpec{sign, r, s}, 50);
        QSeries b = theta_expand(ThetaSpec{sign, s, r}, 50);
        CHECK(a == b);
    }
}

TEST_CASE("theta_triple_product matches the bilateral form") {
    CHECK(equal_on(theta_triple_product(ThetaSpec{-1, 1, 2}, 20), euler_phi(20), 0, 20));
    // f(q,q) = 1 + 2q + 2q^4 + 2q^9
    CHECK(to_string(theta_triple_product(ThetaSpec{1, 1, 1}, 10)) == "1 + 2q + 2q^4 + 2q^9");
    // (15; 6, 9) product from the n=3 identity, written out independently
    long N = 40;
    QSeries prod = QSeries::one(N);
    for (long j = 1; 15 * j - 9 <= N; ++j)
        for (long e : {15 * j, 15 * j - 6, 15 * j - 9}) {
            QSeries f = QSeries::zero(0, N);
            f.mutable_coeff(0) = 1;
            if (e <= N) f.mutable_coeff(e) = -1;
            prod = mul(prod, f);
        }
    CHECK(equal_on(theta_triple_product(ThetaSpec{-1, 6, 9}, N), prod, 0, N));
    CHECK(equal_on(theta_expand(ThetaSpec{-1, 6, 9}, N), prod, 0, N));
    // zero-exponent factor: f(1, q^8) doubles, f(-1, -q^s) vanishes
    CHECK(equal_on(theta_triple_product(ThetaSpec{1, 0, 8}, 40),
                   theta_expand(ThetaSpec{1, 0, 8}, 40), 0, 40));
    CHECK(theta_triple_product(ThetaSpec{-1, 0, 5}, 20).is_zero());
    CHECK_THROWS_AS(theta_triple_product(ThetaSpec{-1, -4, 19}, 10), std::domain_error);
}

TEST_CASE("shift_normalize rewrites to nonnegative exponents") {
    {
        NormalizedTheta n = shift_normalize(ThetaSpec{-1, 1, 2});
        CHECK(n.unit_sign == 1);
        CHECK(n.power == 0);
        CHECK(n.spec == ThetaSpec{-1, 1, 2});
    }
    {
        NormalizedTheta n = shift_normalize(ThetaSpec{-1, -4, 19});
        CHECK(n.spec.r >= 0);
        CHECK(n.spec.s >= 0);
        QSeries lhs = theta_expand(ThetaSpec{-1, -4, 19}, 60);
        QSeries rhs = scale(qshift(theta_expand(n.spec, 60 - n.power), n.power), n.unit_sign);
        CHECK(equal_on(lhs, rhs, lhs.valuation(), 60));
    }
    {
        // Psi_13^1 for n=4
        NormalizedTheta n = shift_normalize(ThetaSpec{1, -5, 29});
        CHECK(n.spec.r >= 0);
        CHECK(n.spec.s >= 0);
        QSeries lhs = theta_expand(ThetaSpec{1, -5, 29}, 60);
        QSeries rhs = scale(qshift(theta_expand(n.spec, 60 - n.power), n.power), n.unit_sign);
        CHECK(equal_on(lhs, rhs, lhs.valuation(), 60));
    }
}

TEST_CASE("triple product equals the bilateral sum for random specs (property)") {
    unsigned long long st = 0xd1b54a32d192ed03ull;
    auto rnd = [&](long lo, long hi) {
        st = st * 2862933555777941757ull + 3037000493ull;
        return lo + static_cast<long>((st >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    };
    for (int trial = 0; trial < 60; ++trial) {
        ThetaSpec spec{rnd(0, 1) ? 1 : -1, rnd(0, 15), rnd(0, 15)};
        if (spec.r + spec.s == 0) spec.s = 1;
        INFO(to_string(spec));
        CHECK(equal_on(theta_expand(spec, 80), theta_triple_product(spec, 80), 0, 80));
    }
}

TEST_CASE("shift identity holds for arbitrary specs (property)") {
    unsigned long long st = 0x9e3779b97f4a7c15ull;
    auto rnd = [&](long lo, long hi) {
        st = st * 2862933555777941757ull + 3037000493ull;
        return lo + static_cast<long>((st >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    };
    for (int trial = 0; trial < 100; ++trial) {
        int sign = rnd(0, 1) ? 1 : -1;
        long r = rnd(-12, 12);
        long s = rnd(1, 20) - r;  // r + s uniform in [1, 20]
        ThetaSpec spec{sign, r, s};
        NormalizedTheta n = shift_normalize(spec);
        CHECK(n.spec.r >= 0);
        CHECK(n.spec.s >= 0);
        CHECK(n.spec.r + n.spec.s == r + s);
        QSeries lhs = theta_expand(spec, 60);
        QSeries rhs = scale(qshift(theta_expand(n.spec, 60 - n.power), n.power), n.unit_sign);
        CHECK(equal_on(lhs, rhs, std::min(lhs.valuation(), rhs.valuation()), 60));
    }
}
