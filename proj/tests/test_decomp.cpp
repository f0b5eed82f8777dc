#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "qcrystal/decomp.hpp"

using namespace qcrystal;

namespace {

// independent generator of all partitions with at most max boxes
void all_partitions(long budget, long max_part, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    out.push_back(cur);
    for (long p = std::min(max_part, budget); p >= 1; --p) {
        cur.push_back(p);
        all_partitions(budget - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> brute_maximal(int n, int i, long max_boxes) {
    std::vector<std::vector<long>> rowlists;
    std::vector<long> cur;
    all_partitions(max_boxes, max_boxes, cur, rowlists);
    std::vector<Partition> out;
    for (const auto& rows : rowlists) {
        Partition p = Partition::from_rows(rows);
        if (is_maximal_partition(p, n, i)) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace

TEST_CASE("maximality congruences") {
    CHECK(is_maximal_partition(Partition(), 5, 3));
    CHECK(is_maximal_partition(Partition::parse("5,4,1^2"), 3, 2));
    CHECK(is_maximal_partition(Partition::parse("3^2"), 3, 2));
    CHECK(is_maximal_partition(Partition::parse("3,2,1"), 3, 1));
    CHECK(!is_maximal_partition(Partition::parse("2,1"), 3, 1));
    CHECK(!is_maximal_partition(Partition::parse("1^3"), 3, 0));  // multiplicity n
    CHECK_THROWS_AS(is_maximal_partition(Partition(), 3, 5), std::invalid_argument);
}

TEST_CASE("enumeration equals the brute-force filter") {
    for (int n : {2, 3, 4})
        for (int i = 0; i < n; ++i) {
            auto fast = enumerate_maximal(n, i, 12);
            auto slow = brute_maximal(n, i, 12);
            REQUIRE(fast.size() == slow.size());
            CHECK(fast == slow);
        }
}

TEST_CASE("enumeration matches the crystal maximality tests") {
    for (int n : {2, 3})
        for (int i = 0; i < n; ++i) {
            std::map<Partition, bool> enumerated;
            for (const Partition& p : enumerate_maximal(n, i, 14)) enumerated[p] = true;
            for (const Partition& p : regular_partitions_up_to(n, 14)) {
                ExtendedYoungDiagram d(p, i, n);
                CHECK(enumerated.count(p) == static_cast<size_t>(d.maximal_by_columns()));
            }
        }
}

TEST_CASE("the n=3, i=1 census through 9 boxes") {
    auto got = enumerate_maximal(3, 1, 9);
    std::map<long, long> byboxes;
    for (const Partition& p : got) ++byboxes[p.box_count()];
    std::map<long, long> expect = {{0, 1}, {2, 1}, {3, 1}, {5, 1}, {6, 2}, {8, 2}, {9, 3}};
    CHECK(byboxes == expect);
    // the 9-box entries in canonical order
    std::vector<std::string> nine;
    for (const Partition& p : got)
        if (p.box_count() == 9) nine.push_back(p.to_string());
    CHECK(nine == std::vector<std::string>{"9", "6,2,1", "4^2,1"});
}

TEST_CASE("small censuses") {
    auto got = enumerate_maximal(2, 1, 2);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == Partition());
    CHECK(got[1] == Partition::parse("2"));
    // Figure-2 shapes appear for (3, 2)
    auto m32 = enumerate_maximal(3, 2, 11);
    CHECK(std::count(m32.begin(), m32.end(), Partition::parse("3^2")) == 1);
    CHECK(std::count(m32.begin(), m32.end(), Partition::parse("5,4,1^2")) == 1);
}

TEST_CASE("weight labels") {
    CHECK(weight_label(Partition(), 3, 1) == WeightLabel{1, 0, 0});
    CHECK(weight_label(Partition(), 3, 0) == WeightLabel{0, 0, 0});
    CHECK(weight_label(Partition::parse("3,2,1"), 3, 1) == WeightLabel{1, 0, 2});
    CHECK(weight_label(Partition::parse("5,4,1^2"), 3, 2) == WeightLabel{1, 1, 4});
    CHECK(weight_label(Partition::parse("3^2"), 3, 2) == WeightLabel{2, 0, 2});
    CHECK_THROWS_AS(weight_label(Partition::parse("2,1"), 3, 1), std::invalid_argument);
}

TEST_CASE("labels are consistent with raw diagram weights") {
    for (int n : {2, 3, 4})
        for (int i = 0; i < n; ++i)
            for (const Partition& p : enumerate_maximal(n, i, 15)) {
                WeightLabel lb = weight_label(p, n, i);
                // Lambda_0 + wt(diagram) must equal Lambda_t + Lambda_u - k delta
                AffineWeight lhs = ExtendedYoungDiagram(p, i, n).weight();
                lhs.add_lambda(0, 1);
                AffineWeight rhs(n);
                rhs.add_lambda(lb.t, 1);
                rhs.add_lambda(lb.u, 1);
                rhs.add_delta(-lb.k);
                INFO("n=" << n << " i=" << i << " p=" << p.to_string());
                CHECK(lhs == rhs);
                // minimal delta depth and box-cost arithmetic
                CHECK(lb.k >= label_k_min(i, lb.t));
                CHECK(p.box_count() ==
                      static_cast<long>(n) * (lb.k - label_k_min(i, lb.t)) +
                          min_box_cost(n, i, lb.t));
            }
}

TEST_CASE("multiplicity tables") {
    {
        MultiplicityTable tbl = multiplicity_table(2, 1, 16);
        std::vector<long long> expect = {1, 1, 1, 2, 2, 3, 4, 5};
        for (long k = 0; k < static_cast<long>(expect.size()); ++k)
            CHECK(tbl.counts.at(WeightLabel{1, 0, k}) == expect[k]);
        CHECK(tbl.complete_k.at(1) == 8);
        CHECK(tbl.total() == 25);
    }
    {
        MultiplicityTable tbl = multiplicity_table(3, 1, 9);
        std::vector<long long> expect = {1, 1, 2, 3};
        for (long k = 0; k < 4; ++k) CHECK(tbl.counts.at(WeightLabel{1, 0, k}) == expect[k]);
        CHECK(tbl.complete_k.at(1) == 3);
        // t = 2 family: counts 1, 1, 2 for k = 1..3, complete through 3
        CHECK(tbl.complete_k.at(2) == 3);
        CHECK(tbl.counts.at(WeightLabel{2, 2, 1}) == 1);
        CHECK(tbl.counts.at(WeightLabel{2, 2, 2}) == 1);
        CHECK(tbl.counts.at(WeightLabel{2, 2, 3}) == 2);
    }
}

TEST_CASE("series extraction from tables") {
    MultiplicityTable tbl = multiplicity_table(3, 1, 9);
    CHECK(to_string(series_from_table(tbl, 1)) == "1 + q + 2q^2 + 3q^3");
    CHECK(to_string(series_from_table(tbl, 2)) == "1 + q + 2q^2");
    CHECK_THROWS_AS(series_from_table(tbl, 0), std::out_of_range);
    CHECK_THROWS_AS(series_from_table(tbl, 3), std::out_of_range);
    // max_boxes 0 keeps only the minimal label of t = i
    MultiplicityTable empty = multiplicity_table(3, 0, 0);
    CHECK(to_string(series_from_table(empty, 0)) == "1");
    CHECK_THROWS_AS(series_from_table(empty, 1), std::out_of_range);
}

TEST_CASE("rectangle minima") {
    CHECK(rectangle_check(3, 2, 1) == Partition::parse("2"));
    CHECK(rectangle_check(3, 1, 2) == Partition::parse("1^2"));
    CHECK(rectangle_check(4, 1, 1) == Partition());
    CHECK(rectangle_check(5, 3, 4) == Partition::parse("1^4"));
    CHECK(rectangle_check(5, 4, 2) == Partition::parse("3^2"));
    for (int n = 2; n <= 5; ++n)
        for (int i = 0; i < n; ++i)
            for (int t = label_t_min(n, i); t <= label_t_max(n, i); ++t)
                CHECK_NOTHROW(rectangle_check(n, i, t));
}

TEST_CASE("complete counts are final under larger box bounds") {
    for (int n : {2, 3, 4})
        for (int i = 0; i < n; ++i) {
            MultiplicityTable small = multiplicity_table(n, i, 18);
            MultiplicityTable big = multiplicity_table(n, i, 25);
            for (int t = label_t_min(n, i); t <= label_t_max(n, i); ++t) {
                int u = partner_u(n, i, t);
                for (long k = label_k_min(i, t); k <= small.complete_k.at(t); ++k) {
                    auto it_s = small.counts.find({t, u, k});
                    auto it_b = big.counts.find({t, u, k});
                    long long cs = it_s == small.counts.end() ? 0 : it_s->second;
                    long long cb = it_b == big.counts.end() ? 0 : it_b->second;
                    INFO("n=" << n << " i=" << i << " t=" << t << " k=" << k);
                    CHECK(cs == cb);
                }
            }
        }
}

TEST_CASE("enumeration is deterministic") {
    auto a = enumerate_maximal(4, 2, 20);
    auto b = enumerate_maximal(4, 2, 20);
    CHECK(a == b);
}
