#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "toral/hj.hpp"

using namespace toral;
using namespace toral::hj;

namespace {

// exact rational for the continued-fraction oracle
struct Frac {
    long long num, den;
    Frac(long long n, long long d) : num(n), den(d) {
        long long g = gcd_ll(n, d);
        if (g) { num /= g; den /= g; }
        if (den < 0) { num = -num; den = -den; }
    }
};

// m_1 - 1/(m_2 - 1/(... - 1/m_r)) evaluated exactly from the right
Frac hj_continued_fraction(const std::vector<long long>& m) {
    Frac acc(m.back(), 1);
    for (std::size_t i = m.size() - 1; i-- > 0;)
        acc = Frac(m[i] * acc.num - acc.den, acc.num);
    return acc;
}

void for_each_string(std::size_t max_r, long long max_m,
                     const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> cur;
    std::function<void()> rec = [&] {
        if (!cur.empty()) fn(cur);
        if (cur.size() == max_r) return;
        for (long long m = 2; m <= max_m; ++m) {
            cur.push_back(m);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

} // namespace

TEST_CASE("nu sequence hand-checked values") {
    auto nu = [](std::vector<long long> m) { return nu_sequence(IntersectionData(m)).nu; };
    REQUIRE(nu({2}) == std::vector<Pair>{{0, 1}, {1, 0}, {2, -1}});
    REQUIRE(nu({2, 2}) == std::vector<Pair>{{0, 1}, {1, 0}, {2, -1}, {3, -2}});
    REQUIRE(nu({3, 2}) == std::vector<Pair>{{0, 1}, {1, 0}, {3, -1}, {5, -2}});
}

TEST_CASE("singularity type from the recursion") {
    auto ty = [](std::vector<long long> m) {
        auto t = singularity_type(IntersectionData(std::move(m)));
        return std::pair<long long, long long>{t.m, t.k};
    };
    REQUIRE(ty({2}) == std::pair<long long, long long>{2, 1});
    REQUIRE(ty({2, 2}) == std::pair<long long, long long>{3, 2});
    REQUIRE(ty({2, 2, 2, 2, 2, 2}) == std::pair<long long, long long>{7, 6});
}

TEST_CASE("determinant by tridiagonal expansion") {
    REQUIRE(determinant_of_R(IntersectionData({2})) == 2);
    REQUIRE(determinant_of_R(IntersectionData({3, 2})) == 5);
    REQUIRE(determinant_of_R(IntersectionData({2, 2, 2})) == 4);
}

TEST_CASE("nu / determinant coherence and type invariants") {
    for_each_string(6, 6, [](const std::vector<long long>& m) {
        IntersectionData data(m);
        auto nu = nu_sequence(data).nu;
        REQUIRE(nu.back().first == determinant_of_R(data));
        auto t = singularity_type(data);
        REQUIRE(0 < t.k);
        REQUIRE(t.k < t.m);
        REQUIRE(gcd_ll(t.k, t.m) == 1);
        // continued fraction oracle: m/k = [m_1; m_2, ..., m_r]
        Frac cf = hj_continued_fraction(m);
        REQUIRE(cf.num == t.m);
        REQUIRE(cf.den == t.k);
        long long prev = nu[0].first + nu[0].second;
        for (const auto& p : nu) {
            REQUIRE(p.first + p.second >= prev);
            prev = p.first + p.second;
        }
    });
}

TEST_CASE("intersection numbers") {
    IntersectionData d32({3, 2});
    REQUIRE(intersection_number(divisor_on(d32, {5, 2, 1, 0}), 1, d32) == 0);
    IntersectionData d2({2});
    REQUIRE(intersection_number(divisor_on(d2, {0, 1, 0}), 1, d2) == -2);
    IntersectionData d22({2, 2});
    REQUIRE(intersection_number(divisor_on(d22, {1, 0, 0, 0}), 2, d22) == 0);
    REQUIRE_THROWS_AS(intersection_number(divisor_on(d2, {0, 1, 0}), 2, d2), input_error);
}

TEST_CASE("divisor of a lattice point and back") {
    IntersectionData d32({3, 2});
    auto D = divisor_of_lattice_point({2, 5, 1}, d32);
    REQUIRE(D.coeffs == std::vector<long long>{5, 2, 1, 0});
    auto p = lattice_point_of_divisor(D, d32);
    REQUIRE(p.has_value());
    REQUIRE(*p == LatticePoint{2, 5, 1});

    IntersectionData d22({2, 2});
    auto D2 = divisor_of_lattice_point({1, 0, 1}, d22);
    REQUIRE(D2.coeffs == std::vector<long long>{0, 1, 2, 3});
    REQUIRE(lattice_point_of_divisor(D2, d22).has_value());

    // E_0 alone is not principal
    REQUIRE(!lattice_point_of_divisor(divisor_on(d22, {1, 0, 0, 0}), d22).has_value());

    // (k, m) has lambda_0 = m and lambda_{r+1} = 0 on every string
    for_each_string(4, 5, [](const std::vector<long long>& m) {
        IntersectionData data(m);
        auto t = singularity_type(data);
        auto D = divisor_of_lattice_point({t.k, t.m, 1}, data);
        REQUIRE(D.coeffs.front() == t.m);
        REQUIRE(D.coeffs.back() == 0);
    });

    // outside the cone is rejected
    REQUIRE_THROWS_AS(divisor_of_lattice_point({0, 5, 1}, d32), input_error);
}

TEST_CASE("round trip on random cone points pairs to zero with every curve") {
    Rng rng(7);
    for_each_string(4, 4, [&](const std::vector<long long>& m) {
        IntersectionData data(m);
        auto t = singularity_type(data);
        for (int it = 0; it < 20; ++it) {
            long long a = rng.below(6), b = rng.below(6);
            LatticePoint p{a + b * t.k, b * t.m, 1};
            auto D = divisor_of_lattice_point(p, data);
            for (std::size_t i = 1; i <= data.r(); ++i)
                REQUIRE(intersection_number(D, i, data) == 0);
            auto back = lattice_point_of_divisor(D, data);
            REQUIRE(back.has_value());
            REQUIRE(*back == p);
        }
    });
}

TEST_CASE("fundamental cycle") {
    REQUIRE(fundamental_cycle(IntersectionData({2})).coeffs ==
            std::vector<long long>{0, 1, 0});
    REQUIRE(fundamental_cycle(IntersectionData({2, 2})).coeffs ==
            std::vector<long long>{0, 1, 1, 0});
    REQUIRE(fundamental_cycle(IntersectionData({3, 2, 4})).coeffs ==
            std::vector<long long>{0, 1, 1, 1, 0});
}

TEST_CASE("pullback divisor minimal fixpoint") {
    REQUIRE(pullback_divisor(IntersectionData({2})).coeffs ==
            std::vector<long long>{1, 1, 0});
    REQUIRE(pullback_divisor(IntersectionData({2, 2})).coeffs ==
            std::vector<long long>{1, 1, 1, 0});
    REQUIRE(pullback_divisor(IntersectionData({3, 2})).coeffs ==
            std::vector<long long>{1, 1, 1, 0});
    // the computed divisor pairs <= 0 with every curve, and lowering any
    // positive c_i breaks some inequality (componentwise minimality)
    for_each_string(4, 5, [](const std::vector<long long>& m) {
        IntersectionData data(m);
        auto C = pullback_divisor(data);
        REQUIRE(C.coeffs[0] == 1);
        for (std::size_t i = 1; i <= data.r(); ++i)
            REQUIRE(intersection_number(C, i, data) <= 0);
        for (std::size_t j = 1; j <= data.r(); ++j) {
            if (C.coeffs[j] == 0) continue;
            auto low = C;
            low.coeffs[j] -= 1;
            bool violated = false;
            for (std::size_t i = 1; i <= data.r(); ++i)
                if (intersection_number(low, i, data) > 0) violated = true;
            REQUIRE(violated);
        }
    });
}

TEST_CASE("basic toral data counting") {
    REQUIRE(basic_toral_data({1}).size() == 2);
    REQUIRE(basic_toral_data({0, 1}).size() == 2);
    REQUIRE(basic_toral_data({2, 0, 1}).size() == 4);
    REQUIRE_THROWS_AS(basic_toral_data({1, -1}), input_error);
    // size formula sum(d_i + 1) - (r - 1)
    Rng rng(3);
    for (int it = 0; it < 50; ++it) {
        std::size_t r = 1 + rng.below(5);
        std::vector<long long> d;
        long long sum = 0;
        for (std::size_t i = 0; i < r; ++i) {
            d.push_back(rng.below(4));
            sum += d.back() + 1;
        }
        REQUIRE(basic_toral_data(d).size() ==
                static_cast<std::size_t>(sum - (static_cast<long long>(r) - 1)));
    }
}

TEST_CASE("toral generators of the pullback ideal on [2]") {
    IntersectionData data({2});
    auto gens = toral_generators(pullback_divisor(data), data);
    REQUIRE(gens.size() == 2);
    std::set<std::pair<long long, long long>> pts;
    for (const auto& g : gens) pts.insert({g.point.i_int(), g.point.j});
    REQUIRE(pts == std::set<std::pair<long long, long long>>{{1, 1}, {1, 2}});
}

TEST_CASE("generators of an already principal divisor contain its point") {
    IntersectionData data({3, 2});
    auto t = singularity_type(data);
    auto D = divisor_of_lattice_point({t.k, t.m, 1}, data);
    auto gens = toral_generators(D, data);
    REQUIRE(gens.size() == 1);
    REQUIRE(gens[0].point == LatticePoint{t.k, t.m, 1});
}

TEST_CASE("delta recursion output properties") {
    for_each_string(4, 5, [](const std::vector<long long>& m) {
        IntersectionData data(m);
        auto D = pullback_divisor(data);
        long long expected = 1 - (static_cast<long long>(data.r()) - 1);
        for (std::size_t i = 1; i <= data.r(); ++i)
            expected += -intersection_number(D, i, data);
        auto gens = toral_generators(D, data);
        REQUIRE(gens.size() == static_cast<std::size_t>(expected));
        for (const auto& g : gens) {
            REQUIRE(g.delta.effective());
            std::vector<long long> total(D.coeffs);
            for (std::size_t l = 0; l < total.size(); ++l) total[l] += g.delta.coeffs[l];
            for (std::size_t i = 1; i <= data.r(); ++i)
                REQUIRE(intersection_number({total}, i, data) == 0);
            // monotone away from the base curve
            std::size_t i = g.datum.curve;
            for (std::size_t l = i; l + 1 < g.delta.coeffs.size(); ++l)
                REQUIRE(g.delta.coeffs[l + 1] >= g.delta.coeffs[l]);
            for (std::size_t l = i; l-- > 0;)
                REQUIRE(g.delta.coeffs[l] >= g.delta.coeffs[l + 1]);
        }
    });
    REQUIRE_THROWS_AS(
        toral_generators(divisor_on(IntersectionData({2}), {0, 1, 0}), IntersectionData({2})),
        input_error);
}

TEST_CASE("generators generate the bounded cone ideal (brute force)") {
    // every bounded integral cone point whose divisor dominates D is a
    // generator plus an integral cone point
    for (auto mstr : {std::vector<long long>{2}, std::vector<long long>{2, 2},
                      std::vector<long long>{3, 2}, std::vector<long long>{2, 3}}) {
        IntersectionData data(mstr);
        auto t = singularity_type(data);
        auto D = pullback_divisor(data);
        auto gens = toral_generators(D, data);
        auto is_cone = [&](long long i, long long j) {
            return j >= 0 && t.m * i - t.k * j >= 0;
        };
        for (long long i = 0; i <= 8; ++i)
            for (long long j = 0; j <= 8; ++j) {
                if (!is_cone(i, j)) continue;
                auto P = divisor_of_lattice_point({i, j, 1}, data);
                bool dominates = true;
                for (std::size_t l = 0; l < P.coeffs.size(); ++l)
                    if (P.coeffs[l] < D.coeffs[l]) dominates = false;
                if (!dominates) continue;
                bool reachable = false;
                for (const auto& g : gens)
                    if (is_cone(i - g.point.i_int(), j - g.point.j)) reachable = true;
                REQUIRE(reachable);
            }
    }
}

TEST_CASE("cover generators") {
    auto cg2 = cover_generators(IntersectionData({2}));
    REQUIRE(cg2.f1 == LatticePoint{1, 1, 2});
    REQUIRE(cg2.f2 == LatticePoint{1, 0, 2});
    REQUIRE(cg2.l == 1);

    auto cg32 = cover_generators(IntersectionData({2, 2})); // type (3,2)
    REQUIRE(cg32.f1 == LatticePoint{2, 1, 3});
    REQUIRE(cg32.f2 == LatticePoint{1, 0, 3});
    REQUIRE(cg32.l == 1);

    auto cg52 = cover_generators(IntersectionData({3, 2})); // type (5,2)
    REQUIRE(cg52.f1 == LatticePoint{2, 1, 5});
    REQUIRE(cg52.f2 == LatticePoint{1, 0, 5});
    REQUIRE(cg52.l == 2);

    for_each_string(5, 5, [](const std::vector<long long>& m) {
        IntersectionData data(m);
        auto t = singularity_type(data);
        auto cg = cover_generators(data);
        REQUIRE((t.k * cg.l + 1) % t.m == 0);
        REQUIRE(1 <= cg.l);
        REQUIRE(cg.l < t.m);
    });
}

TEST_CASE("f1 to the m-th power lands in the base ring") {
    for (auto mstr : {std::vector<long long>{3, 2}, std::vector<long long>{2},
                      std::vector<long long>{2, 3, 2}}) {
        IntersectionData data(mstr);
        auto t = singularity_type(data);
        auto D = f1_power_check(data);
        REQUIRE(D.coeffs.front() == t.m);
        REQUIRE(D.effective());
    }
}
