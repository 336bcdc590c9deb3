#include <catch2/catch_amalgamated.hpp>

#include "toral/fq.hpp"
#include "toral/linalg.hpp"

using namespace toral;

TEST_CASE("prime field arithmetic") {
    Fq F(7);
    REQUIRE(F.p() == 7);
    REQUIRE(F.degree() == 1);
    REQUIRE(F.add(3, 5) == 1);
    REQUIRE(F.mul(3, 5) == 1);
    REQUIRE(F.neg(2) == 5);
    REQUIRE(F.mul(F.inv(4), 4) == 1);
    REQUIRE(F.from_int(-1) == 6);
    REQUIRE(F.pow(3, 6) == 1);
}

TEST_CASE("field axioms on sampled prime powers") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u}) {
        Fq F(q);
        REQUIRE(F.q() == q);
        // every nonzero element invertible, generator has full order
        for (std::uint32_t a = 1; a < q; ++a) {
            REQUIRE(F.mul(a, F.inv(static_cast<Fq::Elem>(a))) == 1);
            REQUIRE(F.pow(static_cast<Fq::Elem>(a), q - 1) == 1);
        }
        REQUIRE(F.mult_order(F.generator()) == q - 1);
        // distributivity on a sample
        Rng rng(42);
        for (int it = 0; it < 50; ++it) {
            auto a = static_cast<Fq::Elem>(rng.below(q));
            auto b = static_cast<Fq::Elem>(rng.below(q));
            auto c = static_cast<Fq::Elem>(rng.below(q));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
    }
}

TEST_CASE("F4 has the classical multiplication") {
    Fq F(4); // elements 0, 1, T, T+1 coded 0,1,2,3 with T^2 = T+1
    REQUIRE(F.mul(2, 2) == 3);
    REQUIRE(F.mul(2, 3) == 1);
    REQUIRE(F.add(2, 3) == 1);
}

TEST_CASE("roots of unity and power classes") {
    Fq F(7);
    auto z = F.root_of_unity(3);
    REQUIRE(F.pow(z, 3) == 1);
    REQUIRE(F.pow(z, 1) != 1);
    // cubes in F_7^* are {1, 6}
    REQUIRE(F.is_mth_power(1, 3));
    REQUIRE(F.is_mth_power(6, 3));
    REQUIRE(!F.is_mth_power(3, 3));
    REQUIRE(F.class_order(3, 3) == 3);
    REQUIRE(F.class_order(6, 3) == 1);

    Fq F9(9);
    REQUIRE((F9.q() - 1) % 8 == 0);
    auto z8 = F9.root_of_unity(8);
    REQUIRE(F9.mult_order(z8) == 8);
}

TEST_CASE("non-prime-power sizes are rejected") {
    REQUIRE_THROWS_AS(Fq(6), input_error);
    REQUIRE_THROWS_AS(Fq(12), input_error);
}

TEST_CASE("row span insert, reduce, membership") {
    Fq F(5);
    RowSpan s(F, 4);
    REQUIRE(s.insert({1, 2, 0, 0}));
    REQUIRE(s.insert({0, 0, 1, 1}));
    REQUIRE(!s.insert({2, 4, 0, 0}));
    REQUIRE(s.dim() == 2);
    REQUIRE(s.contains({3, 1, 2, 2}));
    REQUIRE(!s.contains({0, 1, 0, 0}));
    auto c = s.coordinates({3, 1, 2, 2});
    REQUIRE(c.has_value());
}

TEST_CASE("kernel computes the null space") {
    Fq F(3);
    // M = [[1,1,1],[0,1,2]]: kernel is spanned by (1,1,1)? check M v = 0
    Mat m{{1, 1, 1}, {0, 1, 2}};
    auto k = kernel(F, m, 3);
    REQUIRE(k.size() == 1);
    for (const auto& row : m) {
        Fq::Elem acc = 0;
        for (std::size_t i = 0; i < 3; ++i) acc = F.add(acc, F.mul(row[i], k[0][i]));
        REQUIRE(acc == 0);
    }
}

namespace {
// oracle: characteristic polynomial by cofactor expansion of (lambda I - M)
// over F_q[lambda], exponential but fine for n <= 4
using Poly = std::vector<Fq::Elem>;
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    return c;
}
Poly poly_add(const Fq& F, Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
    return a;
}
Poly det_poly(const Fq& F, const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc{0};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(F, m[0][j], det_poly(F, minor));
        if (j % 2 == 1)
            for (auto& x : term) x = F.neg(x);
        acc = poly_add(F, std::move(acc), term);
    }
    return acc;
}
} // namespace

TEST_CASE("char_poly matches the cofactor oracle on random small matrices") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u}) {
        Fq F(q);
        Rng rng(q * 1000 + 17);
        for (int it = 0; it < 25; ++it) {
            std::size_t n = 1 + rng.below(4);
            Mat m(n, Vec(n, 0));
            for (auto& row : m)
                for (auto& x : row) x = static_cast<Fq::Elem>(rng.below(q));
            std::vector<std::vector<Poly>> lam(n, std::vector<Poly>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Poly p{F.neg(m[i][j])};
                    if (i == j) p.push_back(1);
                    lam[i][j] = p;
                }
            Poly expect = det_poly(F, lam);
            expect.resize(n + 1, 0);
            auto got = char_poly(F, m);
            REQUIRE(got == expect);
        }
    }
}
