#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "toral/common.hpp"

namespace toral {
namespace hj {

// Self-intersection string of a chain of rational curves: m_i = -E_i^2,
// one entry per exceptional curve E_1..E_r.
struct IntersectionData {
    std::vector<long long> m;

    explicit IntersectionData(std::vector<long long> m_list) : m(std::move(m_list)) {
        require(!m.empty(), "intersection string must be nonempty");
        require(m.size() <= 32, "intersection string too long");
        for (auto mi : m) require(mi >= 2 && mi <= 64, "each m_i must satisfy 2 <= m_i <= 64");
    }

    std::size_t r() const { return m.size(); }
};

using Pair = std::pair<long long, long long>;

// nu_0 = (0,1), nu_1 = (1,0), nu_{i+1} = m_i nu_i - nu_{i-1}; r+2 entries.
struct NuSequence {
    std::vector<Pair> nu;
};

inline NuSequence nu_sequence(const IntersectionData& data) {
    NuSequence s;
    s.nu.reserve(data.r() + 2);
    s.nu.push_back({0, 1});
    s.nu.push_back({1, 0});
    long long prev_weight = 1;
    for (std::size_t i = 1; i <= data.r(); ++i) {
        long long mi = data.m[i - 1];
        Pair cur = s.nu[i], before = s.nu[i - 1];
        Pair next{mi * cur.first - before.first, mi * cur.second - before.second};
        require(std::abs(next.first) < (1LL << 40) && std::abs(next.second) < (1LL << 40),
                "intersection string too large for exact arithmetic");
        long long w = next.first + next.second;
        ensure(w >= prev_weight, "(1,1).nu_i failed to weakly increase");
        prev_weight = w;
        s.nu.push_back(next);
    }
    return s;
}

// (m,-k) := nu_{r+1} with 0 < k < m and gcd(k,m) = 1.
struct SingularityType {
    long long m;
    long long k;
};

inline SingularityType singularity_type(const IntersectionData& data) {
    NuSequence s = nu_sequence(data);
    Pair last = s.nu.back();
    long long m = last.first, k = -last.second;
    ensure(0 < k && k < m, "singularity type out of range");
    ensure(gcd_ll(k, m) == 1, "singularity type not coprime");
    return {m, k};
}

// det of the r x r tridiagonal matrix diag(m_i) with -1 off the diagonal,
// by the leading-minor expansion (independent of the nu recursion).
inline long long determinant_of_R(const IntersectionData& data) {
    long long prev2 = 1, prev1 = data.m[0];
    for (std::size_t i = 1; i < data.r(); ++i) {
        long long cur = data.m[i] * prev1 - prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

// Divisor supported on E_0..E_{r+1}, stored as its coefficient vector.
struct ToralDivisor {
    std::vector<long long> coeffs; // lambda_0 .. lambda_{r+1}

    bool effective() const {
        for (auto c : coeffs)
            if (c < 0) return false;
        return true;
    }
};

inline ToralDivisor divisor_on(const IntersectionData& data, std::vector<long long> coeffs) {
    require(coeffs.size() == data.r() + 2, "divisor coefficient vector has wrong length");
    return {std::move(coeffs)};
}

// D.E_i = lambda_{i-1} - m_i lambda_i + lambda_{i+1}, for 1 <= i <= r.
inline long long intersection_number(const ToralDivisor& D, std::size_t i,
                                     const IntersectionData& data) {
    require(1 <= i && i <= data.r(), "curve index out of range");
    require(D.coeffs.size() == data.r() + 2, "divisor length mismatch");
    return D.coeffs[i - 1] - data.m[i - 1] * D.coeffs[i] + D.coeffs[i + 1];
}

// Lattice point (i, j) = (i_num / i_den, j); the denominator always divides
// the type order m, and is 1 for points of the integral R-cone.
struct LatticePoint {
    long long i_num;
    long long j;
    long long i_den = 1;

    bool integral() const { return i_num % i_den == 0; }
    long long i_int() const {
        ensure(integral(), "lattice point is not integral");
        return i_num / i_den;
    }
    bool operator==(const LatticePoint& o) const {
        return i_num * o.i_den == o.i_num * i_den && j == o.j;
    }
};

// membership in the cone R_{>=0}(1,0) + R_{>=0}(k,m): j >= 0 and m i - k j >= 0
inline bool in_r_cone(const LatticePoint& p, const SingularityType& t) {
    return p.j >= 0 && t.m * p.i_num - t.k * p.j * p.i_den >= 0;
}

// membership in the cone of the cover: 0 <= j <= (m/k) i
inline bool in_s_cone(const LatticePoint& p, const SingularityType& t) {
    return p.j >= 0 && t.k * p.j * p.i_den <= t.m * p.i_num;
}

// divisor of the toral function x^i y^j: lambda_l = (i,j) . nu_l
inline ToralDivisor divisor_of_lattice_point(const LatticePoint& p,
                                             const IntersectionData& data) {
    require(p.integral(), "divisor of a non-integral lattice point");
    SingularityType t = singularity_type(data);
    require(in_r_cone(p, t), "lattice point outside the function cone");
    NuSequence s = nu_sequence(data);
    std::vector<long long> coeffs;
    coeffs.reserve(s.nu.size());
    for (const auto& nu : s.nu) coeffs.push_back(p.i_int() * nu.first + p.j * nu.second);
    return {std::move(coeffs)};
}

// inverse of the above on principal divisors: (i,j) = (lambda_1, lambda_0)
inline std::optional<LatticePoint> lattice_point_of_divisor(const ToralDivisor& D,
                                                            const IntersectionData& data) {
    require(D.coeffs.size() == data.r() + 2, "divisor length mismatch");
    NuSequence s = nu_sequence(data);
    long long i = D.coeffs[1], j = D.coeffs[0];
    for (std::size_t l = 0; l < s.nu.size(); ++l)
        if (D.coeffs[l] != i * s.nu[l].first + j * s.nu[l].second) return std::nullopt;
    return LatticePoint{i, j, 1};
}

// Z = E_1 + ... + E_r
inline ToralDivisor fundamental_cycle(const IntersectionData& data) {
    std::vector<long long> coeffs(data.r() + 2, 1);
    coeffs.front() = 0;
    coeffs.back() = 0;
    return {std::move(coeffs)};
}

// Pullback of the curve C meeting E_1: E_0 + sum c_i E_i with the
// componentwise-minimal nonnegative integers c_i such that the result pairs
// <= 0 with every E_i. Gauss-Seidel fixpoint; each pass only raises
// coefficients, so the limit is the minimal solution.
inline ToralDivisor pullback_divisor(const IntersectionData& data) {
    std::size_t r = data.r();
    std::vector<long long> c(r + 2, 0);
    c[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i <= r; ++i) {
            long long need = c[i - 1] + c[i + 1]; // want m_i c_i >= need
            long long mi = data.m[i - 1];
            long long want = (need + mi - 1) / mi;
            if (want > c[i]) {
                c[i] = want;
                changed = true;
            }
        }
    }
    c[r + 1] = 0;
    return {std::move(c)};
}

// One basic toral section, canonically indexed by the leftmost curve where
// it does not vanish, together with its zero order at the left node.
struct BasicToralDatum {
    std::size_t curve;      // 1-based index i
    long long left_order;   // e = zero order at E_{i-1} /\ E_i
};

// Canonical representatives of the basic toral sections of a line bundle
// with degrees d_1..d_r: one datum (i, e) per class under the gluing
// (i, 0) ~ (i-1, d_{i-1}), which identifies sections extending across a node.
inline std::vector<BasicToralDatum> basic_toral_data(const std::vector<long long>& degrees) {
    require(!degrees.empty(), "no curve degrees given");
    for (auto d : degrees) require(d >= 0, "line bundle degree must be nonnegative");
    std::vector<BasicToralDatum> out;
    for (std::size_t i = 1; i <= degrees.size(); ++i)
        for (long long e = (i == 1 ? 0 : 1); e <= degrees[i - 1]; ++e)
            out.push_back({i, e});
    return out;
}

// Toral generators of the reflexive ideal attached to an effective toral
// divisor D with every D.E_i <= 0. For each basic toral datum the
// delta-recursion is solved outward from delta_{i-1}=e, delta_i=0,
// delta_{i+1}=d_i-e, producing an effective Delta with D+Delta principal;
// the generator is the corresponding lattice point.
struct GeneratorSolution {
    BasicToralDatum datum;
    ToralDivisor delta;
    LatticePoint point;
};

inline std::vector<GeneratorSolution> toral_generators(const ToralDivisor& D,
                                                       const IntersectionData& data) {
    std::size_t r = data.r();
    require(D.coeffs.size() == r + 2, "divisor length mismatch");
    require(D.effective(), "divisor must be effective");
    std::vector<long long> d(r + 1, 0);
    for (std::size_t i = 1; i <= r; ++i) {
        d[i] = -intersection_number(D, i, data);
        require(d[i] >= 0, "divisor fails D.E_i <= 0");
    }
    std::vector<GeneratorSolution> out;
    for (const auto& datum : basic_toral_data({d.begin() + 1, d.end()})) {
        std::size_t i = datum.curve;
        std::vector<long long> delta(r + 2, 0);
        delta[i - 1] = datum.left_order;
        delta[i] = 0;
        delta[i + 1] = d[i] - datum.left_order;
        // rightward: solve (D+Delta).E_l = 0 for delta_{l+1}, l = i+1..r
        for (std::size_t l = i + 1; l <= r; ++l)
            delta[l + 1] = d[l] + data.m[l - 1] * delta[l] - delta[l - 1];
        // leftward: solve for delta_{l-1}, l = i-1..1
        for (std::size_t l = i - 1; l >= 1; --l)
            delta[l - 1] = d[l] + data.m[l - 1] * delta[l] - delta[l + 1];
        ToralDivisor Delta{delta};
        ensure(Delta.effective(), "delta-recursion produced a non-effective divisor");
        std::vector<long long> total(r + 2);
        for (std::size_t l = 0; l < total.size(); ++l) total[l] = D.coeffs[l] + delta[l];
        auto p = lattice_point_of_divisor({total}, data);
        ensure(p.has_value(), "delta-recursion output is not principal");
        out.push_back({datum, std::move(Delta), *p});
    }
    return out;
}

// Generators of the maximal ideal of the cyclic cover:
//   f1 = (k/m, 1) in grade m-1,  f2 = (1/m, 0) in grade l,
// where l in 1..m-1 is the unique solution of k l = -1 (mod m).
struct CoverGenerators {
    LatticePoint f1;
    LatticePoint f2;
    long long l;
};

inline CoverGenerators cover_generators(const IntersectionData& data) {
    SingularityType t = singularity_type(data);
    long long l = (t.m - mod_inverse(t.k, t.m)) % t.m;
    ensure(l >= 1 && l < t.m && (t.k * l + 1) % t.m == 0, "no grade solves kl = -1 mod m");
    LatticePoint f1{t.k, 1, t.m};
    LatticePoint f2{1, 0, t.m};
    ensure(in_s_cone(f1, t) && in_s_cone(f2, t), "cover generators left the cover cone");
    return {f1, f2, l};
}

// m * f1 = (k, m): integral, in the function cone, with lambda_0 = m.
inline ToralDivisor f1_power_check(const IntersectionData& data) {
    SingularityType t = singularity_type(data);
    LatticePoint p{t.k, t.m, 1};
    ToralDivisor D = divisor_of_lattice_point(p, data);
    ensure(D.coeffs.front() == t.m, "divisor of f1^m has wrong multiplicity along E_0");
    ensure(D.coeffs.back() == 0, "divisor of f1^m meets the far boundary");
    return D;
}

} // namespace hj
} // namespace toral
