#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "toral/truncring.hpp"

namespace toral {

// Finite-dimensional associative unital algebra presented by structure
// constants over a coefficient ring (a finite field or a truncated local
// ring). Products of basis elements are stored sparsely; every algebra in
// this library has monomial-shaped tables, so entries are almost always a
// single term.
template <class Ring>
struct Algebra {
    using Elem = typename Ring::Elem;                 // ring scalar
    using Term = std::pair<std::uint32_t, Elem>;      // basis index, coefficient
    using Lin = std::vector<Term>;                    // sparse combination

    const Ring* R = nullptr;
    std::uint32_t n = 0;                              // rank over R
    std::vector<Lin> table;                           // n*n entries, e_a e_b
    Lin unit;                                         // coordinates of 1
    std::vector<std::string> labels;                  // optional
    // Optional: marks a subset of basis elements spanning a two-sided
    // nilpotent ideal (typically the positive-degree part of a monomial
    // basis). Structure computations use it to reduce to the fiber.
    std::vector<std::uint8_t> nil_mark;

    const Lin& entry(std::uint32_t a, std::uint32_t b) const {
        return table[static_cast<std::size_t>(a) * n + b];
    }
    Lin& entry(std::uint32_t a, std::uint32_t b) {
        return table[static_cast<std::size_t>(a) * n + b];
    }

    std::vector<Elem> zero_elem() const { return std::vector<Elem>(n, R->zero()); }

    std::vector<Elem> one_elem() const {
        auto v = zero_elem();
        for (const auto& [i, c] : unit) v[i] = c;
        return v;
    }

    std::vector<Elem> basis_elem(std::uint32_t i) const {
        auto v = zero_elem();
        v[i] = R->one();
        return v;
    }

    std::vector<Elem> mul(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
        auto out = zero_elem();
        for (std::uint32_t a = 0; a < n; ++a) {
            if (R->is_zero(x[a])) continue;
            for (std::uint32_t b = 0; b < n; ++b) {
                if (R->is_zero(y[b])) continue;
                Elem c = R->mul(x[a], y[b]);
                for (const auto& [k, s] : entry(a, b)) out[k] = R->add(out[k], R->mul(c, s));
            }
        }
        return out;
    }

    bool is_zero(const std::vector<Elem>& x) const {
        for (const auto& c : x)
            if (!R->is_zero(c)) return false;
        return true;
    }

    std::string label(std::uint32_t i) const {
        return i < labels.size() ? labels[i] : "e" + std::to_string(i);
    }
};

// helpers to let Fq act as a coefficient "ring" in the same templates
struct FqRing {
    using Elem = Fq::Elem;
    const Fq* F;
    explicit FqRing(const Fq& f) : F(&f) {}
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_unit(Elem a) const { return a != 0; }
    Elem add(Elem a, Elem b) const { return F->add(a, b); }
    Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
    Elem neg(Elem a) const { return F->neg(a); }
    Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
    Elem inv(Elem a) const { return F->inv(a); }
    std::size_t dim() const { return 1; }
};

using FlatAlgebra = Algebra<FqRing>;

// exhaustive associativity check: (e_a e_b) e_c == e_a (e_b e_c)
template <class Ring>
bool verify_associativity(const Algebra<Ring>& A) {
    for (std::uint32_t a = 0; a < A.n; ++a) {
        auto ea = A.basis_elem(a);
        for (std::uint32_t b = 0; b < A.n; ++b) {
            auto left_ab = A.zero_elem();
            for (const auto& [k, c] : A.entry(a, b)) left_ab[k] = c;
            for (std::uint32_t c = 0; c < A.n; ++c) {
                auto ec = A.basis_elem(c);
                auto lhs = A.mul(left_ab, ec);
                auto right_bc = A.zero_elem();
                for (const auto& [k, s] : A.entry(b, c)) right_bc[k] = s;
                auto rhs = A.mul(ea, right_bc);
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

template <class Ring>
bool verify_unit(const Algebra<Ring>& A) {
    auto one = A.one_elem();
    for (std::uint32_t a = 0; a < A.n; ++a) {
        auto ea = A.basis_elem(a);
        if (A.mul(one, ea) != ea || A.mul(ea, one) != ea) return false;
    }
    return true;
}

// Restriction of scalars from a truncated local ring down to its base field.
// Basis pairs (algebra basis element, ring monomial); the positive-degree
// monomial part is marked as a nilpotent ideal.
struct Flattened {
    FlatAlgebra A;
    // flat index <-> (algebra basis, ring monomial)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> flat_to_pair;
    std::vector<std::vector<std::uint32_t>> pair_to_flat; // [basis][mono]

    std::uint32_t index(std::uint32_t basis, std::uint32_t mono) const {
        return pair_to_flat[basis][mono];
    }
};

inline Flattened flatten(const Algebra<TruncRing>& A, const FqRing& FR) {
    const TruncRing& R = *A.R;
    const Fq& F = R.field();
    Flattened out;
    const std::uint32_t rd = static_cast<std::uint32_t>(R.dim());
    out.A.R = &FR;
    out.A.n = A.n * rd;
    out.pair_to_flat.assign(A.n, std::vector<std::uint32_t>(rd, 0));
    out.flat_to_pair.reserve(out.A.n);
    for (std::uint32_t a = 0; a < A.n; ++a)
        for (std::uint32_t m = 0; m < rd; ++m) {
            out.pair_to_flat[a][m] = static_cast<std::uint32_t>(out.flat_to_pair.size());
            out.flat_to_pair.push_back({a, m});
        }
    out.A.labels.resize(out.A.n);
    out.A.nil_mark.assign(out.A.n, 0);
    for (std::uint32_t idx = 0; idx < out.A.n; ++idx) {
        auto [a, m] = out.flat_to_pair[idx];
        std::string ml = R.mono_label(m);
        out.A.labels[idx] = ml == "1" ? A.label(a) : A.label(a) + "*" + ml;
        bool marked = R.total_degree(m) > 0 ||
                      (a < A.nil_mark.size() && A.nil_mark[a]);
        out.A.nil_mark[idx] = marked ? 1 : 0;
    }
    out.A.table.assign(static_cast<std::size_t>(out.A.n) * out.A.n, {});
    for (std::uint32_t a = 0; a < A.n; ++a)
        for (std::uint32_t b = 0; b < A.n; ++b) {
            const auto& ent = A.entry(a, b);
            if (ent.empty()) continue;
            for (std::uint32_t ma = 0; ma < rd; ++ma)
                for (std::uint32_t mb = 0; mb < rd; ++mb) {
                    // (e_a w^ma)(e_b w^mb) = sum_k coeff * e_k w^(ma+mb)
                    std::size_t mono = R.mono_product(ma, mb);
                    if (mono == TruncRing::npos) continue;
                    auto& target = out.A.entry(out.index(a, ma), out.index(b, mb));
                    for (const auto& [k, coeff] : ent) {
                        TruncRing::Elem full = R.shift(coeff, mono);
                        for (std::uint32_t mk = 0; mk < rd; ++mk)
                            if (!F.is_zero(full[mk]))
                                target.push_back({out.index(k, mk), full[mk]});
                    }
                }
        }
    out.A.unit.clear();
    for (const auto& [i, c] : A.unit)
        for (std::uint32_t mk = 0; mk < rd; ++mk)
            if (!F.is_zero(c[mk])) out.A.unit.push_back({out.index(i, mk), c[mk]});
    return out;
}

// Quotient of a flat algebra by a two-sided ideal given as a row span.
// The quotient basis is indexed by the non-pivot coordinates, and both
// directions of the linear identification are provided.
struct QuotientAlgebra {
    FlatAlgebra Q;
    std::vector<std::uint32_t> kept;     // quotient basis as parent indices
    // project a parent element to quotient coordinates
    std::function<Vec(const Vec&)> project;
    // lift quotient coordinates to the parent (the canonical representative)
    std::function<Vec(const Vec&)> lift;
};

inline QuotientAlgebra quotient_algebra(const FlatAlgebra& A, const RowSpan& ideal) {
    const Fq& F = *A.R->F;
    const std::size_t n = A.n;
    std::vector<bool> is_pivot(n, false);
    for (auto p : ideal.pivot_columns()) is_pivot[p] = true;
    QuotientAlgebra out;
    out.Q.R = A.R;
    for (std::uint32_t i = 0; i < n; ++i)
        if (!is_pivot[i]) out.kept.push_back(i);
    const std::uint32_t qn = static_cast<std::uint32_t>(out.kept.size());
    out.Q.n = qn;
    std::vector<std::uint32_t> pos(n, qn); // parent index -> quotient slot
    for (std::uint32_t s = 0; s < qn; ++s) pos[out.kept[s]] = s;

    auto kept_copy = out.kept;
    out.project = [&F, ideal, pos, qn](const Vec& v) {
        Vec red = ideal.reduce(v);
        Vec q(qn, 0);
        for (std::size_t i = 0; i < red.size(); ++i)
            if (red[i] != 0) q[pos[i]] = red[i];
        return q;
    };
    out.lift = [kept_copy, n](const Vec& q) {
        Vec v(n, 0);
        for (std::uint32_t s = 0; s < q.size(); ++s) v[kept_copy[s]] = q[s];
        return v;
    };

    out.Q.labels.resize(qn);
    for (std::uint32_t s = 0; s < qn; ++s) out.Q.labels[s] = A.label(out.kept[s]);
    out.Q.table.assign(static_cast<std::size_t>(qn) * qn, {});
    for (std::uint32_t a = 0; a < qn; ++a)
        for (std::uint32_t b = 0; b < qn; ++b) {
            Vec prod(n, 0);
            for (const auto& [k, c] : A.entry(out.kept[a], out.kept[b]))
                prod[k] = F.add(prod[k], c);
            Vec q = out.project(prod);
            auto& ent = out.Q.entry(a, b);
            for (std::uint32_t s = 0; s < qn; ++s)
                if (q[s] != 0) ent.push_back({s, q[s]});
        }
    Vec one(n, 0);
    for (const auto& [i, c] : A.unit) one[i] = F.add(one[i], c);
    Vec qone = out.project(one);
    for (std::uint32_t s = 0; s < qn; ++s)
        if (qone[s] != 0) out.Q.unit.push_back({s, qone[s]});
    return out;
}

// span of the left ideal x0 A (or right ideal A x0)
inline RowSpan left_multiples(const FlatAlgebra& A, const Vec& x) {
    RowSpan s(*A.R->F, A.n);
    for (std::uint32_t b = 0; b < A.n; ++b) s.insert(A.mul(x, A.basis_elem(b)));
    return s;
}

inline RowSpan right_multiples(const FlatAlgebra& A, const Vec& x) {
    RowSpan s(*A.R->F, A.n);
    for (std::uint32_t b = 0; b < A.n; ++b) s.insert(A.mul(A.basis_elem(b), x));
    return s;
}

// matrix of left multiplication by x in the regular representation
inline Mat left_rep(const FlatAlgebra& A, const Vec& x) {
    Mat m(A.n, Vec(A.n, 0));
    for (std::uint32_t b = 0; b < A.n; ++b) {
        Vec col = A.mul(x, A.basis_elem(b));
        for (std::uint32_t i = 0; i < A.n; ++i) m[i][b] = col[i];
    }
    return m;
}

} // namespace toral
