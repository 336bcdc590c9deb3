#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "toral/algebra.hpp"

namespace toral {

// A linear subspace of an algebra together with its verified ideal flags.
struct SubspaceIdeal {
    RowSpan span;
    bool is_left_ideal = false;
    bool is_right_ideal = false;

    bool is_two_sided() const { return is_left_ideal && is_right_ideal; }
};

inline bool check_left_ideal(const FlatAlgebra& A, const RowSpan& V) {
    for (std::uint32_t a = 0; a < A.n; ++a) {
        auto ea = A.basis_elem(a);
        for (const auto& v : V.rows())
            if (!V.contains(A.mul(ea, v))) return false;
    }
    return true;
}

inline bool check_right_ideal(const FlatAlgebra& A, const RowSpan& V) {
    for (std::uint32_t a = 0; a < A.n; ++a) {
        auto ea = A.basis_elem(a);
        for (const auto& v : V.rows())
            if (!V.contains(A.mul(v, ea))) return false;
    }
    return true;
}

// span of x*A resp. A*x
inline RowSpan span_xA(const FlatAlgebra& A, const Vec& x) {
    RowSpan s(*A.R->F, A.n);
    for (std::uint32_t b = 0; b < A.n; ++b) s.insert(A.mul(x, A.basis_elem(b)));
    return s;
}

inline RowSpan span_Ax(const FlatAlgebra& A, const Vec& x) {
    RowSpan s(*A.R->F, A.n);
    for (std::uint32_t b = 0; b < A.n; ++b) s.insert(A.mul(A.basis_elem(b), x));
    return s;
}

// product span U*V of two subspaces
inline RowSpan span_product(const FlatAlgebra& A, const RowSpan& U, const RowSpan& V) {
    RowSpan s(*A.R->F, A.n);
    for (const auto& u : U.rows())
        for (const auto& v : V.rows()) s.insert(A.mul(u, v));
    return s;
}

// Certifies that a one-sided ideal V is nilpotent via the descending chain
// V >= V^2 >= V^3 >= ...; the chain must reach zero with strictly dropping
// dimension at every step.
inline bool certify_nilpotent(const FlatAlgebra& A, const RowSpan& V) {
    if (V.dim() == 0) return true;
    RowSpan U = V;
    while (U.dim() > 0) {
        RowSpan next = span_product(A, U, V);
        if (next.dim() >= U.dim()) return false;
        U = std::move(next);
    }
    return true;
}

// Solve M c = rhs for one solution (M given as columns); nullopt if
// inconsistent.
inline std::optional<Vec> solve_columns(const Fq& F, const std::vector<Vec>& cols,
                                        const Vec& rhs) {
    const std::size_t n = rhs.size(), s = cols.size();
    Mat aug(n, Vec(s + 1, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < s; ++t) aug[j][t] = cols[t][j];
        aug[j][s] = rhs[j];
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t col = 0; col < s && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(aug[piv], aug[rank]);
        Fq::Elem d = F.inv(aug[rank][col]);
        for (auto& x : aug[rank]) x = F.mul(x, d);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank) continue;
            Fq::Elem f = aug[r][col];
            if (f == 0) continue;
            for (std::size_t c = col; c <= s; ++c)
                aug[r][c] = F.sub(aug[r][c], F.mul(f, aug[rank][c]));
        }
        pivcol.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < n; ++r)
        if (aug[r][s] != 0) return std::nullopt;
    Vec c(s, 0);
    for (std::size_t t = 0; t < pivcol.size(); ++t) c[pivcol[t]] = aug[t][s];
    return c;
}

namespace detail {

// trace of left multiplication by each basis element
inline Vec regular_trace_vector(const FlatAlgebra& A) {
    const Fq& F = *A.R->F;
    Vec t(A.n, 0);
    for (std::uint32_t c = 0; c < A.n; ++c) {
        Fq::Elem acc = 0;
        for (std::uint32_t d = 0; d < A.n; ++d)
            for (const auto& [k, s] : A.entry(c, d))
                if (k == d) acc = F.add(acc, s);
        t[c] = acc;
    }
    return t;
}

// kernel of the trace form (x,y) -> Tr(L_{xy}); contains the radical, and is
// a two-sided ideal because the form is associative
inline RowSpan trace_form_kernel(const FlatAlgebra& A) {
    const Fq& F = *A.R->F;
    Vec tv = regular_trace_vector(A);
    Mat gram(A.n, Vec(A.n, 0));
    for (std::uint32_t a = 0; a < A.n; ++a)
        for (std::uint32_t b = 0; b < A.n; ++b) {
            Fq::Elem acc = 0;
            for (const auto& [k, s] : A.entry(a, b)) acc = F.add(acc, F.mul(s, tv[k]));
            gram[a][b] = acc;
        }
    RowSpan ker(F, A.n);
    for (const auto& v : kernel(F, gram, A.n)) ker.insert(v);
    return ker;
}

// coefficient of lambda^(n - t) in det(lambda I - L_x)
inline Fq::Elem charpoly_coefficient(const FlatAlgebra& A, const Vec& x, std::uint32_t t) {
    auto cp = char_poly(*A.R->F, left_rep(A, x));
    return cp[A.n - t];
}

// One stage of the characteristic-coefficient chain: within span(basis),
// solve sum_i eta_i coeff_{p^k}(L_{b_i y_j}) = 0 for all j, where
// eta_i = xi_i^(p^k); radical elements always satisfy the system since all
// characteristic coefficients of a nilpotent operator vanish.
inline std::vector<Vec> chain_stage(const FlatAlgebra& A, const std::vector<Vec>& basis,
                                    std::uint32_t frob_steps) {
    const Fq& F = *A.R->F;
    const std::size_t s = basis.size();
    std::uint32_t t = 1;
    for (std::uint32_t i = 0; i < frob_steps; ++i) t *= F.p();
    Mat sys;
    sys.reserve(s);
    for (std::size_t j = 0; j < s; ++j) {
        Vec row(s, 0);
        for (std::size_t i = 0; i < s; ++i)
            row[i] = charpoly_coefficient(A, A.mul(basis[i], basis[j]), t);
        sys.push_back(std::move(row));
    }
    std::vector<Vec> eta_kernel = kernel(F, sys, s);
    std::vector<Vec> out;
    for (auto& eta : eta_kernel) {
        Vec x(A.n, 0);
        for (std::size_t i = 0; i < s; ++i) {
            Fq::Elem xi = F.inv_frob(eta[i], frob_steps);
            if (xi != 0) axpy(F, x, xi, basis[i]);
        }
        out.push_back(std::move(x));
    }
    return out;
}

inline void verify_nil_marks(const FlatAlgebra& A) {
    if (A.nil_mark.empty()) return;
    ensure(A.nil_mark.size() == A.n, "nil_mark size mismatch");
    for (std::uint32_t a = 0; a < A.n; ++a)
        for (std::uint32_t b = 0; b < A.n; ++b) {
            if (!A.nil_mark[a] && !A.nil_mark[b]) continue;
            for (const auto& [k, c] : A.entry(a, b))
                ensure(A.nil_mark[k] != 0, "marked ideal is not closed under multiplication");
        }
}

} // namespace detail

// Jacobson radical of a finite-dimensional algebra over F_q.
//
// With a marked nilpotent monomial ideal present the computation reduces to
// the fiber quotient. Otherwise the trace-form kernel is tried first (it
// contains the radical, and equals it exactly when nilpotent); the
// characteristic-coefficient chain covers the degenerate-characteristic
// cases. Every returned ideal is certified nilpotent, so the function
// cannot silently return something too large.
inline RowSpan radical(const FlatAlgebra& A) {
    const Fq& F = *A.R->F;
    bool has_marks =
        std::any_of(A.nil_mark.begin(), A.nil_mark.end(), [](auto m) { return m != 0; });
    if (has_marks) {
        detail::verify_nil_marks(A);
        RowSpan marked(F, A.n);
        for (std::uint32_t i = 0; i < A.n; ++i)
            if (A.nil_mark[i]) marked.insert(A.basis_elem(i));
        QuotientAlgebra fib = quotient_algebra(A, marked);
        RowSpan fib_rad = radical(fib.Q);
        RowSpan out = marked;
        for (const auto& r : fib_rad.rows()) out.insert(fib.lift(r));
        return out;
    }

    RowSpan V = detail::trace_form_kernel(A);
    if (V.dim() == 0) return V;
    if (certify_nilpotent(A, V)) return V;

    std::vector<Vec> basis = V.rows();
    std::uint32_t frob_steps = 1, pk = F.p();
    while (pk <= A.n && !basis.empty()) {
        basis = detail::chain_stage(A, basis, frob_steps);
        RowSpan stage = span_of(F, A.n, basis);
        basis = stage.rows();
        if (certify_nilpotent(A, stage) && check_left_ideal(A, stage) &&
            check_right_ideal(A, stage))
            return stage;
        ++frob_steps;
        pk *= F.p();
    }
    RowSpan last = span_of(F, A.n, basis);
    ensure(certify_nilpotent(A, last) && check_left_ideal(A, last) &&
               check_right_ideal(A, last),
           "radical chain failed to certify its result");
    return last;
}

inline SubspaceIdeal radical_ideal(const FlatAlgebra& A) {
    return SubspaceIdeal{radical(A), true, true};
}

// quotient by the radical
inline QuotientAlgebra semisimple_quotient(const FlatAlgebra& A) {
    return quotient_algebra(A, radical(A));
}

// centralizer of a set of elements, as a basis of the subspace
inline std::vector<Vec> centralizer(const FlatAlgebra& A, const std::vector<Vec>& gens) {
    const Fq& F = *A.R->F;
    std::vector<Vec> basis;
    basis.reserve(A.n);
    for (std::uint32_t i = 0; i < A.n; ++i) basis.push_back(A.basis_elem(i));
    for (const auto& g : gens) {
        if (basis.empty()) break;
        Mat sys(A.n, Vec(basis.size(), 0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Vec w = vec_sub(F, A.mul(basis[i], g), A.mul(g, basis[i]));
            for (std::uint32_t j = 0; j < A.n; ++j) sys[j][i] = w[j];
        }
        std::vector<Vec> coeffs = kernel(F, sys, basis.size());
        std::vector<Vec> next;
        for (const auto& alpha : coeffs) {
            Vec x(A.n, 0);
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (alpha[i] != 0) axpy(F, x, alpha[i], basis[i]);
            next.push_back(std::move(x));
        }
        basis = std::move(next);
    }
    return basis;
}

inline std::vector<Vec> center_basis(const FlatAlgebra& A) {
    std::vector<Vec> gens;
    for (std::uint32_t i = 0; i < A.n; ++i) gens.push_back(A.basis_elem(i));
    return centralizer(A, gens);
}

// One simple (Wedderburn) block of a semisimple algebra: M_r(F_{q^f}).
struct WedderburnBlock {
    Vec idempotent;               // central primitive idempotent
    std::uint32_t dim;            // block dimension over F_q (= r^2 f)
    std::uint32_t center_degree;  // f
    std::uint32_t matrix_size;    // r
    std::uint32_t simple_dim() const { return matrix_size * center_degree; }
};

namespace detail {

// minimal polynomial of v relative to the unit u (u idempotent, v in uAu):
// monic coefficients c with v^deg = sum_{t<deg} c_t v^t, where v^0 := u
inline std::vector<Fq::Elem> relative_min_poly(const FlatAlgebra& A, const Vec& u,
                                               const Vec& v, std::vector<Vec>& pows_out) {
    const Fq& F = *A.R->F;
    std::vector<Vec> pows{u};
    RowSpan seen(F, A.n);
    seen.insert(u);
    Vec cur = u;
    while (true) {
        cur = A.mul(cur, v);
        if (!seen.insert(cur)) {
            auto c = solve_columns(F, pows, cur);
            ensure(c.has_value(), "relative minimal polynomial solve failed");
            pows_out = pows;
            return *c;
        }
        pows.push_back(cur);
    }
}

} // namespace detail

// Wedderburn decomposition of a semisimple algebra over F_q. The center is
// split along eigenspaces of its Frobenius-fixed elements: x -> x^q is
// F_q-linear on the commutative center and its fixed subalgebra is split,
// so the eigenvalue decompositions separate every block. Fully
// deterministic.
inline std::vector<WedderburnBlock> wedderburn_decompose(const FlatAlgebra& A) {
    const Fq& F = *A.R->F;
    require(radical(A).dim() == 0, "wedderburn decomposition needs a semisimple algebra");
    std::vector<Vec> zbasis = center_basis(A);
    const std::size_t zc = zbasis.size();

    auto pow_q = [&](Vec x) {
        Vec acc = A.one_elem();
        std::uint32_t e = F.q();
        while (e) {
            if (e & 1) acc = A.mul(acc, x);
            x = A.mul(x, x);
            e >>= 1;
        }
        return acc;
    };

    // Frobenius-fixed subalgebra of the center
    Mat sys(A.n, Vec(zc, 0));
    for (std::size_t i = 0; i < zc; ++i) {
        Vec w = vec_sub(F, pow_q(zbasis[i]), zbasis[i]);
        for (std::uint32_t j = 0; j < A.n; ++j) sys[j][i] = w[j];
    }
    std::vector<Vec> bbasis;
    for (const auto& alpha : kernel(F, sys, zc)) {
        Vec x(A.n, 0);
        for (std::size_t i = 0; i < zc; ++i)
            if (alpha[i] != 0) axpy(F, x, alpha[i], zbasis[i]);
        bbasis.push_back(std::move(x));
    }

    // refine component idempotents by eigen-splitting along each fixed element
    std::vector<Vec> comps{A.one_elem()};
    for (const auto& b : bbasis) {
        std::vector<Vec> next;
        for (const auto& u : comps) {
            Vec v = A.mul(A.mul(u, b), u);
            std::vector<Vec> pows;
            std::vector<Fq::Elem> mp = detail::relative_min_poly(A, u, v, pows);
            const std::size_t deg = pows.size();
            if (deg == 1) {
                next.push_back(u);
                continue;
            }
            // roots of T^deg - sum mp_t T^t; v is Frobenius-fixed so the
            // polynomial splits into distinct linear factors over F_q
            std::vector<Fq::Elem> roots;
            for (std::uint32_t lam = 0; lam < F.q(); ++lam) {
                Fq::Elem acc = 0, po = 1;
                for (std::size_t t = 0; t < deg; ++t) {
                    acc = F.sub(acc, F.mul(mp[t], po));
                    po = F.mul(po, static_cast<Fq::Elem>(lam));
                }
                acc = F.add(acc, po); // + lam^deg
                if (acc == 0) roots.push_back(static_cast<Fq::Elem>(lam));
            }
            ensure(roots.size() == deg, "Frobenius-fixed element did not split");
            for (auto lam : roots) {
                // Lagrange projector onto the lam-eigencomponent
                Vec e = u;
                for (auto mu : roots) {
                    if (mu == lam) continue;
                    Vec factor = vec_sub(F, v, scaled(F, u, mu));
                    e = A.mul(e, factor);
                    e = scaled(F, e, F.inv(F.sub(lam, mu)));
                }
                next.push_back(std::move(e));
            }
        }
        comps = std::move(next);
    }

    std::vector<WedderburnBlock> blocks;
    for (const auto& u : comps) {
        WedderburnBlock blk;
        blk.idempotent = u;
        RowSpan ua(F, A.n);
        for (std::uint32_t b = 0; b < A.n; ++b) ua.insert(A.mul(u, A.basis_elem(b)));
        blk.dim = static_cast<std::uint32_t>(ua.dim());
        RowSpan uz(F, A.n);
        for (const auto& zb : zbasis) uz.insert(A.mul(u, zb));
        blk.center_degree = static_cast<std::uint32_t>(uz.dim());
        std::uint32_t rsq = blk.dim / blk.center_degree;
        ensure(rsq * blk.center_degree == blk.dim, "block dimension not divisible by f");
        std::uint32_t r = 0;
        while ((r + 1) * (r + 1) <= rsq) ++r;
        ensure(r * r == rsq, "block dimension is not of the form r^2 f");
        blk.matrix_size = r;
        blocks.push_back(std::move(blk));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.idempotent < b.idempotent; });
    return blocks;
}

// Lift the central idempotents of A/J to pairwise orthogonal idempotents of
// A summing to 1. Newton iteration e <- 3e^2 - 2e^3 converges exactly since
// J is nilpotent; successive lifts are corner-projected to stay orthogonal.
inline std::vector<Vec> lift_orthogonal_idempotents(const FlatAlgebra& A,
                                                    const QuotientAlgebra& ssq,
                                                    const std::vector<Vec>& bar_idems) {
    const Fq& F = *A.R->F;
    auto newton = [&](Vec e) {
        for (std::uint32_t it = 0; it <= A.n + 2; ++it) {
            Vec e2 = A.mul(e, e);
            if (e2 == e) return e;
            Vec e3 = A.mul(e2, e);
            // 3 e^2 - 2 e^3
            Vec next = vec_sub(F, vec_add(F, e2, vec_add(F, e2, e2)),
                               vec_add(F, e3, e3));
            e = std::move(next);
        }
        throw internal_error("idempotent lifting did not converge");
    };
    std::vector<Vec> out;
    Vec esum(A.n, 0);
    Vec one = A.one_elem();
    for (const auto& bar : bar_idems) {
        Vec lift = newton(ssq.lift(bar));
        Vec corner = vec_sub(F, one, esum);
        Vec e = A.mul(A.mul(corner, lift), corner);
        e = newton(std::move(e));
        esum = vec_add(F, esum, e);
        out.push_back(std::move(e));
    }
    ensure(esum == one, "lifted idempotents do not sum to 1");
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j)
            if (i != j)
                ensure(A.is_zero(A.mul(out[i], out[j])), "lifted idempotents not orthogonal");
    return out;
}

// Result of the simple-module analysis with the action of a normal element.
struct SimplesWithAction {
    std::vector<WedderburnBlock> blocks;  // simples S_i, one per block
    std::vector<std::size_t> permutation; // S_i tensor tA = S_{perm[i]}-isotypic
    bool single_cycle = false;
};

// Simple modules of A/rad A together with the permutation induced by
// S -> S (x) tA for a normal element t. The module S_i (x) tA is computed as
// e_i t A / e_i J t A and its block support read off through the lifted
// idempotents.
inline SimplesWithAction simples_with_action(const FlatAlgebra& A, const Vec& t) {
    const Fq& F = *A.R->F;
    require(span_xA(A, t).same_span(span_Ax(A, t)), "element is not normal (tA != At)");
    RowSpan J = radical(A);
    QuotientAlgebra ssq = quotient_algebra(A, J);
    std::vector<WedderburnBlock> blocks = wedderburn_decompose(ssq.Q);
    std::vector<Vec> bar_idems;
    for (const auto& blk : blocks) bar_idems.push_back(blk.idempotent);
    std::vector<Vec> idems = lift_orthogonal_idempotents(A, ssq, bar_idems);

    const std::size_t d = blocks.size();
    SimplesWithAction out;
    out.blocks = blocks;
    out.permutation.assign(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec eit = A.mul(idems[i], t);
        RowSpan M = span_xA(A, eit);
        RowSpan D(F, A.n);
        for (const auto& j : J.rows()) {
            Vec w = A.mul(idems[i], A.mul(j, t));
            for (std::uint32_t b = 0; b < A.n; ++b) D.insert(A.mul(w, A.basis_elem(b)));
        }
        std::size_t base = D.dim();
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < d; ++j) {
            RowSpan Dj = D;
            for (const auto& m : M.rows()) Dj.insert(A.mul(m, idems[j]));
            if (Dj.dim() > base) support.push_back(j);
        }
        ensure(support.size() == 1, "t-action image is not supported on a single simple");
        out.permutation[i] = support.front();
    }
    // cycle check
    std::vector<bool> seen(d, false);
    std::size_t len = 0, cur = 0;
    while (cur < d && !seen[cur]) {
        seen[cur] = true;
        ++len;
        cur = out.permutation[cur];
    }
    out.single_cycle = (len == d);
    return out;
}

// True when rad(A) is projective as a right module: dim rad must equal the
// dimension of the projective cover of rad/rad^2.
inline bool is_hereditary_finite(const FlatAlgebra& A) {
    const Fq& F = *A.R->F;
    RowSpan J = radical(A);
    if (J.dim() == 0) return true;
    QuotientAlgebra ssq = quotient_algebra(A, J);
    std::vector<WedderburnBlock> blocks = wedderburn_decompose(ssq.Q);
    std::vector<Vec> bar_idems;
    for (const auto& blk : blocks) bar_idems.push_back(blk.idempotent);
    std::vector<Vec> idems = lift_orthogonal_idempotents(A, ssq, bar_idems);

    RowSpan J2 = span_product(A, J, J);
    std::size_t cover_dim = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        RowSpan top_j = J2;
        for (const auto& v : J.rows()) top_j.insert(A.mul(v, idems[j]));
        std::size_t comp = top_j.dim() - J2.dim();
        std::size_t sdim = blocks[j].simple_dim();
        ensure(comp % sdim == 0, "top component dimension not divisible by the simple");
        std::size_t mult = comp / sdim;
        if (mult == 0) continue;
        std::size_t ejA = span_xA(A, idems[j]).dim();
        ensure(ejA % blocks[j].matrix_size == 0, "block projective dimension mismatch");
        cover_dim += mult * (ejA / blocks[j].matrix_size);
    }
    return cover_dim == J.dim();
}

// tA = At = rad(A): the truncation surrogate of "the radical is principal
// on both sides".
inline bool is_normal_with_uniformiser(const FlatAlgebra& A, const Vec& t) {
    RowSpan ta = span_xA(A, t);
    RowSpan at = span_Ax(A, t);
    if (!ta.same_span(at)) return false;
    return ta.same_span(radical(A));
}

// structure-constant algebra carried by a linearly independent family of
// elements that is closed under multiplication and contains 1
struct Subalgebra {
    FlatAlgebra B;
    std::vector<Vec> basis; // basis[i] is the element of A realizing e_i of B
};

inline Subalgebra subalgebra_on(const FlatAlgebra& A, const std::vector<Vec>& basis) {
    const Fq& F = *A.R->F;
    Subalgebra out;
    out.basis = basis;
    out.B.R = A.R;
    out.B.n = static_cast<std::uint32_t>(basis.size());
    out.B.table.assign(static_cast<std::size_t>(out.B.n) * out.B.n, {});
    for (std::uint32_t a = 0; a < out.B.n; ++a)
        for (std::uint32_t b = 0; b < out.B.n; ++b) {
            auto c = solve_columns(F, basis, A.mul(basis[a], basis[b]));
            ensure(c.has_value(), "family is not multiplicatively closed");
            for (std::uint32_t k = 0; k < out.B.n; ++k)
                if ((*c)[k] != 0) out.B.entry(a, b).push_back({k, (*c)[k]});
        }
    auto one = solve_columns(F, basis, A.one_elem());
    ensure(one.has_value(), "family does not contain the unit");
    for (std::uint32_t k = 0; k < out.B.n; ++k)
        if ((*one)[k] != 0) out.B.unit.push_back({k, (*one)[k]});
    return out;
}

// quotient by the two-sided ideal generated by the nilpotent part of the
// center (the radical of the center, computed in the center itself)
inline QuotientAlgebra central_nilpotent_quotient(const FlatAlgebra& A) {
    const Fq& F = *A.R->F;
    Subalgebra Z = subalgebra_on(A, center_basis(A));
    RowSpan zrad = radical(Z.B);
    RowSpan ideal(F, A.n);
    for (const auto& zr : zrad.rows()) {
        Vec z(A.n, 0);
        for (std::uint32_t i = 0; i < Z.B.n; ++i)
            if (zr[i] != 0) axpy(F, z, zr[i], Z.basis[i]);
        for (std::uint32_t b = 0; b < A.n; ++b) ideal.insert(A.mul(z, A.basis_elem(b)));
    }
    return quotient_algebra(A, ideal);
}

} // namespace toral
