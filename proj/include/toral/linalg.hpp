#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "toral/fq.hpp"

namespace toral {

using Vec = std::vector<Fq::Elem>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(std::size_t n) { return Vec(n, 0); }

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Fq::Elem c) { return c == 0; });
}

inline void axpy(const Fq& F, Vec& y, Fq::Elem c, const Vec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = F.add(y[i], F.mul(c, x[i]));
}

inline Vec scaled(const Fq& F, const Vec& x, Fq::Elem c) {
    Vec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = F.mul(c, x[i]);
    return y;
}

inline Vec vec_add(const Fq& F, const Vec& a, const Vec& b) {
    Vec y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = F.add(a[i], b[i]);
    return y;
}

inline Vec vec_sub(const Fq& F, const Vec& a, const Vec& b) {
    Vec y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = F.sub(a[i], b[i]);
    return y;
}

// Row span in reduced echelon form, built incrementally. The rows are kept
// normalized (pivot = 1) and fully reduced, so membership tests and
// coordinate computations are single sweeps.
class RowSpan {
public:
    explicit RowSpan(const Fq& F, std::size_t width) : F_(&F), width_(width) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<Vec>& rows() const { return rows_; }

    // reduce v against the span; the remainder has zeros in all pivot columns
    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Fq::Elem c = v[pivots_[r]];
            if (c != 0) axpy(*F_, v, F_->neg(c), rows_[r]);
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    // returns true if v enlarged the span
    bool insert(Vec v) {
        v = reduce(std::move(v));
        std::size_t piv = width_;
        for (std::size_t i = 0; i < width_; ++i)
            if (v[i] != 0) {
                piv = i;
                break;
            }
        if (piv == width_) return false;
        Fq::Elem c = F_->inv(v[piv]);
        if (c != 1) v = scaled(*F_, v, c);
        // back-substitute into existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Fq::Elem d = rows_[r][piv];
            if (d != 0) axpy(*F_, rows_[r], F_->neg(d), v);
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    void insert_all(const std::vector<Vec>& vs) {
        for (const auto& v : vs) insert(v);
    }

    // coordinates of v in terms of rows(), if v lies in the span
    std::optional<Vec> coordinates(const Vec& v) const {
        Vec coeff(rows_.size(), 0);
        Vec w = v;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Fq::Elem c = w[pivots_[r]];
            if (c != 0) {
                coeff[r] = c;
                axpy(*F_, w, F_->neg(c), rows_[r]);
            }
        }
        if (!is_zero_vec(w)) return std::nullopt;
        return coeff;
    }

    bool same_span(const RowSpan& other) const {
        if (dim() != other.dim()) return false;
        for (const auto& r : rows_)
            if (!other.contains(r)) return false;
        return true;
    }

    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    const Fq& field() const { return *F_; }

private:
    const Fq* F_;
    std::size_t width_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

inline RowSpan span_of(const Fq& F, std::size_t width, const std::vector<Vec>& vs) {
    RowSpan s(F, width);
    s.insert_all(vs);
    return s;
}

// null space of the linear map x -> M x (M given as rows; x has M[0].size() entries)
inline std::vector<Vec> kernel(const Fq& F, const Mat& m, std::size_t cols) {
    RowSpan rs(F, cols);
    for (const auto& row : m) rs.insert(row);
    // free columns give the kernel basis
    std::vector<bool> is_pivot(cols, false);
    for (auto p : rs.pivot_columns()) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v(cols, 0);
        v[j] = 1;
        for (std::size_t r = 0; r < rs.dim(); ++r) {
            // row has pivot 1 at pivots[r]; solve row . v = 0
            Fq::Elem c = rs.rows()[r][j];
            v[rs.pivot_columns()[r]] = F.neg(c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// dense matrix-vector and matrix-matrix helpers (row-major square matrices)
inline Vec mat_vec(const Fq& F, const Mat& m, const Vec& x) {
    Vec y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Fq::Elem acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (m[i][j] != 0 && x[j] != 0) acc = F.add(acc, F.mul(m[i][j], x[j]));
        y[i] = acc;
    }
    return y;
}

// Characteristic polynomial det(lambda I - M) of a square matrix, returned as
// coefficient vector c with c[k] the coefficient of lambda^k (c[n] = 1).
// Hessenberg reduction by similarity, then the standard leading-minor
// recurrence; exact over any F_q.
inline std::vector<Fq::Elem> char_poly(const Fq& F, Mat m) {
    const std::size_t n = m.size();
    // reduce to upper Hessenberg form by similarity transforms
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            std::swap(m[piv], m[k + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(m[i][piv], m[i][k + 1]);
        }
        Fq::Elem d = F.inv(m[k + 1][k]);
        for (std::size_t i = k + 2; i < n; ++i) {
            Fq::Elem f = F.mul(m[i][k], d);
            if (f == 0) continue;
            // row_i -= f * row_{k+1};  col_{k+1} += f * col_i
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[k + 1][j]));
            for (std::size_t j = 0; j < n; ++j)
                m[j][k + 1] = F.add(m[j][k + 1], F.mul(f, m[j][i]));
        }
    }
    // p_k = char poly of leading k x k block of the Hessenberg matrix
    std::vector<std::vector<Fq::Elem>> p(n + 1);
    p[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        // p_k = (lambda - h_{k,k}) p_{k-1} - sum_{j<k} h_{j,k} (prod subdiag) p_{j-1}
        std::vector<Fq::Elem> cur(k + 1, 0);
        for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
            cur[i + 1] = F.add(cur[i + 1], p[k - 1][i]);
            cur[i] = F.sub(cur[i], F.mul(m[k - 1][k - 1], p[k - 1][i]));
        }
        Fq::Elem subprod = 1;
        for (std::size_t j = k - 1; j-- > 0;) {
            subprod = F.mul(subprod, m[j + 1][j]);
            if (subprod == 0) break;
            Fq::Elem coeff = F.mul(m[j][k - 1], subprod);
            if (coeff == 0) continue;
            for (std::size_t i = 0; i < p[j].size(); ++i)
                cur[i] = F.sub(cur[i], F.mul(coeff, p[j][i]));
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

} // namespace toral
