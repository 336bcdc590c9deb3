#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toral/linalg.hpp"

namespace toral {

// Truncated local ring F_q[w_1]/(w_1)^N or F_q[w_1,w_2]/(w_1,w_2)^N:
// all monomials of total degree >= N vanish. Elements are dense coefficient
// vectors over the monomial basis, ordered by total degree then by the
// exponent of the first variable.
class TruncRing {
public:
    using Elem = Vec;

    TruncRing(const Fq& F, std::vector<std::string> vars, std::uint32_t N)
        : F_(&F), vars_(std::move(vars)), N_(N) {
        require(vars_.size() == 1 || vars_.size() == 2, "ring needs 1 or 2 variables");
        require(N_ >= 2, "truncation order must be at least 2");
        build_monomials();
    }

    const Fq& field() const { return *F_; }
    std::uint32_t truncation() const { return N_; }
    std::size_t num_vars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    std::size_t dim() const { return monos_.size(); }

    // exponent vector of the k-th basis monomial
    const std::vector<std::uint32_t>& exponents(std::size_t k) const { return monos_[k]; }
    std::uint32_t total_degree(std::size_t k) const {
        std::uint32_t d = 0;
        for (auto e : monos_[k]) d += e;
        return d;
    }

    // index of a monomial, or npos if truncated away
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t mono_index(const std::vector<std::uint32_t>& exps) const {
        std::uint32_t d = 0;
        for (auto e : exps) d += e;
        if (d >= N_) return npos;
        if (vars_.size() == 1) return exps[0];
        // degree block d starts at d(d+1)/2; within block ordered by exps[0]
        return static_cast<std::size_t>(d) * (d + 1) / 2 + exps[0];
    }

    Elem zero() const { return Elem(dim(), 0); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    Elem from_scalar(Fq::Elem c) const {
        Elem e = zero();
        e[0] = c;
        return e;
    }
    Elem monomial(const std::vector<std::uint32_t>& exps, Fq::Elem c = 1) const {
        Elem e = zero();
        std::size_t k = mono_index(exps);
        if (k != npos) e[k] = c;
        return e;
    }

    bool is_zero(const Elem& a) const { return is_zero_vec(a); }
    bool is_unit(const Elem& a) const { return a[0] != 0; }

    Elem add(const Elem& a, const Elem& b) const { return vec_add(*F_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return vec_sub(*F_, a, b); }
    Elem neg(const Elem& a) const { return scaled(*F_, a, F_->neg(1)); }
    Elem scalar_mul(Fq::Elem c, const Elem& a) const { return scaled(*F_, a, c); }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem out = zero();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j] == 0) continue;
                std::size_t k = prod_index_[i * dim() + j];
                if (k == npos) continue;
                out[k] = F_->add(out[k], F_->mul(a[i], b[j]));
            }
        }
        return out;
    }

    Elem inv(const Elem& a) const {
        require(is_unit(a), "non-unit has no inverse in a local ring");
        // Newton iteration x -> x(2 - ax) doubles correct degrees
        Elem x = from_scalar(F_->inv(a[0]));
        for (std::uint32_t it = 0; it < N_; ++it) {
            Elem t = sub(add(x, x), mul(mul(a, x), x));
            if (t == x) break;
            x = std::move(t);
        }
        return x;
    }

    // evaluation of the canonical representative at a point (one value per variable)
    Fq::Elem evaluate(const Elem& a, const std::vector<Fq::Elem>& point) const {
        ensure(point.size() == vars_.size(), "evaluation point arity mismatch");
        Fq::Elem acc = 0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] == 0) continue;
            Fq::Elem term = a[k];
            for (std::size_t v = 0; v < vars_.size(); ++v)
                for (std::uint32_t e = 0; e < monos_[k][v]; ++e)
                    term = F_->mul(term, point[v]);
            acc = F_->add(acc, term);
        }
        return acc;
    }

    // index of the product of two basis monomials (npos if truncated)
    std::size_t mono_product(std::size_t i, std::size_t j) const {
        return prod_index_[i * dim() + j];
    }

    // multiply by the k-th basis monomial (an index shift)
    Elem shift(const Elem& a, std::size_t k) const {
        Elem out = zero();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            std::size_t t = prod_index_[i * dim() + k];
            if (t != npos) out[t] = F_->add(out[t], a[i]);
        }
        return out;
    }

    // the quotient ring by one variable, with the elementwise projection
    struct VarQuotient {
        TruncRing ring;
        // maps an element of the parent to the quotient
        std::vector<std::size_t> index_map; // parent mono -> quotient mono or npos
    };
    VarQuotient quotient_by_var(std::size_t v) const {
        require(vars_.size() == 2 && v < 2, "quotient_by_var needs a 2-variable ring");
        std::vector<std::string> keep{vars_[1 - v]};
        TruncRing R1(*F_, keep, N_);
        std::vector<std::size_t> map(dim(), npos);
        for (std::size_t k = 0; k < dim(); ++k)
            if (monos_[k][v] == 0) map[k] = R1.mono_index({monos_[k][1 - v]});
        return {std::move(R1), std::move(map)};
    }

    Elem project(const VarQuotient& Q, const Elem& a) const {
        Elem out = Q.ring.zero();
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != 0 && Q.index_map[k] != npos)
                out[Q.index_map[k]] = a[k];
        return out;
    }

    std::string mono_label(std::size_t k) const {
        std::string s;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            std::uint32_t e = monos_[k][v];
            if (!e) continue;
            if (!s.empty()) s += "*";
            s += vars_[v];
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

private:
    const Fq* F_;
    std::vector<std::string> vars_;
    std::uint32_t N_;
    std::vector<std::vector<std::uint32_t>> monos_;
    std::vector<std::size_t> prod_index_; // mono i * mono j -> mono index or npos

    void build_monomials() {
        if (vars_.size() == 1) {
            for (std::uint32_t a = 0; a < N_; ++a) monos_.push_back({a});
        } else {
            for (std::uint32_t d = 0; d < N_; ++d)
                for (std::uint32_t a = 0; a <= d; ++a) monos_.push_back({a, d - a});
        }
        prod_index_.assign(dim() * dim(), npos);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                std::vector<std::uint32_t> e(monos_[i]);
                for (std::size_t v = 0; v < e.size(); ++v) e[v] += monos_[j][v];
                prod_index_[i * dim() + j] = mono_index(e);
            }
    }
};

} // namespace toral
