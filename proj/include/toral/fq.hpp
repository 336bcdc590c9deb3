#pragma once

#include <cstdint>
#include <vector>

#include "toral/common.hpp"

namespace toral {

// Arithmetic context for the finite field F_q, q = p^e a prime power.
//
// Elements are encoded as integers 0..q-1. For e = 1 the code is the
// residue itself. For e > 1 the code is the base-p digit vector of a
// polynomial c_0 + c_1 T + ... + c_{e-1} T^{e-1} reduced modulo the
// canonical irreducible of degree e (the first monic irreducible in
// code order), so the encoding is deterministic across runs.
//
// All binary operations are table lookups; q is capped so the tables
// stay small.
class Fq {
public:
    using Elem = std::uint16_t;
    static constexpr std::uint32_t kMaxQ = 1024;

    explicit Fq(std::uint32_t q) : q_(q) {
        require(q >= 2 && q <= kMaxQ, "field size out of range");
        factor_prime_power();
        build_tables();
    }

    std::uint32_t q() const { return q_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return e_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }

    Elem inv(Elem a) const {
        ensure(a != 0, "division by zero in F_q");
        return inv_[a];
    }

    bool is_zero(Elem a) const { return a == 0; }

    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    Elem pow(Elem a, long long n) const {
        if (a == 0) {
            ensure(n > 0, "0^n undefined for n <= 0");
            return 0;
        }
        long long m = static_cast<long long>(q_) - 1;
        long long r = n % m;
        if (r < 0) r += m;
        if (r == 0) return 1;
        return exp_[(static_cast<long long>(log_[a]) * r) % m];
    }

    // Frobenius x -> x^(p^k) and its inverse on F_q.
    Elem frob(Elem a, std::uint32_t k) const {
        long long pk = 1;
        for (std::uint32_t i = 0; i < k % e_; ++i) pk *= p_;
        return pow(a, pk);
    }
    Elem inv_frob(Elem a, std::uint32_t k) const { return frob(a, (e_ - (k % e_)) % e_); }

    // Canonical generator of the multiplicative group: the smallest code
    // of multiplicative order q-1.
    Elem generator() const { return gen_; }

    // discrete log base generator(); defined on nonzero elements
    std::uint32_t dlog(Elem a) const {
        ensure(a != 0, "dlog of zero");
        return log_[a];
    }

    std::uint32_t mult_order(Elem a) const {
        ensure(a != 0, "order of zero");
        std::uint32_t n = q_ - 1;
        std::uint32_t d = gcd_ll(log_[a], n);
        return n / d;
    }

    // Primitive m-th root of unity; requires m | q-1.
    Elem root_of_unity(std::uint32_t m) const {
        require(m >= 1 && (q_ - 1) % m == 0,
                "field has no primitive root of unity of the requested order");
        return exp_[((q_ - 1) / m) % (q_ - 1)];
    }

    // True when a is an m-th power in F_q^* (a != 0), for any m | q-1 or not.
    bool is_mth_power(Elem a, std::uint32_t m) const {
        ensure(a != 0, "power class of zero");
        std::uint32_t d = gcd_ll(m, q_ - 1);
        return log_[a] % d == 0;
    }

    // order of the class of a in F_q^* / (F_q^*)^m
    std::uint32_t class_order(Elem a, std::uint32_t m) const {
        ensure(a != 0, "class of zero");
        std::uint32_t d = gcd_ll(m, q_ - 1);   // group order
        std::uint32_t r = log_[a] % d;
        return d / gcd_ll(r, d);
    }

    bool operator==(const Fq& other) const { return q_ == other.q_; }

private:
    std::uint32_t q_, p_ = 0, e_ = 0;
    Elem gen_ = 0;
    std::vector<Elem> add_, mul_, neg_, inv_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;

    void factor_prime_power() {
        std::uint32_t n = q_;
        for (std::uint32_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                p_ = d;
                break;
            }
        }
        if (p_ == 0) p_ = n;
        e_ = 0;
        while (n > 1) {
            require(n % p_ == 0, "field size is not a prime power");
            n /= p_;
            ++e_;
        }
    }

    // digit helpers for the polynomial encoding
    std::vector<std::uint32_t> digits(std::uint32_t code, std::uint32_t len) const {
        std::vector<std::uint32_t> d(len, 0);
        for (std::uint32_t i = 0; i < len && code; ++i) {
            d[i] = code % p_;
            code /= p_;
        }
        return d;
    }

    static std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
        std::uint32_t c = 0;
        for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
        return c;
    }

    // polynomial multiplication of codes modulo the irreducible (digit arithmetic)
    std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b,
                           const std::vector<std::uint32_t>& irred) const {
        auto da = digits(a, e_), db = digits(b, e_);
        std::vector<std::uint32_t> prod(2 * e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
            for (std::uint32_t j = 0; j < e_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // reduce: T^e = -(irred_0 + irred_1 T + ...), irred monic of degree e
        for (std::uint32_t k = 2 * e_; k-- > e_;) {
            std::uint32_t c = prod[k];
            if (!c) continue;
            prod[k] = 0;
            for (std::uint32_t j = 0; j < e_; ++j) {
                std::uint32_t sub = (c * irred[j]) % p_;
                prod[k - e_ + j] = (prod[k - e_ + j] + p_ - sub) % p_;
            }
        }
        prod.resize(e_);
        return undigits(prod, p_);
    }

    void build_tables() {
        add_.assign(static_cast<std::size_t>(q_) * q_, 0);
        mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        log_.assign(q_, 0);
        exp_.assign(q_ - 1, 0);

        // addition is digitwise mod p
        for (std::uint32_t a = 0; a < q_; ++a) {
            auto da = digits(a, e_);
            for (std::uint32_t b = 0; b < q_; ++b) {
                auto db = digits(b, e_);
                std::vector<std::uint32_t> s(e_);
                for (std::uint32_t i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = static_cast<Elem>(undigits(s, p_));
            }
            std::vector<std::uint32_t> n(e_);
            for (std::uint32_t i = 0; i < e_; ++i) n[i] = (p_ - da[i]) % p_;
            neg_[a] = static_cast<Elem>(undigits(n, p_));
        }

        std::vector<std::uint32_t> irred;
        if (e_ > 1) irred = find_irreducible();

        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                mul_[a * q_ + b] = static_cast<Elem>(
                    e_ == 1 ? (a * b) % p_ : poly_mul(a, b, irred));

        // generator: smallest code of full multiplicative order
        for (std::uint32_t g = 2; g < q_; ++g) {
            std::uint32_t x = g, ord = 1;
            while (x != 1) {
                x = mul_[x * q_ + g];
                ++ord;
            }
            if (ord == q_ - 1) {
                gen_ = static_cast<Elem>(g);
                break;
            }
        }
        if (q_ == 2) gen_ = 1;
        ensure(gen_ != 0, "no multiplicative generator found");

        std::uint32_t x = 1;
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
            exp_[k] = static_cast<Elem>(x);
            log_[x] = k;
            x = mul_[x * q_ + gen_];
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    // first monic irreducible of degree e in code order of the low digits
    std::vector<std::uint32_t> find_irreducible() const {
        for (std::uint32_t low = 0; low < ipow(p_, e_); ++low) {
            std::vector<std::uint32_t> f = digits_of(low, e_, p_);
            if (is_irreducible(f)) return f;
        }
        throw internal_error("no irreducible polynomial found");
    }

    static std::uint32_t ipow(std::uint32_t b, std::uint32_t n) {
        std::uint32_t r = 1;
        while (n--) r *= b;
        return r;
    }

    static std::vector<std::uint32_t> digits_of(std::uint32_t code, std::uint32_t len,
                                                std::uint32_t p) {
        std::vector<std::uint32_t> d(len, 0);
        for (std::uint32_t i = 0; i < len && code; ++i) {
            d[i] = code % p;
            code /= p;
        }
        return d;
    }

    // brute-force irreducibility of monic T^e + f over F_p: no monic factor
    // of degree 1..e/2
    bool is_irreducible(const std::vector<std::uint32_t>& f) const {
        std::vector<std::uint32_t> full(f);
        full.push_back(1);
        for (std::uint32_t d = 1; 2 * d <= e_; ++d) {
            for (std::uint32_t low = 0; low < ipow(p_, d); ++low) {
                std::vector<std::uint32_t> g = digits_of(low, d, p_);
                g.push_back(1);
                if (poly_divides(g, full)) return false;
            }
        }
        return true;
    }

    bool poly_divides(const std::vector<std::uint32_t>& g,
                      std::vector<std::uint32_t> r) const {
        // g monic; reduce r mod g over F_p
        while (r.size() >= g.size()) {
            std::uint32_t c = r.back();
            if (c) {
                std::size_t off = r.size() - g.size();
                for (std::size_t i = 0; i < g.size(); ++i)
                    r[off + i] = (r[off + i] + p_ - (c * g[i]) % p_) % p_;
            }
            r.pop_back();
        }
        for (auto c : r)
            if (c) return false;
        return true;
    }
};

} // namespace toral
