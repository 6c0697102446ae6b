// Finite fields GF(p^e) in polynomial basis.
//
// Elements are integer indices in [0, q): an element with coordinates
// (c_0, ..., c_{e-1}) over Z_p is encoded as c_0 + c_1*p + ... This radix-p
// encoding is the I/O contract for the whole library. Indices are 128-bit
// because root-of-unity work builds extensions as large as GF(13^20).
//
// Contexts are immutable after construction and safe to share.

#ifndef RINGCODES_FIELDS_HPP
#define RINGCODES_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integers.hpp"

namespace ringcodes {

using gfel = u128;  // field element as radix-p index

namespace zp {

// Dense polynomials over Z_p, coefficients in [0, p), constant term first.
// Only used for modulus bookkeeping; code-level arithmetic lives elsewhere.
using poly = std::vector<int>;

inline poly trim(poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline poly mul(const poly& a, const poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += (long long)a[i] * b[j];
    poly r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = int(acc[i] % (long long)p);
    return trim(r);
}

// remainder of a by monic b
inline poly rem(poly a, const poly& b, u64 p) {
    a = trim(a);
    while (a.size() >= b.size()) {
        long long lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) {
            long long v = a[shift + j] - lead * b[j] % (long long)p;
            a[shift + j] = int(((v % (long long)p) + p) % (long long)p);
        }
        a = trim(a);
    }
    return a;
}

inline poly gcd(poly a, poly b, u64 p) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        // make b monic for rem()
        long long lb = b.back();
        if (lb != 1) {
            long long inv = 1;
            for (long long t = lb, e = p - 2; e; e >>= 1) {
                if (e & 1) inv = inv * t % (long long)p;
                t = t * t % (long long)p;
            }
            for (auto& c : b) c = int(c * inv % (long long)p);
        }
        poly r = rem(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

inline poly powmod_x_p(const poly& t, u64 p, const poly& f) {
    // t^p mod f by square-and-multiply
    poly r = {1}, base = t;
    u64 e = p;
    while (e) {
        if (e & 1) r = rem(mul(r, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// Irreducibility over Z_p. Trial division when the divisor space is small
// (the method the small fields get certified with); Rabin's test otherwise.
inline bool irreducible(const poly& f, u64 p) {
    const size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;  // x divides
    u128 half_space = 1;
    bool small = true;
    for (size_t i = 0; i < d / 2; ++i) {
        half_space *= p;
        if (half_space > 4096) {
            small = false;
            break;
        }
    }
    if (small) {
        // all monic divisors of degree 1..d/2
        for (size_t dg = 1; dg <= d / 2; ++dg) {
            u128 cnt = ipow_u128(p, unsigned(dg));
            for (u128 idx = 0; idx < cnt; ++idx) {
                poly g(dg + 1, 0);
                u128 t = idx;
                for (size_t i = 0; i < dg; ++i) {
                    g[i] = int(t % p);
                    t /= p;
                }
                g[dg] = 1;
                if (rem(f, g, p).empty()) return false;
            }
        }
        return true;
    }
    // Rabin: x^(p^d) == x mod f, and gcd(x^(p^(d/r)) - x, f) = 1 for r | d
    std::vector<size_t> checkpoints;
    for (u128 r : distinct_prime_factors(d)) checkpoints.push_back(d / size_t(r));
    poly t = {0, 1};
    for (size_t k = 1; k <= d; ++k) {
        t = powmod_x_p(t, p, f);
        for (size_t cp : checkpoints)
            if (k == cp) {
                poly diff = t;
                if (diff.size() < 2) diff.resize(2, 0);
                diff[1] = int((diff[1] + p - 1) % p);
                diff = trim(diff);
                poly g = gcd(f, diff, p);
                if (g.size() != 1) return false;
            }
    }
    // t == x^(p^d) must equal x
    poly x = {0, 1};
    return trim(t) == x;
}

}  // namespace zp

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

class Fq {
   public:
    // Default modulus: lexicographically smallest monic irreducible of degree
    // e (coefficients ordered from the constant term up). Default generator:
    // the smallest primitive element in the same element ordering.
    static FqPtr make(u64 p, unsigned e, std::optional<zp::poly> modulus = std::nullopt) {
        if (!is_prime_u64(p)) throw NonPrime("p = " + std::to_string(p));
        if (e < 1) throw NonPrime("extension degree must be >= 1");
        auto F = std::shared_ptr<Fq>(new Fq());
        F->p_ = p;
        F->e_ = e;
        F->q_ = ipow_u128(p, e);
        if (modulus) {
            zp::poly m = *modulus;
            for (auto& c : m) c = int(((c % (long long)p) + p) % (long long)p);
            if (m.size() != e + 1 || m.back() != 1)
                throw ReducibleModulus("modulus must be monic of degree e");
            if (!zp::irreducible(m, p)) throw ReducibleModulus("supplied modulus factors");
            F->modulus_ = m;
        } else {
            F->modulus_ = default_modulus(p, e);
        }
        F->build_tables();
        F->q1_primes_ = (F->q_ > 1) ? distinct_prime_factors(F->q_ - 1) : std::vector<u128>{};
        F->generator_ = F->find_generator();
        return F;
    }

    u64 p() const { return p_; }
    unsigned e() const { return e_; }
    u128 q() const { return q_; }
    const zp::poly& modulus() const { return modulus_; }
    gfel generator() const { return generator_; }
    const std::vector<u128>& order_prime_factors() const { return q1_primes_; }

    gfel zero() const { return 0; }
    gfel one() const { return 1; }

    std::vector<int> decode(gfel a) const {
        std::vector<int> c(e_);
        for (unsigned i = 0; i < e_; ++i) {
            c[i] = int(a % p_);
            a /= p_;
        }
        return c;
    }
    gfel encode(const std::vector<int>& c) const {
        gfel a = 0;
        for (size_t i = c.size(); i-- > 0;) a = a * p_ + (u64)(((c[i] % (long long)p_) + p_) % (long long)p_);
        return a;
    }
    gfel from_int(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return gfel(r);
    }

    gfel add(gfel a, gfel b) const {
        if (add_tab_) return (*add_tab_)[size_t(a) * size_t(q_) + size_t(b)];
        gfel r = 0, m = 1;
        for (unsigned i = 0; i < e_; ++i) {
            u64 s = u64(a % p_) + u64(b % p_);
            if (s >= p_) s -= p_;
            r += m * s;
            a /= p_;
            b /= p_;
            m *= p_;
        }
        return r;
    }
    gfel neg(gfel a) const {
        if (neg_tab_) return (*neg_tab_)[size_t(a)];
        gfel r = 0, m = 1;
        for (unsigned i = 0; i < e_; ++i) {
            u64 c = u64(a % p_);
            r += m * (c ? p_ - c : 0);
            a /= p_;
            m *= p_;
        }
        return r;
    }
    gfel sub(gfel a, gfel b) const { return add(a, neg(b)); }

    gfel mul(gfel a, gfel b) const {
        if (mul_tab_) return (*mul_tab_)[size_t(a) * size_t(q_) + size_t(b)];
        return mul_slow(a, b);
    }

    gfel inv(gfel a) const {
        if (a == 0) throw InternalError("inverse of zero");
        if (inv_tab_) return (*inv_tab_)[size_t(a)];
        return pow(a, q_ - 2);
    }
    gfel div(gfel a, gfel b) const { return mul(a, inv(b)); }

    gfel pow(gfel a, u128 n) const {
        if (a == 0) return n == 0 ? 1 : 0;
        if (q_ > 2) n %= (q_ - 1);
        gfel r = 1;
        while (n > 0) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    // a^(p^k); the Frobenius automorphism iterated k times
    gfel frobenius(gfel a, unsigned k) const {
        k %= e_;
        gfel r = a;
        for (unsigned i = 0; i < k; ++i) r = pow(r, p_);
        return r;
    }

    // conjugation x -> x^(p^(e/2)), defined for even extension degree
    gfel conjugate(gfel a) const {
        if (e_ % 2 != 0)
            throw OddDegreeConjugation("conjugation needs even degree, e = " + std::to_string(e_));
        return frobenius(a, e_ / 2);
    }

    // deterministic alpha with alpha^2 = -1: generator^((q-1)/4)
    gfel sqrt_minus_one() const {
        if (p_ == 2) return 1;
        if (q_ % 4 != 1)
            throw NoSquareRootOfMinusOne("q = " + u128_str(q_) + " is 3 mod 4");
        gfel a = pow(generator_, (q_ - 1) / 4);
        if (add(mul(a, a), 1) != 0) throw InternalError("sqrt(-1) check failed");
        return a;
    }

    bool same_field(const Fq& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

    std::string describe() const {
        std::string s = "GF(" + std::to_string(p_);
        if (e_ > 1) s += "^" + std::to_string(e_);
        s += ")";
        return s;
    }

    // raw tables for hot loops; null when q > 256
    const std::uint16_t* mul_table() const { return mul_tab_ ? mul_tab_->data() : nullptr; }
    const std::uint16_t* add_table() const { return add_tab_ ? add_tab_->data() : nullptr; }

   private:
    Fq() = default;

    static zp::poly default_modulus(u64 p, unsigned e) {
        u128 count = ipow_u128(p, e);
        for (u128 idx = 0;; ++idx) {
            if (idx >= count) throw InternalError("no irreducible found");
            zp::poly f(e + 1);
            u128 t = idx;
            for (unsigned i = 0; i < e; ++i) {
                f[i] = int(t % p);
                t /= p;
            }
            f[e] = 1;
            if (zp::irreducible(f, p)) return f;
        }
    }

    gfel mul_slow(gfel a, gfel b) const {
        std::vector<int> ca = decode(a), cb = decode(b);
        std::vector<long long> acc(2 * e_ - 1, 0);
        for (unsigned i = 0; i < e_; ++i) {
            if (ca[i] == 0) continue;
            for (unsigned j = 0; j < e_; ++j) acc[i + j] += (long long)ca[i] * cb[j];
        }
        // reduce modulo the defining polynomial
        for (size_t i = acc.size(); i-- > e_;) {
            long long lead = acc[i] % (long long)p_;
            if (lead == 0) continue;
            for (unsigned j = 0; j < e_; ++j)
                acc[i - e_ + j] -= lead * modulus_[j];
            acc[i] = 0;
        }
        std::vector<int> c(e_);
        for (unsigned i = 0; i < e_; ++i)
            c[i] = int(((acc[i] % (long long)p_) + p_) % (long long)p_);
        return encode(c);
    }

    void build_tables() {
        if (q_ > 256) return;
        size_t q = size_t(q_);
        mul_tab_.emplace(q * q);
        add_tab_.emplace(q * q);
        neg_tab_.emplace(q);
        inv_tab_.emplace(q);
        for (size_t a = 0; a < q; ++a) {
            for (size_t b = 0; b < q; ++b) {
                (*mul_tab_)[a * q + b] = std::uint16_t(mul_slow(a, b));
                gfel s = 0, m = 1, x = a, y = b;
                for (unsigned i = 0; i < e_; ++i) {
                    u64 t = u64(x % p_) + u64(y % p_);
                    if (t >= p_) t -= p_;
                    s += m * t;
                    x /= p_;
                    y /= p_;
                    m *= p_;
                }
                (*add_tab_)[a * q + b] = std::uint16_t(s);
            }
        }
        for (size_t a = 0; a < q; ++a) {
            gfel n = 0, m = 1, x = a;
            for (unsigned i = 0; i < e_; ++i) {
                u64 c = u64(x % p_);
                n += m * (c ? p_ - c : 0);
                x /= p_;
                m *= p_;
            }
            (*neg_tab_)[a] = std::uint16_t(n);
        }
        (*inv_tab_)[0] = 0;
        for (size_t a = 1; a < q; ++a) {
            for (size_t b = 1; b < q; ++b)
                if ((*mul_tab_)[a * q + b] == 1) {
                    (*inv_tab_)[a] = std::uint16_t(b);
                    break;
                }
        }
    }

    // smallest element of full multiplicative order, in index order
    gfel find_generator() const {
        if (q_ == 2) return 1;
        for (gfel g = 1; g < q_; ++g) {
            bool ok = true;
            for (u128 r : q1_primes_)
                if (pow(g, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        throw InternalError("no primitive element found");
    }

    u64 p_ = 0;
    unsigned e_ = 0;
    u128 q_ = 0;
    zp::poly modulus_;
    gfel generator_ = 0;
    std::vector<u128> q1_primes_;
    std::optional<std::vector<std::uint16_t>> mul_tab_, add_tab_, neg_tab_, inv_tab_;
};

// Identification of a base field inside an extension: the base generator's
// defining root is located in the extension, giving an explicit ring
// homomorphism both ways. extract() rejects elements outside the subfield.
class SubfieldEmbedding {
   public:
    SubfieldEmbedding() = default;

    static SubfieldEmbedding identity(FqPtr F) {
        SubfieldEmbedding emb;
        emb.base_ = F;
        emb.ext_ = F;
        emb.trivial_ = true;
        return emb;
    }

    static SubfieldEmbedding make(FqPtr base, FqPtr ext) {
        if (base->same_field(*ext)) return identity(base);
        SubfieldEmbedding emb;
        emb.base_ = base;
        emb.ext_ = ext;
        if (ext->p() != base->p() || ext->e() % base->e() != 0)
            throw InternalError("not a subfield");
        // find a root of the base modulus among the subfield elements of ext
        u128 stride = (ext->q() - 1) / (base->q() - 1);
        gfel h = 0;
        bool found = false;
        auto eval_modulus = [&](gfel x) {
            gfel acc = 0;
            const auto& m = base->modulus();
            for (size_t i = m.size(); i-- > 0;)
                acc = ext->add(ext->mul(acc, x), ext->from_int(m[i]));
            return acc;
        };
        if (eval_modulus(0) == 0) {
            h = 0;
            found = true;
        } else {
            gfel cand = 1;
            gfel step = ext->pow(ext->generator(), stride);
            for (u128 k = 0; k + 1 < base->q(); ++k) {
                if (eval_modulus(cand) == 0) {
                    h = cand;
                    found = true;
                    break;
                }
                cand = ext->mul(cand, step);
            }
        }
        if (!found) throw InternalError("base modulus has no root in extension");
        emb.hpow_.resize(base->e());
        emb.hpow_[0] = 1;
        for (unsigned i = 1; i < base->e(); ++i) emb.hpow_[i] = ext->mul(emb.hpow_[i - 1], h);
        emb.build_solver();
        return emb;
    }

    FqPtr base() const { return base_; }
    FqPtr ext() const { return ext_; }

    gfel embed(gfel a) const {
        if (trivial_) return a;
        auto c = base_->decode(a);
        gfel r = 0;
        for (unsigned i = 0; i < base_->e(); ++i)
            r = ext_->add(r, ext_->mul(ext_->from_int(c[i]), hpow_[i]));
        return r;
    }

    gfel extract(gfel v) const {
        if (trivial_) return v;
        return extract_direct(ext_->decode(v));
    }

   private:
    void build_solver() {
        rows_ = ext_->e();
        cols_ = base_->e();
        M_.assign(rows_ * cols_, 0);
        for (size_t j = 0; j < cols_; ++j) {
            auto col = ext_->decode(hpow_[j]);
            for (size_t i = 0; i < rows_; ++i) M_[i * cols_ + j] = col[i];
        }
    }

    gfel extract_direct(const std::vector<int>& rhs) const {
        const long long p = (long long)base_->p();
        std::vector<long long> A(M_.begin(), M_.end());
        std::vector<long long> b(rhs.begin(), rhs.end());
        std::vector<int> pivot_row(cols_, -1);
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t sel = r;
            while (sel < rows_ && A[sel * cols_ + c] % p == 0) ++sel;
            if (sel == rows_) continue;
            for (size_t j = 0; j < cols_; ++j) std::swap(A[r * cols_ + j], A[sel * cols_ + j]);
            std::swap(b[r], b[sel]);
            long long piv = A[r * cols_ + c] % p;
            long long inv = 1;
            for (long long t = piv, e2 = p - 2; e2; e2 >>= 1) {
                if (e2 & 1) inv = inv * t % p;
                t = t * t % p;
            }
            for (size_t j = 0; j < cols_; ++j) A[r * cols_ + j] = A[r * cols_ + j] * inv % p;
            b[r] = b[r] * inv % p;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                long long f = A[i * cols_ + c] % p;
                if (!f) continue;
                for (size_t j = 0; j < cols_; ++j)
                    A[i * cols_ + j] = ((A[i * cols_ + j] - f * A[r * cols_ + j]) % p + p) % p;
                b[i] = ((b[i] - f * b[r]) % p + p) % p;
            }
            pivot_row[c] = int(r);
            ++r;
        }
        // consistency: zero rows must have zero rhs
        for (size_t i = r; i < rows_; ++i)
            if (b[i] % p != 0)
                throw CoefficientNotInBaseField("element not in base field");
        std::vector<int> c(cols_, 0);
        for (size_t j = 0; j < cols_; ++j)
            if (pivot_row[j] >= 0) c[j] = int(((b[pivot_row[j]] % p) + p) % p);
        // verify (guards the no-pivot column case)
        std::vector<long long> chk(rows_, 0);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) chk[i] += M_[i * cols_ + j] * c[j];
        for (size_t i = 0; i < rows_; ++i)
            if (((chk[i] - rhs[i]) % p + p) % p != 0)
                throw CoefficientNotInBaseField("element not in base field");
        return base_->encode(c);
    }

    FqPtr base_, ext_;
    bool trivial_ = false;
    std::vector<gfel> hpow_;
    std::vector<int> M_;
    size_t rows_ = 0, cols_ = 0;
};

// A primitive n-th root of unity living in GF(q^l), l = ord_n(q), together
// with the subfield identification needed to pull coefficients back down.
struct RootContext {
    FqPtr base;
    FqPtr ext;
    SubfieldEmbedding emb;
    gfel zeta = 0;
    u64 n = 0;
    unsigned l = 0;
};

inline RootContext nth_root_of_unity(FqPtr F, u64 n) {
    if (n == 0 || gcd_u128(n, F->p()) != 1)
        throw NotCoprime("n = " + std::to_string(n) + " vs p = " + std::to_string(F->p()));
    u64 qm = u64(F->q() % n);
    u64 l = (n == 1) ? 1 : multiplicative_order(qm, n);
    if (l == 0) throw NotCoprime("q shares a factor with n");
    RootContext rc;
    rc.base = F;
    rc.n = n;
    rc.l = unsigned(l);
    rc.ext = (l == 1) ? F : Fq::make(F->p(), F->e() * unsigned(l));
    rc.emb = (l == 1) ? SubfieldEmbedding::identity(F) : SubfieldEmbedding::make(F, rc.ext);
    rc.zeta = rc.ext->pow(rc.ext->generator(), (rc.ext->q() - 1) / n);
    for (u128 r : distinct_prime_factors(n))
        if (rc.zeta != 1 && rc.ext->pow(rc.zeta, n / u64(r)) == 1)
            throw InternalError("root of unity has wrong order");
    return rc;
}

}  // namespace ringcodes

#endif
