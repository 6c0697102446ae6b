// Factorization of x^n - 1 over GF(q) through cyclotomic cosets, the unique
// Hensel lift of that factorization to Z_{p^2}, and the substitution
// factorization of x^n - (1+u) over F_q + u*F_q (valid when n = -1 mod p,
// equivalently (1+u)^n = (1+u)^{-1}).
//
// Every factor set re-multiplies to its target exactly; construction fails
// loudly otherwise.

#ifndef RINGCODES_FACTORIZATION_HPP
#define RINGCODES_FACTORIZATION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace ringcodes {

struct CyclotomicCoset {
    long rep = 0;                // smallest member
    std::vector<long> members;   // sorted, closed under multiplication by q
    bool symmetric = false;      // coset of -pm*rep is this coset
    long partner = 0;            // rep of the coset containing -pm*rep
};

// q-cyclotomic cosets mod n. `pm` drives the symmetric/asymmetric pairing:
// partner(i) = coset of -pm*i mod n. Pass the conjugation base p^m for
// Hermitian work, or 1 for plain reciprocal (negation) pairing.
inline std::vector<CyclotomicCoset> cyclotomic_cosets(u64 n, u64 q, u64 pm) {
    if (n == 0 || gcd_u128(n, q) != 1)
        throw NotCoprime("cyclotomic cosets need gcd(n, q) = 1");
    std::vector<int> seen(n, 0);
    std::vector<CyclotomicCoset> out;
    for (u64 i = 0; i < n; ++i) {
        if (seen[i]) continue;
        CyclotomicCoset c;
        c.rep = long(i);
        u64 x = i;
        do {
            seen[x] = 1;
            c.members.push_back(long(x));
            x = (x * (q % n)) % n;
        } while (x != i);
        std::sort(c.members.begin(), c.members.end());
        out.push_back(std::move(c));
    }
    auto coset_rep_of = [&](u64 v) -> long {
        for (const auto& c : out)
            if (std::binary_search(c.members.begin(), c.members.end(), long(v))) return c.rep;
        throw InternalError("coset lookup failed");
    };
    for (auto& c : out) {
        u64 neg = (n - (u64(c.rep) * (pm % n)) % n) % n;
        c.partner = coset_rep_of(neg);
        c.symmetric = (c.partner == c.rep);
    }
    return out;
}

// minimal polynomial of zeta^rep over the base field: prod_{i in C}(x - zeta^i)
inline FPoly minimal_polynomial(const RootContext& rc, const CyclotomicCoset& coset) {
    auto ext = rc.ext;
    FieldDomain ED{ext};
    FPoly m = FPoly::one(ED);
    for (long i : coset.members) {
        FPoly lin(ED, {ext->neg(ext->pow(rc.zeta, u128(i))), 1});
        m = m * lin;
    }
    // coefficients must lie in the base field; extract() certifies that
    std::vector<gfel> base_coeffs;
    base_coeffs.reserve(m.coeffs().size());
    for (gfel c : m.coeffs()) base_coeffs.push_back(rc.emb.extract(c));
    return FPoly(fdom(rc.base), std::move(base_coeffs));
}

struct FieldFactorSet {
    FqPtr field;
    u64 n = 0;
    u64 pm = 1;
    std::vector<std::pair<long, FPoly>> factors;  // keyed by coset rep, ascending
    std::vector<CyclotomicCoset> cosets;

    const FPoly& by_rep(long rep) const {
        for (auto& [r, f] : factors)
            if (r == rep) return f;
        throw InternalError("no factor for coset rep " + std::to_string(rep));
    }
};

struct RingFactorSet {
    RingPtr ring;
    u64 n = 0;
    u64 pm = 1;
    std::string target;  // "x^n-1" or "x^n-(1+u)"
    std::vector<std::pair<long, RPoly>> factors;
    std::vector<CyclotomicCoset> cosets;

    const RPoly& by_rep(long rep) const {
        for (auto& [r, f] : factors)
            if (r == rep) return f;
        throw InternalError("no factor for coset rep " + std::to_string(rep));
    }
    const CyclotomicCoset& coset_by_rep(long rep) const {
        for (auto& c : cosets)
            if (c.rep == rep) return c;
        throw InternalError("no coset with rep " + std::to_string(rep));
    }
    long partner(long rep) const { return coset_by_rep(rep).partner; }
    size_t deg(long rep) const { return by_rep(rep).degree(); }
};

// x^n - 1 = prod m_j over GF(q), keyed by coset rep. `pm` only affects the
// symmetric/asymmetric labels carried along.
inline FieldFactorSet factor_xn_minus_1(FqPtr F, u64 n, u64 pm = 1) {
    if (gcd_u128(n, F->p()) != 1)
        throw NotCoprime("x^n - 1 needs gcd(n, p) = 1");
    FieldFactorSet fs;
    fs.field = F;
    fs.n = n;
    fs.pm = pm;
    fs.cosets = cyclotomic_cosets(n, u64(F->q()), pm);
    auto rc = nth_root_of_unity(F, n);
    FieldDomain FD{F};
    FPoly prod = FPoly::one(FD);
    for (const auto& c : fs.cosets) {
        FPoly m = minimal_polynomial(rc, c);
        if (m.degree() != c.members.size()) throw InternalError("bad minimal polynomial degree");
        prod = prod * m;
        fs.factors.emplace_back(c.rep, std::move(m));
    }
    if (prod != FPoly::xn_minus(FD, n, 1))
        throw InternalError("factor product does not reproduce x^n - 1");
    return fs;
}

namespace detail {

// One Hensel step mod p^2: f = G'H' with G' = G mod p, H' = H mod p.
inline std::pair<RPoly, RPoly> hensel_step(const RPoly& f, const FPoly& G, const FPoly& H) {
    RingPtr R = f.dom().R;
    FqPtr Fp = R->residue_field();
    u64 p = Fp->p();
    auto [g1, a, b] = extended_gcd(G, H);
    if (!g1.is_one()) throw NotCoprimeResidues("residue factors are not coprime");
    RPoly Ge = embed(G, R), He = embed(H, R);
    RPoly diff = f - Ge * He;
    // e = (f - G*H)/p over F_p
    std::vector<gfel> ec;
    ec.reserve(diff.coeffs().size());
    for (rel c : diff.coeffs()) {
        if (c % p != 0) throw InternalError("Hensel defect not divisible by p");
        ec.push_back(gfel(c / p));
    }
    FPoly e(fdom(Fp), std::move(ec));
    FPoly gc = (b * e) % G;
    FPoly hc = (a * e) % H;
    RPoly gamma_poly = RPoly::constant(f.dom(), R->gamma());
    RPoly Gp = Ge + gamma_poly * embed(gc, R);
    RPoly Hp = He + gamma_poly * embed(hc, R);
    if (Gp * Hp != f) throw InternalError("Hensel step verification failed");
    return {Gp, Hp};
}

inline void hensel_tree(const RPoly& f, const std::vector<FPoly>& base, size_t lo, size_t hi,
                        std::vector<RPoly>& out) {
    if (hi - lo == 1) {
        if (project(f) != base[lo]) throw InternalError("Hensel leaf residue mismatch");
        out[lo] = f;
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    FPoly G = base[lo];
    for (size_t i = lo + 1; i < mid; ++i) G = G * base[i];
    FPoly H = base[mid];
    for (size_t i = mid + 1; i < hi; ++i) H = H * base[i];
    auto [Gp, Hp] = hensel_step(f, G, H);
    hensel_tree(Gp, base, lo, mid, out);
    hensel_tree(Hp, base, mid, hi, out);
}

}  // namespace detail

// Unique monic lift of a pairwise coprime factorization of x^n - 1 over F_p
// to Z_{p^2}. Binary factor tree of two-factor Hensel steps with Bezout
// certificates; every product is re-verified by multiplication.
inline RingFactorSet hensel_lift(const FieldFactorSet& base, RingPtr R) {
    if (R->is_fqu() || !base.field->same_field(*R->residue_field()))
        throw InternalError("hensel_lift targets Z_{p^2} over the matching prime field");
    RingFactorSet out;
    out.ring = R;
    out.n = base.n;
    out.pm = base.pm;
    out.target = "x^n-1";
    out.cosets = base.cosets;
    std::vector<FPoly> polys;
    polys.reserve(base.factors.size());
    for (auto& [rep, f] : base.factors) polys.push_back(f);
    RingDomain RD{R};
    RPoly target = RPoly::xn_minus(RD, base.n, 1);
    std::vector<RPoly> lifted(polys.size(), RPoly::zero(RD));
    detail::hensel_tree(target, polys, 0, polys.size(), lifted);
    RPoly prod = RPoly::one(RD);
    for (size_t i = 0; i < lifted.size(); ++i) {
        if (project(lifted[i]) != polys[i]) throw InternalError("lift residue mismatch");
        prod = prod * lifted[i];
        out.factors.emplace_back(base.factors[i].first, lifted[i]);
    }
    if (prod != target) throw InternalError("lifted product mismatch");
    return out;
}

inline RingFactorSet hensel_lift_xn_minus_1(RingPtr R, u64 n) {
    u64 pm = 1;
    auto base = factor_xn_minus_1(R->residue_field(), n, pm);
    return hensel_lift(base, R);
}

// x^n - 1 over F_q + u*F_q: the residue factorization embeds as-is (its
// product is already exact over the subring F_q).
inline RingFactorSet embed_factorization(const FieldFactorSet& base, RingPtr R) {
    if (!R->is_fqu() || !base.field->same_field(*R->residue_field()))
        throw InternalError("embed_factorization needs the matching FqU ring");
    RingFactorSet out;
    out.ring = R;
    out.n = base.n;
    out.pm = base.pm;
    out.target = "x^n-1";
    out.cosets = base.cosets;
    for (auto& [rep, f] : base.factors) out.factors.emplace_back(rep, embed(f, R));
    return out;
}

// x^n - (1+u) = prod M_j over F_{p^{2m}} + u*F_{p^{2m}} by substitution:
// M_j = monic(m_j((1+u)x)). Requires (1+u)^n = (1+u)^{-1}, i.e. n = -1 mod p.
inline RingFactorSet factor_xn_minus_1u(RingPtr R, u64 n) {
    if (!R->is_fqu()) throw UnsupportedLength("x^n-(1+u) factorization needs an FqU ring");
    FqPtr F = R->residue_field();
    u64 p = F->p();
    if (F->e() % 2 != 0)
        throw OddDegreeConjugation("x^n-(1+u) machinery is defined over residue fields p^{2m}");
    if (gcd_u128(n, p) != 1) throw NotCoprime("need gcd(n, p) = 1");
    rel one_u = R->make_fqu_elem(1, 1);
    // (1+u)^n = 1 + (n mod p)u must equal (1+u)^{-1} = 1 - u
    if ((n + 1) % p != 0)
        throw UnsupportedLength("n = " + std::to_string(n) + " is not -1 mod p = " +
                                std::to_string(p) + "; x^n-(1+u) has no coset factorization here");
    u64 pm = u64(ipow_u128(p, F->e() / 2));
    auto base = factor_xn_minus_1(F, n, pm);
    RingFactorSet out;
    out.ring = R;
    out.n = n;
    out.pm = pm;
    out.target = "x^n-(1+u)";
    out.cosets = base.cosets;
    RingDomain RD{R};
    RPoly prod = RPoly::one(RD);
    for (auto& [rep, m] : base.factors) {
        RPoly Mj = embed(m, R).scale_argument(one_u).monic();
        prod = prod * Mj;
        out.factors.emplace_back(rep, std::move(Mj));
    }
    if (prod != RPoly::xn_minus(RD, n, one_u))
        throw UnsupportedLength("substitution factors do not multiply to x^n-(1+u)");
    return out;
}

}  // namespace ringcodes

#endif
