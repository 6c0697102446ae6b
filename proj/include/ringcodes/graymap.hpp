// The Gray map on F_q + uF_q (q = p^{2m}): coordinate-wise
//   a + ub  ->  (alpha*b, a+b),   alpha^2 = -1,
// doubling the length. Gray weight w(a+ub) = [b != 0] + [a+b != 0] equals the
// Hamming weight of the image, for any valid alpha.
//
// Images preserve Hermitian duality exactly when alpha^(p^m + 1) = -1, i.e.
// p^m = 1 (mod 4) (or p = 2, where alpha = 1). The context records that
// condition; the map itself is well-defined without it.

#ifndef RINGCODES_GRAYMAP_HPP
#define RINGCODES_GRAYMAP_HPP

#include "chain_code.hpp"

namespace ringcodes {

struct GrayContext {
    RingPtr R;
    gfel alpha = 0;
    u64 pm = 0;                     // p^m, the conjugation base
    bool duality_preserving = false;  // alpha^(pm+1) = -1

    static GrayContext make(RingPtr R) {
        if (!R->is_fqu()) throw UnsupportedConjugation("Gray map needs an FqU ring");
        FqPtr F = R->residue_field();
        if (F->e() % 2 != 0)
            throw OddDegreeConjugation("Gray/Hermitian machinery needs q = p^{2m}");
        GrayContext g;
        g.R = R;
        g.alpha = F->sqrt_minus_one();
        g.pm = u64(ipow_u128(F->p(), F->e() / 2));
        gfel an = F->pow(g.alpha, g.pm + 1);
        g.duality_preserving = (an == F->neg(1));
        return g;
    }
};

inline frow gray_map(const GrayContext& g, const rrow& v) {
    FqPtr F = g.R->residue_field();
    frow out(2 * v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        auto [a, b] = g.R->gamma_decompose(v[i]);
        out[2 * i] = F->mul(g.alpha, b);
        out[2 * i + 1] = F->add(a, b);
    }
    return out;
}

inline long gray_weight(const RingPtr& R, rel v) {
    auto [a, b] = R->gamma_decompose(v);
    long w = 0;
    if (b != 0) ++w;
    if (R->residue_field()->add(a, b) != 0) ++w;
    return w;
}

inline long gray_weight(const RingPtr& R, const rrow& v) {
    long w = 0;
    for (rel x : v) w += gray_weight(R, x);
    return w;
}

inline long gray_distance(const RingPtr& R, const rrow& a, const rrow& b) {
    if (a.size() != b.size()) throw LengthMismatch("vectors of different length");
    long w = 0;
    for (size_t i = 0; i < a.size(); ++i) w += gray_weight(R, R->sub(a[i], b[i]));
    return w;
}

// Hermitian inner product over the ring: sum x_i * conj(y_i)
inline rel hermitian_ip_ring(const RingPtr& R, const rrow& a, const rrow& b) {
    if (a.size() != b.size()) throw LengthMismatch("vectors of different length");
    rel s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = R->add(s, R->mul(a[i], R->conj(b[i])));
    return s;
}

// Gray image of a chain code: apply the map to each generator row r and to
// u*r (the {1, u} expansion over the residue field), then row-reduce.
inline LinearCode gray_image_code(const GrayContext& g, const std::vector<rrow>& gens, size_t n) {
    std::vector<frow> rows;
    rows.reserve(2 * gens.size());
    for (const rrow& r : gens) {
        rows.push_back(gray_map(g, r));
        rrow ur(r.size());
        for (size_t i = 0; i < r.size(); ++i) ur[i] = g.R->mul(g.R->gamma(), r[i]);
        rows.push_back(gray_map(g, ur));
    }
    return LinearCode::from_rows(g.R->residue_field(), 2 * n, std::move(rows));
}

inline LinearCode gray_image_code(const GrayContext& g, const ChainMatCode& C) {
    LinearCode img = gray_image_code(g, C.gen_rows(), C.n());
    Cardinality c = C.card();
    if (long(img.k()) != c.exp) throw InternalError("Gray image dimension mismatch");
    return img;
}

inline LinearCode gray_image_code(const GrayContext& g, const ChainCodeExp& C) {
    LinearCode img = gray_image_code(g, C.gen_rows(), C.n());
    if (long(img.k()) != C.card().exp) throw InternalError("Gray image dimension mismatch");
    return img;
}

}  // namespace ringcodes

#endif
