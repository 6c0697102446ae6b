// Quantum code parameters [[n, k, >= d]]_q from classical inputs:
//   - the CSS construction on a pair of mutually dual-containing codes,
//   - its one-code specialization (C dual-containing),
//   - the two chain-ring routes through tower projections of a self-dual
//     code,
//   - the Hermitian route through Gray images of exponent-form codes.
// Distances are tracked as (certified lower bound, optional exact value);
// an exact value is only claimed where the construction pins it (a classical
// MDS input forces the quantum distance).

#ifndef RINGCODES_QUANTUM_HPP
#define RINGCODES_QUANTUM_HPP

#include "distance.hpp"

namespace ringcodes {

struct QuantumFlags {
    bool singleton_ok = false;
    bool mds = false;
    bool nmds = false;
};

struct QuantumParams {
    long n = 0;
    long k = 0;
    long d_lower = 1;
    std::optional<long> d_exact;
    u64 q = 0;  // alphabet size
    std::string construction;
    std::string inputs;
    QuantumFlags flags;

    std::string bracket() const {
        std::string d = d_exact ? std::to_string(*d_exact) : (">=" + std::to_string(d_lower));
        return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]]_" +
               std::to_string(q);
    }
};

// Singleton bound k <= n - 2d + 2, MDS at equality (needs exact d),
// near-MDS when 2d >= n - k (the lower bound suffices).
inline QuantumParams classify(QuantumParams qp) {
    long d = qp.d_exact ? *qp.d_exact : qp.d_lower;
    if (qp.k > qp.n - 2 * d + 2)
        throw SingletonViolation(qp.bracket() + (qp.d_exact ? " violates k <= n-2d+2"
                                                            : " violates k <= n-2d+2 already at the lower bound"));
    qp.flags.singleton_ok = true;
    qp.flags.mds = qp.d_exact && qp.k == qp.n - 2 * (*qp.d_exact) + 2;
    qp.flags.nmds = 2 * d >= qp.n - qp.k;
    return qp;
}

// two-code CSS: dual(C1) in C2 and dual(C2) in C1 give
// [[n, k1 + k2 - n, >= min(d1, d2)]]
inline QuantumParams css_two_codes(const LinearCode& C1, const DistanceResult& d1,
                                   const LinearCode& C2, const DistanceResult& d2,
                                   const std::string& tag = "thm2.2") {
    if (C1.n() != C2.n() || !C1.field()->same_field(*C2.field()))
        throw LengthMismatch("CSS pair over different spaces");
    if (!C1.contains(C2.dual()) || !C2.contains(C1.dual()))
        throw DualityPreconditionFailed("CSS pair is not mutually dual-containing");
    QuantumParams qp;
    qp.n = long(C1.n());
    qp.k = long(C1.k()) + long(C2.k()) - long(C1.n());
    qp.d_lower = std::min(d1.value, d2.value);
    qp.q = u64(C1.field()->q());
    qp.construction = tag;
    qp.inputs = "pure to min(d1, d2) = " + std::to_string(qp.d_lower);
    return classify(qp);
}

// one-code CSS: C dual-containing gives [[n, 2k - n, >= d]]; a classical MDS
// input pins the quantum distance exactly
inline QuantumParams css_dual_containing(const LinearCode& C, const DistanceResult& d,
                                         const std::string& tag = "cor2.3") {
    if (!C.is_dual_containing(Inner::Euclidean))
        throw DualityPreconditionFailed("code does not contain its Euclidean dual");
    if (2 * C.k() < C.n()) throw InternalError("dual-containing code with k < n/2");
    QuantumParams qp;
    qp.n = long(C.n());
    qp.k = 2 * long(C.k()) - long(C.n());
    qp.d_lower = d.value;
    if (d.exact && d.value == long(C.n() - C.k()) + 1) qp.d_exact = d.value;  // MDS input
    qp.q = u64(C.field()->q());
    qp.construction = tag;
    qp.inputs = "classical [" + std::to_string(C.n()) + "," + std::to_string(C.k()) +
                "] input; pure to " + std::to_string(d.value);
    return classify(qp);
}

// self-dual chain code, route 1: the level-(t-1) projection is
// dual-containing of dimension k(C), giving [[n, 2k(C) - n, >= d]]
inline QuantumParams quantum_from_chain_selfdual(const ChainCodeFGH& C,
                                                 const DistancePolicy& pol = {},
                                                 const std::string& tag = "thm3.9.1") {
    if (!C.is_selfdual()) throw NotSelfDual("triple fails f ~ g*, h ~ h*");
    LinearCode proj = C.tower_projection(1);
    DistanceResult d = min_distance_auto(proj, pol);
    QuantumParams qp = css_dual_containing(proj, d, tag);
    qp.inputs = "projection (C:gamma) as the " + qp.inputs;
    return qp;
}

// self-dual chain code, route 2: levels (i, j) with s = k_0+..+k_i,
// l = k_{i+1}+..+k_{i+j} give [[n, l + 2s - n, >= d_1]], where d_1 is the
// smaller of the two projection distances
inline QuantumParams quantum_from_chain_selfdual(const ChainCodeFGH& C, int i, int j,
                                                 const DistancePolicy& pol = {},
                                                 const std::string& tag = "thm3.6.2") {
    if (!C.is_selfdual()) throw NotSelfDual("triple fails f ~ g*, h ~ h*");
    const int t = ChainRing::nilpotency();
    if (i < 0 || i > t - 1 || j < 0 || j > t - 1 - i)
        throw LevelOutOfRange("levels (i, j) outside 0 <= i <= t-1, 0 <= j <= t-1-i");
    // type counts from the triple: k_0 = n - deg(fh), k_1 = deg(h)
    long n = long(C.n());
    long df = C.f().is_one() ? 0 : long(C.f().degree());
    long dh = C.h().is_one() ? 0 : long(C.h().degree());
    std::vector<long> kc = {n - df - dh, dh};
    long s = 0, l = 0;
    for (int a = 0; a <= i; ++a) s += kc[a];
    for (int a = i + 1; a <= i + j; ++a) l += kc[a];
    LinearCode Ca = C.tower_projection(t - 1 - i);
    LinearCode Cb = C.tower_projection(i + j);
    if (!Cb.contains(Ca.dual()) || !Ca.contains(Cb.dual()))
        throw DualityPreconditionFailed("tower projections are not mutually dual-containing");
    DistanceResult da = min_distance_auto(Ca, pol);
    DistanceResult db = (t - 1 - i == i + j) ? da : min_distance_auto(Cb, pol);
    QuantumParams qp;
    qp.n = n;
    qp.k = l + 2 * s - n;
    if (qp.k < 0) throw DualityPreconditionFailed("levels give a negative dimension");
    qp.d_lower = std::min(da.value, db.value);
    qp.q = C.ring()->residue_size();
    qp.construction = tag;
    qp.inputs = "levels i=" + std::to_string(i) + ", j=" + std::to_string(j);
    return classify(qp);
}

// Hermitian dual-containing exponent code: Gray image of C over F_{p^{2m}}
// has length 2n and dimension k = log_q |C|; the construction yields
// [[2n, 2k - 2n, >= min(d1, 2 d2)]] over the alphabet p^m
inline QuantumParams quantum_from_hermitian_gray(const ChainCodeExp& C,
                                                 const DistancePolicy& pol = {},
                                                 const std::string& tag = "thm4.14") {
    if (!C.is_dual_containing())
        throw DualityPreconditionFailed("exponents fail the dual-containment criterion");
    DistanceResult dg = gray_distance_res_tor(C, pol);
    Cardinality c = C.card();
    FqPtr F = C.ring()->residue_field();
    QuantumParams qp;
    qp.n = 2 * long(C.n());
    qp.k = 2 * c.exp - 2 * long(C.n());
    qp.d_lower = dg.value;
    qp.q = u64(ipow_u128(F->p(), F->e() / 2));
    qp.construction = tag;
    qp.inputs = "|C| = " + c.str() + ", d_G " + (dg.exact ? "=" : ">=") + " " +
                std::to_string(dg.value);
    return classify(qp);
}

}  // namespace ringcodes

#endif
