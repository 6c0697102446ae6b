// Exact minimum distance of linear codes over small fields.
//
// Two engines:
//   - exhaustive: every nonzero codeword, visited by a reflected mixed-radix
//     Gray traversal of the message space (one scaled row-add per step);
//   - support search: for w = 1, 2, ... decide whether some w columns of a
//     parity-check matrix are dependent. Exact when a hit is found, a
//     certified lower bound d > w_max otherwise.
// Plus the Res/Tor shortcut for the Gray distance of chain codes:
// d_G = min(d(Res), 2 d(Tor)).

#ifndef RINGCODES_DISTANCE_HPP
#define RINGCODES_DISTANCE_HPP

#include <limits>

#include "graymap.hpp"

namespace ringcodes {

enum class DistMethod { Exhaustive, SupportSearch, ResTor };

inline const char* method_name(DistMethod m) {
    switch (m) {
        case DistMethod::Exhaustive: return "exhaustive";
        case DistMethod::SupportSearch: return "support_search";
        case DistMethod::ResTor: return "res_tor";
    }
    return "?";
}

struct DistanceResult {
    long value = 0;  // exact distance, or a certified lower bound when !exact
    bool exact = false;
    DistMethod method = DistMethod::Exhaustive;
    frow certificate;      // minimum-weight codeword when exact (field level)
    rrow ring_certificate; // ring-level witness for Gray results
    u64 enumerated = 0;    // codewords visited (exhaustive only)
};

inline long hamming_weight(const frow& v) {
    long w = 0;
    for (gfel x : v)
        if (x != 0) ++w;
    return w;
}

inline DistanceResult min_distance_exhaustive(const LinearCode& C, u64 budget = (1ull << 24)) {
    DistanceResult res;
    res.method = DistMethod::Exhaustive;
    if (C.k() == 0) {
        res.value = 0;
        res.exact = true;
        return res;
    }
    const FqPtr F = C.field();
    const u64 q = u64(F->q());
    u128 total = 1;
    for (size_t i = 0; i < C.k(); ++i) {
        total *= q;
        if (total > budget)
            throw BudgetExceeded("q^k exceeds the enumeration budget; use support search");
    }
    const auto& rows = C.gen();
    const size_t n = C.n(), k = C.k();
    frow cw(n, 0);
    std::vector<long long> digit(k, 0);
    std::vector<int> dir(k, 1);
    long best = long(n) + 1;
    frow best_cw;
    u64 visited = 0;
    while (true) {
        size_t i = 0;
        long long nd = 0;
        while (i < k) {
            nd = digit[i] + dir[i];
            if (nd < 0 || nd >= (long long)q) {
                dir[i] = -dir[i];
                ++i;
            } else
                break;
        }
        if (i == k) break;
        gfel delta = F->sub(gfel(nd), gfel(digit[i]));
        digit[i] = nd;
        const frow& row = rows[i];
        long w = 0;
        for (size_t c = 0; c < n; ++c) {
            cw[c] = F->add(cw[c], F->mul(delta, row[c]));
            if (cw[c] != 0) ++w;
        }
        ++visited;
        if (w > 0 && w < best) {
            best = w;
            best_cw = cw;
        }
    }
    res.value = best;
    res.exact = true;
    res.certificate = std::move(best_cw);
    res.enumerated = visited;
    if (res.value > long(C.n() - C.k()) + 1)
        throw InternalError("distance exceeds the Singleton bound");
    return res;
}

namespace detail {

// rank of the submatrix of H on the given columns; if singular, writes a
// kernel vector (coefficients on those columns) into kern
inline bool columns_dependent(FqPtr F, const std::vector<frow>& H,
                              const std::vector<size_t>& cols, std::vector<gfel>& kern) {
    const size_t m = H.size(), w = cols.size();
    std::vector<frow> M(m, frow(w));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < w; ++j) M[i][j] = H[i][cols[j]];
    auto pivots = fmat::rref(F, M);
    if (pivots.size() == w) return false;
    std::vector<bool> is_pivot(w, false);
    for (size_t c : pivots) is_pivot[c] = true;
    size_t f = 0;
    while (is_pivot[f]) ++f;  // first free column
    kern.assign(w, 0);
    kern[f] = 1;
    for (size_t j = 0; j < pivots.size(); ++j) kern[pivots[j]] = F->neg(M[j][f]);
    return true;
}

}  // namespace detail

inline DistanceResult min_distance_support_search(const LinearCode& C, int w_max) {
    DistanceResult res;
    res.method = DistMethod::SupportSearch;
    if (w_max < 1) throw InternalError("w_max must be at least 1");
    if (C.k() == 0) {
        res.value = 0;
        res.exact = true;
        return res;
    }
    const FqPtr F = C.field();
    const size_t n = C.n();
    auto H = C.parity_check();
    if (H.empty()) {  // full space
        res.value = 1;
        res.exact = true;
        res.certificate.assign(n, 0);
        res.certificate[0] = 1;
        return res;
    }
    for (int w = 1; w <= std::min<int>(w_max, int(n)); ++w) {
        std::vector<size_t> cols(w);
        for (int i = 0; i < w; ++i) cols[i] = i;
        while (true) {
            std::vector<gfel> kern;
            if (detail::columns_dependent(F, H, cols, kern)) {
                res.value = w;
                res.exact = true;
                res.certificate.assign(n, 0);
                for (int i = 0; i < w; ++i) res.certificate[cols[i]] = kern[i];
                if (!C.contains_word(res.certificate))
                    throw InternalError("support-search certificate rejected");
                return res;
            }
            // next lexicographic w-subset of {0..n-1}
            int i = w - 1;
            while (i >= 0 && cols[i] == n - w + i) --i;
            if (i < 0) break;
            ++cols[i];
            for (int j = i + 1; j < w; ++j) cols[j] = cols[j - 1] + 1;
        }
    }
    res.value = long(w_max) + 1;  // certified: no codeword of weight <= w_max
    res.exact = false;
    return res;
}

struct DistancePolicy {
    u64 budget = 1ull << 24;
    int w_max = 8;
};

inline DistanceResult min_distance_auto(const LinearCode& C, const DistancePolicy& pol = {}) {
    u128 total = 1;
    bool fits = true;
    for (size_t i = 0; i < C.k(); ++i) {
        total *= u64(C.field()->q());
        if (total > pol.budget) {
            fits = false;
            break;
        }
    }
    if (fits) return min_distance_exhaustive(C, pol.budget);
    return min_distance_support_search(C, pol.w_max);
}

// d_G(C) = min(d(Res C), 2 d(Tor C)). The certificate is a ring codeword:
// a*(1-u) realizes the Res branch (Gray weight = Hamming weight of a) and
// u*b the Tor branch (Gray weight = 2 * Hamming weight of b).
template <class ChainCode>
DistanceResult gray_distance_res_tor(const ChainCode& C, const DistancePolicy& pol = {}) {
    RingPtr R = C.ring();
    if (!R->is_fqu()) throw UnsupportedConjugation("Gray distance needs an FqU ring");
    LinearCode res_c = C.res_code();
    LinearCode tor_c = C.tor_code();
    DistanceResult out;
    out.method = DistMethod::ResTor;
    if (res_c.k() == 0 && tor_c.k() == 0) {
        out.value = 0;
        out.exact = true;
        return out;
    }
    FqPtr F = R->residue_field();
    gfel minus_one = F->neg(1);
    auto lift_res = [&](const frow& a) {
        rrow c(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            c[i] = R->make_fqu_elem(a[i], F->mul(minus_one, a[i]));
        return c;
    };
    auto lift_tor = [&](const frow& b) {
        rrow c(b.size());
        for (size_t i = 0; i < b.size(); ++i) c[i] = R->make_fqu_elem(0, b[i]);
        return c;
    };
    DistanceResult d1, d2;
    bool have1 = res_c.k() > 0, have2 = tor_c.k() > 0;
    if (have1) d1 = min_distance_auto(res_c, pol);
    if (have2) d2 = min_distance_auto(tor_c, pol);
    const long inf = std::numeric_limits<long>::max();
    // each branch contributes a lower bound, and a witnessed upper bound
    // when its inner result is exact
    long lower = inf, upper = inf;
    int upper_side = 0;
    if (have1) {
        lower = std::min(lower, d1.value);
        if (d1.exact && d1.value < upper) {
            upper = d1.value;
            upper_side = 1;
        }
    }
    if (have2) {
        lower = std::min(lower, 2 * d2.value);
        if (d2.exact && 2 * d2.value < upper) {
            upper = 2 * d2.value;
            upper_side = 2;
        }
    }
    if (upper == lower) {
        out.value = upper;
        out.exact = true;
        if (upper_side == 1) {
            out.certificate = d1.certificate;
            out.ring_certificate = lift_res(d1.certificate);
        } else {
            out.certificate = d2.certificate;
            out.ring_certificate = lift_tor(d2.certificate);
        }
    } else {
        out.value = lower;
        out.exact = false;
    }
    return out;
}

}  // namespace ringcodes

#endif
