// Codes over chain rings.
//
// Three presentations, all convertible to a generator matrix over R:
//   - ChainMatCode: arbitrary generator rows, reduced to standard form by
//     gamma-adic Gaussian elimination (pivot on units first, then on
//     gamma-times-units, ...). The reduction drives cardinality, membership,
//     and the matrix-level dual.
//   - ChainCodeFGH: the (f, g, h) triple form, f*g*h = x^n - 1, generating
//     <f*h, gamma*f*g>.
//   - ChainCodeExp: ideals of R[x]/<x^n - 1> over F_q + uF_q written as
//     <prod M_j^{k_j}> where the M_j are the basic irreducible factors of
//     x^n - (1+u) and 0 <= k_j <= 2. Because prod M_j = -u mod x^n - 1,
//     the exponents pick out exactly the gamma-adic component ideals, which
//     is what makes the cardinality and dual exponent formulas work. Note
//     <prod M_j^{k_j}> taken mod x^n - (1+u) instead would collapse k_j = 1
//     and k_j = 2 into the same ideal (M_j = 0 mod M_j), so the x^n - 1
//     quotient is the one the exponent calculus lives in.

#ifndef RINGCODES_CHAIN_CODE_HPP
#define RINGCODES_CHAIN_CODE_HPP

#include <functional>
#include <map>

#include "factorization.hpp"
#include "linear_code.hpp"

namespace ringcodes {

using rrow = std::vector<rel>;

// exact code size as base^exp with base = |residue field|
struct Cardinality {
    u64 base = 0;
    long exp = 0;
    bool operator==(const Cardinality& o) const { return base == o.base && exp == o.exp; }
    bool operator!=(const Cardinality& o) const { return !(*this == o); }
    std::string str() const { return std::to_string(base) + "^" + std::to_string(exp); }
};

struct StdForm {
    RingPtr R;
    size_t n = 0;
    std::vector<rrow> rows;         // pivot rows, columns in permuted order
    std::vector<int> row_level;     // gamma-valuation of each pivot row
    std::vector<size_t> perm;       // perm[pos] = original column index
    std::vector<int> kcounts;       // kcounts[v] = number of level-v pivot rows

    size_t rank() const { return rows.size(); }
    Cardinality card() const {
        long e = 0;
        const int t = ChainRing::nilpotency();
        for (int v = 0; v < t; ++v) e += long(t - v) * kcounts[v];
        return {R->residue_size(), e};
    }

    // reduce a row (original column order) against the pivots; true if it
    // lands in the span
    bool reduces_to_zero(rrow w) const {
        if (w.size() != n) throw LengthMismatch("row of wrong length");
        // permute
        rrow x(n);
        for (size_t pos = 0; pos < n; ++pos) x[pos] = w[perm[pos]];
        for (size_t i = 0; i < rows.size(); ++i) {
            rel e = x[i];  // pivot of row i is at permuted position i
            if (e == 0) continue;
            if (R->val(e) < row_level[i]) return false;
            rel f = R->div_gamma_pow(e, row_level[i]);
            for (size_t c = 0; c < n; ++c) x[c] = R->sub(x[c], R->mul(f, rows[i][c]));
        }
        for (rel v : x)
            if (v != 0) return false;
        return true;
    }
};

// gamma-adic Gaussian elimination, written for a general nilpotency index
// (only t = 2 rings are instantiated here)
inline StdForm standard_form(RingPtr R, size_t n, std::vector<rrow> rows) {
    for (auto& r : rows)
        if (r.size() != n) throw LengthMismatch("generator row of wrong length");
    const int t = ChainRing::nilpotency();
    StdForm sf;
    sf.R = R;
    sf.n = n;
    sf.perm.resize(n);
    for (size_t i = 0; i < n; ++i) sf.perm[i] = i;
    sf.kcounts.assign(t, 0);

    size_t np = 0;  // pivots so far = pivot rows = pivot columns
    std::vector<int> level_of_row(rows.size(), -1);
    for (int v = 0; v < t; ++v) {
        size_t cp = np;
        while (cp < n) {
            size_t pr = rows.size();
            for (size_t r = np; r < rows.size(); ++r)
                if (R->val(rows[r][cp]) == v) {
                    pr = r;
                    break;
                }
            if (pr == rows.size()) {
                ++cp;
                continue;
            }
            std::swap(rows[np], rows[pr]);
            // normalize the pivot entry to exactly gamma^v
            rel w = R->div_gamma_pow(rows[np][cp], v);
            rel iw = R->unit_inv(w);
            for (size_t c = 0; c < n; ++c) rows[np][c] = R->mul(rows[np][c], iw);
            // eliminate the pivot column everywhere except in strictly
            // lower-level pivot rows (their unit entries cannot be cleared)
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == np) continue;
                if (level_of_row[r] >= 0 && level_of_row[r] < v) continue;
                rel e = rows[r][cp];
                if (e == 0) continue;
                rel f = R->div_gamma_pow(e, v);
                for (size_t c = 0; c < n; ++c)
                    rows[r][c] = R->sub(rows[r][c], R->mul(f, rows[np][c]));
            }
            // move the pivot column into position np
            if (cp != np) {
                for (auto& r : rows) std::swap(r[np], r[cp]);
                std::swap(sf.perm[np], sf.perm[cp]);
            }
            level_of_row[np] = v;
            sf.kcounts[v]++;
            ++np;
            cp = std::max(cp, np);
        }
    }
    // all unpivoted rows must have been eliminated
    for (size_t r = np; r < rows.size(); ++r)
        for (rel e : rows[r])
            if (e != 0) throw InternalError("standard form left a nonzero row");
    rows.resize(np);
    sf.rows = std::move(rows);
    sf.row_level.assign(level_of_row.begin(), level_of_row.begin() + np);
    return sf;
}

class ChainMatCode {
   public:
    static ChainMatCode from_rows(RingPtr R, size_t n, std::vector<rrow> rows) {
        ChainMatCode c;
        c.sf_ = standard_form(R, n, std::move(rows));
        return c;
    }

    RingPtr ring() const { return sf_.R; }
    size_t n() const { return sf_.n; }
    const StdForm& std_form() const { return sf_; }
    Cardinality card() const { return sf_.card(); }

    bool contains_word(const rrow& w) const { return sf_.reduces_to_zero(w); }
    bool contains(const ChainMatCode& o) const {
        for (const auto& permuted : o.sf_.rows) {
            rrow orig(o.sf_.n);
            for (size_t pos = 0; pos < o.sf_.n; ++pos) orig[o.sf_.perm[pos]] = permuted[pos];
            if (!contains_word(orig)) return false;
        }
        return true;
    }
    bool equals(const ChainMatCode& o) const {
        return card() == o.card() && contains(o);
    }

    // generator rows in original column order
    std::vector<rrow> gen_rows() const {
        std::vector<rrow> out;
        for (const auto& permuted : sf_.rows) {
            rrow orig(sf_.n);
            for (size_t pos = 0; pos < sf_.n; ++pos) orig[sf_.perm[pos]] = permuted[pos];
            out.push_back(std::move(orig));
        }
        return out;
    }

    // Euclidean dual via the standard-form blocks, t = 2 only:
    // G = [I A B; 0 gI gC] gives generators [ (AC-B)^T -C^T I ] and
    // [ -gA^T gI 0 ].
    ChainMatCode dual() const {
        const RingPtr& R = sf_.R;
        if (ChainRing::nilpotency() != 2) throw InternalError("matrix dual written for t = 2");
        const size_t n = sf_.n;
        const size_t k0 = sf_.kcounts[0], k1 = sf_.kcounts[1], r = n - k0 - k1;
        auto A = [&](size_t i, size_t j) { return sf_.rows[i][k0 + j]; };          // k0 x k1
        auto B = [&](size_t i, size_t j) { return sf_.rows[i][k0 + k1 + j]; };     // k0 x r
        auto Cm = [&](size_t i, size_t j) {                                         // k1 x r
            return R->div_gamma_pow(sf_.rows[k0 + i][k0 + k1 + j], 1);
        };
        std::vector<rrow> drows;
        for (size_t j = 0; j < r; ++j) {
            rrow y(n, 0);
            for (size_t i = 0; i < k0; ++i) {
                rel acc = R->neg(B(i, j));
                for (size_t l = 0; l < k1; ++l) acc = R->add(acc, R->mul(A(i, l), Cm(l, j)));
                y[i] = acc;
            }
            for (size_t l = 0; l < k1; ++l) y[k0 + l] = R->neg(Cm(l, j));
            y[k0 + k1 + j] = 1;
            drows.push_back(std::move(y));
        }
        rel g = R->gamma();
        for (size_t l = 0; l < k1; ++l) {
            rrow y(n, 0);
            for (size_t i = 0; i < k0; ++i) y[i] = R->neg(R->mul(g, A(i, l)));
            y[k0 + l] = g;
            drows.push_back(std::move(y));
        }
        // back to original column order
        std::vector<rrow> orig;
        for (auto& y : drows) {
            rrow w(n);
            for (size_t pos = 0; pos < n; ++pos) w[sf_.perm[pos]] = y[pos];
            orig.push_back(std::move(w));
        }
        return from_rows(R, n, std::move(orig));
    }

    ChainMatCode conj() const {
        std::vector<rrow> rows = gen_rows();
        for (auto& row : rows)
            for (auto& v : row) v = sf_.R->conj(v);
        return from_rows(sf_.R, sf_.n, std::move(rows));
    }

    // projection of (C : gamma^i) over the residue field, built from the
    // standard-form blocks: rows of level <= i, divided by their gamma power
    LinearCode tower_projection(int i) const {
        if (i < 0 || i >= ChainRing::nilpotency())
            throw LevelOutOfRange("tower level " + std::to_string(i));
        const RingPtr& R = sf_.R;
        std::vector<frow> rows;
        for (size_t r = 0; r < sf_.rows.size(); ++r) {
            if (sf_.row_level[r] > i) continue;
            frow w(sf_.n);
            for (size_t pos = 0; pos < sf_.n; ++pos)
                w[sf_.perm[pos]] =
                    R->project(R->div_gamma_pow(sf_.rows[r][pos], sf_.row_level[r]));
            rows.push_back(std::move(w));
        }
        return LinearCode::from_rows(R->residue_field(), sf_.n, std::move(rows));
    }

    ChainMatCode hermitian_dual() const { return dual().conj(); }

    // Visit every codeword exactly once, one scaled row-add per step
    // (reflected mixed-radix Gray traversal over the standard-form
    // generators: free coefficients range over R, gamma-row coefficients
    // over the transversal V).
    void enumerate(const std::function<void(const rrow&)>& visit) const {
        const RingPtr& R = sf_.R;
        const size_t n = sf_.n;
        const size_t k = sf_.rows.size();
        auto rows = gen_rows();
        std::vector<long long> radix(k);
        std::vector<std::vector<rel>> coef_of(k);
        for (size_t i = 0; i < k; ++i) {
            bool free_row = (sf_.row_level[i] == 0);
            radix[i] = long(free_row ? R->size() : R->residue_size());
            coef_of[i].resize(radix[i]);
            for (long long d = 0; d < radix[i]; ++d)
                coef_of[i][d] = free_row ? rel(d) : R->embed(gfel(d));
        }
        rrow cw(n, 0);
        std::vector<long long> digit(k, 0);
        std::vector<int> dir(k, 1);
        visit(cw);
        while (true) {
            size_t i = 0;
            long long nd = 0;
            while (i < k) {
                nd = digit[i] + dir[i];
                if (nd < 0 || nd >= radix[i]) {
                    dir[i] = -dir[i];
                    ++i;
                } else {
                    break;
                }
            }
            if (i == k) break;
            rel delta = R->sub(coef_of[i][nd], coef_of[i][digit[i]]);
            digit[i] = nd;
            const rrow& row = rows[i];
            for (size_t c = 0; c < n; ++c) cw[c] = R->add(cw[c], R->mul(delta, row[c]));
            visit(cw);
        }
    }

   private:
    StdForm sf_;
};

inline rel euclid_ip_ring(RingPtr R, const rrow& a, const rrow& b) {
    if (a.size() != b.size()) throw LengthMismatch("vectors of different length");
    rel s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = R->add(s, R->mul(a[i], b[i]));
    return s;
}

// ---------------------------------------------------------------------------
// (f, g, h) cyclic codes: C = <f*h, gamma*f*g> with f*g*h = x^n - 1
// ---------------------------------------------------------------------------

class ChainCodeFGH {
   public:
    static ChainCodeFGH make(RingPtr R, size_t n, RPoly f, RPoly g, RPoly h) {
        if (gcd_u128(n, R->residue_field()->p()) != 1)
            throw NotCoprime("cyclic machinery needs gcd(n, p) = 1");
        ChainCodeFGH c;
        c.R_ = R;
        c.n_ = n;
        if (f.is_zero() || g.is_zero() || h.is_zero())
            throw BadFactorization("zero polynomial in the triple");
        c.f_ = f.monic();
        c.g_ = g.monic();
        c.h_ = h.monic();
        RingDomain RD{R};
        if (c.f_ * c.g_ * c.h_ != RPoly::xn_minus(RD, n, 1))
            throw BadFactorization("f*g*h != x^n - 1");
        if (!coprime_over_ring(c.f_, c.g_) || !coprime_over_ring(c.f_, c.h_) ||
            !coprime_over_ring(c.g_, c.h_))
            throw BadFactorization("triple residues are not pairwise coprime");
        return c;
    }

    RingPtr ring() const { return R_; }
    size_t n() const { return n_; }
    const RPoly& f() const { return f_; }
    const RPoly& g() const { return g_; }
    const RPoly& h() const { return h_; }

    Cardinality card() const {
        long df = f_.is_one() ? 0 : long(f_.degree());
        long dh = h_.is_one() ? 0 : long(h_.degree());
        return {R_->residue_size(), 2 * long(n_) - 2 * df - dh};
    }

    ChainCodeFGH dual() const {
        return make(R_, n_, reciprocal(g_).monic(), reciprocal(f_).monic(),
                    reciprocal(h_).monic());
    }
    ChainCodeFGH hermitian_dual() const {
        ChainCodeFGH d = dual();
        return make(R_, n_, conj_coeffs(d.f_).monic(), conj_coeffs(d.g_).monic(),
                    conj_coeffs(d.h_).monic());
    }

    bool is_selfdual() const {
        return f_ == reciprocal(g_).monic() && h_ == reciprocal(h_).monic();
    }

    // projection of (C : gamma^i): level 0 is <res(f h)>, level 1 is <res(f)>
    LinearCode tower_projection(int i) const {
        if (i < 0 || i >= ChainRing::nilpotency())
            throw LevelOutOfRange("tower level " + std::to_string(i));
        FqPtr F = R_->residue_field();
        FPoly gen = (i == 0) ? project(f_) * project(h_) : project(f_);
        return LinearCode::cyclic(F, n_, gen);
    }
    LinearCode res_code() const { return tower_projection(0); }
    LinearCode tor_code() const { return tower_projection(1); }

    std::vector<rrow> gen_rows() const {
        RingDomain RD{R_};
        std::vector<rrow> rows;
        RPoly fh = f_ * h_;
        RPoly gfg = RPoly::constant(RD, R_->gamma()) * f_ * g_;
        for (const RPoly* base : {&fh, &gfg}) {
            for (size_t s = 0; s < n_; ++s) {
                RPoly sh = base->shifted(s).fold(n_, 1);
                rrow row(n_, 0);
                for (size_t c = 0; c < sh.coeffs().size(); ++c) row[c] = sh.coeffs()[c];
                rows.push_back(std::move(row));
            }
        }
        return rows;
    }
    ChainMatCode matrix() const { return ChainMatCode::from_rows(R_, n_, gen_rows()); }

   private:
    RingPtr R_;
    size_t n_ = 0;
    RPoly f_{rdom(nullptr)}, g_{rdom(nullptr)}, h_{rdom(nullptr)};
};

// ---------------------------------------------------------------------------
// exponent-form cyclic codes over F_q + uF_q
// ---------------------------------------------------------------------------

class ChainCodeExp {
   public:
    static ChainCodeExp make(std::shared_ptr<const RingFactorSet> fs, std::map<long, int> exps) {
        if (!fs || fs->target != "x^n-(1+u)")
            throw InternalError("exponent codes are built over an x^n-(1+u) factor set");
        ChainCodeExp c;
        for (auto& [rep, f] : fs->factors) {
            auto it = exps.find(rep);
            if (it == exps.end())
                throw IncompleteExponents("missing exponent for coset " + std::to_string(rep));
            if (it->second < 0 || it->second > 2)
                throw IncompleteExponents("exponent out of range for coset " + std::to_string(rep));
        }
        if (exps.size() != fs->factors.size())
            throw IncompleteExponents("exponent for a nonexistent coset");
        c.fs_ = std::move(fs);
        c.exps_ = std::move(exps);
        return c;
    }

    RingPtr ring() const { return fs_->ring; }
    size_t n() const { return fs_->n; }
    const RingFactorSet& factors() const { return *fs_; }
    const std::map<long, int>& exps() const { return exps_; }
    int exp_at(long rep) const { return exps_.at(rep); }

    Cardinality card() const {
        long e = 0;
        for (auto& [rep, k] : exps_) e += long(2 - k) * long(fs_->deg(rep));
        return {fs_->ring->residue_size(), e};
    }

    RPoly generator() const {
        RingDomain RD{fs_->ring};
        RPoly g = RPoly::one(RD);
        for (auto& [rep, k] : exps_)
            for (int i = 0; i < k; ++i) g = (g * fs_->by_rep(rep)).fold(fs_->n, 1);
        return g;
    }

    ChainCodeExp hermitian_dual() const {
        std::map<long, int> d;
        for (auto& [rep, k] : exps_) d[fs_->partner(rep)] = 2 - k;
        ChainCodeExp c;
        c.fs_ = fs_;
        c.exps_ = std::move(d);
        return c;
    }

    // dual-containment criterion: k_j <= 1 on symmetric cosets and
    // k_j + k_{partner(j)} <= 2 on asymmetric pairs
    bool is_dual_containing() const {
        for (auto& [rep, k] : exps_)
            if (k + exps_.at(fs_->partner(rep)) > 2) return false;
        return true;
    }
    bool is_hermitian_selfdual() const {
        for (auto& [rep, k] : exps_)
            if (k + exps_.at(fs_->partner(rep)) != 2) return false;
        return true;
    }

    bool contains(const ChainCodeExp& o) const {
        for (auto& [rep, k] : exps_)
            if (o.exps_.at(rep) < k) return false;
        return true;
    }

    // residue and torsion codes over F_q: Res uses delta_j = min(k_j, 1),
    // Tor uses eta_j = max(k_j - 1, 0)
    LinearCode res_code() const { return projected_code(true); }
    LinearCode tor_code() const { return projected_code(false); }

    std::vector<rrow> gen_rows() const {
        RPoly g = generator();
        std::vector<rrow> rows;
        for (size_t s = 0; s < fs_->n; ++s) {
            RPoly sh = g.shifted(s).fold(fs_->n, 1);
            rrow row(fs_->n, 0);
            for (size_t c = 0; c < sh.coeffs().size(); ++c) row[c] = sh.coeffs()[c];
            rows.push_back(std::move(row));
        }
        return rows;
    }
    ChainMatCode matrix() const {
        auto m = ChainMatCode::from_rows(fs_->ring, fs_->n, gen_rows());
        if (m.card() != card()) throw InternalError("exponent cardinality mismatch");
        return m;
    }

   private:
    LinearCode projected_code(bool res) const {
        FqPtr F = fs_->ring->residue_field();
        FieldDomain FD{F};
        FPoly gen = FPoly::one(FD);
        for (auto& [rep, k] : exps_) {
            int e = res ? (k >= 1 ? 1 : 0) : (k == 2 ? 1 : 0);
            if (e) gen = gen * project(fs_->by_rep(rep));
        }
        return LinearCode::cyclic(F, fs_->n, gen);
    }

    std::shared_ptr<const RingFactorSet> fs_;
    std::map<long, int> exps_;
};

}  // namespace ringcodes

#endif
