// Linear codes over small finite fields as row-reduced generator matrices.
// RREF is the canonical form, so code equality is row-by-row comparison.

#ifndef RINGCODES_LINEAR_CODE_HPP
#define RINGCODES_LINEAR_CODE_HPP

#include <vector>

#include "polynomial.hpp"

namespace ringcodes {

enum class Inner { Euclidean, Hermitian };

using frow = std::vector<gfel>;

namespace fmat {

// in-place reduced row echelon form; returns pivot columns
inline std::vector<size_t> rref(FqPtr F, std::vector<frow>& rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    const size_t n = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        gfel inv = F->inv(rows[r][c]);
        for (size_t j = c; j < n; ++j) rows[r][j] = F->mul(rows[r][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            gfel f = rows[i][c];
            for (size_t j = c; j < n; ++j)
                rows[i][j] = F->sub(rows[i][j], F->mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// basis of {y : rows * y^T = 0}, assuming rows are in RREF with the given pivots
inline std::vector<frow> nullspace(FqPtr F, const std::vector<frow>& rows,
                                   const std::vector<size_t>& pivots, size_t n) {
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<frow> basis;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        frow y(n, 0);
        y[f] = 1;
        for (size_t j = 0; j < pivots.size(); ++j) y[pivots[j]] = F->neg(rows[j][f]);
        basis.push_back(std::move(y));
    }
    return basis;
}

}  // namespace fmat

inline gfel inner_product(FqPtr F, const frow& a, const frow& b, Inner ip) {
    if (a.size() != b.size()) throw LengthMismatch("vectors of different length");
    gfel s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s = F->add(s, F->mul(a[i], ip == Inner::Hermitian ? F->conjugate(b[i]) : b[i]));
    return s;
}

class LinearCode {
   public:
    LinearCode(FqPtr F, size_t n) : F_(std::move(F)), n_(n) {}  // zero code

    static LinearCode from_rows(FqPtr F, size_t n, std::vector<frow> rows) {
        for (auto& r : rows)
            if (r.size() != n) throw LengthMismatch("generator row of wrong length");
        LinearCode C(F, n);
        C.pivots_ = fmat::rref(F, rows);
        C.G_ = std::move(rows);
        return C;
    }

    // cyclic code generated by g, which must divide x^n - 1
    static LinearCode cyclic(FqPtr F, size_t n, const FPoly& g) {
        FieldDomain FD{F};
        FPoly target = FPoly::xn_minus(FD, n, 1);
        if (g.is_zero() || !target.divmod(g).second.is_zero())
            throw NotADivisor("generator polynomial does not divide x^n-1");
        std::vector<frow> rows;
        if (g == target) return from_rows(F, n, rows);  // zero code
        size_t k = n - g.degree();
        for (size_t i = 0; i < k; ++i) {
            frow r(n, 0);
            for (size_t j = 0; j <= g.degree(); ++j) r[i + j] = g.coeff(j);
            rows.push_back(std::move(r));
        }
        return from_rows(F, n, rows);
    }

    FqPtr field() const { return F_; }
    size_t n() const { return n_; }
    size_t k() const { return G_.size(); }
    const std::vector<frow>& gen() const { return G_; }
    bool is_zero_code() const { return G_.empty(); }

    bool contains_word(const frow& w) const {
        if (w.size() != n_) throw LengthMismatch("word of wrong length");
        frow r = w;
        for (size_t j = 0; j < pivots_.size(); ++j) {
            gfel f = r[pivots_[j]];
            if (f == 0) continue;
            for (size_t c = 0; c < n_; ++c) r[c] = F_->sub(r[c], F_->mul(f, G_[j][c]));
        }
        for (gfel v : r)
            if (v != 0) return false;
        return true;
    }

    bool contains(const LinearCode& D) const {
        if (D.n_ != n_ || !F_->same_field(*D.F_)) throw LengthMismatch("codes not comparable");
        for (const auto& row : D.G_)
            if (!contains_word(row)) return false;
        return true;
    }

    LinearCode dual(Inner ip = Inner::Euclidean) const {
        auto basis = fmat::nullspace(F_, G_, pivots_, n_);
        if (ip == Inner::Hermitian)
            for (auto& row : basis)
                for (auto& v : row) v = F_->conjugate(v);
        return from_rows(F_, n_, std::move(basis));
    }

    bool is_dual_containing(Inner ip = Inner::Euclidean) const { return contains(dual(ip)); }

    // generator matrix of the dual: a parity-check matrix for this code
    std::vector<frow> parity_check() const { return dual(Inner::Euclidean).gen(); }

    bool operator==(const LinearCode& o) const {
        return n_ == o.n_ && F_->same_field(*o.F_) && G_ == o.G_;
    }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

   private:
    FqPtr F_;
    size_t n_;
    std::vector<frow> G_;      // RREF rows
    std::vector<size_t> pivots_;
};

}  // namespace ringcodes

#endif
