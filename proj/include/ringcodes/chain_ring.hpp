// The two nilpotency-index-2 chain rings the library instantiates:
//   FqU  : F_q + u*F_q with u^2 = 0, elements a + u*b encoded as a + q*b
//   Zp2  : Z_{p^2}, elements as plain residues
// Both expose the maximal-ideal generator gamma, the residue projection, and
// the gamma-adic decomposition against the canonical transversal V
// (V = F_q embedded for FqU, V = {0..p-1} for Zp2).

#ifndef RINGCODES_CHAIN_RING_HPP
#define RINGCODES_CHAIN_RING_HPP

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fields.hpp"

namespace ringcodes {

using rel = std::uint32_t;  // ring element

class ChainRing;
using RingPtr = std::shared_ptr<const ChainRing>;

class ChainRing {
   public:
    enum class Kind { FqU, Zp2 };

    static RingPtr make_fqu(FqPtr residue) {
        if (residue->q() > 0xffff)
            throw InternalError("FqU rings are supported for q <= 2^16");
        auto R = std::shared_ptr<ChainRing>(new ChainRing());
        R->kind_ = Kind::FqU;
        R->F_ = std::move(residue);
        R->qres_ = u64(R->F_->q());
        R->size_ = R->qres_ * R->qres_;
        R->gamma_ = rel(R->qres_);  // 0 + u*1
        R->build_tables();
        return R;
    }
    static RingPtr make_zp2(u64 p) {
        if (p > 0xffff) throw InternalError("Z_{p^2} rings are supported for p <= 2^16");
        auto R = std::shared_ptr<ChainRing>(new ChainRing());
        R->kind_ = Kind::Zp2;
        R->F_ = Fq::make(p, 1);
        R->qres_ = p;
        R->size_ = p * p;
        R->gamma_ = rel(p);
        R->build_tables();
        return R;
    }

    Kind kind() const { return kind_; }
    bool is_fqu() const { return kind_ == Kind::FqU; }
    FqPtr residue_field() const { return F_; }
    u64 residue_size() const { return qres_; }
    u64 size() const { return size_; }
    static constexpr int nilpotency() { return 2; }
    rel gamma() const { return gamma_; }

    rel zero() const { return 0; }
    rel one() const { return 1; }

    rel add(rel a, rel b) const {
        if (add_tab_) return (*add_tab_)[size_t(a) * size_ + b];
        if (kind_ == Kind::Zp2) return rel((a + b) % size_);
        gfel a0 = a % qres_, a1 = a / qres_, b0 = b % qres_, b1 = b / qres_;
        return rel(u64(F_->add(a0, b0)) + qres_ * u64(F_->add(a1, b1)));
    }
    rel neg(rel a) const {
        if (kind_ == Kind::Zp2) return rel(a == 0 ? 0 : size_ - a);
        return rel(u64(F_->neg(a % qres_)) + qres_ * u64(F_->neg(a / qres_)));
    }
    rel sub(rel a, rel b) const { return add(a, neg(b)); }
    rel mul(rel a, rel b) const {
        if (mul_tab_) return (*mul_tab_)[size_t(a) * size_ + b];
        return mul_slow(a, b);
    }

    bool is_unit(rel a) const { return project(a) != 0; }

    rel unit_inv(rel a) const {
        if (!is_unit(a)) throw InternalError("inverse of a non-unit");
        if (kind_ == Kind::Zp2) {
            // Euler: a^(phi(p^2)-1), phi = p(p-1)
            u64 e = qres_ * (qres_ - 1) - 1;
            u64 r = 1, x = a;
            while (e) {
                if (e & 1) r = (r * x) % size_;
                x = (x * x) % size_;
                e >>= 1;
            }
            return rel(r);
        }
        // (a + ub)^-1 = a^-1 - u * b * a^-2
        gfel a0 = a % qres_, a1 = a / qres_;
        gfel ia = F_->inv(a0);
        gfel b1 = F_->neg(F_->mul(a1, F_->mul(ia, ia)));
        return rel(u64(ia) + qres_ * u64(b1));
    }

    // natural projection onto R/<gamma> = F_q; for both kinds the residue is
    // the low digit of the base-|F_q| encoding
    gfel project(rel a) const { return gfel(a % qres_); }
    rel embed(gfel a) const { return rel(u64(a)); }

    // unique (v0, v1) in V^2 with a = v0 + gamma*v1
    std::array<gfel, 2> gamma_decompose(rel a) const {
        return {gfel(a % qres_), gfel(a / qres_)};
    }
    rel gamma_compose(gfel v0, gfel v1) const { return rel(u64(v0) + qres_ * u64(v1)); }

    // gamma-adic valuation: 0 for units, 1 for gamma*(unit), 2 for zero
    int val(rel a) const {
        if (a == 0) return 2;
        return is_unit(a) ? 0 : 1;
    }

    // For a = gamma^v * w, returns w such that gamma^v * w = a (v <= val(a)).
    rel div_gamma_pow(rel a, int v) const {
        if (v == 0) return a;
        if (val(a) < v) throw InternalError("gamma valuation too small");
        if (a == 0) return 0;
        // val(a) == 1, v == 1: a = gamma * v1
        return rel(a / qres_);
    }

    rel make_fqu_elem(gfel a, gfel b) const {
        if (kind_ != Kind::FqU) throw InternalError("not an FqU ring");
        return rel(u64(a) + qres_ * u64(b));
    }

    // coefficient-wise conjugation a+ub -> conj(a)+u*conj(b)
    rel conj(rel x) const {
        if (kind_ == Kind::Zp2)
            throw UnsupportedConjugation("conjugation undefined over Z_{p^2}");
        gfel a = x % qres_, b = x / qres_;
        return rel(u64(F_->conjugate(a)) + qres_ * u64(F_->conjugate(b)));
    }

    std::string to_string(rel a) const {
        if (kind_ == Kind::Zp2) return std::to_string(a);
        return u128_str(a % qres_) + "+u*" + u128_str(a / qres_);
    }

    rel parse(const std::string& s) const;  // defined after the declaration

    std::string describe() const {
        if (kind_ == Kind::Zp2) return "Z" + std::to_string(size_);
        std::string f = F_->describe();
        return f + "+u" + f;
    }

   private:
    ChainRing() = default;

    rel mul_slow(rel a, rel b) const {
        if (kind_ == Kind::Zp2) return rel((u64(a) * b) % size_);
        gfel a0 = a % qres_, a1 = a / qres_, b0 = b % qres_, b1 = b / qres_;
        gfel c0 = F_->mul(a0, b0);
        gfel c1 = F_->add(F_->mul(a0, b1), F_->mul(a1, b0));
        return rel(u64(c0) + qres_ * u64(c1));
    }

    void build_tables() {
        if (size_ > 1024) return;
        mul_tab_.emplace(size_ * size_);
        add_tab_.emplace(size_ * size_);
        for (size_t a = 0; a < size_; ++a)
            for (size_t b = 0; b < size_; ++b) {
                (*mul_tab_)[a * size_ + b] = rel(mul_slow(rel(a), rel(b)));
                if (kind_ == Kind::Zp2)
                    (*add_tab_)[a * size_ + b] = rel((a + b) % size_);
                else {
                    gfel a0 = a % qres_, a1 = a / qres_, b0 = b % qres_, b1 = b / qres_;
                    (*add_tab_)[a * size_ + b] =
                        rel(u64(F_->add(a0, b0)) + qres_ * u64(F_->add(a1, b1)));
                }
            }
    }

    Kind kind_ = Kind::FqU;
    FqPtr F_;
    u64 qres_ = 0, size_ = 0;
    rel gamma_ = 0;
    std::optional<std::vector<rel>> mul_tab_, add_tab_;
};

inline rel ChainRing::parse(const std::string& s) const {
    auto upos = s.find("+u*");
    if (upos == std::string::npos) {
        u64 v = std::stoull(s);
        if (kind_ == Kind::Zp2) {
            if (v >= size_) throw InternalError("element out of range: " + s);
            return rel(v);
        }
        if (v >= qres_) throw InternalError("element out of range: " + s);
        return rel(v);
    }
    if (kind_ == Kind::Zp2) throw InternalError("u-notation invalid over Z_{p^2}: " + s);
    u64 a = std::stoull(s.substr(0, upos));
    u64 b = std::stoull(s.substr(upos + 3));
    if (a >= qres_ || b >= qres_) throw InternalError("element out of range: " + s);
    return rel(a + qres_ * b);
}

}  // namespace ringcodes

#endif
