// Dense univariate polynomials over a field context or a chain-ring context,
// via a small coefficient-domain layer. Coefficients are stored lowest degree
// first with no trailing zeros; the zero polynomial is the empty vector and
// its degree is a sentinel (is_zero()), never -1 arithmetic.

#ifndef RINGCODES_POLYNOMIAL_HPP
#define RINGCODES_POLYNOMIAL_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "chain_ring.hpp"
#include "errors.hpp"
#include "fields.hpp"

namespace ringcodes {

struct FieldDomain {
    FqPtr F;
    using value = gfel;
    value zero() const { return 0; }
    value one() const { return 1; }
    value add(value a, value b) const { return F->add(a, b); }
    value sub(value a, value b) const { return F->sub(a, b); }
    value neg(value a) const { return F->neg(a); }
    value mul(value a, value b) const { return F->mul(a, b); }
    bool is_unit(value a) const { return a != 0; }
    value unit_inv(value a) const { return F->inv(a); }
    value from_int(long long v) const { return F->from_int(v); }
    std::string to_string(value v) const { return u128_str(v); }
    value parse(const std::string& s) const {
        u128 v = 0;
        for (char ch : s) {
            if (!std::isdigit((unsigned char)ch)) throw InternalError("bad element: " + s);
            v = v * 10 + (ch - '0');
        }
        if (v >= F->q()) throw InternalError("element out of range: " + s);
        return v;
    }
    bool same(const FieldDomain& o) const { return F->same_field(*o.F); }
};

struct RingDomain {
    RingPtr R;
    using value = rel;
    value zero() const { return 0; }
    value one() const { return 1; }
    value add(value a, value b) const { return R->add(a, b); }
    value sub(value a, value b) const { return R->sub(a, b); }
    value neg(value a) const { return R->neg(a); }
    value mul(value a, value b) const { return R->mul(a, b); }
    bool is_unit(value a) const { return R->is_unit(a); }
    value unit_inv(value a) const { return R->unit_inv(a); }
    value from_int(long long v) const {
        long long m = (long long)R->size();
        long long r = ((v % m) + m) % m;
        if (R->is_fqu()) {
            // integers land in the prime subfield of the residue
            return R->embed(R->residue_field()->from_int(v));
        }
        return value(r);
    }
    std::string to_string(value v) const { return R->to_string(v); }
    value parse(const std::string& s) const { return R->parse(s); }
    bool same(const RingDomain& o) const { return R.get() == o.R.get(); }
};

template <class D>
class Poly {
   public:
    using value = typename D::value;

    explicit Poly(D dom) : dom_(std::move(dom)) {}
    Poly(D dom, std::vector<value> coeffs) : dom_(std::move(dom)), c_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(D dom) { return Poly(std::move(dom)); }
    static Poly one(D dom) {
        Poly r(dom);
        r.c_ = {r.dom_.one()};
        return r;
    }
    static Poly x(D dom) {
        Poly r(dom);
        r.c_ = {r.dom_.zero(), r.dom_.one()};
        return r;
    }
    static Poly constant(D dom, value v) {
        Poly r(std::move(dom));
        r.c_ = {v};
        r.normalize();
        return r;
    }
    // x^n - a
    static Poly xn_minus(D dom, size_t n, value a) {
        Poly r(dom);
        r.c_.assign(n + 1, r.dom_.zero());
        r.c_[0] = r.dom_.neg(a);
        r.c_[n] = r.dom_.one();
        return r;
    }

    const D& dom() const { return dom_; }
    const std::vector<value>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == dom_.one(); }
    size_t degree() const {
        if (is_zero()) throw InternalError("degree of the zero polynomial");
        return c_.size() - 1;
    }
    value coeff(size_t i) const { return i < c_.size() ? c_[i] : dom_.zero(); }
    value leading() const { return c_.back(); }
    value constant_term() const { return is_zero() ? dom_.zero() : c_[0]; }
    bool is_monic() const { return !is_zero() && c_.back() == dom_.one(); }

    Poly operator+(const Poly& o) const {
        Poly r(dom_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), dom_.zero());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = dom_.add(coeff(i), o.coeff(i));
        r.normalize();
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r(dom_);
        r.c_.resize(std::max(c_.size(), o.c_.size()), dom_.zero());
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = dom_.sub(coeff(i), o.coeff(i));
        r.normalize();
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = dom_.neg(v);
        return r;
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero(dom_);
        Poly r(dom_);
        r.c_.assign(c_.size() + o.c_.size() - 1, dom_.zero());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == dom_.zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = dom_.add(r.c_[i + j], dom_.mul(c_[i], o.c_[j]));
        }
        r.normalize();
        return r;
    }
    Poly scaled(value s) const {
        Poly r = *this;
        for (auto& v : r.c_) v = dom_.mul(v, s);
        r.normalize();
        return r;
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // quotient/remainder; the divisor's leading coefficient must be a unit
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw InternalError("division by zero polynomial");
        if (!dom_.is_unit(d.leading()))
            throw NonUnitLeadingCoefficient("divisor leading coefficient is not a unit");
        Poly q(dom_), r = *this;
        if (r.c_.size() < d.c_.size()) return {q, r};
        q.c_.assign(r.c_.size() - d.c_.size() + 1, dom_.zero());
        value ilc = dom_.unit_inv(d.leading());
        while (!r.is_zero() && r.c_.size() >= d.c_.size()) {
            value f = dom_.mul(r.leading(), ilc);
            size_t shift = r.c_.size() - d.c_.size();
            q.c_[shift] = f;
            for (size_t j = 0; j < d.c_.size(); ++j)
                r.c_[shift + j] = dom_.sub(r.c_[shift + j], dom_.mul(f, d.c_[j]));
            r.normalize();
        }
        q.normalize();
        return {q, r};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        if (!dom_.is_unit(leading()))
            throw NonUnitLeadingCoefficient("cannot normalize: leading coefficient not a unit");
        return scaled(dom_.unit_inv(leading()));
    }

    value eval(value x) const {
        value acc = dom_.zero();
        for (size_t i = c_.size(); i-- > 0;) acc = dom_.add(dom_.mul(acc, x), c_[i]);
        return acc;
    }

    // substitute lambda*x for x: coefficients c_i * lambda^i
    Poly scale_argument(value lambda) const {
        Poly r = *this;
        value pw = dom_.one();
        for (size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] = dom_.mul(r.c_[i], pw);
            pw = dom_.mul(pw, lambda);
        }
        r.normalize();
        return r;
    }

    Poly shifted(size_t k) const {  // multiply by x^k
        if (is_zero()) return *this;
        Poly r(dom_);
        r.c_.assign(c_.size() + k, dom_.zero());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // reduce modulo x^n - a (constacyclic fold)
    Poly fold(size_t n, value a) const {
        Poly r(dom_);
        r.c_.assign(n, dom_.zero());
        value pw = dom_.one();
        size_t block = 0;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i / n != block) {
                block = i / n;
                pw = dom_.one();
                for (size_t b = 0; b < block; ++b) pw = dom_.mul(pw, a);
            }
            r.c_[i % n] = dom_.add(r.c_[i % n], dom_.mul(c_[i], pw));
        }
        r.normalize();
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += dom_.to_string(c_[i]);
        }
        return s;
    }

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == dom_.zero()) c_.pop_back();
    }

    D dom_;
    std::vector<value> c_;
};

using FPoly = Poly<FieldDomain>;
using RPoly = Poly<RingDomain>;

inline FieldDomain fdom(FqPtr F) { return FieldDomain{std::move(F)}; }
inline RingDomain rdom(RingPtr R) { return RingDomain{std::move(R)}; }

// f*(x) = x^deg(f) f(1/x): the coefficient sequence reversed, renormalized
template <class D>
Poly<D> reciprocal(const Poly<D>& f) {
    if (f.is_zero()) return f;
    auto c = f.coeffs();
    std::reverse(c.begin(), c.end());
    return Poly<D>(f.dom(), std::move(c));
}

inline FPoly project(const RPoly& f) {
    const auto& R = f.dom().R;
    std::vector<gfel> c;
    c.reserve(f.coeffs().size());
    for (rel v : f.coeffs()) c.push_back(R->project(v));
    return FPoly(fdom(R->residue_field()), std::move(c));
}

inline RPoly embed(const FPoly& f, RingPtr R) {
    if (!f.dom().F->same_field(*R->residue_field()))
        throw InternalError("embedding from a different field");
    std::vector<rel> c;
    c.reserve(f.coeffs().size());
    for (gfel v : f.coeffs()) c.push_back(R->embed(v));
    return RPoly(rdom(std::move(R)), std::move(c));
}

inline RPoly conj_coeffs(const RPoly& f) {
    const auto& R = f.dom().R;
    std::vector<rel> c;
    c.reserve(f.coeffs().size());
    for (rel v : f.coeffs()) c.push_back(R->conj(v));
    return RPoly(f.dom(), std::move(c));
}

// monic normalization of the coefficient-conjugated reciprocal; sends a
// factor with root zeta^s to the factor with root index -p^m * s
inline RPoly conj_reciprocal(const RPoly& f) {
    if (!f.dom().R->is_fqu())
        throw UnsupportedConjugation("conjugate-reciprocal undefined over Z_{p^2}");
    return conj_coeffs(reciprocal(f)).monic();
}

inline FPoly gcd(FPoly a, FPoly b) {
    while (!b.is_zero()) {
        FPoly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

// returns (g, s, t) monic with s*a + t*b = g
inline std::tuple<FPoly, FPoly, FPoly> extended_gcd(const FPoly& a, const FPoly& b) {
    auto D = a.dom();
    FPoly r0 = a, r1 = b;
    FPoly s0 = FPoly::one(D), s1 = FPoly::zero(D);
    FPoly t0 = FPoly::zero(D), t1 = FPoly::one(D);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        FPoly s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        FPoly t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    gfel lc = r0.leading();
    gfel ilc = D.F->inv(lc);
    return {r0.monic(), s0.scaled(ilc), t0.scaled(ilc)};
}

// chain-ring coprimality: gcd of the residue projections is 1
inline bool coprime_over_ring(const RPoly& a, const RPoly& b) {
    FPoly g = gcd(project(a), project(b));
    return g.is_one();
}

namespace polyparse {

// "c0,c1,..." with domain-encoded coefficients, or human syntax like
// "x^3+2x+1" (integer coefficients; u-notation is not accepted here)
template <class D>
Poly<D> parse(const D& dom, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s.push_back(ch);
    if (s.empty()) throw InternalError("empty polynomial");
    if (s.find(',') != std::string::npos ||
        (s.find('x') == std::string::npos && s.find('+') == std::string::npos &&
         s.find('-') == std::string::npos)) {
        // comma-separated coefficient list
        std::vector<typename D::value> c;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) c.push_back(dom.parse(tok));
        return Poly<D>(dom, std::move(c));
    }
    // human syntax
    std::vector<std::pair<long long, size_t>> terms;  // (coef, exp)
    size_t i = 0;
    long long sign = 1;
    if (s[0] == '+' || s[0] == '-') {
        sign = (s[0] == '-') ? -1 : 1;
        i = 1;
    }
    while (i < s.size()) {
        long long coef = -1;
        size_t exp = 0;
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j > i) coef = std::stoll(s.substr(i, j - i));
        i = j;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            if (coef < 0) coef = 1;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                j = i;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                if (j == i) throw InternalError("bad exponent in: " + text);
                exp = std::stoull(s.substr(i, j - i));
                i = j;
            }
        } else if (coef < 0) {
            throw InternalError("bad term in: " + text);
        }
        terms.emplace_back(sign * coef, exp);
        if (i < s.size()) {
            if (s[i] == '+')
                sign = 1;
            else if (s[i] == '-')
                sign = -1;
            else
                throw InternalError("bad separator in: " + text);
            ++i;
        }
    }
    size_t deg = 0;
    for (auto& t : terms) deg = std::max(deg, t.second);
    std::vector<typename D::value> c(deg + 1, dom.zero());
    for (auto& t : terms) c[t.second] = dom.add(c[t.second], dom.from_int(t.first));
    return Poly<D>(dom, std::move(c));
}

}  // namespace polyparse

}  // namespace ringcodes

#endif
