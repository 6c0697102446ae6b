// 128-bit integer utilities: primality, factorization, modular arithmetic.
// Field orders reach 13^20, so 64 bits are not enough for group-order work.

#ifndef RINGCODES_INTEGERS_HPP
#define RINGCODES_INTEGERS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace ringcodes {

using u128 = unsigned __int128;
using u64 = std::uint64_t;

inline std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline u128 mulmod_u128(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    // fast path: no overflow possible below 2^64
    if (a < (u128(1) << 64) && b < (u128(1) << 64)) return (a * b) % m;
    u128 r = 0;
    while (b > 0) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

inline u128 powmod_u128(u128 a, u128 e, u128 m) {
    u128 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u128(r, a, m);
        a = mulmod_u128(a, a, m);
        e >>= 1;
    }
    return r;
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Miller-Rabin. The base set is deterministic for n < 3.3e24, which covers
// every group order this library ever sees (max 13^20 ~ 1.9e22).
inline bool is_prime_u128(u128 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        u128 x = powmod_u128(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u128(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

namespace detail {

inline u128 pollard_rho(u128 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u128 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u128(x, x, n) + c) % n;
            y = (mulmod_u128(y, y, n) + c) % n;
            y = (mulmod_u128(y, y, n) + c) % n;
            d = gcd_u128(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_rec(u128 n, std::vector<u128>& out) {
    if (n == 1) return;
    if (is_prime_u128(n)) {
        out.push_back(n);
        return;
    }
    u128 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

// All prime factors with multiplicity, sorted ascending.
inline std::vector<u128> factorize_u128(u128 n) {
    std::vector<u128> out;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    detail::factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<u128> distinct_prime_factors(u128 n) {
    auto all = factorize_u128(n);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

// Multiplicative order of a modulo n (requires gcd(a, n) = 1).
inline u64 multiplicative_order(u64 a, u64 n) {
    u64 x = a % n, k = 1;
    while (x != 1 % n) {
        x = u64((u128(x) * a) % n);
        ++k;
        if (k > n) return 0;  // not coprime
    }
    return k;
}

inline bool is_prime_u64(u64 n) { return is_prime_u128(n); }

inline u128 ipow_u128(u64 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace ringcodes

#endif
