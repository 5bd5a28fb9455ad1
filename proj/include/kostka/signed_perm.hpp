/*
 * signed_perm.hpp
 * ---------------
 * Weyl group elements of the classical families as signed permutations of
 * the n coordinates.  Type A uses plain permutations, B and C all signed
 * permutations, D the even-sign subgroup.
 *
 * Acting on (beta_nbar, ..., beta_1bar):
 *   (sigma . beta)_ibar = flip[i] * beta_{perm[i]}bar.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "kostka/weights.hpp"

namespace kostka {

struct SignedPerm {
    // 0-based internally: coordinate i (1..n) lives at index i-1.
    std::vector<int> perm;     // image positions, a permutation of 0..n-1
    std::vector<int8_t> flip;  // +1 / -1 per coordinate

    explicit SignedPerm(int n) : perm(n), flip(n, 1) {
        std::iota(perm.begin(), perm.end(), 0);
    }

    int rank() const { return static_cast<int>(perm.size()); }

    static SignedPerm identity(int n) { return SignedPerm(n); }

    // s_i = (i,i+1)(ibar,i+1bar), 1 <= i <= n-1.
    static SignedPerm simple_swap(int n, int i) {
        SignedPerm s(n);
        std::swap(s.perm[i - 1], s.perm[i]);
        return s;
    }
    // s_0 = (1,1bar): flips the first coordinate.
    static SignedPerm s0(int n) {
        SignedPerm s(n);
        s.flip[0] = -1;
        return s;
    }
    // s_0' = (1,2bar)(2,1bar): type D extra generator.
    static SignedPerm s0_prime(int n) {
        SignedPerm s = simple_swap(n, 1);
        s.flip[0] = s.flip[1] = -1;
        return s;
    }

    int flips_count() const {
        int c = 0;
        for (int8_t f : flip) c += (f < 0);
        return c;
    }

    bool ok_for(Family f) const {
        if (f == Family::A) return flips_count() == 0;
        if (f == Family::D) return flips_count() % 2 == 0;
        return true;
    }

    // Determinant of the signed permutation matrix; equals (-1)^{l(sigma)}
    // because every generator is a reflection.
    int sign() const {
        std::vector<int> p = perm;
        int s = 1;
        for (std::size_t i = 0; i < p.size(); ++i) {
            while (p[i] != static_cast<int>(i)) {
                std::swap(p[i], p[p[i]]);
                s = -s;
            }
        }
        for (int8_t f : flip) s *= f;
        return s;
    }

    Weight act(const Weight& beta) const {
        if (beta.rank() != rank()) throw std::invalid_argument("act: rank mismatch");
        Weight r(rank());
        for (int i = 1; i <= rank(); ++i)
            r.twice_bar(i) = flip[i - 1] * beta.twice_bar(perm[i - 1] + 1);
        return r;
    }

    // (a * b)(beta) = a(b(beta)).
    friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("compose: rank mismatch");
        SignedPerm r(a.rank());
        for (int i = 0; i < a.rank(); ++i) {
            r.perm[i] = b.perm[a.perm[i]];
            r.flip[i] = static_cast<int8_t>(a.flip[i] * b.flip[a.perm[i]]);
        }
        return r;
    }

    friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
        return a.perm == b.perm && a.flip == b.flip;
    }
};

inline unsigned long long weyl_order(const RootSystemId& sys) {
    unsigned long long fact = 1;
    for (int i = 2; i <= sys.rank; ++i) fact *= i;
    switch (sys.family) {
        case Family::A: return fact;
        case Family::B:
        case Family::C: return fact << sys.rank;
        case Family::D: return fact << (sys.rank - 1);
    }
    return 0;
}

constexpr unsigned long long kDefaultWeylCap = 10'000'000ULL;

// Visits every group element exactly once: permutations in lexicographic
// order crossed with flip masks in binary order (deterministic).
inline void weyl_for_each(const RootSystemId& sys,
                          const std::function<void(const SignedPerm&)>& fn,
                          unsigned long long cap = kDefaultWeylCap) {
    if (weyl_order(sys) > cap)
        throw std::length_error("Weyl group enumeration exceeds cap");
    int n = sys.rank;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    SignedPerm s(n);
    do {
        s.perm = p;
        if (sys.family == Family::A) {
            std::fill(s.flip.begin(), s.flip.end(), int8_t{1});
            fn(s);
            continue;
        }
        unsigned masks = 1u << n;
        for (unsigned m = 0; m < masks; ++m) {
            if (sys.family == Family::D && __builtin_popcount(m) % 2 != 0) continue;
            for (int i = 0; i < n; ++i) s.flip[i] = (m >> i) & 1 ? -1 : 1;
            fn(s);
        }
    } while (std::next_permutation(p.begin(), p.end()));
}

inline std::vector<SignedPerm> weyl_elements(const RootSystemId& sys,
                                             unsigned long long cap = kDefaultWeylCap) {
    std::vector<SignedPerm> out;
    out.reserve(weyl_order(sys) > cap ? 0 : weyl_order(sys));
    weyl_for_each(sys, [&](const SignedPerm& s) { out.push_back(s); }, cap);
    return out;
}

} // namespace kostka
