/*
 * root_data.hpp
 * -------------
 * Positive roots, half-sums rho, simple roots and simple-root coordinates
 * for the classical families in the coordinates (beta_nbar,...,beta_1bar).
 *
 * Simple roots:
 *   B: a_0 = e_1bar,          a_i = e_(i+1)bar - e_ibar
 *   C: a_0 = 2 e_1bar,        a_i = e_(i+1)bar - e_ibar
 *   D: a_0 = e_1bar + e_2bar, a_i = e_(i+1)bar - e_ibar
 *   A: a_j = e_(j+1)bar - e_jbar, j = 1..n-1; crystal color c acts through
 *      the root indexed n-c (the A chain runs through the barred letters in
 *      reverse), so color-aware callers use simple_root_for_color.
 */
#pragma once

#include <optional>
#include <vector>

#include "kostka/signed_perm.hpp"
#include "kostka/weights.hpp"

namespace kostka {

inline std::vector<Weight> positive_roots(const RootSystemId& sys) {
    int n = sys.rank;
    std::vector<Weight> roots;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            roots.push_back(Weight::eps(n, i) - Weight::eps(n, j));
            if (sys.family != Family::A)
                roots.push_back(Weight::eps(n, i) + Weight::eps(n, j));
        }
    for (int i = 1; i <= n; ++i) {
        if (sys.family == Family::B) roots.push_back(Weight::eps(n, i));
        if (sys.family == Family::C) roots.push_back(Weight::eps(n, i).scaled(2));
    }
    // Fixed processing order: by height (sum of coordinates) then lexicographic.
    std::sort(roots.begin(), roots.end(), [](const Weight& a, const Weight& b) {
        if (a.twice_total() != b.twice_total()) return a.twice_total() < b.twice_total();
        return a < b;
    });
    return roots;
}

inline Weight rho(const RootSystemId& sys) {
    int n = sys.rank;
    Weight r(n);
    for (int i = 1; i <= n; ++i) {
        switch (sys.family) {
            case Family::B: r.twice_bar(i) = 2 * i - 1; break;  // (n-1/2, ..., 1/2)
            case Family::C: r.twice_bar(i) = 2 * i; break;      // (n, ..., 1)
            case Family::D: r.twice_bar(i) = 2 * (i - 1); break;// (n-1, ..., 0)
            case Family::A: r.twice_bar(i) = 2 * (i - 1); break;// (n-1, ..., 0)
        }
    }
    return r;
}

// Simple roots indexed 0..n-1 for B/C/D; for A indexed 1..n-1 (slot 0 unused).
inline std::vector<Weight> simple_roots(const RootSystemId& sys) {
    int n = sys.rank;
    std::vector<Weight> a;
    switch (sys.family) {
        case Family::B: a.push_back(Weight::eps(n, 1)); break;
        case Family::C: a.push_back(Weight::eps(n, 1).scaled(2)); break;
        case Family::D: a.push_back(Weight::eps(n, 1) + Weight::eps(n, 2)); break;
        case Family::A: a.push_back(Weight(n)); break;  // unused slot
    }
    for (int i = 1; i <= n - 1; ++i)
        a.push_back(Weight::eps(n, i + 1) - Weight::eps(n, i));
    return a;
}

// Root alpha such that applying the crystal operator of `color` changes a
// word's weight by -alpha (f) or +alpha (e).
inline Weight simple_root_for_color(const RootSystemId& sys, int color) {
    int n = sys.rank;
    if (sys.family == Family::A) {
        if (color < 1 || color > n - 1) throw std::invalid_argument("bad A color");
        return Weight::eps(n, n - color + 1) - Weight::eps(n, n - color);
    }
    if (color < 0 || color > n - 1) throw std::invalid_argument("bad color");
    return simple_roots(sys).at(color);
}

// Unique nonnegative-integer coordinates of beta on the simple roots, or
// nullopt when they do not exist.  Index j corresponds to simple_roots()[j].
inline std::optional<std::vector<long>> simple_root_coords(const RootSystemId& sys,
                                                           const Weight& beta) {
    int n = sys.rank;
    if (beta.rank() != n) throw std::invalid_argument("simple_root_coords: rank mismatch");
    // Work in doubled units, then demand even nonnegative values.
    std::vector<long> twice(n, 0);
    long suffix = 0;  // 2*(beta_nbar + ... + beta_(j+1)bar)
    switch (sys.family) {
        case Family::B:
            for (int j = n - 1; j >= 0; --j) {
                suffix += beta.twice_bar(j + 1);
                twice[j] = suffix;
            }
            break;
        case Family::C:
            for (int j = n - 1; j >= 1; --j) {
                suffix += beta.twice_bar(j + 1);
                twice[j] = suffix;
            }
            twice[0] = (suffix + beta.twice_bar(1)) / 2;
            if ((suffix + beta.twice_bar(1)) % 2 != 0) return std::nullopt;
            break;
        case Family::D: {
            for (int j = n - 1; j >= 2; --j) {
                suffix += beta.twice_bar(j + 1);
                twice[j] = suffix;
            }
            long tail = suffix + beta.twice_bar(2);  // 2*(beta_2bar+...+beta_nbar)
            long c0 = tail + beta.twice_bar(1), c1 = tail - beta.twice_bar(1);
            if (c0 % 2 != 0 || c1 % 2 != 0) return std::nullopt;
            twice[0] = c0 / 2;
            twice[1] = c1 / 2;
            break;
        }
        case Family::A: {
            if (beta.twice_total() != 0) return std::nullopt;
            for (int j = n - 1; j >= 1; --j) {
                suffix += beta.twice_bar(j + 1);
                twice[j] = suffix;
            }
            twice[0] = 0;
            break;
        }
    }
    std::vector<long> c(n, 0);
    int lo = (sys.family == Family::A) ? 1 : 0;
    for (int j = lo; j < n; ++j) {
        if (twice[j] < 0 || twice[j] % 2 != 0) return std::nullopt;
        c[j] = twice[j] / 2;
    }
    return c;
}

// sigma o beta = sigma(beta + rho) - rho.
inline Weight dot_action(const RootSystemId& sys, const SignedPerm& sigma, const Weight& beta) {
    Weight r = rho(sys);
    return sigma.act(beta + r) - r;
}

} // namespace kostka
