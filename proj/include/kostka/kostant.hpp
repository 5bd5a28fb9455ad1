/*
 * kostant.hpp
 * -----------
 * The q-analogue of Kostant's partition function and the definition-level
 * Kostka-Foulkes polynomial
 *
 *   K_{lambda,mu}(q) = sum_{sigma in W} (-1)^{l(sigma)}
 *                      P_q(sigma(lambda+rho) - (mu+rho)),
 *
 * the ground-truth oracle every other computation in this library is
 * checked against.
 *
 * P_q(beta) is evaluated by dynamic programming over the fixed positive
 * root list after converting beta to simple-root coordinates; the memo is
 * keyed on (root index, remaining coordinates) and is therefore shareable
 * across all sigma of one Weyl sum.
 */
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kostka/qlaurent.hpp"
#include "kostka/root_data.hpp"

namespace kostka {

class KostantEvaluator {
public:
    explicit KostantEvaluator(const RootSystemId& sys)
        : sys_(sys) {
        for (const Weight& r : positive_roots(sys)) {
            auto c = simple_root_coords(sys, r);
            root_coords_.push_back(std::vector<long>(c->begin(), c->end()));
        }
    }

    // P_q(beta): sum over multisets of positive roots with sum beta,
    // weighted q^(multiset size).  Zero off the positive root cone.
    QLaurent kostant_q(const Weight& beta) {
        auto coords = simple_root_coords(sys_, beta);
        if (!coords) return QLaurent();
        return eval(0, *coords);
    }

    const RootSystemId& system() const { return sys_; }

private:
    QLaurent eval(std::size_t j, const std::vector<long>& remaining) {
        bool zero = true;
        for (long v : remaining)
            if (v != 0) { zero = false; break; }
        if (j == root_coords_.size()) return zero ? QLaurent(1) : QLaurent();
        if (zero) return QLaurent(1);  // only empty multisets remain
        auto key = std::make_pair(j, remaining);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        QLaurent total = eval(j + 1, remaining);  // k = 0 copies of root j
        std::vector<long> rest = remaining;
        const auto& rc = root_coords_[j];
        for (int k = 1;; ++k) {
            bool fits = true;
            for (std::size_t t = 0; t < rc.size(); ++t) {
                rest[t] -= rc[t];
                if (rest[t] < 0) fits = false;
            }
            if (!fits) break;
            total += eval(j + 1, rest).shifted(k);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    RootSystemId sys_;
    std::vector<std::vector<long>> root_coords_;
    std::map<std::pair<std::size_t, std::vector<long>>, QLaurent> memo_;
};

inline QLaurent kostant_q(const RootSystemId& sys, const Weight& beta) {
    KostantEvaluator ev(sys);
    return ev.kostant_q(beta);
}

inline QLaurent kostka_def(const RootSystemId& sys, const GenPartition& lambda,
                           const GenPartition& mu,
                           unsigned long long weyl_cap = kDefaultWeylCap) {
    if (lambda.family != sys.family || mu.family != sys.family)
        throw std::invalid_argument("kostka_def: family mismatch");
    if (lambda.rank() != sys.rank || mu.rank() != sys.rank)
        throw std::invalid_argument("kostka_def: rank mismatch");
    KostantEvaluator ev(sys);
    Weight r = rho(sys);
    Weight lam_rho = lambda.wt + r;
    Weight mu_rho = mu.wt + r;
    QLaurent total;
    weyl_for_each(sys, [&](const SignedPerm& sigma) {
        Weight beta = sigma.act(lam_rho) - mu_rho;
        QLaurent p = ev.kostant_q(beta);  // zero off the cone, so this prunes
        if (p.is_zero()) return;
        if (sigma.sign() > 0) total += p;
        else total -= p;
    }, weyl_cap);
    return total;
}

// Expected degree of a nonzero K_{lambda,mu}(q):
//   B: sum_i i (lambda_ibar - mu_ibar)
//   C: sum_i i (lambda_ibar - mu_ibar) - (|lambda| - |mu|) / 2
//   D: sum_{i>=2} (i-1) (lambda_ibar - mu_ibar)
// Not defined for family A here.
inline std::optional<long> expected_degree(const RootSystemId& sys, const GenPartition& lambda,
                                           const GenPartition& mu) {
    int n = sys.rank;
    long twice = 0;
    switch (sys.family) {
        case Family::B:
            for (int i = 1; i <= n; ++i)
                twice += static_cast<long>(i) * (lambda.wt.twice_bar(i) - mu.wt.twice_bar(i));
            break;
        case Family::C: {
            for (int i = 1; i <= n; ++i)
                twice += static_cast<long>(i) * (lambda.wt.twice_bar(i) - mu.wt.twice_bar(i));
            twice -= (lambda.boxes() - mu.boxes());
            break;
        }
        case Family::D:
            for (int i = 2; i <= n; ++i)
                twice += static_cast<long>(i - 1) * (lambda.wt.twice_bar(i) - mu.wt.twice_bar(i));
            break;
        case Family::A:
            return std::nullopt;
    }
    if (twice % 2 != 0) throw std::domain_error("expected_degree: non-integer degree");
    return twice / 2;
}

} // namespace kostka
