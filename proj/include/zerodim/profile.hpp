#ifndef ZERODIM_PROFILE_HPP
#define ZERODIM_PROFILE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "zerodim/logval.hpp"
#include "zerodim/mpoly.hpp"

namespace zerodim {

// Degree/height record of an input system: n, s, the d_j and h_j, and the
// distinguished index whose polynomial plays the special role in the product
// bounds. Non-distinguished degrees are used in descending order.
struct SystemProfile {
    int n = 0;
    int s = 0;
    std::vector<long> degs;
    std::vector<LogVal> heights;
    int distinguished = 0;  // 0-based
    std::optional<long> known_degree;        // deg(V), when available
    std::optional<long> known_basis_degree;  // delta = deg(B), when available

    bool underdetermined() const { return s < n; }

    std::vector<long> sorted_other_degs() const {
        std::vector<long> v;
        for (int j = 0; j < s; ++j)
            if (j != distinguished) v.push_back(degs[j]);
        std::sort(v.rbegin(), v.rend());
        return v;
    }

    // d := d_1, the largest non-distinguished degree (1 when s = 1).
    long d_other() const {
        auto v = sorted_other_degs();
        return v.empty() ? 1 : v[0];
    }

    // h := max of the non-distinguished heights (exact 0 when s = 1).
    LogVal h_other() const {
        LogVal h = LogVal::zero();
        bool any = false;
        for (int j = 0; j < s; ++j) {
            if (j == distinguished) continue;
            h = any ? lv_max(h, heights[j]) : heights[j];
            any = true;
        }
        return h;
    }

    // Uniform d := max of all degrees, h := max of all heights.
    long d_max() const { return *std::max_element(degs.begin(), degs.end()); }
    LogVal h_max() const {
        LogVal h = heights[0];
        for (int j = 1; j < s; ++j) h = lv_max(h, heights[j]);
        return h;
    }

    long ds() const { return degs[distinguished]; }
    const LogVal& hs() const { return heights[distinguished]; }
    long r() const { return std::min<long>(s - 1, n); }
};

}  // namespace zerodim

#endif
