// Copyright 2026 tcslab contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tcs/blossom.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace tcs {

namespace {

// Primal-dual maximum-weight matching with blossoms, 1-indexed, dense.
// Vertices are 1..n; shrunken blossoms take ids n+1..n_x. Duals are kept
// integral by doubling edge weights inside the slack computation.
class Matcher {
   public:
    explicit Matcher(int32_t n) : n_(n), cap_(2 * n + 2) {
        g_.assign(static_cast<size_t>(cap_) * cap_, Edge{});
        for (int v = 1; v <= cap_ - 1; v++) {
            for (int u = 1; u <= cap_ - 1; u++) {
                at(u, v) = Edge{u, v, 0};
            }
        }
        match_.assign(static_cast<size_t>(cap_), 0);
        slack_.assign(static_cast<size_t>(cap_), 0);
        st_.assign(static_cast<size_t>(cap_), 0);
        pa_.assign(static_cast<size_t>(cap_), 0);
        s_.assign(static_cast<size_t>(cap_), -1);
        vis_.assign(static_cast<size_t>(cap_), 0);
        lab_.assign(static_cast<size_t>(cap_), 0);
        flower_.assign(static_cast<size_t>(cap_), {});
        flower_from_.assign(static_cast<size_t>(cap_) * cap_, 0);
    }

    void set_weight(int u, int v, int64_t w) {
        at(u, v).w = w;
        at(v, u).w = w;
    }

    // Runs the algorithm to a maximum-weight matching; with weights made
    // uniformly large this is a maximum-weight perfect matching.
    void solve() {
        n_x_ = n_;
        for (int u = 0; u <= n_; u++) {
            st_[static_cast<size_t>(u)] = u;
            flower_[static_cast<size_t>(u)].clear();
        }
        int64_t w_max = 0;
        for (int u = 1; u <= n_; u++) {
            for (int v = 1; v <= n_; v++) {
                ff(u, v) = (u == v ? u : 0);
                w_max = std::max(w_max, at(u, v).w);
            }
        }
        for (int u = 1; u <= n_; u++) lab_[static_cast<size_t>(u)] = w_max;
        while (matching()) {
        }
    }

    int matched_with(int u) const { return match_[static_cast<size_t>(u)]; }

   private:
    struct Edge {
        int u = 0, v = 0;
        int64_t w = 0;
    };

    int32_t n_;
    int cap_;
    int n_x_ = 0;
    std::vector<Edge> g_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<int64_t> lab_;
    std::vector<std::vector<int>> flower_;
    std::vector<int> flower_from_;
    std::deque<int> q_;

    Edge& at(int u, int v) { return g_[static_cast<size_t>(u) * cap_ + v]; }
    const Edge& at(int u, int v) const { return g_[static_cast<size_t>(u) * cap_ + v]; }
    int& ff(int b, int x) { return flower_from_[static_cast<size_t>(b) * cap_ + x]; }

    int64_t e_delta(const Edge& e) const {
        return lab_[static_cast<size_t>(e.u)] + lab_[static_cast<size_t>(e.v)] - 2 * e.w;
    }

    void update_slack(int u, int x) {
        if (!slack_[static_cast<size_t>(x)] ||
            e_delta(at(u, x)) < e_delta(at(slack_[static_cast<size_t>(x)], x))) {
            slack_[static_cast<size_t>(x)] = u;
        }
    }

    void set_slack(int x) {
        slack_[static_cast<size_t>(x)] = 0;
        for (int u = 1; u <= n_; u++) {
            if (at(u, x).w > 0 && st_[static_cast<size_t>(u)] != x &&
                s_[static_cast<size_t>(st_[static_cast<size_t>(u)])] == 0) {
                update_slack(u, x);
            }
        }
    }

    void q_push(int x) {
        if (x <= n_) {
            q_.push_back(x);
            return;
        }
        for (int y : flower_[static_cast<size_t>(x)]) q_push(y);
    }

    void set_st(int x, int b) {
        st_[static_cast<size_t>(x)] = b;
        if (x <= n_) return;
        for (int y : flower_[static_cast<size_t>(x)]) set_st(y, b);
    }

    // Position of the flower member xr inside blossom b, rotated so the
    // even-position split keeps matched pairs intact.
    int get_pr(int b, int xr) {
        auto& fl = flower_[static_cast<size_t>(b)];
        int pr = static_cast<int>(std::find(fl.begin(), fl.end(), xr) - fl.begin());
        if (pr % 2 == 1) {
            std::reverse(fl.begin() + 1, fl.end());
            return static_cast<int>(fl.size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[static_cast<size_t>(u)] = at(u, v).v;
        if (u <= n_) return;
        Edge e = at(u, v);
        int xr = ff(u, e.u);
        int pr = get_pr(u, xr);
        auto& fl = flower_[static_cast<size_t>(u)];
        for (int i = 0; i < pr; i++) set_match(fl[static_cast<size_t>(i)], fl[static_cast<size_t>(i ^ 1)]);
        set_match(xr, v);
        std::rotate(fl.begin(), fl.begin() + pr, fl.end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[static_cast<size_t>(match_[static_cast<size_t>(u)])];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[static_cast<size_t>(pa_[static_cast<size_t>(xnv)])]);
            u = st_[static_cast<size_t>(pa_[static_cast<size_t>(xnv)])];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        static thread_local int t = 0;
        for (++t; u || v; std::swap(u, v)) {
            if (!u) continue;
            if (vis_[static_cast<size_t>(u)] == t) return u;
            vis_[static_cast<size_t>(u)] = t;
            u = st_[static_cast<size_t>(match_[static_cast<size_t>(u)])];
            if (u) u = st_[static_cast<size_t>(pa_[static_cast<size_t>(u)])];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[static_cast<size_t>(b)]) b++;
        if (b > n_x_) n_x_++;
        if (b >= cap_) throw std::logic_error("blossom capacity exceeded");
        lab_[static_cast<size_t>(b)] = 0;
        s_[static_cast<size_t>(b)] = 0;
        match_[static_cast<size_t>(b)] = match_[static_cast<size_t>(lca)];
        auto& fl = flower_[static_cast<size_t>(b)];
        fl.clear();
        fl.push_back(lca);
        for (int x = u, y; x != lca; x = st_[static_cast<size_t>(pa_[static_cast<size_t>(y)])]) {
            fl.push_back(x);
            y = st_[static_cast<size_t>(match_[static_cast<size_t>(x)])];
            fl.push_back(y);
            q_push(y);
        }
        std::reverse(fl.begin() + 1, fl.end());
        for (int x = v, y; x != lca; x = st_[static_cast<size_t>(pa_[static_cast<size_t>(y)])]) {
            fl.push_back(x);
            y = st_[static_cast<size_t>(match_[static_cast<size_t>(x)])];
            fl.push_back(y);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; x++) {
            at(b, x).w = 0;
            at(x, b).w = 0;
        }
        for (int x = 1; x <= n_; x++) ff(b, x) = 0;
        for (int xs : fl) {
            for (int x = 1; x <= n_x_; x++) {
                if (at(b, x).w == 0 || e_delta(at(xs, x)) < e_delta(at(b, x))) {
                    at(b, x) = at(xs, x);
                    at(x, b) = at(x, xs);
                }
            }
            for (int x = 1; x <= n_; x++) {
                if (ff(xs, x)) ff(b, x) = xs;
            }
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        auto& fl = flower_[static_cast<size_t>(b)];
        for (int member : fl) set_st(member, member);
        int xr = ff(b, at(b, pa_[static_cast<size_t>(b)]).u);
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = fl[static_cast<size_t>(i)];
            int xns = fl[static_cast<size_t>(i + 1)];
            pa_[static_cast<size_t>(xs)] = at(xns, xs).u;
            s_[static_cast<size_t>(xs)] = 1;
            s_[static_cast<size_t>(xns)] = 0;
            slack_[static_cast<size_t>(xs)] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[static_cast<size_t>(xr)] = 1;
        pa_[static_cast<size_t>(xr)] = pa_[static_cast<size_t>(b)];
        for (size_t i = static_cast<size_t>(pr) + 1; i < fl.size(); i++) {
            int xs = fl[i];
            s_[static_cast<size_t>(xs)] = -1;
            set_slack(xs);
        }
        st_[static_cast<size_t>(b)] = 0;
    }

    bool on_found_edge(const Edge& e) {
        int u = st_[static_cast<size_t>(e.u)];
        int v = st_[static_cast<size_t>(e.v)];
        if (s_[static_cast<size_t>(v)] == -1) {
            pa_[static_cast<size_t>(v)] = e.u;
            s_[static_cast<size_t>(v)] = 1;
            int nu = st_[static_cast<size_t>(match_[static_cast<size_t>(v)])];
            slack_[static_cast<size_t>(v)] = 0;
            slack_[static_cast<size_t>(nu)] = 0;
            s_[static_cast<size_t>(nu)] = 0;
            q_push(nu);
        } else if (s_[static_cast<size_t>(v)] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool matching() {
        std::fill(s_.begin(), s_.end(), -1);
        std::fill(slack_.begin(), slack_.end(), 0);
        q_.clear();
        for (int x = 1; x <= n_x_; x++) {
            if (st_[static_cast<size_t>(x)] == x && !match_[static_cast<size_t>(x)]) {
                pa_[static_cast<size_t>(x)] = 0;
                s_[static_cast<size_t>(x)] = 0;
                q_push(x);
            }
        }
        if (q_.empty()) return false;
        for (;;) {
            while (!q_.empty()) {
                int u = q_.front();
                q_.pop_front();
                if (s_[static_cast<size_t>(st_[static_cast<size_t>(u)])] == 1) continue;
                for (int v = 1; v <= n_; v++) {
                    if (at(u, v).w > 0 && st_[static_cast<size_t>(u)] != st_[static_cast<size_t>(v)]) {
                        if (e_delta(at(u, v)) == 0) {
                            if (on_found_edge(at(u, v))) return true;
                        } else {
                            update_slack(u, st_[static_cast<size_t>(v)]);
                        }
                    }
                }
            }
            int64_t d = std::numeric_limits<int64_t>::max();
            for (int b = n_ + 1; b <= n_x_; b++) {
                if (st_[static_cast<size_t>(b)] == b && s_[static_cast<size_t>(b)] == 1) {
                    d = std::min(d, lab_[static_cast<size_t>(b)] / 2);
                }
            }
            for (int x = 1; x <= n_x_; x++) {
                if (st_[static_cast<size_t>(x)] == x && slack_[static_cast<size_t>(x)]) {
                    const Edge& e = at(slack_[static_cast<size_t>(x)], x);
                    if (s_[static_cast<size_t>(x)] == -1) {
                        d = std::min(d, e_delta(e));
                    } else if (s_[static_cast<size_t>(x)] == 0) {
                        d = std::min(d, e_delta(e) / 2);
                    }
                }
            }
            if (d == std::numeric_limits<int64_t>::max() || d < 0) {
                throw std::logic_error("matching: no perfect matching reachable");
            }
            for (int u = 1; u <= n_; u++) {
                int top = st_[static_cast<size_t>(u)];
                if (s_[static_cast<size_t>(top)] == 0) {
                    lab_[static_cast<size_t>(u)] -= d;
                } else if (s_[static_cast<size_t>(top)] == 1) {
                    lab_[static_cast<size_t>(u)] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; b++) {
                if (st_[static_cast<size_t>(b)] == b) {
                    if (s_[static_cast<size_t>(b)] == 0) {
                        lab_[static_cast<size_t>(b)] += 2 * d;
                    } else if (s_[static_cast<size_t>(b)] == 1) {
                        lab_[static_cast<size_t>(b)] -= 2 * d;
                    }
                }
            }
            q_.clear();
            for (int x = 1; x <= n_x_; x++) {
                if (st_[static_cast<size_t>(x)] == x && slack_[static_cast<size_t>(x)] &&
                    st_[static_cast<size_t>(slack_[static_cast<size_t>(x)])] != x &&
                    e_delta(at(slack_[static_cast<size_t>(x)], x)) == 0) {
                    if (on_found_edge(at(slack_[static_cast<size_t>(x)], x))) return true;
                }
            }
            for (int b = n_ + 1; b <= n_x_; b++) {
                if (st_[static_cast<size_t>(b)] == b && s_[static_cast<size_t>(b)] == 1 &&
                    lab_[static_cast<size_t>(b)] == 0) {
                    expand_blossom(b);
                }
            }
        }
    }
};

}  // namespace

std::vector<int32_t> min_weight_perfect_matching(int32_t n, const std::vector<int64_t>& w) {
    if (n % 2 != 0) throw std::invalid_argument("perfect matching needs an even vertex count");
    std::vector<int32_t> mate(static_cast<size_t>(n), -1);
    if (n == 0) return mate;
    if (w.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
        throw std::invalid_argument("weight matrix size mismatch");
    }
    int64_t w_max = 1;
    for (int64_t x : w) {
        if (x < 0) throw std::invalid_argument("weights must be nonnegative");
        w_max = std::max(w_max, x);
    }
    // Maximize (C - w) with C large enough that cardinality dominates;
    // the template treats weight 0 as "no edge", so keep everything >= 1.
    int64_t big = w_max * n + 1;
    Matcher m(n);
    for (int32_t i = 0; i < n; i++) {
        for (int32_t j = i + 1; j < n; j++) {
            int64_t wij = w[static_cast<size_t>(i) * n + j];
            m.set_weight(i + 1, j + 1, big - wij);
        }
    }
    m.solve();
    for (int32_t i = 0; i < n; i++) {
        int p = m.matched_with(i + 1);
        if (p < 1 || p > n) throw std::logic_error("no perfect matching found");
        mate[static_cast<size_t>(i)] = p - 1;
    }
    for (int32_t i = 0; i < n; i++) {
        if (mate[static_cast<size_t>(mate[static_cast<size_t>(i)])] != i) {
            throw std::logic_error("matching is not an involution");
        }
    }
    return mate;
}

}  // namespace tcs
