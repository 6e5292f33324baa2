// Copyright 2026 surfmatch contributors
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

#include "surfmatch/blossom.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace surfmatch {

namespace {

// Maximum-weight matching with dual variables and blossom contraction.
// Vertices are 1..n; contracted blossoms occupy ids n+1..2n. Weights must
// be positive for present edges; weight 0 marks an absent edge. Because
// every dual starts at the maximum edge weight and S-vertex duals only
// shrink, a vertex is left exposed only when that is weight-optimal; the
// caller below arranges weights so the optimum is forced to be perfect.
struct MaxWeightMatcher {
    struct E {
        int32_t u = 0, v = 0;
        int64_t w = 0;
    };

    static constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

    int n = 0;    // original vertices
    int n_x = 0;  // highest id in use (blossom slots included)
    std::vector<std::vector<E>> g;  // dense, indexed [1..2n][1..2n]
    std::vector<int64_t> lab;       // duals; blossom duals stay even
    std::vector<int32_t> mate, slackv, st, pa, status, vis;
    std::vector<std::vector<int32_t>> flower;
    std::vector<std::vector<int32_t>> flower_from;  // [blossom][orig vertex]
    std::deque<int32_t> q;
    int32_t timestamp = 0;

    explicit MaxWeightMatcher(int n_in) : n(n_in), n_x(n_in) {
        const int cap = 2 * n + 1;
        g.assign(cap, std::vector<E>(cap));
        for (int u = 0; u < cap; ++u)
            for (int v = 0; v < cap; ++v)
                g[u][v] = E{static_cast<int32_t>(u), static_cast<int32_t>(v), 0};
        lab.assign(cap, 0);
        mate.assign(cap, 0);
        slackv.assign(cap, 0);
        st.assign(cap, 0);
        pa.assign(cap, 0);
        status.assign(cap, -1);
        vis.assign(cap, 0);
        flower.assign(cap, {});
        flower_from.assign(cap, std::vector<int32_t>(n + 1, 0));
        for (int u = 1; u <= n; ++u) {
            st[u] = u;
            flower_from[u][u] = u;
        }
    }

    void add_edge(int u, int v, int64_t w) {
        g[u][v].w = w;
        g[v][u].w = w;
    }

    int64_t slack_of(const E& e) const {
        return lab[e.u] + lab[e.v] - g[e.u][e.v].w * 2;
    }

    void update_slack(int u, int x) {
        if (!slackv[x] || slack_of(g[u][x]) < slack_of(g[slackv[x]][x])) {
            slackv[x] = u;
        }
    }

    void set_slack(int x) {
        slackv[x] = 0;
        for (int u = 1; u <= n; ++u) {
            if (g[u][x].w > 0 && st[u] != x && status[st[u]] == 0) {
                update_slack(u, x);
            }
        }
    }

    void q_push(int x) {
        if (x <= n) {
            q.push_back(x);
            return;
        }
        for (int sub : flower[x]) q_push(sub);
    }

    void set_st(int x, int b) {
        st[x] = b;
        if (x > n) {
            for (int sub : flower[x]) set_st(sub, b);
        }
    }

    // Position of sub-blossom xr inside b's cycle; reverses the cycle when
    // needed so the alternating structure from the base stays even.
    int get_pr(int b, int xr) {
        auto& f = flower[b];
        int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
        if (pr % 2 == 1) {
            std::reverse(f.begin() + 1, f.end());
            return static_cast<int>(f.size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        mate[u] = g[u][v].v;
        if (u <= n) return;
        E e = g[u][v];
        int xr = flower_from[u][e.u];
        int pr = get_pr(u, xr);
        for (int i = 0; i < pr; ++i) set_match(flower[u][i], flower[u][i ^ 1]);
        set_match(xr, v);
        std::rotate(flower[u].begin(), flower[u].begin() + pr, flower[u].end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st[mate[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st[pa[xnv]]);
            u = st[pa[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++timestamp; u || v; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis[u] == timestamp) return u;
            vis[u] = timestamp;
            u = st[mate[u]];
            if (u) u = st[pa[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n + 1;
        while (b <= n_x && st[b]) ++b;
        if (b > n_x) n_x = b;
        lab[b] = 0;
        status[b] = 0;
        mate[b] = mate[lca];
        flower[b].clear();
        flower[b].push_back(lca);
        for (int x = u, y; x != lca; x = st[pa[y]]) {
            flower[b].push_back(x);
            flower[b].push_back(y = st[mate[x]]);
            q_push(y);
        }
        std::reverse(flower[b].begin() + 1, flower[b].end());
        for (int x = v, y; x != lca; x = st[pa[y]]) {
            flower[b].push_back(x);
            flower[b].push_back(y = st[mate[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x; ++x) g[b][x].w = g[x][b].w = 0;
        for (int x = 1; x <= n; ++x) flower_from[b][x] = 0;
        for (int xs : flower[b]) {
            for (int x = 1; x <= n_x; ++x) {
                if (g[b][x].w == 0 || slack_of(g[xs][x]) < slack_of(g[b][x])) {
                    g[b][x] = g[xs][x];
                    g[x][b] = g[x][xs];
                }
            }
            for (int x = 1; x <= n; ++x) {
                if (flower_from[xs][x]) flower_from[b][x] = xs;
            }
        }
        set_slack(b);
    }

    void expand_blossom(int b) {  // lab[b] == 0, status[b] == 1
        for (int sub : flower[b]) set_st(sub, sub);
        int xr = flower_from[b][g[b][pa[b]].u];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower[b][i];
            int xns = flower[b][i + 1];
            pa[xs] = g[xns][xs].u;
            status[xs] = 1;
            status[xns] = 0;
            slackv[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        status[xr] = 1;
        pa[xr] = pa[b];
        for (int i = pr + 1; i < static_cast<int>(flower[b].size()); ++i) {
            status[flower[b][i]] = -1;
            set_slack(flower[b][i]);
        }
        st[b] = 0;
        flower[b].clear();
    }

    bool on_found_edge(const E& e) {
        int u = st[e.u], v = st[e.v];
        if (status[v] == -1) {
            pa[v] = e.u;
            status[v] = 1;
            int nu = st[mate[v]];
            slackv[v] = slackv[nu] = 0;
            status[nu] = 0;
            q_push(nu);
        } else if (status[v] == 0) {
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

    // One phase: grow alternating trees from every exposed top-level node
    // until an augmenting path is found or exposure becomes optimal.
    bool matching_phase() {
        std::fill(status.begin(), status.end(), -1);
        std::fill(slackv.begin(), slackv.end(), 0);
        q.clear();
        for (int x = 1; x <= n_x; ++x) {
            if (st[x] == x && !mate[x]) {
                pa[x] = 0;
                status[x] = 0;
                q_push(x);
            }
        }
        if (q.empty()) return false;
        for (;;) {
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                if (status[st[u]] != 0) continue;
                for (int v = 1; v <= n; ++v) {
                    if (g[u][v].w > 0 && st[u] != st[v]) {
                        if (slack_of(g[u][v]) == 0) {
                            if (on_found_edge(g[u][v])) return true;
                        } else {
                            update_slack(u, st[v]);
                        }
                    }
                }
            }
            int64_t delta = kInf;
            for (int b = n + 1; b <= n_x; ++b) {
                if (st[b] == b && status[b] == 1) {
                    delta = std::min(delta, lab[b] / 2);
                }
            }
            for (int x = 1; x <= n_x; ++x) {
                if (st[x] == x && slackv[x]) {
                    if (status[x] == -1) {
                        delta = std::min(delta, slack_of(g[slackv[x]][x]));
                    } else if (status[x] == 0) {
                        delta = std::min(delta, slack_of(g[slackv[x]][x]) / 2);
                    }
                }
            }
            for (int u = 1; u <= n; ++u) {
                if (status[st[u]] == 0) {
                    if (lab[u] <= delta) return false;  // exposure is optimal
                    lab[u] -= delta;
                } else if (status[st[u]] == 1) {
                    lab[u] += delta;
                }
            }
            for (int b = n + 1; b <= n_x; ++b) {
                if (st[b] == b && status[b] >= 0) {
                    lab[b] += status[b] == 0 ? 2 * delta : -2 * delta;
                }
            }
            q.clear();
            for (int x = 1; x <= n_x; ++x) {
                if (st[x] == x && slackv[x] && st[slackv[x]] != x &&
                    slack_of(g[slackv[x]][x]) == 0) {
                    if (on_found_edge(g[slackv[x]][x])) return true;
                }
            }
            for (int b = n + 1; b <= n_x; ++b) {
                if (st[b] == b && status[b] == 1 && lab[b] == 0) {
                    expand_blossom(b);
                }
            }
        }
    }

    void solve() {
        int64_t w_max = 0;
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v) w_max = std::max(w_max, g[u][v].w);
        for (int u = 1; u <= n; ++u) lab[u] = w_max;
        while (matching_phase()) {
        }
    }
};

}  // namespace

std::vector<int32_t> min_weight_perfect_matching(
    int n, const std::vector<int64_t>& weights) {
    if (n < 0 || weights.size() != static_cast<size_t>(n) * n) {
        throw std::invalid_argument("weight matrix must be n x n");
    }
    if (n % 2 != 0) {
        throw std::runtime_error("odd vertex count admits no perfect matching");
    }
    if (n == 0) return {};

    int64_t w_max = 0;
    for (int64_t w : weights) w_max = std::max(w_max, w);
    if (w_max > (int64_t{1} << 40)) {
        throw std::invalid_argument("edge weights too large");
    }
    // Shift so every present edge outweighs any saved cost: the maximum
    // matching is then perfect and minimizes the original total.
    const int64_t big = w_max * (n / 2) + 1;

    MaxWeightMatcher m(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int64_t w = weights[static_cast<size_t>(u) * n + v];
            int64_t w_t = weights[static_cast<size_t>(v) * n + u];
            if (w != w_t) {
                throw std::invalid_argument("weight matrix must be symmetric");
            }
            if (w >= 0) m.add_edge(u + 1, v + 1, big - w);
        }
    }
    m.solve();

    std::vector<int32_t> mate(n, -1);
    for (int u = 1; u <= n; ++u) {
        if (m.mate[u] == 0) {
            throw std::runtime_error("no perfect matching exists");
        }
        mate[u - 1] = m.mate[u] - 1;
    }
    for (int u = 0; u < n; ++u) {
        if (mate[u] < 0 || mate[u] >= n || mate[mate[u]] != u || mate[u] == u ||
            weights[static_cast<size_t>(u) * n + mate[u]] < 0) {
            throw std::runtime_error("matcher returned an invalid pairing");
        }
    }
    return mate;
}

}  // namespace surfmatch
