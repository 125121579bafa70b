#include "fslab/certificates.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fslab/errors.hpp"
#include "fslab/graph_algos.hpp"

namespace fslab {

namespace {

Graph small_side_bipartite(int k, int n) {
    return build_named(NamedGraphSpec::complete_bipartite(k, n - k));
}

bool is_small(int token, int k) { return token < k; }

int cycle_index(const std::vector<int>& cycle, int v) {
    auto it = std::find(cycle.begin(), cycle.end(), v);
    return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

bool on_cycle(const std::vector<int>& cycle, int v) { return cycle_index(cycle, v) >= 0; }

bool cycle_adjacent(const std::vector<int>& cycle, int a, int b) {
    int r = static_cast<int>(cycle.size());
    int ia = cycle_index(cycle, a);
    if (ia < 0) return false;
    return cycle[(ia + 1) % r] == b || cycle[(ia + r - 1) % r] == b;
}

std::array<int, 2> cycle_neighbors(const std::vector<int>& cycle, int v) {
    int r = static_cast<int>(cycle.size());
    int i = cycle_index(cycle, v);
    if (i < 0) throw CertificateError("cycle_neighbors: vertex not on cycle");
    return {cycle[(i + r - 1) % r], cycle[(i + 1) % r]};
}

// Rotates/reflects so that the result starts a, b and walks the cycle.
std::vector<int> orient_cycle(const std::vector<int>& cycle, int a, int b) {
    int r = static_cast<int>(cycle.size());
    int ia = cycle_index(cycle, a);
    if (ia < 0) throw CertificateError("orient_cycle: vertex not on cycle");
    int dir;
    if (cycle[(ia + 1) % r] == b)
        dir = 1;
    else if (cycle[(ia + r - 1) % r] == b)
        dir = -1;
    else
        throw CertificateError("orient_cycle: endpoints not cycle-adjacent");
    std::vector<int> out(r);
    for (int i = 0; i < r; ++i) out[i] = cycle[((ia + dir * i) % r + r) % r];
    return out;
}

// Exchanges the two small tokens sitting on oriented[0], oriented[1] of an
// odd cycle whose remaining vertices all hold big tokens, restoring every
// other token. t*(t-2) moves.
SwapSequence rotation_exchange(const std::vector<int>& c) {
    int t = static_cast<int>(c.size());
    if (t < 3 || t % 2 == 0) throw CertificateError("rotation_exchange: even or degenerate cycle");
    SwapSequence seq;
    for (int rep = 0; rep < t - 2; ++rep) {
        for (int i = 1; i + 1 < t; ++i) seq.push(c[i], c[i + 1]);
        seq.push(c[0], c[1]);
        seq.push(c[t - 1], c[0]);
    }
    return seq;
}

// Shortest path from a vertex of `from` to a vertex of `to`, interior
// avoiding both sets and every banned vertex. Deterministic.
std::optional<std::vector<int>> path_between(const Graph& g, const std::vector<int>& from,
                                             const std::vector<int>& to,
                                             const std::vector<char>& banned) {
    int n = g.order();
    std::vector<char> target(n, 0), blocked = banned;
    blocked.resize(n, 0);
    for (int v : to) target[v] = 1;
    std::vector<int> parent(n, -1), sources = from;
    std::sort(sources.begin(), sources.end());
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    for (int s : sources) {
        if (seen[s]) continue;
        seen[s] = 1;
        q.push(s);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (seen[w] || blocked[w]) continue;
            if (target[w]) {
                std::vector<int> path{w, v};
                while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            seen[w] = 1;
            parent[w] = v;
            q.push(w);
        }
    }
    return std::nullopt;
}

std::string describe_instance(const Graph& x, const Bijection& sigma) {
    std::ostringstream os;
    os << "graph6=" << to_graph6(x) << " sigma_rank=" << rank_perm(sigma);
    return os.str();
}

// ---------------------------------------------------------------- k = 2 ----

constexpr int kMaxDepth = 64;

SwapSequence small_core(const Graph& x, const std::vector<int>& C, const Bijection& sigma,
                        int depth) {
    if (depth > kMaxDepth) throw CertificateError("small-side recursion exceeded depth bound");
    int p0 = position_of(sigma, 0);
    int p1 = position_of(sigma, 1);
    if (!x.has_edge(p0, p1)) throw CertificateError("small-side: token positions not adjacent");
    bool in0 = on_cycle(C, p0), in1 = on_cycle(C, p1);

    if (in0 && in1) {
        // A shortest odd cycle is chordless, so the tokens sit on a cycle edge.
        return rotation_exchange(orient_cycle(C, p0, p1));
    }
    if (in0 || in1) {
        int ps = in0 ? p0 : p1;  // on the cycle
        int q = in0 ? p1 : p0;   // off the cycle
        auto nb = cycle_neighbors(C, ps);
        int c = std::min(nb[0], nb[1]);
        SwapSequence prep;
        prep.push(ps, c);
        prep.push(q, ps);
        Bijection tau = apply_sequence(sigma, prep);
        SwapSequence seq = prep;
        seq.append(small_core(x, C, tau, depth + 1));
        seq.append(prep.reversed());
        return seq;
    }
    // Neither token on the cycle: walk the pair to it.
    auto path = path_between(x, {p0, p1}, C, std::vector<char>(x.order(), 0));
    if (!path) throw CertificateError("small-side: cycle unreachable from token pair");
    const auto& P = *path;
    int len = static_cast<int>(P.size());
    int x1 = P[0];
    int x0 = (x1 == p0) ? p1 : p0;
    SwapSequence prep;
    for (int i = 0; i + 1 < len; ++i) prep.push(P[i], P[i + 1]);
    prep.push(x0, x1);
    for (int i = 0; i + 2 < len; ++i) prep.push(P[i], P[i + 1]);
    Bijection tau = apply_sequence(sigma, prep);
    SwapSequence seq = prep;
    seq.append(small_core(x, C, tau, depth + 1));
    seq.append(prep.reversed());
    return seq;
}

SwapSequence big_core(const Graph& x, const Graph& y, const std::vector<int>& OC,
                      const Bijection& sigma, int u, int v, int depth);

// Common-neighbor dance: both small tokens adjacent to m in {pu,pv}, m2 the
// other big-pair position. Returns a sequence exchanging u and v.
SwapSequence big_dance(const Graph& x, const std::vector<int>& OC, const Bijection& sigma, int ps,
                       int pt, int m, int m2, int depth) {
    SwapSequence seq;
    seq.push(ps, m);
    seq.push(m, m2);
    seq.push(pt, m);
    Bijection tau = apply_sequence(sigma, seq);
    seq.append(small_core(x, OC, tau, depth + 1));
    seq.push(ps, m);
    seq.push(m2, m);
    seq.push(pt, m);
    return seq;
}

SwapSequence big_core(const Graph& x, const Graph& y, const std::vector<int>& OC,
                      const Bijection& sigma, int u, int v, int depth) {
    if (depth > kMaxDepth) throw CertificateError("big-side recursion exceeded depth bound");
    int pu = position_of(sigma, u), pv = position_of(sigma, v);
    if (!x.has_edge(pu, pv)) throw CertificateError("big-side: token positions not adjacent");
    int p0 = position_of(sigma, 0), p1 = position_of(sigma, 1);

    auto pair_neighbors = [&](int p) {
        std::vector<int> m;
        if (x.has_edge(p, pu)) m.push_back(pu);
        if (x.has_edge(p, pv)) m.push_back(pv);
        return m;
    };
    auto conjugate = [&](const SwapSequence& prep) {
        Bijection tau = apply_sequence(sigma, prep);
        return transfer_certificate(sigma, u, v, prep, big_core(x, y, OC, tau, u, v, depth + 1));
    };

    std::vector<int> m0 = pair_neighbors(p0), m1 = pair_neighbors(p1);

    if (m0.empty() && m1.empty()) {
        // Walk the nearer small token next to the big pair.
        auto path = path_between(x, {p0, p1}, {pu, pv}, std::vector<char>(x.order(), 0));
        if (!path) throw CertificateError("big-side: pair unreachable from small tokens");
        SwapSequence prep;
        for (int i = 0; i + 2 < static_cast<int>(path->size()); ++i)
            prep.push((*path)[i], (*path)[i + 1]);
        return conjugate(prep);
    }
    if (m0.empty() || m1.empty()) {
        int pa = m0.empty() ? p1 : p0;  // already attached
        int pb = m0.empty() ? p0 : p1;
        if (!x.has_edge(pb, pa)) {
            auto path = path_between(x, {pb}, {pu, pv, pa}, std::vector<char>(x.order(), 0));
            if (!path) throw CertificateError("big-side: second token cannot attach");
            SwapSequence prep;
            for (int i = 0; i + 2 < static_cast<int>(path->size()); ++i)
                prep.push((*path)[i], (*path)[i + 1]);
            return conjugate(prep);
        }
        // pb is attached only through the other small token.
        int md = pair_neighbors(pa)[0];
        int mo = (md == pu) ? pv : pu;
        SwapSequence s0;
        s0.push(pa, md);
        s0.push(md, mo);
        Bijection tau = apply_sequence(sigma, s0);
        SwapSequence seq = s0;
        seq.append(big_core(x, y, OC, tau, u, v, depth + 1));
        seq.append(s0.reversed());
        return seq;
    }

    // Both small tokens attached to the big pair.
    for (int m : {pu, pv}) {
        bool c0 = std::find(m0.begin(), m0.end(), m) != m0.end();
        bool c1 = std::find(m1.begin(), m1.end(), m) != m1.end();
        if (c0 && c1) return big_dance(x, OC, sigma, p0, p1, m, m == pu ? pv : pu, depth);
    }

    // No common neighbor: each small attaches to exactly one pair position.
    int mA = m0[0], mB = m1[0];
    auto cyc = shortest_cycle_through_edge(x, pu, pv);
    if (!cyc) throw CertificateError("big-side: pair edge lies on no cycle");
    const std::vector<int>& C = *cyc;  // runs pu ... pv
    int r = static_cast<int>(C.size());
    bool on0 = on_cycle(C, p0), on1 = on_cycle(C, p1);

    if (on0 != on1) {
        int p_on = on0 ? p0 : p1;
        int q = on0 ? p1 : p0;
        int m_on = on0 ? mA : mB;
        int m_off = (m_on == pu) ? pv : pu;
        std::vector<int> oc = (C[0] == m_on) ? C : std::vector<int>(C.rbegin(), C.rend());
        if (oc[1] != p_on)
            throw CertificateError("big-side: on-cycle token not at the forced slot");
        if (r < 4) throw CertificateError("big-side: triangle slipped past the common case");
        SwapSequence walk;
        for (int i = 1; i + 2 < r; ++i) walk.push(oc[i], oc[i + 1]);
        Bijection tau = apply_sequence(sigma, walk);
        SwapSequence seq = walk;
        seq.append(big_dance(x, OC, tau, oc[r - 2], q, oc[r - 1], oc[0], depth));
        seq.append(walk.reversed());
        return seq;
    }

    if (!on0 && !on1) {
        int aX = (mA == pu) ? C[1] : C[r - 2];  // cycle neighbor of mA besides mB
        SwapSequence s;
        s.push(p1, mB);
        s.push(mA, mB);
        s.push(mA, aX);
        s.push(p0, mA);
        s.push(mA, mB);
        s.push(p1, mB);
        Bijection tau = apply_sequence(sigma, s);
        SwapSequence seq = s;
        seq.append(big_core(x, y, OC, tau, u, v, depth + 1));
        seq.append(s.reversed());
        return seq;
    }

    // Both small tokens on the cycle: relocate the pattern next to an
    // external vertex, then hand off to the off-cycle subcase.
    int c0 = -1;
    for (int w = 0; w < x.order() && c0 < 0; ++w) {
        if (on_cycle(C, w)) continue;
        for (int nb : x.neighbors(w))
            if (on_cycle(C, nb)) {
                c0 = w;
                break;
            }
    }
    if (c0 < 0) throw CertificateError("big-side: cycle has no external attachment");
    int cstar = -1;
    for (int nb : x.neighbors(c0))
        if (on_cycle(C, nb)) {
            cstar = nb;
            break;
        }
    auto goal = [&](const Bijection& s) {
        int tc = s[cstar];
        if (tc != u && tc != v) return false;
        int other = (tc == u) ? v : u;
        auto nb = cycle_neighbors(C, cstar);
        for (int flip = 0; flip < 2; ++flip) {
            int wB = flip ? nb[1] : nb[0];
            int wS = flip ? nb[0] : nb[1];
            if (s[wB] != other || s[wS] >= 2) continue;
            int ps2 = position_of(s, 1 - s[wS]);
            if (ps2 != cstar && cycle_adjacent(C, ps2, wB)) return true;
        }
        return false;
    };
    SwapSequence nav = cycle_navigate(x, y, C, sigma, goal);
    Bijection eta = apply_sequence(sigma, nav);
    auto nb = cycle_neighbors(C, cstar);
    int wB = (eta[nb[0]] == u || eta[nb[0]] == v) ? nb[0] : nb[1];
    int wS = (wB == nb[0]) ? nb[1] : nb[0];
    if (eta[wS] >= 2 || position_of(eta, 1 - eta[wS]) == cstar ||
        !cycle_adjacent(C, position_of(eta, 1 - eta[wS]), wB))
        throw CertificateError("big-side: navigation landed off target");
    int pb2 = position_of(eta, 1 - eta[wS]);
    SwapSequence s;
    s.push(pb2, wB);
    s.push(cstar, wB);
    s.push(cstar, c0);
    s.push(wS, cstar);
    s.push(cstar, wB);
    s.push(pb2, wB);
    Bijection tau = apply_sequence(eta, s);
    SwapSequence seq = nav;
    seq.append(s);
    seq.append(big_core(x, y, OC, tau, u, v, depth + 1));
    seq.append(s.reversed());
    seq.append(nav.reversed());
    return seq;
}

// ------------------------------------------------------------- general k ---

SwapSequence k_core(const Graph& x, const Graph& y, int k, const std::vector<int>& C,
                    const Bijection& sigma, int s0, int s1, int depth) {
    if (depth > kMaxDepth) throw CertificateError("k-side recursion exceeded depth bound");
    int n = x.order();
    int p0 = position_of(sigma, s0), p1 = position_of(sigma, s1);
    if (!x.has_edge(p0, p1)) throw CertificateError("k-side: token positions not adjacent");

    std::vector<char> inC(n, 0);
    for (int c : C) inC[c] = 1;
    std::vector<int> L, M;  // small-holding positions on / off the cycle
    for (int p = 0; p < n; ++p)
        if (is_small(sigma[p], k)) (inC[p] ? L : M).push_back(p);
    int bigs_on = static_cast<int>(C.size()) - static_cast<int>(L.size());
    bool in0 = inC[p0], in1 = inC[p1];

    auto navigate = [&](const Bijection& from, const GoalPredicate& goal) {
        return cycle_navigate(x, y, C, from, goal);
    };

    if (in0 && in1) {
        if (!cycle_adjacent(C, p0, p1))
            throw CertificateError("k-side: chordless cycle violated by token pair");
        if (L.size() == 2) return rotation_exchange(orient_cycle(C, p0, p1));

        if (bigs_on >= 1) {
            int c0 = -1, cstar = -1;
            for (int w = 0; w < n && c0 < 0; ++w) {
                if (inC[w] || is_small(sigma[w], k)) continue;
                for (int nb : x.neighbors(w))
                    if (inC[nb]) {
                        c0 = w;
                        cstar = nb;
                        break;
                    }
            }
            if (c0 < 0)
                throw CertificateError("k-side: no big-holding attachment to the odd cycle (" +
                                       describe_instance(x, sigma) + ")");
            auto goal = [&](const Bijection& s) {
                int t = s[cstar];
                return is_small(t, k) && t != s0 && t != s1 &&
                       cycle_adjacent(C, position_of(s, s0), position_of(s, s1));
            };
            SwapSequence nav = navigate(sigma, goal);
            Bijection eta = apply_sequence(sigma, nav);
            SwapSequence seq = nav;
            seq.push(c0, cstar);
            apply_swap(eta, c0, cstar);
            seq.append(k_core(x, y, k, C, eta, s0, s1, depth + 1));
            seq.push(c0, cstar);
            seq.append(nav.reversed());
            return seq;
        }

        // Every cycle vertex holds a small token.
        for (int cs : C) {
            if (cs == p0 || cs == p1) continue;
            for (int w : x.neighbors(cs)) {
                if (inC[w] || is_small(sigma[w], k)) continue;
                SwapSequence seq;
                seq.push(w, cs);
                Bijection eta = apply_sequence(sigma, seq);
                seq.append(k_core(x, y, k, C, eta, s0, s1, depth + 1));
                seq.push(w, cs);
                return seq;
            }
        }
        // Attachments only at the exchanging pair itself: six-step shuffle.
        int cb0 = -1, cb1 = -1;
        for (int a : x.neighbors(p0)) {
            if (inC[a] || is_small(sigma[a], k)) continue;
            for (int b : x.neighbors(p1)) {
                if (b == a || inC[b] || is_small(sigma[b], k)) continue;
                cb0 = a;
                cb1 = b;
                break;
            }
            if (cb0 >= 0) break;
        }
        if (cb0 < 0)
            throw CertificateError(
                "k-side: saturated odd cycle with a single attachment vertex; "
                "no constructive route known (" +
                describe_instance(x, sigma) + ")");
        SwapSequence seq;
        Bijection cur = sigma;
        auto push_move = [&](int a, int b) {
            seq.push(a, b);
            apply_swap(cur, a, b);
        };
        push_move(p0, cb0);  // park s0 outside
        SwapSequence nav1 = navigate(cur, [&](const Bijection& s) {
            int t = s[p1];
            return is_small(t, k) && t != s0 && t != s1;
        });
        seq.append(nav1);
        cur = apply_sequence(cur, nav1);
        push_move(cb1, p1);  // evict the small now at p1
        SwapSequence nav2 = navigate(cur, [&](const Bijection& s) {
            return !is_small(s[p0], k) && cycle_adjacent(C, position_of(s, s1), p0);
        });
        seq.append(nav2);
        cur = apply_sequence(cur, nav2);
        push_move(cb0, p0);  // bring s0 back next to s1
        SwapSequence inner = k_core(x, y, k, C, cur, s0, s1, depth + 1);
        seq.append(inner);
        SwapSequence undo;
        undo.push(cb0, p0);
        undo.append(nav2.reversed());
        undo.push(cb1, p1);
        undo.append(nav1.reversed());
        undo.push(p0, cb0);
        seq.append(undo);
        return seq;
    }

    if (in0 || in1) {
        int s_on = in0 ? s0 : s1;
        int s_off = in0 ? s1 : s0;
        int q = position_of(sigma, s_off);
        if (bigs_on >= 1) {
            auto goal = [&](const Bijection& s) {
                int pon = position_of(s, s_on);
                for (int c1 : C)
                    if (x.has_edge(c1, q) && !is_small(s[c1], k) && cycle_adjacent(C, pon, c1))
                        return true;
                return false;
            };
            SwapSequence nav = navigate(sigma, goal);
            Bijection eta = apply_sequence(sigma, nav);
            int c1 = -1;
            int pon = position_of(eta, s_on);
            for (int c : C)
                if (x.has_edge(c, q) && !is_small(eta[c], k) && cycle_adjacent(C, pon, c)) {
                    c1 = c;
                    break;
                }
            if (c1 < 0) throw CertificateError("k-side: navigation landed off target");
            SwapSequence seq = nav;
            seq.push(q, c1);
            apply_swap(eta, q, c1);
            seq.append(k_core(x, y, k, C, eta, s0, s1, depth + 1));
            seq.push(q, c1);
            seq.append(nav.reversed());
            return seq;
        }
        // Saturated cycle: evict some small away from the on-cycle token.
        int pon = position_of(sigma, s_on);
        for (int cs : C) {
            if (cs == pon) continue;
            for (int w : x.neighbors(cs)) {
                if (inC[w] || is_small(sigma[w], k)) continue;
                SwapSequence seq;
                seq.push(w, cs);
                Bijection eta = apply_sequence(sigma, seq);
                seq.append(k_core(x, y, k, C, eta, s0, s1, depth + 1));
                seq.push(w, cs);
                return seq;
            }
        }
        throw CertificateError("k-side: saturated cycle with no external big vertex (" +
                               describe_instance(x, sigma) + ")");
    }

    // Neither token on the cycle.
    if (bigs_on >= 1) {
        std::vector<char> banned(n, 0);
        for (int p : L) banned[p] = 1;
        for (int p : M)
            if (p != p0 && p != p1) banned[p] = 1;
        std::vector<int> targets;
        for (int c : C)
            if (!is_small(sigma[c], k)) targets.push_back(c);
        auto path = path_between(x, {p0, p1}, targets, banned);
        if (!path)
            throw CertificateError("k-side: cycle unreachable avoiding parked smalls (" +
                                   describe_instance(x, sigma) + ")");
        const auto& P = *path;
        int len = static_cast<int>(P.size());
        int x1 = P[0];
        int x0 = (x1 == p0) ? p1 : p0;
        SwapSequence prep;
        for (int i = 0; i + 1 < len; ++i) prep.push(P[i], P[i + 1]);
        prep.push(x0, x1);
        for (int i = 0; i + 2 < len; ++i) prep.push(P[i], P[i + 1]);
        Bijection tau = apply_sequence(sigma, prep);
        SwapSequence seq = prep;
        seq.append(k_core(x, y, k, C, tau, s0, s1, depth + 1));
        seq.append(prep.reversed());
        return seq;
    }
    for (int cs : C) {
        for (int w : x.neighbors(cs)) {
            if (inC[w] || is_small(sigma[w], k)) continue;
            SwapSequence seq;
            seq.push(w, cs);
            Bijection eta = apply_sequence(sigma, seq);
            seq.append(k_core(x, y, k, C, eta, s0, s1, depth + 1));
            seq.push(w, cs);
            return seq;
        }
    }
    throw CertificateError("k-side: saturated cycle with no external big vertex (" +
                           describe_instance(x, sigma) + ")");
}

void require_perm(const Bijection& sigma, int n, const char* who) {
    if (static_cast<int>(sigma.size()) != n || !is_permutation(sigma))
        throw std::invalid_argument(std::string(who) + ": sigma is not a bijection on V(X)");
}

}  // namespace

ValidationResult validate_sequence(const Graph& x, const Graph& y, const Bijection& start,
                                   const SwapSequence& seq, const Bijection& expected) {
    ValidationResult res;
    if (x.order() != y.order()) {
        res.message = "graph orders differ";
        return res;
    }
    int n = x.order();
    if (static_cast<int>(start.size()) != n || !is_permutation(start) ||
        static_cast<int>(expected.size()) != n || !is_permutation(expected)) {
        res.message = "endpoints are not bijections";
        return res;
    }
    Bijection cur = start;
    for (int i = 0; i < seq.size(); ++i) {
        auto [a, b] = seq.moves[i];
        if (a < 0 || a >= n || b < 0 || b >= n || !swap_is_friendly(x, y, cur, a, b)) {
            res.first_illegal_move = i;
            res.message = "illegal move at index " + std::to_string(i);
            return res;
        }
        apply_swap(cur, a, b);
    }
    if (cur != expected) {
        res.message = "endpoint mismatch";
        return res;
    }
    res.ok = true;
    return res;
}

SwapSequence odd_cycle_exchange(int t, const Bijection& sigma) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("odd_cycle_exchange: t must be odd >= 3");
    require_perm(sigma, t, "odd_cycle_exchange");
    int p0 = position_of(sigma, 0), p1 = position_of(sigma, 1);
    if ((p0 + 1) % t != p1 && (p1 + 1) % t != p0)
        throw std::invalid_argument("odd_cycle_exchange: tokens 0 and 1 must be cycle-adjacent");
    std::vector<int> ring(t);
    for (int i = 0; i < t; ++i) ring[i] = i;
    return rotation_exchange(orient_cycle(ring, p0, p1));
}

SwapSequence exchange_small_side_k2(const Graph& x, const Bijection& sigma) {
    int n = x.order();
    if (n < 5) throw std::invalid_argument("exchange_small_side_k2: requires n >= 5");
    require_perm(sigma, n, "exchange_small_side_k2");
    if (!is_connected(x)) throw std::invalid_argument("exchange_small_side_k2: X must be connected");
    auto C = shortest_odd_cycle(x);
    if (!C) throw std::invalid_argument("exchange_small_side_k2: X must be non-bipartite");
    if (!x.has_edge(position_of(sigma, 0), position_of(sigma, 1)))
        throw std::invalid_argument("exchange_small_side_k2: token positions must be adjacent");
    return small_core(x, *C, sigma, 0);
}

SwapSequence exchange_big_side_k2(const Graph& x, const Bijection& sigma, int u, int v) {
    int n = x.order();
    if (n < 5) throw std::invalid_argument("exchange_big_side_k2: requires n >= 5");
    require_perm(sigma, n, "exchange_big_side_k2");
    if (u < 2 || u >= n || v < 2 || v >= n || u == v)
        throw std::invalid_argument("exchange_big_side_k2: u, v must be distinct big tokens");
    if (!is_connected(x)) throw std::invalid_argument("exchange_big_side_k2: X must be connected");
    auto C = shortest_odd_cycle(x);
    if (!C) throw std::invalid_argument("exchange_big_side_k2: X must be non-bipartite");
    if (is_cycle_graph(x))
        throw std::invalid_argument("exchange_big_side_k2: X must not be a cycle");
    if (find_nontrivial_k_bridge(x, 2))
        throw std::invalid_argument("exchange_big_side_k2: X has a non-trivial cut edge");
    if (!x.has_edge(position_of(sigma, u), position_of(sigma, v)))
        throw std::invalid_argument("exchange_big_side_k2: token positions must be adjacent");
    Graph y = small_side_bipartite(2, n);
    return big_core(x, y, *C, sigma, u, v, 0);
}

SwapSequence exchange_k_general(const Graph& x, int k, const Bijection& sigma, int u) {
    int n = x.order();
    if (k < 3 || n < 2 * k)
        throw std::invalid_argument("exchange_k_general: requires n >= 2k >= 6");
    require_perm(sigma, n, "exchange_k_general");
    if (u < 1 || u >= k)
        throw std::invalid_argument("exchange_k_general: u must be a small token other than 0");
    auto C = shortest_odd_cycle(x);
    if (!C) throw std::invalid_argument("exchange_k_general: X must be non-bipartite");
    if (is_cycle_graph(x)) throw std::invalid_argument("exchange_k_general: X must not be a cycle");
    if (vertex_connectivity(x) < k - 1)
        throw std::invalid_argument("exchange_k_general: X must be (k-1)-connected");
    if (!x.has_edge(position_of(sigma, 0), position_of(sigma, u)))
        throw std::invalid_argument("exchange_k_general: token positions must be adjacent");
    Graph y = small_side_bipartite(k, n);
    return k_core(x, y, k, *C, sigma, 0, u, 0);
}

SwapSequence cycle_navigate(const Graph& x, const Graph& y, const std::vector<int>& cycle,
                            const Bijection& sigma, const GoalPredicate& goal) {
    int n = x.order();
    require_perm(sigma, n, "cycle_navigate");
    int r = static_cast<int>(cycle.size());
    if (r < 3) throw std::invalid_argument("cycle_navigate: cycle too short");
    std::vector<std::pair<int, int>> moves;
    for (int i = 0; i < r; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % r];
        if (!x.has_edge(a, b))
            throw std::invalid_argument("cycle_navigate: vertex list is not a cycle of X");
        moves.emplace_back(a, b);
    }
    if (goal(sigma)) return {};

    uint64_t start = rank_perm(sigma);
    std::unordered_map<uint64_t, std::pair<uint64_t, int>> parent;
    parent[start] = {start, -1};
    std::queue<uint64_t> q;
    q.push(start);
    while (!q.empty()) {
        uint64_t rk = q.front();
        q.pop();
        Bijection cur = unrank_perm(rk, n);
        for (int e = 0; e < r; ++e) {
            auto [a, b] = moves[e];
            if (!swap_is_friendly(x, y, cur, a, b)) continue;
            apply_swap(cur, a, b);
            uint64_t rk2 = rank_perm(cur);
            if (!parent.count(rk2)) {
                parent[rk2] = {rk, e};
                if (goal(cur)) {
                    SwapSequence seq;
                    uint64_t at = rk2;
                    while (at != start) {
                        auto [prev, edge] = parent[at];
                        seq.push(moves[edge].first, moves[edge].second);
                        at = prev;
                    }
                    return seq.reversed();
                }
                q.push(rk2);
            }
            apply_swap(cur, a, b);
        }
    }
    throw CertificateError("cycle_navigate: goal unreachable in the cycle-restricted component");
}

SwapSequence transfer_certificate(const Bijection& start, int u, int v, const SwapSequence& prep,
                                  const SwapSequence& cert) {
    int pu = position_of(start, u), pv = position_of(start, v);
    for (auto [a, b] : prep.moves)
        if (a == pu || b == pu || a == pv || b == pv)
            throw std::invalid_argument("transfer_certificate: prep disturbs a protected token");
    SwapSequence seq = prep;
    seq.append(cert);
    seq.append(prep.reversed());
    return seq;
}

}  // namespace fslab
