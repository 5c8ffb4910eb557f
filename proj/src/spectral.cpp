#include "tropolax/spectral.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace tropolax {

namespace {

struct Edge {
    int from;
    int to;
    Rational weight;
};

std::vector<Edge> finite_edges(const MaxPlusMatrix& a) {
    std::vector<Edge> edges;
    for (int i = a.lo(); i <= a.hi(); ++i)
        for (int j = a.lo(); j <= a.hi(); ++j)
            if (a.at(i, j).is_finite()) edges.push_back({i, j, a.at(i, j).value()});
    return edges;
}

// Kosaraju on an arbitrary node set; iterative so deep path graphs cannot
// overflow the stack. Returns components sorted by smallest node.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<int>& nodes, const std::vector<std::pair<int, int>>& arcs) {
    std::map<int, int> id;
    for (int v : nodes) id.emplace(v, static_cast<int>(id.size()));
    int n = static_cast<int>(id.size());
    std::vector<std::vector<int>> fwd(n), rev(n);
    for (auto [u, v] : arcs) {
        fwd[id.at(u)].push_back(id.at(v));
        rev[id.at(v)].push_back(id.at(u));
    }

    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < fwd[v].size()) {
                int w = fwd[v][next++];
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }

    std::vector<int> comp_of(n, -1);
    int ncomp = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp_of[*it] != -1) continue;
        std::vector<int> stack{*it};
        comp_of[*it] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : rev[v])
                if (comp_of[w] == -1) {
                    comp_of[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }

    std::vector<std::vector<int>> comps(ncomp);
    for (int v : nodes) comps[comp_of[id.at(v)]].push_back(v);
    for (auto& c : comps) std::sort(c.begin(), c.end());
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

// Karp on one strongly connected component: with D_t(v) the greatest
// weight of a walk of exactly t edges from a fixed source,
//   lambda = max_v min_t (D_m(v) - D_t(v)) / (m - t),
// over v with D_m(v) finite and t < m with D_t(v) finite.
std::optional<Rational> karp_component(const std::vector<int>& comp,
                                       const std::vector<Edge>& all_edges) {
    std::map<int, int> id;
    for (int v : comp) id.emplace(v, static_cast<int>(id.size()));
    std::vector<Edge> edges;
    for (const Edge& e : all_edges)
        if (id.count(e.from) && id.count(e.to)) edges.push_back(e);
    if (edges.empty()) return std::nullopt;  // single node without self-loop

    int m = static_cast<int>(comp.size());
    std::vector<std::vector<std::optional<Rational>>> d(
        static_cast<std::size_t>(m) + 1,
        std::vector<std::optional<Rational>>(static_cast<std::size_t>(m)));
    d[0][0] = Rational(0);
    for (int t = 1; t <= m; ++t)
        for (const Edge& e : edges) {
            const auto& prev = d[t - 1][static_cast<std::size_t>(id.at(e.from))];
            if (!prev) continue;
            auto& cur = d[t][static_cast<std::size_t>(id.at(e.to))];
            Rational cand = *prev + e.weight;
            if (!cur || cand > *cur) cur = cand;
        }

    std::optional<Rational> best;
    for (int v = 0; v < m; ++v) {
        const auto& dm = d[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)];
        if (!dm) continue;
        std::optional<Rational> worst;
        for (int t = 0; t < m; ++t) {
            const auto& dt = d[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
            if (!dt) continue;
            Rational ratio = (*dm - *dt) / (m - t);
            if (!worst || ratio < *worst) worst = ratio;
        }
        if (worst && (!best || *worst > *best)) best = worst;
    }
    return best;
}

std::vector<int> all_nodes(const MaxPlusMatrix& a) {
    std::vector<int> nodes;
    for (int i = a.lo(); i <= a.hi(); ++i) nodes.push_back(i);
    return nodes;
}

}  // namespace

MaxPlusScalar max_cycle_mean(const MaxPlusMatrix& a) {
    std::vector<Edge> edges = finite_edges(a);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(edges.size());
    for (const Edge& e : edges) arcs.emplace_back(e.from, e.to);

    MaxPlusScalar best;
    for (const auto& comp : strongly_connected_components(all_nodes(a), arcs))
        if (auto lam = karp_component(comp, edges))
            best = oplus(best, MaxPlusScalar(*lam));
    return best;
}

MaxPlusMatrix kleene_star(const MaxPlusMatrix& a) {
    MaxPlusScalar lam = max_cycle_mean(a);
    if (lam.is_finite() && lam.value() > 0)
        throw PositiveCycleError("kleene_star: positive cycle, the series diverges");

    // Floyd-Warshall closure over (max, +): after the k-loop, d(i, j) is
    // the greatest path weight from i to j (at least one edge); joining
    // the identity gives the truncated series exactly since lambda <= 0.
    MaxPlusMatrix d = a;
    for (int k = a.lo(); k <= a.hi(); ++k)
        for (int i = a.lo(); i <= a.hi(); ++i) {
            const MaxPlusScalar& dik = d.at(i, k);
            if (dik.is_bottom()) continue;
            for (int j = a.lo(); j <= a.hi(); ++j)
                d.set(i, j, oplus(d.at(i, j), otimes(dik, d.at(k, j))));
        }
    for (int i = a.lo(); i <= a.hi(); ++i)
        d.set(i, i, oplus(d.at(i, i), MaxPlusScalar::unit()));
    return d;
}

CriticalGraph critical_graph(const MaxPlusMatrix& a) {
    MaxPlusScalar lam = max_cycle_mean(a);
    if (lam.is_bottom())
        throw std::domain_error("critical_graph: digraph is acyclic, no cycle mean");

    // Shift all finite entries by -lambda; an edge is critical iff its
    // shifted weight plus the best shifted return path closes a zero
    // cycle.
    MaxPlusMatrix b(a.dim(), a.offset());
    for (int i = a.lo(); i <= a.hi(); ++i)
        for (int j = a.lo(); j <= a.hi(); ++j)
            if (a.at(i, j).is_finite())
                b.set(i, j, MaxPlusScalar(a.at(i, j).value() - lam.value()));
    MaxPlusMatrix star = kleene_star(b);

    CriticalGraph g;
    g.lambda = lam;
    for (int i = b.lo(); i <= b.hi(); ++i)
        for (int j = b.lo(); j <= b.hi(); ++j) {
            if (b.at(i, j).is_bottom() || star.at(j, i).is_bottom()) continue;
            if (b.at(i, j).value() + star.at(j, i).value() == 0) {
                g.edges.emplace(i, j);
                g.nodes.insert(i);
                g.nodes.insert(j);
            }
        }

    std::vector<int> nodes(g.nodes.begin(), g.nodes.end());
    std::vector<std::pair<int, int>> arcs(g.edges.begin(), g.edges.end());
    for (const auto& comp : strongly_connected_components(nodes, arcs))
        g.components.emplace_back(comp.begin(), comp.end());
    return g;
}

bool is_eigenvector(const MaxPlusMatrix& a, const std::vector<MaxPlusScalar>& v,
                    const MaxPlusScalar& lambda) {
    if (static_cast<int>(v.size()) != a.dim())
        throw std::invalid_argument("is_eigenvector: dimension mismatch");
    if (std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_bottom(); }))
        throw std::invalid_argument("is_eigenvector: v is identically bottom");
    std::vector<MaxPlusScalar> lhs = mat_vec(a, v);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (lhs[i] != otimes(lambda, v[i])) return false;
    return true;
}

SaturationGraph saturation_graph(const MaxPlusMatrix& a,
                                 const std::vector<MaxPlusScalar>& v,
                                 const MaxPlusScalar& lambda) {
    if (!is_eigenvector(a, v, lambda))
        throw std::invalid_argument("saturation_graph: v is not an eigenvector");
    SaturationGraph g;
    for (int i = a.lo(); i <= a.hi(); ++i) g.nodes.insert(i);
    for (int i = a.lo(); i <= a.hi(); ++i) {
        MaxPlusScalar rhs = otimes(lambda, v[static_cast<std::size_t>(i - a.lo())]);
        if (rhs.is_bottom()) continue;
        for (int j = a.lo(); j <= a.hi(); ++j) {
            if (a.at(i, j).is_bottom()) continue;
            if (otimes(a.at(i, j), v[static_cast<std::size_t>(j - a.lo())]) == rhs)
                g.edges.emplace(i, j);
        }
    }
    return g;
}

std::vector<int> fundamental_indices(const CriticalGraph& g) {
    std::vector<int> idx;
    idx.reserve(g.components.size());
    for (const auto& comp : g.components) idx.push_back(*comp.begin());
    return idx;
}

std::vector<std::vector<MaxPlusScalar>> eigenspace_basis(const MaxPlusMatrix& a) {
    MaxPlusScalar lam = max_cycle_mean(a);
    if (lam != MaxPlusScalar::unit())
        throw std::domain_error("eigenspace_basis: lambda(A) must be 0, got " +
                                scalar_str(lam));
    MaxPlusMatrix star = kleene_star(a);
    CriticalGraph crit = critical_graph(a);
    std::vector<std::vector<MaxPlusScalar>> basis;
    for (int idx : fundamental_indices(crit)) {
        std::vector<MaxPlusScalar> col = star.column(idx);
        if (!is_eigenvector(a, col, MaxPlusScalar::unit()))
            throw std::logic_error("eigenspace_basis: critical column failed eigencheck");
        basis.push_back(std::move(col));
    }
    return basis;
}

std::vector<MaxPlusScalar> residuation_coeffs(const MaxPlusMatrix& a_star,
                                              const std::vector<MaxPlusScalar>& v,
                                              const std::vector<int>& basis_indices) {
    if (static_cast<int>(v.size()) != a_star.dim())
        throw std::invalid_argument("residuation_coeffs: dimension mismatch");
    std::vector<MaxPlusScalar> alpha;
    alpha.reserve(basis_indices.size());
    for (int i : basis_indices) {
        std::optional<Rational> acc;  // running min over finite quotients
        bool bottom = false;
        for (int j = a_star.lo(); j <= a_star.hi() && !bottom; ++j) {
            const MaxPlusScalar& sji = a_star.at(j, i);
            if (sji.is_bottom()) continue;  // v_j - bottom = +inf, drops out
            const MaxPlusScalar& vj = v[static_cast<std::size_t>(j - a_star.lo())];
            if (vj.is_bottom()) {
                bottom = true;  // bottom - finite = bottom dominates the min
                continue;
            }
            Rational q = vj.value() - sji.value();
            if (!acc || q < *acc) acc = q;
        }
        if (bottom || !acc)
            alpha.emplace_back();
        else
            alpha.emplace_back(*acc);
    }
    return alpha;
}

bool in_eigenspace(const MaxPlusMatrix& a, const std::vector<MaxPlusScalar>& v) {
    MaxPlusScalar lam = max_cycle_mean(a);
    if (lam != MaxPlusScalar::unit())
        throw std::domain_error("in_eigenspace: lambda(A) must be 0, got " +
                                scalar_str(lam));
    MaxPlusMatrix star = kleene_star(a);
    std::vector<int> idx = fundamental_indices(critical_graph(a));
    std::vector<MaxPlusScalar> alpha = residuation_coeffs(star, v, idx);
    for (int j = star.lo(); j <= star.hi(); ++j) {
        MaxPlusScalar rec;
        for (std::size_t t = 0; t < idx.size(); ++t)
            rec = oplus(rec, otimes(alpha[t], star.at(j, idx[t])));
        if (rec != v[static_cast<std::size_t>(j - star.lo())]) return false;
    }
    return true;
}

}  // namespace tropolax
