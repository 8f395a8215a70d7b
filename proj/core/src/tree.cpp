#include "catspec/tree.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <string>

namespace catspec {

CaterpillarShape::CaterpillarShape(std::vector<int> interior_degrees)
    : degrees_(std::move(interior_degrees)) {
    for (int m : degrees_)
        if (m < 2) throw Error("interior stalk degree below 2: " + std::to_string(m));
}

int CaterpillarShape::vertex_count() const {
    int p = 2;
    for (int m : degrees_) p += m - 1;
    return p;
}

CaterpillarShape CaterpillarShape::reversed() const {
    std::vector<int> r(degrees_.rbegin(), degrees_.rend());
    return CaterpillarShape(std::move(r));
}

CanonicalShape canonicalize(const CaterpillarShape& s) {
    const auto& fwd = s.interior_degrees();
    std::vector<int> rev(fwd.rbegin(), fwd.rend());
    return CanonicalShape{std::min(fwd, rev)};
}

Tree::Tree(int p, std::vector<std::pair<int, int>> edges)
    : p_(p), edges_(std::move(edges)), adj_(static_cast<size_t>(std::max(p, 0))) {
    if (p_ < 1) throw Error("tree needs at least one vertex");
    if (edges_.size() != static_cast<size_t>(p_ - 1))
        throw Error("tree on " + std::to_string(p_) + " vertices needs exactly " +
                    std::to_string(p_ - 1) + " edges");
    for (auto [a, b] : edges_) {
        if (a < 0 || a >= p_ || b < 0 || b >= p_ || a == b)
            throw Error("invalid edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        adj_[static_cast<size_t>(a)].push_back(b);
        adj_[static_cast<size_t>(b)].push_back(a);
    }
    // Right edge count + connectivity = acyclic.
    std::vector<char> seen(static_cast<size_t>(p_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != p_) throw Error("tree is not connected");
}

Tree shape_to_tree(const CaterpillarShape& s) {
    const auto& m = s.interior_degrees();
    const int r = s.stalk_length();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i) edges.emplace_back(i, i + 1);
    int next = r + 1;
    for (size_t i = 0; i < m.size(); ++i)
        for (int leaf = 0; leaf < m[i] - 2; ++leaf) edges.emplace_back(static_cast<int>(i) + 1, next++);
    return Tree(s.vertex_count(), std::move(edges));
}

namespace {

// Distances from src; trees are connected so every entry gets filled.
std::vector<int> bfs_dist(const Tree& t, int src) {
    std::vector<int> dist(static_cast<size_t>(t.vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.neighbors(v))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

CaterpillarShape tree_to_shape(const Tree& t) {
    const int p = t.vertex_count();
    if (p == 1) throw NotCaterpillar("single vertex has no stalk");
    if (p == 2) return CaterpillarShape();

    // Caterpillar test: removing all leaves must leave a path. Equivalent to
    // every vertex sitting within distance 1 of every longest path.
    std::vector<char> spine(static_cast<size_t>(p), 0);
    int spine_count = 0;
    for (int v = 0; v < p; ++v)
        if (t.degree(v) >= 2) {
            spine[static_cast<size_t>(v)] = 1;
            ++spine_count;
        }
    for (int v = 0; v < p; ++v) {
        if (!spine[static_cast<size_t>(v)]) continue;
        int spine_neighbors = 0;
        for (int w : t.neighbors(v)) spine_neighbors += spine[static_cast<size_t>(w)];
        if (spine_neighbors > 2) throw NotCaterpillar("derived tree is not a path");
    }
    // Degree <= 2 inside a connected acyclic vertex set forces a path, so the
    // spine check above is complete.
    (void)spine_count;

    // Vertex 0 heads a longest path iff its eccentricity equals the diameter;
    // endpoints of longest paths in trees are automatically leaves.
    auto d0 = bfs_dist(t, 0);
    int far0 = 0;
    for (int v = 0; v < p; ++v)
        if (d0[static_cast<size_t>(v)] > d0[static_cast<size_t>(far0)]) far0 = v;
    auto d1 = bfs_dist(t, far0);
    int diameter = 0;
    for (int v = 0; v < p; ++v) diameter = std::max(diameter, d1[static_cast<size_t>(v)]);
    if (d0[static_cast<size_t>(far0)] != diameter)
        throw RootNotStalkEnd("vertex 0 is not an endpoint of a longest path");

    // Walk the stalk from vertex 0 toward far0, collecting interior degrees.
    std::vector<int> degrees;
    int prev = -1, cur = 0;
    while (cur != far0) {
        int next = -1;
        for (int w : t.neighbors(cur))
            if (w != prev && d0[static_cast<size_t>(w)] == d0[static_cast<size_t>(cur)] + 1 &&
                d0[static_cast<size_t>(w)] + d1[static_cast<size_t>(w)] == diameter) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
        if (cur != far0) degrees.push_back(t.degree(cur));
    }
    return CaterpillarShape(std::move(degrees));
}

std::vector<CaterpillarShape> enumerate_shapes(int p) {
    if (p < 2) throw Error("shapes need p >= 2");
    std::vector<CaterpillarShape> out;
    if (p == 2) {
        out.emplace_back();
        return out;
    }
    // Shapes with p vertices = compositions of p-2 into parts m_i - 1 >= 1;
    // ascending choice of the next degree yields lexicographic order.
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            cur.push_back(part + 1);
            self(self, remaining - part);
            cur.pop_back();
        }
    };
    rec(rec, p - 2);
    return out;
}

CaterpillarShape random_shape(int p, std::uint64_t seed) {
    if (p < 2) throw Error("shapes need p >= 2");
    if (p == 2) return CaterpillarShape();
    // A composition of n = p-2 is a bit per gap between n unit cells; bit set
    // means "split here". Uniform bits give the uniform shape distribution.
    std::mt19937_64 rng(seed);
    const int n = p - 2;
    std::vector<int> degrees;
    int run = 1;
    std::uint64_t bits = 0;
    int bits_left = 0;
    for (int gap = 0; gap < n - 1; ++gap) {
        if (bits_left == 0) {
            bits = rng();
            bits_left = 64;
        }
        bool split = bits & 1;
        bits >>= 1;
        --bits_left;
        if (split) {
            degrees.push_back(run + 1);
            run = 1;
        } else {
            ++run;
        }
    }
    degrees.push_back(run + 1);
    return CaterpillarShape(std::move(degrees));
}

}  // namespace catspec
