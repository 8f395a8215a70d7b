#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "catspec/errors.hpp"

namespace catspec {

// Interior stalk degrees (m_1, ..., m_{r-1}) of a rooted equilateral
// caterpillar, each >= 2. The stalk has r+1 vertices v_0..v_r; interior
// vertex v_i carries m_i - 2 pendant leaves. The empty sequence is the
// two-vertex path.
class CaterpillarShape {
public:
    CaterpillarShape() = default;
    explicit CaterpillarShape(std::vector<int> interior_degrees);

    const std::vector<int>& interior_degrees() const { return degrees_; }
    int stalk_length() const { return static_cast<int>(degrees_.size()) + 1; }  // r
    int vertex_count() const;  // p

    CaterpillarShape reversed() const;

    bool operator==(const CaterpillarShape&) const = default;
    auto operator<=>(const CaterpillarShape&) const = default;

private:
    std::vector<int> degrees_;
};

// Representative of the unrooted caterpillar: the lexicographically smaller
// of a degree sequence and its reversal.
struct CanonicalShape {
    std::vector<int> degrees;
    bool operator==(const CanonicalShape&) const = default;
    auto operator<=>(const CanonicalShape&) const = default;
};

CanonicalShape canonicalize(const CaterpillarShape& s);

// Finite simple tree on vertices 0..p-1 with the root fixed at vertex 0.
// Construction validates connectivity and edge count.
class Tree {
public:
    Tree(int p, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return p_; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int p_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Stalk vertices first (v_0..v_r), then leaves grouped by parent in stalk
// order. The root v_0 is vertex 0.
Tree shape_to_tree(const CaterpillarShape& s);

// Inverse of shape_to_tree up to the fixed vertex convention. Throws
// NotCaterpillar when some vertex is farther than distance 1 from every
// longest path, RootNotStalkEnd when vertex 0 is not a degree-1 endpoint of
// a longest path.
CaterpillarShape tree_to_shape(const Tree& t);

// All shapes with p vertices in lexicographic order of the degree sequence.
// Includes both a sequence and its reversal. Throws Error for p < 2.
std::vector<CaterpillarShape> enumerate_shapes(int p);

// Uniformly random element of enumerate_shapes(p), deterministic in seed.
// Sampled by unranking (shapes with p vertices are the compositions of p-2),
// so large p needs no enumeration.
CaterpillarShape random_shape(int p, std::uint64_t seed);

}  // namespace catspec
