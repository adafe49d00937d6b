#pragma once

#include <memory>
#include <optional>
#include <string>

#include "complexforge/link_graph.hpp"
#include "complexforge/two_complex.hpp"

namespace cf {

using ComplexPtr = std::shared_ptr<const TwoComplex>;

inline ComplexPtr make_complex(TwoComplex x) {
    return std::make_shared<const TwoComplex>(std::move(x));
}

// Image of an edge: a target edge traversed forwards (+1) or backwards (-1).
struct EdgeImage {
    int edge = 0;
    int sign = +1;

    friend bool operator==(const EdgeImage&, const EdgeImage&) = default;
};

// Image of a disc: a target disc, with the rotation offset aligning the
// mapped boundary word to the target word, inverted first when flip is set.
struct DiscImage {
    int disc = 0;
    int rotation = 0;
    bool flip = false;

    friend bool operator==(const DiscImage&, const DiscImage&) = default;
};

// Where an immersion check failed: two distinct elements of one vertex link
// with equal images (either two nodes or two arcs).
struct FoldWitness {
    int vertex = 0;     // source vertex
    bool on_nodes = false;
    LinkNode node_a, node_b;
    LinkArc arc_a, arc_b;
};

struct ImmersionResult {
    bool immersed = false;
    std::optional<FoldWitness> witness;
};

struct CoveringResult {
    bool covering = false;
    int degree = 0;
    std::string reason;  // empty when covering
};

// A cellular map between 2-complexes: vertices to vertices, edges to edges
// up to orientation, discs to discs up to rotation and reflection of the
// attaching word.  Instances are validated at construction.
class CellularMap {
public:
    CellularMap() = default;

    // Checks all compatibility conditions; throws ValidationError naming the
    // first offending cell.
    static CellularMap checked(ComplexPtr source, ComplexPtr target,
                               std::vector<int> vertex_map,
                               std::vector<EdgeImage> edge_map,
                               std::vector<DiscImage> disc_map);

    // Derives disc rotations/flips by scanning, given only the target disc of
    // each source disc.  Throws if no alignment exists.
    static CellularMap derive(ComplexPtr source, ComplexPtr target,
                              std::vector<int> vertex_map,
                              std::vector<EdgeImage> edge_map,
                              std::vector<int> disc_targets);

    static CellularMap identity(ComplexPtr x);

    const ComplexPtr& source() const { return source_; }
    const ComplexPtr& target() const { return target_; }
    int vertex_image(int v) const { return vertex_map_[v]; }
    const EdgeImage& edge_image(int e) const { return edge_map_[e]; }
    const DiscImage& disc_image(int d) const { return disc_map_[d]; }
    const std::vector<int>& vertex_map() const { return vertex_map_; }
    const std::vector<EdgeImage>& edge_map() const { return edge_map_; }
    const std::vector<DiscImage>& disc_map() const { return disc_map_; }

    SignedLetter letter_image(const SignedLetter& l) const {
        const EdgeImage& ei = edge_map_[l.edge];
        return SignedLetter{ei.edge, ei.sign * l.sign};
    }

    // induced map on link nodes at source vertex v
    LinkNode node_image(const LinkNode& n) const {
        const EdgeImage& ei = edge_map_[n.edge];
        return LinkNode{ei.edge, ei.sign > 0 ? n.end : opposite(n.end)};
    }

    // induced map on link arcs: corner (disc,pos) -> target corner (disc,pos)
    std::pair<int, int> corner_image(int disc, int pos) const;

private:
    ComplexPtr source_, target_;
    std::vector<int> vertex_map_;
    std::vector<EdgeImage> edge_map_;
    std::vector<DiscImage> disc_map_;
};

// g after f; requires f.target() == g.source() (same object or equal shape).
CellularMap compose(const CellularMap& f, const CellularMap& g);

// Local injectivity on every vertex link (nodes and arcs).
ImmersionResult is_immersion(const CellularMap& f);

// Immersion + constant fiber cardinality + link bijectivity.
CoveringResult is_covering(const CellularMap& f);

// The set-wise image as a subcomplex of the target, with its inclusion.
struct ImageSubcomplex {
    ComplexPtr complex;
    CellularMap inclusion;
};
ImageSubcomplex image_subcomplex(const CellularMap& f);

}  // namespace cf
