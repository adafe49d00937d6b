#pragma once

#include "complexforge/two_complex.hpp"

namespace cf {

enum class EdgeEnd : uint8_t { Source = 0, Target = 1 };

inline EdgeEnd opposite(EdgeEnd e) {
    return e == EdgeEnd::Source ? EdgeEnd::Target : EdgeEnd::Source;
}

// terminal end of a traversed letter (the end at letter_to)
inline EdgeEnd terminal_end(const SignedLetter& l) {
    return l.sign > 0 ? EdgeEnd::Target : EdgeEnd::Source;
}
// initial end of a traversed letter (the end at letter_from)
inline EdgeEnd initial_end(const SignedLetter& l) {
    return l.sign > 0 ? EdgeEnd::Source : EdgeEnd::Target;
}

// Node of a vertex link: one edge-end incident to the vertex (a loop
// contributes both of its ends).
struct LinkNode {
    int edge = 0;
    EdgeEnd end = EdgeEnd::Source;

    friend bool operator==(const LinkNode&, const LinkNode&) = default;
    friend auto operator<=>(const LinkNode&, const LinkNode&) = default;
};

// Arc of a vertex link: the corner of a disc boundary word between letters
// pos and pos+1 (cyclically).  Joins the terminal end of letter pos to the
// initial end of letter pos+1.
struct LinkArc {
    int disc = 0;
    int pos = 0;
    int n1 = 0;  // node index of the terminal end of letter pos
    int n2 = 0;  // node index of the initial end of letter pos+1
};

// The link of a vertex: a multigraph whose nodes are edge-ends at the vertex
// and whose arcs are disc-word corners passing through it.
struct LinkGraph {
    int vertex = 0;
    std::vector<LinkNode> nodes;  // sorted by (edge, end)
    std::vector<LinkArc> arcs;   // in (disc, pos) scan order

    int node_index(int edge, EdgeEnd end) const;
    bool connected() const;
    // degree of each node (number of arc endpoints; a loop arc counts twice)
    std::vector<int> node_degrees() const;
};

LinkGraph link_graph(const TwoComplex& x, int v);

}  // namespace cf
