#include "complexforge/link_graph.hpp"

#include <algorithm>

namespace cf {

int LinkGraph::node_index(int edge, EdgeEnd end) const {
    LinkNode key{edge, end};
    auto it = std::lower_bound(nodes.begin(), nodes.end(), key);
    if (it == nodes.end() || !(*it == key)) return -1;
    return static_cast<int>(it - nodes.begin());
}

bool LinkGraph::connected() const {
    if (nodes.empty()) return true;
    std::vector<char> seen(nodes.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        for (const LinkArc& a : arcs) {
            int other = -1;
            if (a.n1 == n) other = a.n2;
            else if (a.n2 == n) other = a.n1;
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<int> LinkGraph::node_degrees() const {
    std::vector<int> deg(nodes.size(), 0);
    for (const LinkArc& a : arcs) {
        ++deg[a.n1];
        ++deg[a.n2];
    }
    return deg;
}

LinkGraph link_graph(const TwoComplex& x, int v) {
    LinkGraph g;
    g.vertex = v;
    for (int e = 0; e < x.num_edges(); ++e) {
        if (x.edge(e).src == v) g.nodes.push_back(LinkNode{e, EdgeEnd::Source});
        if (x.edge(e).dst == v) g.nodes.push_back(LinkNode{e, EdgeEnd::Target});
    }
    std::sort(g.nodes.begin(), g.nodes.end());
    for (int d = 0; d < x.num_discs(); ++d) {
        const auto& w = x.disc(d).boundary;
        int n = static_cast<int>(w.size());
        for (int i = 0; i < n; ++i) {
            const SignedLetter& cur = w[i];
            if (x.letter_to(cur) != v) continue;
            const SignedLetter& nxt = w[(i + 1) % n];
            LinkArc a;
            a.disc = d;
            a.pos = i;
            a.n1 = g.node_index(cur.edge, terminal_end(cur));
            a.n2 = g.node_index(nxt.edge, initial_end(nxt));
            g.arcs.push_back(a);
        }
    }
    return g;
}

}  // namespace cf
