#include "complexforge/two_complex.hpp"

#include <algorithm>

namespace cf {

namespace {

// Lexicographically least rotation of a cyclic word; returns the shift s
// such that out[i] == w[(i + s) mod n].  Booth's algorithm is overkill at
// this scale; plain comparison of all rotations is fine.
int least_rotation(const std::vector<SignedLetter>& w) {
    int n = static_cast<int>(w.size());
    int best = 0;
    for (int s = 1; s < n; ++s) {
        for (int i = 0; i < n; ++i) {
            const SignedLetter& a = w[(i + s) % n];
            const SignedLetter& b = w[(i + best) % n];
            if (a == b) continue;
            if (a < b) best = s;
            break;
        }
    }
    return best;
}

}  // namespace

TwoComplex TwoComplex::validate(const RawComplex& raw) {
    TwoComplex x;
    x.vertices_ = raw.vertices;
    for (int v = 0; v < static_cast<int>(x.vertices_.size()); ++v) {
        const std::string& id = x.vertices_[v];
        if (id.empty()) throw ValidationError("vertex with empty id");
        if (!x.vertex_idx_.emplace(id, v).second)
            throw ValidationError("duplicate vertex id: " + id);
    }
    for (const RawEdge& re : raw.edges) {
        if (re.id.empty()) throw ValidationError("edge with empty id");
        int src = x.vertex_index(re.src);
        int dst = x.vertex_index(re.dst);
        if (src < 0)
            throw ValidationError("edge " + re.id + " references unknown vertex: " + re.src);
        if (dst < 0)
            throw ValidationError("edge " + re.id + " references unknown vertex: " + re.dst);
        int e = static_cast<int>(x.edges_.size());
        if (!x.edge_idx_.emplace(re.id, e).second)
            throw ValidationError("duplicate edge id: " + re.id);
        x.edges_.push_back(Edge{re.id, src, dst});
    }
    for (const RawDisc& rd : raw.discs) {
        if (rd.id.empty()) throw ValidationError("disc with empty id");
        if (rd.boundary.empty())
            throw ValidationError("disc " + rd.id + " has an empty boundary word");
        Disc d;
        d.id = rd.id;
        for (const RawLetter& rl : rd.boundary) {
            int e = x.edge_index(rl.edge);
            if (e < 0)
                throw ValidationError("disc " + rd.id + " references unknown edge: " + rl.edge);
            if (rl.sign != 1 && rl.sign != -1)
                throw ValidationError("disc " + rd.id + " has a letter with sign != +-1");
            d.boundary.push_back(SignedLetter{e, rl.sign});
        }
        // the word must trace a closed edge path
        int n = static_cast<int>(d.boundary.size());
        for (int i = 0; i < n; ++i) {
            const SignedLetter& cur = d.boundary[i];
            const SignedLetter& nxt = d.boundary[(i + 1) % n];
            if (x.letter_to(cur) != x.letter_from(nxt))
                throw ValidationError("disc " + rd.id + " boundary is not a closed path at letter " +
                                      std::to_string(i));
        }
        int shift = least_rotation(d.boundary);
        if (shift != 0)
            std::rotate(d.boundary.begin(), d.boundary.begin() + shift, d.boundary.end());
        int di = static_cast<int>(x.discs_.size());
        if (!x.disc_idx_.emplace(d.id, di).second)
            throw ValidationError("duplicate disc id: " + d.id);
        x.discs_.push_back(std::move(d));
        x.disc_shifts_.push_back(shift);
    }
    return x;
}

int TwoComplex::vertex_index(const std::string& id) const {
    auto it = vertex_idx_.find(id);
    return it == vertex_idx_.end() ? -1 : it->second;
}

int TwoComplex::edge_index(const std::string& id) const {
    auto it = edge_idx_.find(id);
    return it == edge_idx_.end() ? -1 : it->second;
}

int TwoComplex::disc_index(const std::string& id) const {
    auto it = disc_idx_.find(id);
    return it == disc_idx_.end() ? -1 : it->second;
}

int TwoComplex::degree(int v) const {
    int deg = 0;
    for (const Edge& e : edges_) {
        if (e.src == v) ++deg;
        if (e.dst == v) ++deg;
    }
    return deg;
}

int TwoComplex::side_count(int e) const {
    int n = 0;
    for (const Disc& d : discs_)
        for (const SignedLetter& l : d.boundary)
            if (l.edge == e) ++n;
    return n;
}

std::vector<Blade> TwoComplex::blades_of_edge(int e) const {
    std::vector<Blade> out;
    for (int d = 0; d < num_discs(); ++d) {
        const auto& w = discs_[d].boundary;
        for (int i = 0; i < static_cast<int>(w.size()); ++i)
            if (w[i].edge == e) out.push_back(Blade{d, i});
    }
    return out;
}

RawComplex TwoComplex::to_raw() const {
    RawComplex raw;
    raw.vertices = vertices_;
    for (const Edge& e : edges_)
        raw.edges.push_back(RawEdge{e.id, vertices_[e.src], vertices_[e.dst]});
    for (const Disc& d : discs_) {
        RawDisc rd;
        rd.id = d.id;
        for (const SignedLetter& l : d.boundary)
            rd.boundary.push_back(RawLetter{edges_[l.edge].id, l.sign});
        raw.discs.push_back(std::move(rd));
    }
    return raw;
}

ComplexBuilder& ComplexBuilder::vertex(const std::string& id) {
    raw_.vertices.push_back(id);
    return *this;
}

ComplexBuilder& ComplexBuilder::edge(const std::string& id, const std::string& src,
                                     const std::string& dst) {
    raw_.edges.push_back(RawEdge{id, src, dst});
    return *this;
}

ComplexBuilder& ComplexBuilder::disc(const std::string& id,
                                     const std::vector<std::pair<std::string, int>>& word) {
    RawDisc rd;
    rd.id = id;
    for (const auto& [edge, sign] : word) rd.boundary.push_back(RawLetter{edge, sign});
    raw_.discs.push_back(std::move(rd));
    return *this;
}

}  // namespace cf
