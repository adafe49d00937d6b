#include "complexforge/cellular_map.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cf {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// φ(w)[i] with the stored letter images applied; flip inverts the whole word.
SignedLetter mapped_word_letter(const TwoComplex& tgt, const Disc& target_disc,
                                int rotation, bool flip, int k, int i) {
    (void)tgt;
    if (!flip) return target_disc.boundary[mod(i + rotation, k)];
    SignedLetter l = target_disc.boundary[mod(rotation + k - 1 - i, k)];
    return SignedLetter{l.edge, -l.sign};
}

bool disc_alignment_ok(const TwoComplex& src, const TwoComplex& tgt,
                       const std::vector<EdgeImage>& edge_map, int d,
                       const DiscImage& di) {
    const Disc& wd = src.disc(d);
    const Disc& wt = tgt.disc(di.disc);
    const int k = static_cast<int>(wd.boundary.size());
    if (static_cast<int>(wt.boundary.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        const SignedLetter& l = wd.boundary[i];
        const EdgeImage& ei = edge_map[l.edge];
        SignedLetter got{ei.edge, ei.sign * l.sign};
        SignedLetter want = mapped_word_letter(tgt, wt, di.rotation, di.flip, k, i);
        if (!(got == want)) return false;
    }
    return true;
}

}  // namespace

CellularMap CellularMap::checked(ComplexPtr source, ComplexPtr target,
                                 std::vector<int> vertex_map,
                                 std::vector<EdgeImage> edge_map,
                                 std::vector<DiscImage> disc_map) {
    if (!source || !target) throw PreconditionError("cellular map: null complex");
    const TwoComplex& x = *source;
    const TwoComplex& y = *target;
    if (static_cast<int>(vertex_map.size()) != x.num_vertices() ||
        static_cast<int>(edge_map.size()) != x.num_edges() ||
        static_cast<int>(disc_map.size()) != x.num_discs())
        throw ValidationError("cellular map: assignment sizes do not match the source");

    for (int v = 0; v < x.num_vertices(); ++v)
        if (vertex_map[v] < 0 || vertex_map[v] >= y.num_vertices())
            throw ValidationError("cellular map: vertex '" + x.vertex_id(v) +
                                  "' maps outside the target");

    for (int e = 0; e < x.num_edges(); ++e) {
        const EdgeImage& ei = edge_map[e];
        if (ei.edge < 0 || ei.edge >= y.num_edges() || (ei.sign != 1 && ei.sign != -1))
            throw ValidationError("cellular map: edge '" + x.edge(e).id +
                                  "' has an invalid image");
        const Edge& se = x.edge(e);
        const Edge& te = y.edge(ei.edge);
        const int want_src = ei.sign > 0 ? te.src : te.dst;
        const int want_dst = ei.sign > 0 ? te.dst : te.src;
        if (vertex_map[se.src] != want_src || vertex_map[se.dst] != want_dst)
            throw ValidationError("cellular map: edge '" + se.id +
                                  "' is incompatible with the vertex assignment");
    }

    for (int d = 0; d < x.num_discs(); ++d) {
        const DiscImage& di = disc_map[d];
        if (di.disc < 0 || di.disc >= y.num_discs())
            throw ValidationError("cellular map: disc '" + x.disc(d).id +
                                  "' maps outside the target");
        if (!disc_alignment_ok(x, y, edge_map, d, di))
            throw ValidationError("cellular map: disc '" + x.disc(d).id +
                                  "' boundary does not match disc '" +
                                  y.disc(di.disc).id + "' under the edge assignment");
    }

    CellularMap m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.vertex_map_ = std::move(vertex_map);
    m.edge_map_ = std::move(edge_map);
    m.disc_map_ = std::move(disc_map);
    return m;
}

CellularMap CellularMap::derive(ComplexPtr source, ComplexPtr target,
                                std::vector<int> vertex_map,
                                std::vector<EdgeImage> edge_map,
                                std::vector<int> disc_targets) {
    if (!source || !target) throw PreconditionError("cellular map: null complex");
    const TwoComplex& x = *source;
    const TwoComplex& y = *target;
    if (static_cast<int>(disc_targets.size()) != x.num_discs())
        throw ValidationError("cellular map: disc target list size mismatch");
    std::vector<DiscImage> disc_map(x.num_discs());
    for (int d = 0; d < x.num_discs(); ++d) {
        const int td = disc_targets[d];
        if (td < 0 || td >= y.num_discs())
            throw ValidationError("cellular map: disc '" + x.disc(d).id +
                                  "' maps outside the target");
        const int k = static_cast<int>(x.disc(d).boundary.size());
        bool found = false;
        for (int flip = 0; flip < 2 && !found; ++flip)
            for (int rot = 0; rot < k && !found; ++rot) {
                DiscImage di{td, rot, flip != 0};
                if (disc_alignment_ok(x, y, edge_map, d, di)) {
                    disc_map[d] = di;
                    found = true;
                }
            }
        if (!found)
            throw ValidationError("cellular map: disc '" + x.disc(d).id +
                                  "' admits no alignment with disc '" +
                                  y.disc(td).id + "'");
    }
    return checked(std::move(source), std::move(target), std::move(vertex_map),
                   std::move(edge_map), std::move(disc_map));
}

CellularMap CellularMap::identity(ComplexPtr x) {
    if (!x) throw PreconditionError("cellular map: null complex");
    std::vector<int> vm(x->num_vertices());
    for (int v = 0; v < x->num_vertices(); ++v) vm[v] = v;
    std::vector<EdgeImage> em(x->num_edges());
    for (int e = 0; e < x->num_edges(); ++e) em[e] = EdgeImage{e, +1};
    std::vector<DiscImage> dm(x->num_discs());
    for (int d = 0; d < x->num_discs(); ++d) dm[d] = DiscImage{d, 0, false};
    return checked(x, x, std::move(vm), std::move(em), std::move(dm));
}

std::pair<int, int> CellularMap::corner_image(int disc, int pos) const {
    const DiscImage& di = disc_map_[disc];
    const int k = static_cast<int>(source_->disc(disc).boundary.size());
    const int j = di.flip ? mod(di.rotation + k - 2 - pos, k) : mod(pos + di.rotation, k);
    return {di.disc, j};
}

CellularMap compose(const CellularMap& f, const CellularMap& g) {
    if (!f.target() || f.target() != g.source())
        throw PreconditionError("compose: target of the first map is not the source of the second");
    const TwoComplex& x = *f.source();
    std::vector<int> vm(x.num_vertices());
    for (int v = 0; v < x.num_vertices(); ++v)
        vm[v] = g.vertex_image(f.vertex_image(v));
    std::vector<EdgeImage> em(x.num_edges());
    for (int e = 0; e < x.num_edges(); ++e) {
        const EdgeImage& fi = f.edge_image(e);
        const EdgeImage& gi = g.edge_image(fi.edge);
        em[e] = EdgeImage{gi.edge, fi.sign * gi.sign};
    }
    std::vector<int> dt(x.num_discs());
    for (int d = 0; d < x.num_discs(); ++d)
        dt[d] = g.disc_image(f.disc_image(d).disc).disc;
    return CellularMap::derive(f.source(), g.target(), std::move(vm), std::move(em),
                               std::move(dt));
}

ImmersionResult is_immersion(const CellularMap& f) {
    const TwoComplex& x = *f.source();
    const TwoComplex& y = *f.target();
    for (int v = 0; v < x.num_vertices(); ++v) {
        const LinkGraph lx = link_graph(x, v);
        (void)y;
        // nodes: two edge-ends with the same image fold the link
        std::map<LinkNode, LinkNode> seen_nodes;  // image -> preimage
        for (const LinkNode& n : lx.nodes) {
            const LinkNode img = f.node_image(n);
            auto [it, fresh] = seen_nodes.emplace(img, n);
            if (!fresh) {
                FoldWitness w;
                w.vertex = v;
                w.on_nodes = true;
                w.node_a = it->second;
                w.node_b = n;
                return ImmersionResult{false, w};
            }
        }
        // arcs: two corners with the same image corner fold the link
        std::map<std::pair<int, int>, LinkArc> seen_arcs;
        for (const LinkArc& a : lx.arcs) {
            const std::pair<int, int> img = f.corner_image(a.disc, a.pos);
            auto [it, fresh] = seen_arcs.emplace(img, a);
            if (!fresh) {
                FoldWitness w;
                w.vertex = v;
                w.on_nodes = false;
                w.arc_a = it->second;
                w.arc_b = a;
                return ImmersionResult{false, w};
            }
        }
    }
    return ImmersionResult{true, std::nullopt};
}

CoveringResult is_covering(const CellularMap& f) {
    const TwoComplex& x = *f.source();
    const TwoComplex& y = *f.target();
    if (y.num_vertices() == 0)
        return CoveringResult{false, 0, "target is empty"};

    const ImmersionResult imm = is_immersion(f);
    if (!imm.immersed) {
        const FoldWitness& w = *imm.witness;
        return CoveringResult{false, 0,
                              "not an immersion: link of vertex '" +
                                  x.vertex_id(w.vertex) + "' is folded"};
    }

    std::vector<int> vfib(y.num_vertices(), 0), efib(y.num_edges(), 0),
        dfib(y.num_discs(), 0);
    for (int v = 0; v < x.num_vertices(); ++v) ++vfib[f.vertex_image(v)];
    for (int e = 0; e < x.num_edges(); ++e) ++efib[f.edge_image(e).edge];
    for (int d = 0; d < x.num_discs(); ++d) ++dfib[f.disc_image(d).disc];

    const int n = vfib.empty() ? 0 : vfib[0];
    if (n == 0)
        return CoveringResult{false, 0, "vertex '" + y.vertex_id(0) + "' has an empty fiber"};
    for (int v = 0; v < y.num_vertices(); ++v)
        if (vfib[v] != n)
            return CoveringResult{false, 0, "vertex fibers have unequal cardinality ('" +
                                                y.vertex_id(0) + "' vs '" + y.vertex_id(v) + "')"};
    for (int e = 0; e < y.num_edges(); ++e)
        if (efib[e] != n)
            return CoveringResult{false, 0,
                                  "edge '" + y.edge(e).id + "' has fiber cardinality " +
                                      std::to_string(efib[e]) + ", expected " + std::to_string(n)};
    for (int d = 0; d < y.num_discs(); ++d)
        if (dfib[d] != n)
            return CoveringResult{false, 0,
                                  "disc '" + y.disc(d).id + "' has fiber cardinality " +
                                      std::to_string(dfib[d]) + ", expected " + std::to_string(n)};

    // immersion makes each link map injective; equal counts make it bijective
    for (int v = 0; v < x.num_vertices(); ++v) {
        const LinkGraph lx = link_graph(x, v);
        const LinkGraph ly = link_graph(y, f.vertex_image(v));
        if (lx.nodes.size() != ly.nodes.size() || lx.arcs.size() != ly.arcs.size())
            return CoveringResult{false, 0,
                                  "link of vertex '" + x.vertex_id(v) +
                                      "' does not map onto the link of '" +
                                      y.vertex_id(f.vertex_image(v)) + "'"};
    }
    return CoveringResult{true, n, ""};
}

ImageSubcomplex image_subcomplex(const CellularMap& f) {
    const TwoComplex& x = *f.source();
    const TwoComplex& y = *f.target();
    std::vector<char> vin(y.num_vertices(), 0), ein(y.num_edges(), 0),
        din(y.num_discs(), 0);
    for (int v = 0; v < x.num_vertices(); ++v) vin[f.vertex_image(v)] = 1;
    for (int e = 0; e < x.num_edges(); ++e) ein[f.edge_image(e).edge] = 1;
    for (int d = 0; d < x.num_discs(); ++d) din[f.disc_image(d).disc] = 1;

    // the set-wise image is automatically closed under faces
    ComplexBuilder b;
    std::vector<int> vsel, esel, dsel;
    for (int v = 0; v < y.num_vertices(); ++v)
        if (vin[v]) {
            b.vertex(y.vertex_id(v));
            vsel.push_back(v);
        }
    for (int e = 0; e < y.num_edges(); ++e)
        if (ein[e]) {
            const Edge& ed = y.edge(e);
            b.edge(ed.id, y.vertex_id(ed.src), y.vertex_id(ed.dst));
            esel.push_back(e);
        }
    for (int d = 0; d < y.num_discs(); ++d)
        if (din[d]) {
            const Disc& dd = y.disc(d);
            std::vector<std::pair<std::string, int>> word;
            for (const SignedLetter& l : dd.boundary)
                word.emplace_back(y.edge(l.edge).id, l.sign);
            b.disc(dd.id, word);
            dsel.push_back(d);
        }
    ComplexPtr sub = make_complex(b.build());

    std::vector<int> vm(sub->num_vertices());
    for (int v = 0; v < sub->num_vertices(); ++v) vm[v] = vsel[v];
    std::vector<EdgeImage> em(sub->num_edges());
    for (int e = 0; e < sub->num_edges(); ++e) em[e] = EdgeImage{esel[e], +1};
    std::vector<int> dt(sub->num_discs());
    for (int d = 0; d < sub->num_discs(); ++d) dt[d] = dsel[d];
    CellularMap inc = CellularMap::derive(sub, f.target(), std::move(vm),
                                          std::move(em), std::move(dt));
    return ImageSubcomplex{sub, std::move(inc)};
}

}  // namespace cf
