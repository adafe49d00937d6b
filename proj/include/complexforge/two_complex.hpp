#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cf {

// Raised when an input description violates a structural invariant.  The
// message always names the offending cell.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an operation's precondition is not met (caller error rather
// than malformed data).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One letter of a disc boundary word: an oriented edge traversal.
// sign == +1 traverses src -> dst, sign == -1 traverses dst -> src.
struct SignedLetter {
    int edge = 0;
    int sign = +1;

    friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
    friend auto operator<=>(const SignedLetter& a, const SignedLetter& b) {
        // +1 sorts before -1 so that e precedes e^-1 in canonical words
        if (a.edge != b.edge) return a.edge <=> b.edge;
        return b.sign <=> a.sign;
    }
};

struct Edge {
    std::string id;
    int src = 0;
    int dst = 0;
};

struct Disc {
    std::string id;
    std::vector<SignedLetter> boundary;  // cyclic word, stored in canonical rotation
};

// String-referenced description, the shape found in JSON files.  Validation
// resolves references and produces an indexed TwoComplex.
struct RawLetter {
    std::string edge;
    int sign = +1;
};
struct RawEdge {
    std::string id, src, dst;
};
struct RawDisc {
    std::string id;
    std::vector<RawLetter> boundary;
};
struct RawComplex {
    std::vector<std::string> vertices;
    std::vector<RawEdge> edges;
    std::vector<RawDisc> discs;
};

// One side of a disc riding along an edge: occurrence `occ` of the edge in
// disc `disc`'s boundary word.
struct Blade {
    int disc = 0;
    int occ = 0;

    friend bool operator==(const Blade&, const Blade&) = default;
    friend auto operator<=>(const Blade&, const Blade&) = default;
};

// A finite combinatorial 2-complex: vertices, oriented edges (loops and
// multi-edges allowed), discs attached along closed signed edge words.
// Cells are addressed by index; ids are kept for I/O and diagnostics.
// Boundary words are cyclic and are stored rotated to the lexicographically
// least position, so two descriptions differing by rotation compare equal.
class TwoComplex {
public:
    TwoComplex() = default;

    // Checks referential integrity, id uniqueness, non-empty closed boundary
    // words; throws ValidationError naming the offending cell.
    static TwoComplex validate(const RawComplex& raw);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_discs() const { return static_cast<int>(discs_.size()); }
    int num_cells() const { return num_vertices() + num_edges() + num_discs(); }
    bool empty() const { return num_cells() == 0; }

    const std::string& vertex_id(int v) const { return vertices_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const Disc& disc(int d) const { return discs_[d]; }
    const std::vector<std::string>& vertex_ids() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Disc>& discs() const { return discs_; }

    // -1 when absent
    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;
    int disc_index(const std::string& id) const;

    // initial / terminal vertex of a letter, respecting its sign
    int letter_from(const SignedLetter& l) const {
        return l.sign > 0 ? edges_[l.edge].src : edges_[l.edge].dst;
    }
    int letter_to(const SignedLetter& l) const {
        return l.sign > 0 ? edges_[l.edge].dst : edges_[l.edge].src;
    }

    // number of edge-ends at v (a loop counts twice)
    int degree(int v) const;

    // total occurrences of edge e across all boundary words
    int side_count(int e) const;

    // blades over e in boundary-scan order (disc index, then position)
    std::vector<Blade> blades_of_edge(int e) const;

    // letter behind a blade
    const SignedLetter& blade_letter(const Blade& b) const {
        return discs_[b.disc].boundary[b.occ];
    }

    int euler_characteristic() const {
        return num_vertices() - num_edges() + num_discs();
    }

    // rotation applied to disc d's input word during canonicalization:
    // stored[i] == input[(i + shift) mod len]
    int disc_shift(int d) const { return disc_shifts_[d]; }

    // remap an occurrence index of the as-input word to the stored word
    int stored_occ(int d, int input_occ) const {
        int len = static_cast<int>(discs_[d].boundary.size());
        return ((input_occ - disc_shifts_[d]) % len + len) % len;
    }

    RawComplex to_raw() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<Disc> discs_;
    std::vector<int> disc_shifts_;
    std::unordered_map<std::string, int> vertex_idx_, edge_idx_, disc_idx_;

    friend class ComplexBuilder;
};

// Convenience builder for programmatic construction (builtins, covers,
// boundary complexes).  Collects a RawComplex and validates at the end.
class ComplexBuilder {
public:
    ComplexBuilder& vertex(const std::string& id);
    ComplexBuilder& edge(const std::string& id, const std::string& src, const std::string& dst);
    ComplexBuilder& disc(const std::string& id, const std::vector<std::pair<std::string, int>>& word);
    TwoComplex build() const { return TwoComplex::validate(raw_); }
    const RawComplex& raw() const { return raw_; }

private:
    RawComplex raw_;
};

}  // namespace cf
