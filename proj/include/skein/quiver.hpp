#pragma once

#include "skein/matrix.hpp"
#include "skein/surface.hpp"

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace skein {

using Coord = std::array<int, 3>;

// A small vertex of the n-triangulation. Vertices on an edge are shared by the faces
// glued along it and are keyed by (edge, position along the intrinsic orientation).
struct SmallVertex {
    bool on_edge = false;
    int face = -1;  // first incarnation
    int edge = -1;
    int pos = 0;    // 1..n-1 along the edge orientation
    Coord ijk{};    // coordinates in the first incarnation
    std::string label;
};

std::vector<Coord> face_coords(int n);
// Coordinate of the point at distance t along slot s (from corner s).
Coord coord_on_slot(int n, int slot, int t);
// (slot, distance from its start corner) for a coordinate on the face boundary; slot -1 inside.
std::pair<int, int> slot_of(const Coord& c);

class VertexIndex {
public:
    VertexIndex() = default;
    VertexIndex(const Triangulation& t, int n);

    int n() const { return n_; }
    std::size_t size() const { return verts_.size(); }
    const SmallVertex& operator[](std::size_t i) const { return verts_[i]; }
    const std::vector<SmallVertex>& all() const { return verts_; }
    // Index of the vertex with coordinate ijk in face f.
    int at(int face, const Coord& ijk) const;
    std::vector<std::string> labels(const std::vector<int>& idx) const;

private:
    int n_ = 0;
    std::vector<Face> faces_;
    std::vector<SmallVertex> verts_;
    std::map<std::tuple<int, int, int, int>, int> key_;
};

// Signed adjacency matrix of the weighted quiver (arrows counterclockwise, weight 1 on
// boundary arrows and 2 otherwise, summed over faces).
IntMatrix q_matrix(const Triangulation& t, const VertexIndex& vi);
// -Q/2 off boundary edges; on a boundary edge: 1 on the diagonal, -1 along an arrow.
IntMatrix h_matrix(const Triangulation& t, const VertexIndex& vi, const IntMatrix& q);
IntMatrix restrict_matrix(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// Vertex sets of the non-reduced torus built on the extended triangulation.
struct VertexSets {
    int n = 0;
    VertexIndex vbar;       // small vertices of lambda
    VertexIndex vbar_star;  // small vertices of lambda*
    std::vector<int> inner;  // indices into vbar_star, interior part
    std::vector<int> w, u;   // indices into vbar_star, canonical order
    std::vector<int> v_x() const;  // V  = inner + W
    std::vector<int> v_a() const;  // V' = inner + U
    // Position of w_k (resp. u_k) of the j-th edge (boundary order) of component c in V (resp. V').
    int w_pos(int c, int j, int k) const { return static_cast<int>(inner.size()) + w_rank_.at({c, j, k}); }
    int u_pos(int c, int j, int k) const { return static_cast<int>(inner.size()) + u_rank_.at({c, j, k}); }
    std::vector<int> rs;  // punctures per component

    std::map<std::tuple<int, int, int>, int> w_rank_, u_rank_;
};

VertexSets small_vertices(const ExtendedTriangulation& x, int n);

// Reduced ordering on V-bar of a triangulation: interior first, then per component
// W_i, U_i, V_i.
struct ReducedVertexSets {
    int n = 0;
    VertexIndex vbar;
    std::vector<int> order;  // indices into vbar
    std::size_t n_inner = 0;
    std::vector<int> rs;
    std::vector<std::size_t> comp_offset;  // start of each component block in order
    // Position in order of the k-th (1-based) small vertex of the j-th edge of component c,
    // counted along the boundary orientation.
    std::vector<std::vector<std::vector<int>>> traversal;
};

ReducedVertexSets reduced_vertex_sets(const Triangulation& t, int n);

}  // namespace skein
