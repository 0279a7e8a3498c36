#include "skein/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

std::vector<Coord> face_coords(int n) {
    std::vector<Coord> out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            const int k = n - i - j;
            if (i == n || j == n || k == n) continue;
            out.push_back({i, j, k});
        }
    return out;
}

Coord coord_on_slot(int n, int slot, int t) {
    switch (slot) {
        case 0: return {n - t, t, 0};
        case 1: return {0, n - t, t};
        default: return {t, 0, n - t};
    }
}

std::pair<int, int> slot_of(const Coord& c) {
    if (c[2] == 0) return {0, c[1]};
    if (c[0] == 0) return {1, c[2]};
    if (c[1] == 0) return {2, c[0]};
    return {-1, 0};
}

VertexIndex::VertexIndex(const Triangulation& t, int n) : n_(n), faces_(t.faces()) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    for (int f = 0; f < t.num_faces(); ++f) {
        for (const auto& c : face_coords(n)) {
            auto [s, d] = slot_of(c);
            std::tuple<int, int, int, int> key;
            SmallVertex v;
            v.face = f;
            v.ijk = c;
            if (s < 0) {
                key = {0, f, c[0], c[1]};
                v.label = "F" + std::to_string(f) + "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                          std::to_string(c[2]) + ")";
            } else {
                const Slot& sl = t.faces()[f].slots[s];
                v.on_edge = true;
                v.edge = sl.edge;
                v.pos = sl.flip ? n - d : d;
                key = {1, sl.edge, v.pos, 0};
                v.label = "E" + t.edge_names()[sl.edge] + "@" + std::to_string(v.pos);
            }
            if (key_.count(key)) continue;
            key_[key] = static_cast<int>(verts_.size());
            verts_.push_back(v);
        }
    }
}

int VertexIndex::at(int face, const Coord& c) const {
    auto [s, d] = slot_of(c);
    if (s < 0) return key_.at({0, face, c[0], c[1]});
    const Slot& sl = faces_.at(face).slots[s];
    return key_.at({1, sl.edge, sl.flip ? n_ - d : d, 0});
}

std::vector<std::string> VertexIndex::labels(const std::vector<int>& idx) const {
    std::vector<std::string> out;
    for (int i : idx) out.push_back(verts_.at(i).label);
    return out;
}

IntMatrix q_matrix(const Triangulation& t, const VertexIndex& vi) {
    const int n = vi.n();
    IntMatrix q(vi.size(), vi.size());
    static const int dirs[3][3] = {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}};
    const auto coords = face_coords(n);
    auto valid = [n](const Coord& c) {
        for (int x : c)
            if (x < 0 || x >= n) return false;
        return true;
    };
    for (int f = 0; f < t.num_faces(); ++f) {
        for (const auto& v : coords) {
            for (int a = 0; a < 3; ++a) {
                Coord w{v[0] + dirs[a][0], v[1] + dirs[a][1], v[2] + dirs[a][2]};
                if (!valid(w)) continue;
                // Arrow a runs parallel to side a of the face: k=0, i=0, j=0.
                const int side = a == 0 ? 2 : (a == 1 ? 0 : 1);
                const int wt = (v[side] == 0 && w[side] == 0) ? 1 : 2;
                const int x = vi.at(f, v), y = vi.at(f, w);
                q(x, y) += wt;
                q(y, x) -= wt;
            }
        }
    }
    return q;
}

IntMatrix h_matrix(const Triangulation& t, const VertexIndex& vi, const IntMatrix& q) {
    const std::size_t sz = vi.size();
    IntMatrix h(sz, sz);
    for (std::size_t a = 0; a < sz; ++a)
        for (std::size_t b = 0; b < sz; ++b) {
            const auto& va = vi[a];
            const auto& vb = vi[b];
            const bool same = va.on_edge && vb.on_edge && va.edge == vb.edge && t.is_boundary(va.edge);
            if (same) {
                h(a, b) = a == b ? 1 : (q(a, b) > 0 ? -1 : 0);
            } else {
                if (!mpz_even_p(q(a, b).get_mpz_t()))
                    throw std::logic_error("h_matrix: odd quiver entry between " + va.label + " and " + vb.label);
                h(a, b) = -q(a, b) / 2;
            }
        }
    return h;
}

IntMatrix restrict_matrix(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<std::size_t> r(rows.begin(), rows.end()), c(cols.begin(), cols.end());
    for (int x : rows)
        if (x < 0 || static_cast<std::size_t>(x) >= m.rows()) throw std::out_of_range("restrict: unknown vertex id");
    for (int x : cols)
        if (x < 0 || static_cast<std::size_t>(x) >= m.cols()) throw std::out_of_range("restrict: unknown vertex id");
    return m.submatrix(r, c);
}

std::vector<int> VertexSets::v_x() const {
    std::vector<int> v = inner;
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

std::vector<int> VertexSets::v_a() const {
    std::vector<int> v = inner;
    v.insert(v.end(), u.begin(), u.end());
    return v;
}

VertexSets small_vertices(const ExtendedTriangulation& x, int n) {
    VertexSets vs;
    vs.n = n;
    vs.vbar = VertexIndex(x.base, n);
    vs.vbar_star = VertexIndex(x.star, n);
    const auto& bd = x.base.boundary();
    const int b = static_cast<int>(bd.size());
    using Key = std::tuple<int, int, int>;
    std::vector<std::pair<Key, std::tuple<int, int, int, int>>> wl, ul;  // sort key, (vertex, c, j, k)
    for (int c = 0; c < b; ++c) {
        const int r = static_cast<int>(bd[c].size());
        vs.rs.push_back(r);
        for (int j = 0; j < r; ++j) {
            const int f = x.attached_face[bd[c][j]];
            for (int k = 1; k < n; ++k) {
                const Key key{b - (c + 1), r - (j + 1), n - k};
                wl.push_back({key, {vs.vbar_star.at(f, {0, k, n - k}), c, j, k}});
                ul.push_back({key, {vs.vbar_star.at(f, {k, 0, n - k}), c, j, k}});
            }
        }
    }
    std::sort(wl.begin(), wl.end());
    std::sort(ul.begin(), ul.end());
    std::vector<bool> bnd(vs.vbar_star.size(), false);
    for (std::size_t i = 0; i < wl.size(); ++i) {
        auto [v, c, j, k] = wl[i].second;
        vs.w.push_back(v);
        vs.w_rank_[{c, j, k}] = static_cast<int>(i);
        bnd[v] = true;
    }
    for (std::size_t i = 0; i < ul.size(); ++i) {
        auto [v, c, j, k] = ul[i].second;
        vs.u.push_back(v);
        vs.u_rank_[{c, j, k}] = static_cast<int>(i);
        bnd[v] = true;
    }
    for (std::size_t v = 0; v < bnd.size(); ++v)
        if (!bnd[v]) vs.inner.push_back(static_cast<int>(v));
    return vs;
}

ReducedVertexSets reduced_vertex_sets(const Triangulation& t, int n) {
    ReducedVertexSets rv;
    rv.n = n;
    rv.vbar = VertexIndex(t, n);
    const auto& bd = t.boundary();
    std::vector<int> bnd_order;
    for (std::size_t c = 0; c < bd.size(); ++c) {
        const int r = static_cast<int>(bd[c].size());
        rv.rs.push_back(r);
        std::vector<std::pair<std::pair<int, int>, int>> wl, ul;
        std::vector<std::pair<int, int>> vl;
        for (int j = 1; j <= r; ++j) {
            const auto& in = t.incidences(bd[c][j - 1]).front();
            for (int k = 1; k < n; ++k) {
                if (r == 1 || (r % 2 == 1 && j == r)) {
                    vl.push_back({k, rv.vbar.at(in.face, coord_on_slot(n, in.slot, k))});
                } else if (j % 2 == 1) {
                    wl.push_back({{r - j, n - k}, rv.vbar.at(in.face, coord_on_slot(n, in.slot, n - k))});
                } else {
                    ul.push_back({{r - (j - 1), n - k}, rv.vbar.at(in.face, coord_on_slot(n, in.slot, k))});
                }
            }
        }
        std::sort(wl.begin(), wl.end());
        std::sort(ul.begin(), ul.end());
        std::sort(vl.begin(), vl.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        rv.comp_offset.push_back(bnd_order.size());
        for (const auto& p : wl) bnd_order.push_back(p.second);
        for (const auto& p : ul) bnd_order.push_back(p.second);
        for (const auto& p : vl) bnd_order.push_back(p.second);
    }
    std::vector<bool> is_bnd(rv.vbar.size(), false);
    for (int v : bnd_order) is_bnd[v] = true;
    for (std::size_t v = 0; v < is_bnd.size(); ++v)
        if (!is_bnd[v]) rv.order.push_back(static_cast<int>(v));
    rv.n_inner = rv.order.size();
    for (auto& off : rv.comp_offset) off += rv.n_inner;
    rv.order.insert(rv.order.end(), bnd_order.begin(), bnd_order.end());
    std::vector<int> pos(rv.vbar.size(), -1);
    for (std::size_t i = 0; i < rv.order.size(); ++i) pos[rv.order[i]] = static_cast<int>(i);
    rv.traversal.resize(bd.size());
    for (std::size_t c = 0; c < bd.size(); ++c)
        for (int e : bd[c]) {
            const auto& in = t.incidences(e).front();
            std::vector<int> vs;
            for (int k = 1; k < n; ++k) vs.push_back(pos[rv.vbar.at(in.face, coord_on_slot(n, in.slot, k))]);
            rv.traversal[c].push_back(std::move(vs));
        }
    return rv;
}

}  // namespace skein
