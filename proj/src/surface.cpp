#include "skein/surface.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace skein {

using nlohmann::json;

int Surface::boundary_edges() const { return std::accumulate(punctures.begin(), punctures.end(), 0); }

int Surface::t() const {
    return static_cast<int>(std::count_if(punctures.begin(), punctures.end(), [](int r) { return r % 2 == 0; }));
}

Surface build_surface(int genus, const std::vector<int>& punctures) {
    if (genus < 0) throw InputError("surface: genus must be non-negative");
    if (punctures.empty()) throw InputError("surface: empty boundary list (surface must be essentially bordered)");
    for (int r : punctures)
        if (r < 1) throw InputError("surface: every boundary component needs at least one puncture");
    if (genus == 0 && punctures.size() == 1 && punctures[0] < 3)
        throw InputError("surface: monogon and bigon are not triangulable");
    return Surface{genus, punctures};
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Corner indices (face*3 + corner) at the ends of slot s, in intrinsic edge order.
std::pair<int, int> slot_ends(int f, int s, bool flip) {
    const int a = 3 * f + s, b = 3 * f + (s + 1) % 3;
    return flip ? std::make_pair(b, a) : std::make_pair(a, b);
}

}  // namespace

Triangulation::Triangulation(std::vector<std::string> edge_names, std::vector<Face> faces,
                             std::vector<std::vector<int>> boundary, std::optional<Surface> declared)
    : names_(std::move(edge_names)), faces_(std::move(faces)), boundary_(std::move(boundary)) {
    const int ne = num_edges(), nf = num_faces();
    if (nf == 0) throw InputError("triangulation: no faces");
    incid_.assign(ne, {});
    for (int f = 0; f < nf; ++f) {
        std::set<int> seen;
        for (int s = 0; s < 3; ++s) {
            const Slot& sl = faces_[f].slots[s];
            if (sl.edge < 0 || sl.edge >= ne) throw InputError("triangulation: face references unknown edge");
            if (!seen.insert(sl.edge).second)
                throw InputError("triangulation: face " + std::to_string(f) + " uses edge '" + names_[sl.edge] +
                                 "' twice (self-folded faces are not supported)");
            incid_[sl.edge].push_back({f, s, sl.flip});
        }
    }
    UnionFind uf(3 * nf), conn(nf);
    for (int e = 0; e < ne; ++e) {
        const auto& in = incid_[e];
        if (in.empty() || in.size() > 2)
            throw InputError("triangulation: edge '" + names_[e] + "' is used " + std::to_string(in.size()) +
                             " times (must be 1 or 2)");
        if (in.size() == 2) {
            if (in[0].flip == in[1].flip)
                throw InputError("triangulation: non-orientable gluing along edge '" + names_[e] + "'");
            auto [a1, b1] = slot_ends(in[0].face, in[0].slot, in[0].flip);
            auto [a2, b2] = slot_ends(in[1].face, in[1].slot, in[1].flip);
            uf.unite(a1, a2);
            uf.unite(b1, b2);
            conn.unite(in[0].face, in[1].face);
        }
    }
    for (int f = 1; f < nf; ++f)
        if (conn.find(f) != conn.find(0)) throw InputError("triangulation: glued complex is disconnected");
    std::map<int, int> cls;
    corner_class_.resize(3 * nf);
    for (int i = 0; i < 3 * nf; ++i) {
        auto it = cls.emplace(uf.find(i), static_cast<int>(cls.size())).first;
        corner_class_[i] = it->second;
    }
    num_punctures_ = static_cast<int>(cls.size());

    int nb = 0;
    for (int e = 0; e < ne; ++e) nb += is_boundary(e);
    std::set<int> listed;
    for (std::size_t c = 0; c < boundary_.size(); ++c) {
        const auto& comp = boundary_[c];
        if (comp.empty()) throw InputError("triangulation: empty boundary component");
        for (std::size_t j = 0; j < comp.size(); ++j) {
            const int e = comp[j];
            if (e < 0 || e >= ne) throw InputError("triangulation: boundary references unknown edge");
            if (!is_boundary(e)) throw InputError("triangulation: edge '" + names_[e] + "' listed as boundary but glued twice");
            if (!listed.insert(e).second) throw InputError("triangulation: boundary edge '" + names_[e] + "' listed twice");
            bpos_[e] = {static_cast<int>(c), static_cast<int>(j)};
        }
        for (std::size_t j = 0; j < comp.size(); ++j) {
            const int e = comp[j], next = comp[(j + 1) % comp.size()];
            if (traversal_ends(e).end != traversal_ends(next).start)
                throw InputError("triangulation: boundary edges '" + names_[e] + "' and '" + names_[next] +
                                 "' are not consecutive in counterclockwise order");
        }
    }
    if (static_cast<int>(listed.size()) != nb) throw InputError("triangulation: some boundary edge is not listed in any component");
    if (num_punctures_ != nb)
        throw InputError("triangulation: interior punctures are not supported (" + std::to_string(num_punctures_) +
                         " punctures, " + std::to_string(nb) + " boundary edges)");
    const int chi = num_punctures_ - ne + nf;
    const int b = static_cast<int>(boundary_.size());
    const int twice_g = 2 - b - chi;
    if (twice_g < 0 || twice_g % 2 != 0) throw InputError("triangulation: Euler characteristic mismatch");
    surface_.genus = twice_g / 2;
    for (const auto& comp : boundary_) surface_.punctures.push_back(static_cast<int>(comp.size()));
    if (declared && !(*declared == surface_))
        throw InputError("triangulation: gluing gives genus " + std::to_string(surface_.genus) + " with " +
                         std::to_string(b) + " boundary components, which does not match the declared surface");
}

int Triangulation::edge_id(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw InputError("unknown edge '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

EdgeEnds Triangulation::edge_ends(int e) const {
    const auto& in = incid_.at(e).front();
    auto [a, b] = slot_ends(in.face, in.slot, in.flip);
    return {corner_class_[a], corner_class_[b]};
}

EdgeEnds Triangulation::traversal_ends(int e) const {
    const auto& in = incid_.at(e).front();
    return {corner_class_[3 * in.face + in.slot], corner_class_[3 * in.face + (in.slot + 1) % 3]};
}

std::pair<int, int> Triangulation::boundary_position(int e) const {
    auto it = bpos_.find(e);
    if (it == bpos_.end()) throw std::out_of_range("boundary_position: not a boundary edge");
    return it->second;
}

int TriangulationBuilder::edge(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(names_.size());
    names_.push_back(name);
    ids_[name] = id;
    return id;
}

void TriangulationBuilder::face(const std::array<std::pair<std::string, bool>, 3>& slots) {
    Face f;
    for (int s = 0; s < 3; ++s) f.slots[s] = Slot{edge(slots[s].first), slots[s].second};
    faces_.push_back(f);
}

void TriangulationBuilder::boundary_component(const std::vector<std::string>& names) {
    std::vector<int> comp;
    for (const auto& n : names) {
        auto it = ids_.find(n);
        if (it == ids_.end()) throw InputError("boundary lists edge '" + n + "' that no face uses");
        comp.push_back(it->second);
    }
    boundary_.push_back(std::move(comp));
}

Triangulation TriangulationBuilder::build(std::optional<Surface> declared) const {
    return Triangulation(names_, faces_, boundary_, std::move(declared));
}

Triangulation load_triangulation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw InputError(std::string("triangulation spec: malformed JSON: ") + ex.what());
    }
    try {
        std::optional<Surface> declared;
        if (doc.contains("surface")) {
            const auto& s = doc.at("surface");
            declared = build_surface(s.at("genus").get<int>(), s.at("punctures").get<std::vector<int>>());
        }
        TriangulationBuilder b;
        for (const auto& f : doc.at("faces")) {
            auto edges = f.at("edges").get<std::vector<std::string>>();
            auto flips = f.contains("flips") ? f.at("flips").get<std::vector<bool>>() : std::vector<bool>(3, false);
            if (edges.size() != 3 || flips.size() != 3) throw InputError("triangulation spec: each face needs 3 edges and 3 flips");
            b.face({std::make_pair(edges[0], flips[0]), std::make_pair(edges[1], flips[1]), std::make_pair(edges[2], flips[2])});
        }
        std::vector<std::pair<int, std::vector<std::string>>> comps;
        for (const auto& c : doc.at("boundary"))
            comps.emplace_back(c.value("component", static_cast<int>(comps.size())), c.at("edges_ccw").get<std::vector<std::string>>());
        std::stable_sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [i, names] : comps) b.boundary_component(names);
        return b.build(declared);
    } catch (const json::exception& ex) {
        throw InputError(std::string("triangulation spec: ") + ex.what());
    }
}

Triangulation load_triangulation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open triangulation spec '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_triangulation(ss.str());
}

std::string dump_triangulation(const Triangulation& t) {
    json doc;
    doc["schema"] = 1;
    doc["surface"] = {{"genus", t.surface().genus}, {"punctures", t.surface().punctures}};
    json faces = json::array();
    for (const auto& f : t.faces()) {
        json e = json::array(), fl = json::array();
        for (const auto& s : f.slots) {
            e.push_back(t.edge_names()[s.edge]);
            fl.push_back(s.flip);
        }
        faces.push_back({{"edges", e}, {"flips", fl}});
    }
    doc["faces"] = faces;
    json bd = json::array();
    for (std::size_t c = 0; c < t.boundary().size(); ++c) {
        json names = json::array();
        for (int e : t.boundary()[c]) names.push_back(t.edge_names()[e]);
        bd.push_back({{"component", c}, {"edges_ccw", names}});
    }
    doc["boundary"] = bd;
    return doc.dump(2);
}

namespace {

std::string diag_name(int a, int b) { return "d" + std::to_string(std::min(a, b)) + "_" + std::to_string(std::max(a, b)); }

}  // namespace

Triangulation polygon(int k) {
    build_surface(0, {k});
    TriangulationBuilder b;
    auto edge = [&](int x, int y) -> std::pair<std::string, bool> {
        if ((y - x + k) % k == 1) return {"b" + std::to_string(x), false};
        if ((x - y + k) % k == 1) return {"b" + std::to_string(y), true};
        return {diag_name(x, y), x > y};
    };
    for (int i = 1; i < k - 1; ++i) b.face({edge(0, i), edge(i, i + 1), edge(i + 1, 0)});
    std::vector<std::string> bd;
    for (int i = 0; i < k; ++i) bd.push_back("b" + std::to_string(i));
    b.boundary_component(bd);
    return b.build(Surface{0, {k}});
}

Triangulation annulus(int r1, int r2) {
    build_surface(0, {r1, r2});
    TriangulationBuilder b;
    const int total = r1 + r2;
    auto rung = [&](int t) { return "R" + std::to_string(t % total); };
    int t = 0;
    for (int i = 0; i < r1; ++i, ++t) b.face({std::make_pair("o" + std::to_string(i), false), std::make_pair(rung(t + 1), false), std::make_pair(rung(t), true)});
    for (int j = 0; j < r2; ++j, ++t) b.face({std::make_pair("i" + std::to_string(j), false), std::make_pair(rung(t), true), std::make_pair(rung(t + 1), false)});
    std::vector<std::string> outer, inner;
    for (int i = 0; i < r1; ++i) outer.push_back("o" + std::to_string(i));
    for (int j = r2 - 1; j >= 0; --j) inner.push_back("i" + std::to_string(j));
    b.boundary_component(outer);
    b.boundary_component(inner);
    return b.build(Surface{0, {r1, r2}});
}

Triangulation genus_surface(int g, int r) {
    build_surface(g, {r});
    const int n = 4 * g + r;
    std::vector<std::pair<std::string, bool>> side(n);
    for (int i = 0; i < g; ++i) {
        side[4 * i] = {"a" + std::to_string(i), false};
        side[4 * i + 1] = {"c" + std::to_string(i), false};
        side[4 * i + 2] = {"a" + std::to_string(i), true};
        side[4 * i + 3] = {"c" + std::to_string(i), true};
    }
    for (int j = 0; j < r; ++j) side[4 * g + j] = {"b" + std::to_string(j), false};
    auto edge = [&](int x, int y) -> std::pair<std::string, bool> {
        if ((y - x + n) % n == 1) return side[x];
        if ((x - y + n) % n == 1) return {side[y].first, !side[y].second};
        return {diag_name(x, y), x > y};
    };
    TriangulationBuilder b;
    for (int i = 1; i < n - 1; ++i) b.face({edge(0, i), edge(i, i + 1), edge(i + 1, 0)});
    std::vector<std::string> bd;
    for (int j = 0; j < r; ++j) bd.push_back("b" + std::to_string(j));
    b.boundary_component(bd);
    return b.build(Surface{g, {r}});
}

namespace {

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw InputError("");
        } catch (...) {
            throw InputError("builtin surface: bad integer list '" + s + "'");
        }
    }
    return out;
}

}  // namespace

std::string builtin_kind(const std::string& spec) { return spec.substr(0, spec.find(':')); }

Triangulation builtin(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("builtin surface must look like polygon:k, annulus:r1,r2 or genus:g,r");
    const std::string kind = spec.substr(0, colon);
    const auto args = parse_ints(spec.substr(colon + 1));
    if (kind == "polygon" && args.size() == 1) return polygon(args[0]);
    if (kind == "annulus" && args.size() == 2) return annulus(args[0], args[1]);
    if (kind == "genus" && args.size() == 2) return genus_surface(args[0], args[1]);
    throw InputError("unknown builtin surface '" + spec + "'");
}

Triangulation ExtendedTriangulation::restrict_to_base() const {
    TriangulationBuilder b;
    for (int f = 0; f < base.num_faces(); ++f) {
        const auto& sl = star.faces()[f].slots;
        b.face({std::make_pair(star.edge_names()[sl[0].edge], sl[0].flip), std::make_pair(star.edge_names()[sl[1].edge], sl[1].flip),
                std::make_pair(star.edge_names()[sl[2].edge], sl[2].flip)});
    }
    for (const auto& comp : base.boundary()) {
        std::vector<std::string> names;
        for (int e : comp) names.push_back(star.edge_names()[star_edge[e]]);
        b.boundary_component(names);
    }
    return b.build();
}

ExtendedTriangulation attach_triangles(const Triangulation& t) {
    TriangulationBuilder b;
    for (const auto& name : t.edge_names()) b.edge(name);
    for (const auto& f : t.faces())
        b.face({std::make_pair(t.edge_names()[f.slots[0].edge], f.slots[0].flip), std::make_pair(t.edge_names()[f.slots[1].edge], f.slots[1].flip),
                std::make_pair(t.edge_names()[f.slots[2].edge], f.slots[2].flip)});
    std::vector<int> attached(t.num_edges(), -1);
    int nf = t.num_faces();
    std::vector<std::vector<std::string>> comps;
    for (const auto& comp : t.boundary()) {
        std::vector<std::string> names;
        for (int e : comp) {
            const auto& in = t.incidences(e).front();
            const std::string& en = t.edge_names()[e];
            b.face({std::make_pair(en, !in.flip), std::make_pair(en + "#2", false), std::make_pair(en + "#3", false)});
            attached[e] = nf++;
            names.push_back(en + "#2");
            names.push_back(en + "#3");
        }
        comps.push_back(std::move(names));
    }
    for (const auto& c : comps) b.boundary_component(c);
    std::vector<int> doubled;
    for (int r : t.surface().punctures) doubled.push_back(2 * r);
    ExtendedTriangulation x{t, b.build(Surface{t.surface().genus, doubled}), attached, {}};
    for (int e = 0; e < t.num_edges(); ++e) x.star_edge.push_back(x.star.edge_id(t.edge_names()[e]));
    return x;
}

Triangulation build_mu_triangulation(const Surface& s) {
    build_surface(s.genus, s.punctures);
    const int b = s.b();
    auto E = [](int i, int k) { return "c" + std::to_string(i) + "e" + std::to_string(k); };
    auto A = [](int i, int k) { return "c" + std::to_string(i) + "a" + std::to_string(k); };
    auto X = [](int i) { return "c" + std::to_string(i) + "x"; };
    std::vector<int> core_r;
    std::vector<std::vector<std::string>> coremap;
    for (int i = 0; i < b; ++i) {
        const int r = s.punctures[i];
        core_r.push_back(r == 1 ? 1 : (r % 2 == 0 ? r / 2 : (r - 1) / 2));
        std::vector<std::string> names;
        if (r == 1) {
            names.push_back(E(i, 1));
        } else if (r % 2 == 0) {
            for (int k = 1; k <= r / 2; ++k) names.push_back(A(i, k));
        } else {
            for (int k = 1; k < (r - 1) / 2; ++k) names.push_back(A(i, k));
            names.push_back(X(i));
        }
        coremap.push_back(std::move(names));
    }
    TriangulationBuilder out;
    std::map<std::string, bool> core_flip;
    std::map<std::string, std::string> alias;
    const bool degenerate = s.genus == 0 && b == 1 && core_r[0] < 3;
    if (degenerate) {
        const int r = s.punctures[0];
        if (r == 3) {
            out.face({std::make_pair(E(0, 3), false), std::make_pair(E(0, 1), false), std::make_pair(E(0, 2), false)});
            out.boundary_component({E(0, 1), E(0, 2), E(0, 3)});
            return out.build(s);
        }
        // Bigon core: both core arcs are the same ideal arc.
        core_flip[coremap[0][0]] = false;
        core_flip[coremap[0][1]] = true;
        alias[coremap[0][1]] = coremap[0][0];
    } else {
        Triangulation core;
        if (s.genus == 0 && b == 1) {
            core = polygon(core_r[0]);
        } else if (s.genus == 0 && b == 2) {
            core = annulus(core_r[0], core_r[1]);
        } else if (b == 1) {
            core = genus_surface(s.genus, core_r[0]);
        } else {
            throw InputError("mu triangulation: no built-in core triangulation for genus " + std::to_string(s.genus) + " with " +
                             std::to_string(b) + " boundary components");
        }
        std::map<int, std::string> rename;
        for (std::size_t i = 0; i < core.boundary().size(); ++i)
            for (std::size_t j = 0; j < core.boundary()[i].size(); ++j) rename[core.boundary()[i][j]] = coremap[i][j];
        for (const auto& f : core.faces()) {
            std::array<std::pair<std::string, bool>, 3> sl;
            for (int k = 0; k < 3; ++k) {
                const int e = f.slots[k].edge;
                auto it = rename.find(e);
                sl[k] = {it == rename.end() ? core.edge_names()[e] : it->second, f.slots[k].flip};
                if (it != rename.end()) core_flip[it->second] = f.slots[k].flip;
            }
            out.face(sl);
        }
    }
    auto base_of = [&](const std::string& a) {
        auto it = alias.find(a);
        return it == alias.end() ? a : it->second;
    };
    for (int i = 0; i < b; ++i) {
        const int r = s.punctures[i];
        if (r == 1) continue;
        const int ears = r / 2;
        for (int k = 1; k <= ears; ++k) {
            const std::string a = A(i, k);
            auto it = core_flip.find(a);
            const std::pair<std::string, bool> base =
                it != core_flip.end() ? std::make_pair(base_of(a), !it->second) : std::make_pair(a, true);
            out.face({base, std::make_pair(E(i, 2 * k - 1), false), std::make_pair(E(i, 2 * k), false)});
        }
        if (r % 2 == 1) {
            const std::string x = X(i);
            out.face({std::make_pair(base_of(x), !core_flip.at(x)), std::make_pair(A(i, ears), false), std::make_pair(E(i, r), false)});
        }
    }
    for (int i = 0; i < b; ++i) {
        std::vector<std::string> names;
        for (int k = 1; k <= s.punctures[i]; ++k) names.push_back(E(i, k));
        out.boundary_component(names);
    }
    return out.build(s);
}

}  // namespace skein
