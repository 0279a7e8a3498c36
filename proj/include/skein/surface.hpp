#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Punctured bordered surface without interior punctures.
struct Surface {
    int genus = 0;
    std::vector<int> punctures;  // r_i per boundary component

    int b() const { return static_cast<int>(punctures.size()); }
    int chi() const { return 2 - 2 * genus - b(); }
    int boundary_edges() const;  // #dSigma
    int r() const { return boundary_edges() - chi(); }
    int t() const;  // number of even components
    int w_size(int n) const { return (n - 1) * boundary_edges(); }
    bool operator==(const Surface& o) const { return genus == o.genus && punctures == o.punctures; }
};

Surface build_surface(int genus, const std::vector<int>& punctures);

// One edge slot of a face. Slot s runs from corner s to corner s+1; flip means the slot
// runs against the intrinsic orientation of the edge.
struct Slot {
    int edge = -1;
    bool flip = false;
};

struct Face {
    std::array<Slot, 3> slots;
};

struct Incidence {
    int face;
    int slot;
    bool flip;
};

struct EdgeEnds {
    int start;  // puncture at the start of the intrinsic orientation
    int end;
};

class Triangulation {
public:
    Triangulation() = default;
    // Faces reference edges by name; boundary lists each component's edges in
    // counterclockwise order. Throws InputError on any violated condition.
    Triangulation(std::vector<std::string> edge_names, std::vector<Face> faces,
                  std::vector<std::vector<int>> boundary, std::optional<Surface> declared = std::nullopt);

    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<std::string>& edge_names() const { return names_; }
    const std::vector<std::vector<int>>& boundary() const { return boundary_; }
    const Surface& surface() const { return surface_; }

    int num_edges() const { return static_cast<int>(names_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    int num_punctures() const { return num_punctures_; }
    int edge_id(const std::string& name) const;
    bool is_boundary(int e) const { return incid_[e].size() == 1; }
    const std::vector<Incidence>& incidences(int e) const { return incid_[e]; }
    // Puncture at corner c of face f.
    int corner_puncture(int f, int c) const { return corner_class_[3 * f + c]; }
    // Punctures at the ends of edge e along its intrinsic orientation.
    EdgeEnds edge_ends(int e) const;
    // Boundary edges traverse in the direction of their face slot.
    EdgeEnds traversal_ends(int e) const;
    // (component, position) of a boundary edge.
    std::pair<int, int> boundary_position(int e) const;

private:
    std::vector<std::string> names_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> boundary_;
    std::vector<std::vector<Incidence>> incid_;
    std::vector<int> corner_class_;
    std::map<int, std::pair<int, int>> bpos_;
    int num_punctures_ = 0;
    Surface surface_;
};

// Builder keyed by edge names.
class TriangulationBuilder {
public:
    int edge(const std::string& name);
    void face(const std::array<std::pair<std::string, bool>, 3>& slots);
    void boundary_component(const std::vector<std::string>& names);
    Triangulation build(std::optional<Surface> declared = std::nullopt) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> boundary_;
};

Triangulation load_triangulation(const std::string& json_text);
Triangulation load_triangulation_file(const std::string& path);
std::string dump_triangulation(const Triangulation& t);

// Built-in generators.
Triangulation polygon(int k);
Triangulation annulus(int r1, int r2);
Triangulation genus_surface(int g, int r);
// "polygon:k", "annulus:r1,r2", "genus:g,r".
Triangulation builtin(const std::string& spec);
std::string builtin_kind(const std::string& spec);

// Triangulation of Sigma* with one attached triangle per boundary edge.
struct ExtendedTriangulation {
    Triangulation base;
    Triangulation star;
    std::vector<int> attached_face;  // by base edge id; -1 for interior edges
    std::vector<int> star_edge;      // base edge id -> edge id in star
    Triangulation restrict_to_base() const;
};

ExtendedTriangulation attach_triangles(const Triangulation& t);

// Ear triangulation mu: floor(r_i/2) ears per component, plus the extra triangle for odd r_i > 1.
// The remaining core is triangulated with the built-in generator of the core surface.
Triangulation build_mu_triangulation(const Surface& s);

}  // namespace skein
