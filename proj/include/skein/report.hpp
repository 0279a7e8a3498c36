#pragma once

#include "skein/center.hpp"
#include "skein/check.hpp"
#include "skein/cohomology.hpp"
#include "skein/surface.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skein {

inline constexpr int kSchemaVersion = 1;

// Built-in test zoo: polygons 3..6, annuli with 1..3 punctures per side, genus one with 1..2.
std::vector<std::string> zoo_surfaces();

// Surface source resolved to a triangulation. Built-in sources know their surface, so the
// reduced pipeline can switch to the ear triangulation.
struct SurfaceSource {
    std::string name;  // builtin spec or file path
    Triangulation tri;
    bool builtin = false;
};

SurfaceSource resolve_builtin(const std::string& spec);
SurfaceSource resolve_file(const std::string& path);

// Matrix-level identities for one (surface, n), independent of the root of unity.
CheckReport matrix_checks(const SurfaceSource& src, int n, bool reduced, std::uint64_t seed);

struct CaseResult {
    std::string surface;
    int n = 0;
    long m_pp = 0;
    bool reduced = false;
    CheckReport matrix;
    CheckReport cohomology;
    CenterReport center;
    std::optional<ExactnessReport> exactness;
    std::vector<std::string> notes;

    bool all_pass() const;
    std::vector<std::string> failures() const;
};

CaseResult analyze_case(const SurfaceSource& src, int n, long m_pp, bool reduced, std::uint64_t seed);

// One batch row; the matrix checks are shared by every m'' of a (surface, n) group.
struct BatchRow {
    std::string surface;
    CenterReport center;
    bool matrix_pass = true;
    std::vector<std::string> notes;
    std::string error;  // set when the row could not be evaluated
};

// Rows ordered by (surface, n, m''), evaluated in a pool of at most `threads` workers.
std::vector<BatchRow> run_batch(const std::vector<SurfaceSource>& surfaces, const std::vector<int>& ns,
                                const std::vector<long>& orders, bool reduced, std::uint64_t seed,
                                unsigned threads);

nlohmann::ordered_json to_json(const CheckReport& r);
nlohmann::ordered_json to_json(const RootParams& p);
nlohmann::ordered_json to_json(const CenterReport& r);
nlohmann::ordered_json to_json(const ExactnessReport& r);
nlohmann::ordered_json to_json(const CaseResult& r);
nlohmann::ordered_json to_json(const BatchRow& r);

std::string csv_header();
std::string csv_row(const BatchRow& r);
std::string csv_row(const CaseResult& r);

std::string to_string(const mpq_class& q);

}  // namespace skein
