#include "skein/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace skein {

using ojson = nlohmann::ordered_json;

std::vector<std::string> zoo_surfaces() {
    std::vector<std::string> out;
    for (int k = 3; k <= 6; ++k) out.push_back("polygon:" + std::to_string(k));
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) out.push_back("annulus:" + std::to_string(a) + "," + std::to_string(b));
    out.push_back("genus:1,1");
    out.push_back("genus:1,2");
    return out;
}

SurfaceSource resolve_builtin(const std::string& spec) { return {spec, builtin(spec), true}; }

SurfaceSource resolve_file(const std::string& path) { return {path, load_triangulation_file(path), false}; }

namespace {

// Triangulation for the reduced pipeline and whether it is the ear triangulation.
std::pair<Triangulation, bool> reduced_triangulation(const SurfaceSource& src, std::vector<std::string>* notes) {
    if (src.builtin) {
        try {
            return {build_mu_triangulation(src.tri.surface()), true};
        } catch (const std::exception& e) {
            if (notes) notes->push_back(std::string("ear triangulation unavailable: ") + e.what());
        }
    } else if (notes) {
        notes->push_back("explicit reduced center asserted only on the ear triangulation");
    }
    return {src.tri, false};
}

std::string join(const std::vector<Int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void explicit_note(const CenterReport& c, std::vector<std::string>& notes) {
    if (!c.reduced || c.explicit_asserted) return;
    if (c.params.m_p_even() && c.n % 2 == 0) notes.push_back("n odd required for explicit center");
}

}  // namespace

std::string to_string(const mpq_class& q) { return q.get_str(); }

CheckReport matrix_checks(const SurfaceSource& src, int n, bool reduced, std::uint64_t seed) {
    CheckReport rep;
    if (reduced) {
        const auto [tri, is_mu] = reduced_triangulation(src, nullptr);
        const auto r = reduced_matrices(tri, n);
        rep.append(r.checks);
        if (is_mu) {
            rep.append(reduced_blocks(r));
            rep.append(reduced_parity_check(r));
        }
        return rep;
    }
    const auto x = attach_triangles(src.tri);
    const auto a = p_matrices(x, n);
    rep.append(a.checks);
    rep.append(verify_block_identities(a, x, seed));
    rep.append(k2_parity_check(a, x));
    return rep;
}

bool CaseResult::all_pass() const {
    return matrix.all_pass() && cohomology.all_pass() && center.checks.all_pass() &&
           (!exactness || exactness->checks.all_pass());
}

std::vector<std::string> CaseResult::failures() const {
    std::vector<std::string> out;
    for (const CheckReport* r : {&matrix, &cohomology, &center.checks}) {
        auto f = r->failures();
        out.insert(out.end(), f.begin(), f.end());
    }
    if (exactness) {
        auto f = exactness->checks.failures();
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

CaseResult analyze_case(const SurfaceSource& src, int n, long m_pp, bool reduced, std::uint64_t seed) {
    CaseResult res;
    res.surface = src.name;
    res.n = n;
    res.m_pp = m_pp;
    res.reduced = reduced;
    const auto rp = root_params(n, m_pp);
    res.cohomology = cohomology_checks(src.tri, {2, 3, 4, 5, 6});
    res.cohomology.append(zc_count_check(src.tri, rp));
    if (reduced) {
        const auto [tri, is_mu] = reduced_triangulation(src, &res.notes);
        const ReducedContext ctx(tri, n, is_mu);
        res.matrix.append(ctx.mats().checks);
        if (is_mu) {
            res.matrix.append(reduced_blocks(ctx.mats()));
            res.matrix.append(reduced_parity_check(ctx.mats()));
        }
        res.center = reduced_center_report(ctx, rp, src.name);
    } else {
        const CenterContext ctx(src.tri, n);
        res.matrix.append(ctx.mats().checks);
        res.matrix.append(verify_block_identities(ctx.mats(), ctx.ext(), seed));
        res.matrix.append(k2_parity_check(ctx.mats(), ctx.ext()));
        res.center = center_report(ctx, rp, src.name);
        if (rp.m_p_even()) res.exactness = j_exactness(ctx, rp);
    }
    explicit_note(res.center, res.notes);
    if (!res.center.rank_closed) res.notes.push_back("closed form: case not covered");
    return res;
}

std::vector<BatchRow> run_batch(const std::vector<SurfaceSource>& surfaces, const std::vector<int>& ns,
                                const std::vector<long>& orders, bool reduced, std::uint64_t seed,
                                unsigned threads) {
    struct Group {
        std::size_t s;
        int n;
    };
    std::vector<Group> groups;
    for (std::size_t s = 0; s < surfaces.size(); ++s)
        for (int n : ns) groups.push_back({s, n});
    std::vector<std::vector<BatchRow>> out(groups.size());

    auto run_group = [&](std::size_t gi) {
        const auto& src = surfaces[groups[gi].s];
        const int n = groups[gi].n;
        auto& rows = out[gi];
        auto fail_all = [&](const std::string& msg) {
            for (long m : orders) {
                BatchRow row;
                row.surface = src.name;
                row.center.surface = src.name;
                row.center.n = n;
                row.center.m_pp = m;
                row.center.reduced = reduced;
                row.error = msg;
                row.matrix_pass = false;
                rows.push_back(std::move(row));
            }
        };
        try {
            std::vector<std::string> notes;
            if (reduced) {
                const auto [tri, is_mu] = reduced_triangulation(src, &notes);
                const ReducedContext ctx(tri, n, is_mu);
                CheckReport mat = ctx.mats().checks;
                if (is_mu) {
                    mat.append(reduced_blocks(ctx.mats()));
                    mat.append(reduced_parity_check(ctx.mats()));
                }
                for (long m : orders) {
                    BatchRow row{src.name, reduced_center_report(ctx, root_params(n, m), src.name), mat.all_pass(), notes, {}};
                    explicit_note(row.center, row.notes);
                    rows.push_back(std::move(row));
                }
            } else {
                const CenterContext ctx(src.tri, n);
                CheckReport mat = ctx.mats().checks;
                mat.append(verify_block_identities(ctx.mats(), ctx.ext(), seed));
                for (long m : orders)
                    rows.push_back({src.name, center_report(ctx, root_params(n, m), src.name), mat.all_pass(), notes, {}});
            }
        } catch (const std::exception& e) {
            rows.clear();
            fail_all(e.what());
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(groups.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t gi = next++; gi < groups.size(); gi = next++) run_group(gi);
        });
    for (auto& t : pool) t.join();

    std::vector<BatchRow> rows;
    for (auto& g : out)
        for (auto& r : g) rows.push_back(std::move(r));
    return rows;
}

ojson to_json(const CheckReport& r) {
    ojson arr = ojson::array();
    for (const auto& c : r.checks) {
        ojson j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        if (!c.asserted) j["asserted"] = false;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

ojson to_json(const RootParams& p) {
    ojson j;
    j["n"] = p.n;
    j["m_pp"] = p.m_pp;
    j["d_p"] = p.d_p;
    j["m_p"] = p.m_p;
    j["d"] = p.d;
    j["m"] = p.m;
    j["n_p"] = p.n_p;
    j["m_star"] = p.m_star ? ojson(*p.m_star) : ojson(nullptr);
    j["d_star"] = p.d_star ? ojson(*p.d_star) : ojson(nullptr);
    j["m_tilde"] = p.m_tilde ? ojson(*p.m_tilde) : ojson(nullptr);
    j["k"] = p.k;
    j["m_bar"] = p.m_bar;
    j["N"] = p.N;
    j["case_label"] = p.case_label;
    return j;
}

ojson to_json(const CenterReport& r) {
    ojson j;
    j["surface"] = r.surface;
    j["n"] = r.n;
    j["m_pp"] = r.m_pp;
    j["reduced"] = r.reduced;
    j["params"] = to_json(r.params);
    j["rank_kernel"] = r.rank_kernel.get_str();
    j["rank_skew"] = r.rank_skew.get_str();
    j["rank_closed"] = r.rank_closed ? to_string(*r.rank_closed) : "case-not-covered";
    ojson z = ojson::array();
    for (const auto& x : r.z_sequence) z.push_back(x.get_str());
    j["z_sequence"] = z;
    if (r.z_predicted) {
        ojson zp = ojson::array();
        for (const auto& x : *r.z_predicted) zp.push_back(x.get_str());
        j["z_predicted"] = zp;
    } else {
        j["z_predicted"] = "case-not-covered";
    }
    j["lattice_equality"] = r.lattice_equal;
    j["explicit_asserted"] = r.explicit_asserted;
    j["gamma_index"] = r.gamma_index.get_str();
    j["gamma_boundary_index"] = r.gamma_boundary_index.get_str();
    ojson q = ojson::array();
    for (const auto& c : r.quotients) {
        ojson e;
        e["label"] = c.label;
        e["branch"] = c.branch;
        e["computed"] = c.computed.get_str();
        e["predicted"] = to_string(c.predicted);
        e["match"] = c.match();
        q.push_back(std::move(e));
    }
    j["quotient_orders"] = q;
    j["checks"] = to_json(r.checks);
    return j;
}

ojson to_json(const ExactnessReport& r) {
    ojson j;
    j["source_quotient"] = r.source_quotient.get_str();
    j["target_order"] = r.target_order.get_str();
    j["image_order"] = r.image_order.get_str();
    j["image_prime_order"] = r.image_prime_order.get_str();
    j["checks"] = to_json(r.checks);
    return j;
}

ojson to_json(const CaseResult& r) {
    ojson j;
    j["schema"] = kSchemaVersion;
    j["surface"] = r.surface;
    j["n"] = r.n;
    j["m_pp"] = r.m_pp;
    j["reduced"] = r.reduced;
    j["pass"] = r.all_pass();
    j["failures"] = r.failures();
    j["notes"] = r.notes;
    j["center"] = to_json(r.center);
    j["matrix_checks"] = to_json(r.matrix);
    j["cohomology_checks"] = to_json(r.cohomology);
    if (r.exactness) j["exactness"] = to_json(*r.exactness);
    return j;
}

ojson to_json(const BatchRow& r) {
    ojson j = to_json(r.center);
    j["matrix_pass"] = r.matrix_pass;
    j["pass"] = r.error.empty() && r.matrix_pass && r.center.checks.all_pass();
    j["notes"] = r.notes;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::string csv_header() {
    return "surface,n,m_pp,reduced,case_label,rank_kernel,rank_skew,rank_closed,z_sequence,z_predicted,"
           "lattice_equality,explicit_asserted,pass,failures";
}

namespace {

std::string csv_line(const std::string& surface, const CenterReport& c, bool pass, const std::vector<std::string>& fails) {
    std::ostringstream os;
    std::string f;
    for (std::size_t i = 0; i < fails.size(); ++i) f += (i ? ";" : "") + fails[i];
    os << csv_field(surface) << ',' << c.n << ',' << c.m_pp << ',' << (c.reduced ? 1 : 0) << ','
       << csv_field(c.params.case_label) << ',' << c.rank_kernel.get_str() << ',' << c.rank_skew.get_str() << ','
       << (c.rank_closed ? to_string(*c.rank_closed) : "case-not-covered") << ',' << join(c.z_sequence, ';') << ','
       << (c.z_predicted ? join(*c.z_predicted, ';') : "case-not-covered") << ',' << (c.lattice_equal ? 1 : 0) << ','
       << (c.explicit_asserted ? 1 : 0) << ',' << (pass ? 1 : 0) << ',' << csv_field(f);
    return os.str();
}

}  // namespace

std::string csv_row(const BatchRow& r) {
    auto fails = r.center.checks.failures();
    if (!r.matrix_pass) fails.insert(fails.begin(), r.error.empty() ? "matrix identities" : r.error);
    return csv_line(r.surface, r.center, r.error.empty() && r.matrix_pass && r.center.checks.all_pass(), fails);
}

std::string csv_row(const CaseResult& r) { return csv_line(r.surface, r.center, r.all_pass(), r.failures()); }

}  // namespace skein
