// Command-line front end: analyze, verify, batch, skewnf, emit-matrices.

#include "skein/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using namespace skein;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitInput = 2;
constexpr std::size_t kMaxCases = 10000;

struct SourceOpts {
    std::vector<std::string> builtins;
    std::vector<std::string> specs;
};

void add_source(CLI::App* cmd, SourceOpts& s, bool many) {
    auto* b = cmd->add_option("--builtin", s.builtins, "built-in surface: polygon:k, annulus:r1,r2, genus:g,r");
    auto* f = cmd->add_option("--spec", s.specs, "triangulation spec file (JSON)")->check(CLI::ExistingFile);
    // names contain commas, so never split them
    b->delimiter('\0');
    f->delimiter('\0');
    if (!many) {
        b->expected(1);
        f->expected(1);
        b->excludes(f);
    }
}

std::vector<SurfaceSource> load_sources(const SourceOpts& s) {
    std::vector<SurfaceSource> out;
    for (const auto& b : s.builtins) out.push_back(resolve_builtin(b));
    for (const auto& f : s.specs) out.push_back(resolve_file(f));
    return out;
}

SurfaceSource single_source(const SourceOpts& s) {
    auto v = load_sources(s);
    if (v.size() != 1) throw InputError("exactly one of --builtin or --spec is required");
    return v.front();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw InputError("cannot write " + path);
    os << text;
}

unsigned pool_size() {
    if (const char* env = std::getenv("SKEIN_TORI_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void report_failures(const std::vector<std::string>& fails) {
    for (const auto& f : fails) std::cerr << "FAIL: " << f << '\n';
}

ojson matrix_json(const IntMatrix& m) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& x = m(i, j);
            if (x.fits_slong_p()) row.push_back(x.get_si());
            else row.push_back(x.get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    std::vector<IntVec> rows;
    std::size_t cols = 0;
    for (const auto& r : j) {
        if (!r.is_array()) throw InputError("matrix rows must be arrays");
        IntVec v;
        for (const auto& x : r) {
            if (x.is_number_integer()) v.emplace_back(std::to_string(x.get<long long>()));
            else if (x.is_string()) v.emplace_back(x.get<std::string>());
            else throw InputError("matrix entries must be integers");
        }
        if (!rows.empty() && v.size() != cols) throw InputError("matrix rows have different lengths");
        cols = v.size();
        rows.push_back(std::move(v));
    }
    return IntMatrix::from_rows(rows, cols);
}

struct Options {
    SourceOpts src;
    int n = 2;
    std::vector<int> ns;
    long order = 0;
    std::vector<long> orders;
    bool reduced = false;
    bool zoo = false;
    std::string output = "-";
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string matrix_file;
    std::string pivot = "minabs";
};

int cmd_analyze(const Options& o) {
    const auto res = analyze_case(single_source(o.src), o.n, o.order, o.reduced, o.seed);
    if (o.format == "csv") write_out(o.output, csv_header() + "\n" + csv_row(res) + "\n");
    else write_out(o.output, to_json(res).dump(2) + "\n");
    if (res.all_pass()) return kExitPass;
    report_failures(res.failures());
    return kExitFail;
}

int cmd_verify(const Options& o) {
    const auto src = single_source(o.src);
    const auto ns = o.ns.empty() ? std::vector<int>{2, 3, 4} : o.ns;
    ojson doc;
    doc["schema"] = kSchemaVersion;
    doc["surface"] = src.name;
    doc["reduced"] = o.reduced;
    const auto coh = cohomology_checks(src.tri, {2, 3, 4, 5, 6});
    doc["cohomology_checks"] = to_json(coh);
    std::vector<std::string> fails = coh.failures();
    ojson per_n = ojson::array();
    for (int n : ns) {
        const auto r = matrix_checks(src, n, o.reduced, o.seed);
        ojson e;
        e["n"] = n;
        e["pass"] = r.all_pass();
        e["checks"] = to_json(r);
        per_n.push_back(std::move(e));
        for (const auto& f : r.failures()) fails.push_back("n=" + std::to_string(n) + ": " + f);
    }
    doc["matrix_checks"] = per_n;
    doc["pass"] = fails.empty();
    doc["failures"] = fails;
    write_out(o.output, doc.dump(2) + "\n");
    if (fails.empty()) return kExitPass;
    report_failures(fails);
    return kExitFail;
}

int cmd_batch(const Options& o) {
    auto sources = load_sources(o.src);
    if (o.zoo)
        for (const auto& z : zoo_surfaces()) sources.push_back(resolve_builtin(z));
    if (sources.empty()) throw InputError("batch needs --builtin, --spec or --zoo");
    const auto ns = o.ns.empty() ? std::vector<int>{2, 3} : o.ns;
    if (o.orders.empty()) throw InputError("batch needs --order");
    for (int n : ns)
        if (n < 2) throw InputError("n must be at least 2");
    for (long m : o.orders)
        if (m < 2) throw InputError("order must be at least 2");
    const std::size_t cases = sources.size() * ns.size() * o.orders.size();
    if (cases > kMaxCases) throw InputError("grid has " + std::to_string(cases) + " cases, limit is 10000");

    const auto rows = run_batch(sources, ns, o.orders, o.reduced, o.seed, pool_size());
    std::vector<std::string> fails;
    std::string text;
    if (o.format == "csv") {
        text = csv_header() + "\n";
        for (const auto& r : rows) text += csv_row(r) + "\n";
    } else {
        ojson doc;
        doc["schema"] = kSchemaVersion;
        doc["reduced"] = o.reduced;
        ojson arr = ojson::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        doc["rows"] = arr;
        text = doc.dump(2) + "\n";
    }
    for (const auto& r : rows) {
        const std::string tag = r.surface + " n=" + std::to_string(r.center.n) + " m''=" + std::to_string(r.center.m_pp);
        if (!r.error.empty()) fails.push_back(tag + ": " + r.error);
        else if (!r.matrix_pass) fails.push_back(tag + ": matrix identities");
        for (const auto& f : r.center.checks.failures()) fails.push_back(tag + ": " + f);
    }
    write_out(o.output, text);
    if (fails.empty()) return kExitPass;
    report_failures(fails);
    return kExitFail;
}

int cmd_skewnf(const Options& o) {
    IntMatrix p;
    ojson doc;
    doc["schema"] = kSchemaVersion;
    if (!o.matrix_file.empty()) {
        std::ifstream is(o.matrix_file);
        if (!is) throw InputError("cannot read " + o.matrix_file);
        nlohmann::json j;
        try {
            is >> j;
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("matrix file: ") + e.what());
        }
        p = matrix_from_json(j);
        doc["source"] = o.matrix_file;
    } else {
        const auto src = single_source(o.src);
        if (o.reduced) {
            const auto tri = src.builtin ? build_mu_triangulation(src.tri.surface()) : src.tri;
            p = reduced_matrices(tri, o.n).p;
        } else {
            p = p_matrices(attach_triangles(src.tri), o.n).p;
        }
        doc["source"] = src.name;
        doc["n"] = o.n;
        doc["reduced"] = o.reduced;
    }
    if (p.rows() != p.cols() || !p.is_antisymmetric()) throw InputError("matrix is not square antisymmetric");
    const auto rule = o.pivot == "first" ? PivotRule::FirstNonzero : PivotRule::MinAbs;
    const auto sk = skew_normal_form(p, rule);
    const bool block = sk.x.transpose() * p * sk.x == skew_block_form(sk.h, p.rows());
    const Int det = determinant(sk.x);
    const bool unimodular = det == 1 || det == -1;
    ojson h = ojson::array();
    for (const auto& x : sk.h) h.push_back(x.get_str());
    doc["h"] = h;
    doc["zeros"] = sk.zeros;
    doc["x"] = matrix_json(sk.x);
    doc["block_form"] = block;
    doc["unimodular"] = unimodular;
    write_out(o.output, doc.dump(2) + "\n");
    if (block && unimodular) return kExitPass;
    report_failures({block ? "|det X| = 1" : "X^T P X block form"});
    return kExitFail;
}

int cmd_emit(const Options& o) {
    const auto src = single_source(o.src);
    ojson doc;
    doc["schema"] = kSchemaVersion;
    doc["surface"] = src.name;
    doc["n"] = o.n;
    doc["reduced"] = o.reduced;
    if (o.reduced) {
        const auto tri = src.builtin ? build_mu_triangulation(src.tri.surface()) : src.tri;
        const auto r = reduced_matrices(tri, o.n);
        doc["vertices"] = r.rv.vbar.labels(r.rv.order);
        doc["Q"] = matrix_json(r.q);
        doc["H"] = matrix_json(r.h);
        doc["K"] = matrix_json(r.k);
        doc["P"] = matrix_json(r.p);
    } else {
        const auto x = attach_triangles(src.tri);
        const auto a = p_matrices(x, o.n);
        doc["V"] = a.vs.vbar_star.labels(a.vs.v_x());
        doc["V_prime"] = a.vs.vbar_star.labels(a.vs.v_a());
        doc["Q"] = matrix_json(a.q);
        doc["H"] = matrix_json(a.h);
        doc["K"] = matrix_json(a.k);
        doc["P"] = matrix_json(a.p);
        doc["KQ"] = matrix_json(a.kq);
        std::vector<int> all(a.vs.vbar.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        doc["V_bar"] = a.vs.vbar.labels(all);
        doc["Q_bar"] = matrix_json(a.qbar);
        doc["H_bar"] = matrix_json(a.hbar);
        doc["K_bar"] = matrix_json(a.kbar);
        doc["P_bar"] = matrix_json(a.pbar);
    }
    write_out(o.output, doc.dump(2) + "\n");
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Centers and PI-degrees of Fock-Goncharov quantum tori on triangulated surfaces"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_flag("--reduced", o.reduced, "use the reduced torus");
        c->add_option("--output,-o", o.output, "output path, - for stdout");
        c->add_option("--seed", o.seed, "seed for sampled checks");
    };

    auto* analyze = app.add_subcommand("analyze", "full report for one (surface, n, order)");
    add_source(analyze, o.src, false);
    analyze->add_option("--n", o.n, "rank n")->required()->check(CLI::Range(2, 64));
    analyze->add_option("--order", o.order, "order m'' of q^2")->required()->check(CLI::Range(2L, 1000000L));
    analyze->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    common(analyze);

    auto* verify = app.add_subcommand("verify", "matrix and cohomology identities for one surface");
    add_source(verify, o.src, false);
    verify->add_option("--n", o.ns, "ranks (default 2,3,4)")->delimiter(',')->check(CLI::Range(2, 64));
    common(verify);

    auto* batch = app.add_subcommand("batch", "grid over surfaces x n x order");
    add_source(batch, o.src, true);
    batch->add_flag("--zoo", o.zoo, "add the built-in test zoo");
    batch->add_option("--n", o.ns, "ranks (default 2,3)")->delimiter(',');
    batch->add_option("--order", o.orders, "orders m''")->delimiter(',')->required();
    batch->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    common(batch);

    auto* skew = app.add_subcommand("skewnf", "skew normal form of a matrix file or of P");
    add_source(skew, o.src, false);
    skew->add_option("--matrix", o.matrix_file, "JSON array of rows")->check(CLI::ExistingFile);
    skew->add_option("--n", o.n, "rank n")->check(CLI::Range(2, 64));
    skew->add_option("--pivot", o.pivot)->check(CLI::IsMember({"minabs", "first"}));
    common(skew);

    auto* emit = app.add_subcommand("emit-matrices", "dump Q, H, K, P with vertex labels");
    add_source(emit, o.src, false);
    emit->add_option("--n", o.n, "rank n")->required()->check(CLI::Range(2, 64));
    common(emit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*analyze) return cmd_analyze(o);
        if (*verify) return cmd_verify(o);
        if (*batch) return cmd_batch(o);
        if (*skew) return cmd_skewnf(o);
        if (*emit) return cmd_emit(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitInput;
}
