// Command line front end for the lmtopo library.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lmtopo/canonical.hpp"
#include "lmtopo/collapse.hpp"
#include "lmtopo/embedding.hpp"
#include "lmtopo/face_list.hpp"
#include "lmtopo/homology.hpp"
#include "lmtopo/invariants.hpp"
#include "lmtopo/patterns.hpp"
#include "lmtopo/quotient.hpp"
#include "lmtopo/reports.hpp"
#include "lmtopo/stochastic.hpp"
#include "lmtopo/surfaces.hpp"
#include "lmtopo/version.hpp"

using namespace lmtopo;

namespace {

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format = "json";
    std::string out;
};

Complex2 read_input(const std::string& path)
{
    if (path == "-") return parse_face_list(std::cin, "<stdin>");
    return parse_complex_file(path);
}

void write_output(const Globals& g, const std::string& text)
{
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out, std::ios::binary);
    if (!out) throw Error("cannot write " + g.out);
    out << text;
}

Json envelope(const char* kind)
{
    Json j;
    j["tool"] = tool_name;
    j["version"] = tool_version;
    j["kind"] = kind;
    return j;
}

void merge(Json& j, const Json& fields)
{
    for (const auto& [k, v] : fields.items()) j[k] = v;
}

void emit(const Globals& g, const Json& j)
{
    if (g.format != "json") throw UsageError("--format csv is only available for experiment reports");
    write_output(g, j.dump(2) + "\n");
}

// Seeds left unset are drawn once and echoed so the run can be repeated.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed)
{
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed: " << s << "\n";
    return s;
}

std::string header(const std::string& what, std::optional<std::uint64_t> seed)
{
    std::string h = "# " + std::string(tool_name) + " " + tool_version + " " + what;
    if (seed) h += " seed=" + std::to_string(*seed);
    return h + "\n";
}

void emit_complex(const Globals& g, const Complex2& s, const std::string& what, std::optional<std::uint64_t> seed)
{
    write_output(g, header(what, seed) + write_face_list(s));
}

void add_seed(CLI::App* cmd, std::optional<std::uint64_t>& seed)
{
    cmd->add_option("--seed", seed, "Random seed (generated and printed to stderr when omitted)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Random 2-complexes: invariants, forbidden lists, certificates and Monte Carlo experiments"};
    app.set_version_flag("--version", std::string(tool_name) + " " + tool_version);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out,-o", g.out, "Output file (default stdout)");

    std::function<void()> action;
    std::optional<std::uint64_t> seed;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a complex in face-list format");
    gen->require_subcommand(1);
    int sphere_v = 8;
    SphereOptions sphere_opts;
    auto* gen_sphere = gen->add_subcommand("sphere", "Random sphere triangulation");
    gen_sphere->add_option("--vertices,-v", sphere_v, "Vertex count (>= 4)")->required();
    gen_sphere->add_option("--flips-per-subdivision", sphere_opts.flips_per_subdivision);
    gen_sphere->add_option("--final-flips-per-vertex", sphere_opts.final_flips_per_vertex);
    add_seed(gen_sphere, seed);
    gen_sphere->callback([&] {
        action = [&] {
            const auto s = resolve_seed(seed);
            emit_complex(g, random_sphere_triangulation(sphere_v, s, sphere_opts),
                         "gen sphere vertices=" + std::to_string(sphere_v), s);
        };
    });

    int torus_m = 3, torus_k = 3, torus_flips = 0;
    auto* gen_torus = gen->add_subcommand("torus", "Grid torus triangulation, optionally flip perturbed");
    gen_torus->add_option("--m", torus_m)->required();
    gen_torus->add_option("--k", torus_k)->required();
    gen_torus->add_option("--perturb", torus_flips, "Random flip attempts after construction");
    add_seed(gen_torus, seed);
    gen_torus->callback([&] {
        action = [&] {
            auto t = grid_torus_triangulation(torus_m, torus_k);
            std::string what = "gen torus m=" + std::to_string(torus_m) + " k=" + std::to_string(torus_k);
            if (torus_flips > 0) {
                const auto s = resolve_seed(seed);
                t = flip_perturb(t, torus_flips, s);
                emit_complex(g, t, what + " perturb=" + std::to_string(torus_flips), s);
            } else {
                emit_complex(g, t, what, std::nullopt);
            }
        };
    });

    std::string catalog_name;
    auto* gen_catalog = gen->add_subcommand("catalog", "Named example complex");
    gen_catalog->add_option("name", catalog_name)->required()->check(CLI::IsMember(catalog_names()));
    gen_catalog->callback(
        [&] { action = [&] { emit_complex(g, catalog(catalog_name), "gen catalog " + catalog_name, std::nullopt); }; });

    int lm_n = 10;
    double lm_p = 0.1;
    auto* gen_lm = gen->add_subcommand("lm", "Linial-Meshulam sample Y(n, p)");
    gen_lm->add_option("--n", lm_n, "Number of vertices")->required();
    gen_lm->add_option("--p", lm_p, "Face probability")->required();
    add_seed(gen_lm, seed);
    gen_lm->callback([&] {
        action = [&] {
            const auto s = resolve_seed(seed);
            std::ostringstream what;
            what << "gen lm n=" << lm_n << " p=" << lm_p;
            emit_complex(g, sample_lm(lm_n, lm_p, s).complex, what.str(), s);
        };
    });

    // single complex commands
    std::string file, file2;

    auto* inv = app.add_subcommand("inv", "Density, Euler characteristic, surface type and degree statistics");
    inv->add_option("file", file, "Face-list file or - for stdin")->required();
    inv->callback([&] {
        action = [&] {
            const auto s = read_input(file);
            auto j = envelope("inv");
            merge(j, to_json(density_report(s)));
            j["e"] = s.num_edges();
            j["surface"] = to_json(classify_surface(s));
            j["degrees"] = to_json(degree_report(s));
            emit(g, j);
        };
    });

    std::string mt_mode = "bnb";
    auto* mt = app.add_subcommand("mutilde", "Minimum density over pure subcomplexes");
    mt->add_option("file", file)->required();
    mt->add_option("--mode", mt_mode)->check(CLI::IsMember({"bnb", "brute"}));
    mt->callback([&] {
        action = [&] {
            const auto s = read_input(file);
            MuTildeOptions opts;
            opts.mode = mt_mode == "brute" ? MuTildeMode::brute : MuTildeMode::branch_and_bound;
            auto j = envelope("mutilde");
            merge(j, to_json(mu_tilde(s, opts)));
            emit(g, j);
        };
    });

    std::optional<std::uint64_t> shuffle;
    auto* col = app.add_subcommand("collapse", "Elementary collapses through free edges");
    col->add_option("file", file)->required();
    col->add_option("--shuffle-seed", shuffle, "Pick free edges at random instead of lexicographically");
    col->callback([&] {
        action = [&] {
            const auto s = read_input(file);
            auto j = envelope("collapse_result");
            merge(j, to_json(collapse(s, CollapseOptions{shuffle})));
            if (shuffle) j["shuffle_seed"] = *shuffle;
            emit(g, j);
        };
    });

    bool want_count = false, want_all = false;
    auto* contains = app.add_subcommand("contains", "Search for embeddings of a pattern in a host");
    contains->add_option("pattern", file)->required();
    contains->add_option("host", file2)->required();
    contains->add_flag("--count", want_count, "Count all embeddings and distinct images");
    contains->add_flag("--all", want_all, "List every embedding");
    contains->callback([&] {
        action = [&] {
            const auto pattern = read_input(file);
            const auto host = read_input(file2);
            const auto mode = want_all ? SearchMode::all : want_count ? SearchMode::count : SearchMode::first;
            const auto r = find_embedding(pattern, host, mode);
            auto j = envelope("contains");
            j["found"] = r.count > 0;
            j["mode"] = want_all ? "all" : want_count ? "count" : "first";
            if (mode != SearchMode::first) {
                j["count"] = r.count;
                j["distinct_images"] = count_distinct_images(pattern, host);
            }
            Json list = Json::array();
            for (const auto& e : r.embeddings)
                list.push_back(Json{{"vertex_map", to_json(e)}, {"image", faces_json(e.image_faces(pattern))}});
            j["embeddings"] = list;
            emit(g, j);
        };
    });

    int bound = 17;
    auto* config = app.add_subcommand("config", "Low degree configuration on a closed surface");
    config->add_option("file", file)->required();
    config->add_option("--bound", bound)->required();
    config->callback([&] {
        action = [&] {
            auto j = envelope("config");
            j["bound"] = bound;
            merge(j, to_json(low_degree_configuration(read_input(file), bound)));
            emit(g, j);
        };
    });

    int max_merges = 1;
    std::size_t face_cap = 30;
    auto* quot = app.add_subcommand("quotients", "Regular quotients up to isomorphism");
    quot->add_option("file", file)->required();
    quot->add_option("--max-merges", max_merges, "Vertex identifications allowed")->required();
    quot->add_option("--face-cap", face_cap, "Refuse inputs with more faces");
    quot->callback([&] {
        action = [&] {
            const auto qs = enumerate_regular_quotients(read_input(file), max_merges, face_cap);
            auto j = envelope("quotients");
            j["max_merges"] = max_merges;
            Json list = Json::array();
            for (const auto& q : qs) {
                Json partition = Json::array();
                for (const auto& cls : q.partition) partition.push_back(cls);
                list.push_back(Json{{"label", to_hex(q.canonical_label)},
                                    {"partition", partition},
                                    {"complex", complex_json(q.complex)}});
            }
            j["quotients"] = list;
            emit(g, j);
        };
    });

    std::string betti_field = "q";
    auto* betti = app.add_subcommand("betti", "Betti numbers over Q or GF(2)");
    betti->add_option("file", file)->required();
    betti->add_option("--field", betti_field)->check(CLI::IsMember({"q", "gf2"}));
    betti->callback([&] {
        action = [&] {
            auto j = envelope("betti_numbers");
            const auto s = read_input(file);
            merge(j, to_json(betti_numbers(s, betti_field == "gf2" ? Field::gf2 : Field::rationals)));
            emit(g, j);
        };
    });

    // forbidden list
    auto* list = app.add_subcommand("list", "Build or check a forbidden list");
    list->require_subcommand(1);
    ListParameters params;
    SphereBudget budget;
    budget.count = 10;
    std::string list_dir;
    auto* build = list->add_subcommand("build", "Build a list from random sphere triangulations");
    build->add_option("--degree", params.degree_bound, "Degree bound d")->required();
    build->add_option("--faces", params.face_cap, "Face cap F")->required();
    build->add_option("--spheres", budget.count, "Number of spheres")->required();
    build->add_option("--min-vertices", budget.min_vertices, "Smallest sphere size");
    build->add_option("--max-vertices", budget.max_vertices, "Largest sphere size");
    build->add_option("--max-merges", params.max_merges, "Vertex identifications allowed per quotient");
    build->add_option("--max-lprime", budget.max_lprime, "Stop after this many L' members (0: no limit)");
    build->add_option("--list-dir", list_dir, "Directory to write")->required();
    add_seed(build, seed);
    build->callback([&] {
        action = [&] {
            budget.seed = resolve_seed(seed);
            const auto built = build_forbidden_list(params, budget);
            save_forbidden_list(list_dir, built);
            auto j = envelope("list_summary");
            j["list_dir"] = list_dir;
            j["seed"] = budget.seed;
            j["l1"] = built.l1.size();
            j["lprime"] = built.lprime.size();
            j["ldoubleprime"] = built.ldoubleprime.size();
            j["l2"] = built.l2.size();
            j["spheres_examined"] = built.spheres_examined;
            j["truncated"] = built.truncated;
            j["complete"] = built.complete;
            emit(g, j);
        };
    });

    auto* verify = list->add_subcommand("verify", "Run the member checks on every L1 and L2 member");
    verify->add_option("list_dir", list_dir)->required();
    verify->callback([&] {
        action = [&] {
            const auto loaded = load_forbidden_list(list_dir);
            auto j = envelope("list_verify");
            j["face_cap"] = loaded.parameters.face_cap;
            Json members = Json::array();
            bool all = true;
            auto check = [&](const char* set, const std::vector<ListMember>& v) {
                for (std::size_t i = 0; i < v.size(); ++i) {
                    const auto r = verify_list_member(v[i].complex, loaded.parameters.face_cap);
                    // L1 only needs the density bound
                    const bool ok = std::string(set) == "L1" ? r.mu_tilde_ok : r.all_checks();
                    all = all && ok;
                    members.push_back(Json{{"member", std::string(set) + "[" + std::to_string(i) + "]"},
                                           {"passed", ok},
                                           {"report", to_json(r)}});
                }
            };
            check("L1", loaded.l1);
            check("L2", loaded.l2);
            j["all_passed"] = all;
            j["members"] = members;
            emit(g, j);
            if (!all) throw Error("some list members failed verification");
        };
    });

    auto* certify = app.add_subcommand("certify", "Sufficient condition for asphericability against a list");
    certify->add_option("file", file)->required();
    certify->add_option("--list", list_dir, "List directory written by list build")->required();
    certify->callback([&] {
        action = [&] {
            const auto loaded = load_forbidden_list(list_dir);
            auto j = envelope("certificate");
            j["list_complete"] = loaded.complete;
            j["list_parameters"] = Json{{"degree_bound", loaded.parameters.degree_bound},
                                        {"face_cap", loaded.parameters.face_cap},
                                        {"max_merges", loaded.parameters.max_merges}};
            merge(j, to_json(certify_asphericable(read_input(file), loaded)));
            emit(g, j);
        };
    });

    // experiments
    auto* exp = app.add_subcommand("experiment", "Monte Carlo experiments on Y(n, p)");
    exp->require_subcommand(1);
    bool csv = false, timing = false;
    std::int64_t trials = 100;
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--trials", trials, "Trials per cell");
        cmd->add_flag("--csv", csv, "Same as --format csv");
        cmd->add_flag("--timing", timing, "Include wall time (output is then not reproducible)");
        add_seed(cmd, seed);
    };
    auto emit_report = [&](const auto& report) {
        if (csv || g.format == "csv") write_output(g, to_csv(report));
        else write_output(g, to_json(report, timing).dump(2) + "\n");
    };

    std::vector<int> n_grid{40};
    std::vector<double> alpha_grid{1.0};
    double c = 1.0;
    std::string pattern_name = "tetrahedron";
    auto* thr = exp->add_subcommand("threshold", "Embedding probability of a pattern over a grid of n and alpha");
    thr->add_option("--pattern", file, "Pattern face-list file");
    thr->add_option("--catalog", pattern_name, "Catalog pattern (when --pattern is absent)")
        ->check(CLI::IsMember(catalog_names()));
    thr->add_option("--n", n_grid, "Vertex counts, comma separated")->delimiter(',');
    thr->add_option("--alpha", alpha_grid, "Exponents, p = c n^-alpha")->delimiter(',');
    thr->add_option("--c", c, "Scale factor");
    common(thr);
    thr->callback([&] {
        action = [&] {
            const auto pattern = file.empty() ? catalog(pattern_name) : read_input(file);
            emit_report(threshold_experiment(pattern, n_grid, alpha_grid, c, trials, resolve_seed(seed)));
        };
    });

    int n = 25;
    double epsilon = 0.1;
    std::int64_t face_limit = 5000;
    auto* bexp = exp->add_subcommand("betti", "Betti numbers of Y and of the pruned complex Z at p = c / n");
    bexp->add_option("--n", n, "Number of vertices");
    bexp->add_option("--c", c, "p = c / n");
    bexp->add_option("--epsilon", epsilon, "Exponent slack in the reported bounds");
    bexp->add_option("--rational-face-limit", face_limit, "Use GF(2) above this many faces");
    common(bexp);
    bexp->callback([&] {
        action = [&] { emit_report(betti_experiment(n, c, epsilon, trials, resolve_seed(seed), face_limit)); };
    });

    double delta = 0.0;
    auto* cexp = exp->add_subcommand("collapse", "How often Y collapses to a graph at p = c / n^(1 + delta)");
    cexp->add_option("--n", n, "Number of vertices");
    cexp->add_option("--c", c, "p = c / n^(1 + delta)");
    cexp->add_option("--delta", delta, "Exponent offset");
    common(cexp);
    cexp->callback([&] {
        action = [&] { emit_report(collapse_experiment(n, PRule{c, delta}, trials, resolve_seed(seed))); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (action) action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return 0;
}
