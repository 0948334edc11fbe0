#include "lmtopo/reports.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "lmtopo/canonical.hpp"
#include "lmtopo/face_list.hpp"
#include "lmtopo/version.hpp"

namespace lmtopo {

namespace {

Json rational_json(const Rational& r)
{
    return to_string(r);
}

Json partition_json(const Partition& p)
{
    Json out = Json::array();
    for (const auto& cls : p) out.push_back(cls);
    return out;
}

Json provenance_json(const MemberProvenance& p)
{
    Json out;
    out["sphere"] = p.sphere;
    out["triple"] = p.triple;
    out["w"] = p.w ? Json(*p.w) : Json(nullptr);
    out["middle"] = p.middle ? Json(*p.middle) : Json(nullptr);
    out["parent"] = p.parent ? Json(*p.parent) : Json(nullptr);
    out["partition"] = partition_json(p.partition);
    return out;
}

MemberProvenance provenance_from_json(const Json& j)
{
    MemberProvenance p;
    p.sphere = j.at("sphere").get<std::string>();
    p.triple = j.at("triple").get<std::array<Vertex, 3>>();
    if (!j.at("w").is_null()) p.w = j.at("w").get<Vertex>();
    if (!j.at("middle").is_null()) p.middle = j.at("middle").get<Vertex>();
    if (!j.at("parent").is_null()) p.parent = j.at("parent").get<std::size_t>();
    for (const auto& cls : j.at("partition")) p.partition.push_back(cls.get<std::vector<Vertex>>());
    return p;
}

std::string fixed(double x)
{
    std::ostringstream out;
    out << std::setprecision(17) << x;
    return out.str();
}

} // namespace

Json faces_json(std::span<const Face> faces)
{
    Json out = Json::array();
    for (const auto& f : faces) out.push_back(f);
    return out;
}

Json complex_json(const Complex2& s)
{
    Json out;
    out["v"] = s.num_vertices();
    out["e"] = s.num_edges();
    out["f"] = s.num_faces();
    out["faces"] = faces_json(s.faces());
    return out;
}

Json to_json(const DensityReport& r)
{
    Json out;
    out["mu"] = rational_json(r.mu);
    out["l_invariant"] = r.l_invariant;
    out["chi"] = r.chi;
    out["f"] = r.f;
    out["v"] = r.v;
    out["identity_check"] = r.identity_check;
    return out;
}

Json to_json(const MuTildeResult& r)
{
    Json out;
    out["value"] = rational_json(r.value);
    out["witness"] = faces_json(r.witness);
    out["nodes_explored"] = r.nodes_explored;
    return out;
}

Json to_json(const DegreeReport& r)
{
    Json out;
    Json hist = Json::object();
    for (const auto& [d, c] : r.histogram) hist[std::to_string(d)] = c;
    out["histogram"] = hist;
    Json lk = Json::object();
    for (const auto& [k, c] : r.l_k) lk[std::to_string(k)] = c;
    out["l_k"] = lk;
    out["average_degree"] = rational_json(r.average_degree);
    Json bound = Json::object();
    for (const auto& [k, b] : r.lemma_bound) bound[std::to_string(k)] = rational_json(b);
    out["lemma_bound"] = bound;
    out["closed_surface"] = r.closed_surface;
    return out;
}

Json to_json(const BettiVector& b)
{
    Json out;
    out["b0"] = b.b0;
    out["b1"] = b.b1;
    out["b2"] = b.b2;
    out["field"] = to_string(b.field);
    return out;
}

Json to_json(const SurfaceInfo& info)
{
    Json out;
    out["is_closed_surface"] = info.is_closed_surface;
    out["euler_characteristic"] = info.euler_characteristic;
    out["orientable"] = info.orientable;
    out["surface_name"] = to_string(info.surface_name);
    return out;
}

Json to_json(const CollapseResult& r)
{
    Json out;
    out["outcome"] = to_string(r.outcome);
    out["core"] = complex_json(r.core);
    Json removed = Json::array();
    for (const auto& [e, f] : r.removed) removed.push_back(Json{{"edge", e}, {"face", f}});
    out["removed"] = removed;
    Json residual = Json::array();
    for (const auto& e : r.residual_graph) residual.push_back(e);
    out["residual_graph"] = residual;
    return out;
}

Json to_json(const QuotientSpec& q)
{
    Json out;
    out["partition"] = partition_json(q.partition);
    out["regular"] = q.regular;
    if (q.violation) {
        Json v;
        v["kind"] = to_string(q.violation->kind);
        v["witnesses"] = q.violation->witnesses;
        out["violation"] = v;
    } else {
        out["violation"] = nullptr;
    }
    out["duplicated_edge_images"] = q.duplicated_edge_images;
    out["quotient"] = complex_json(q.map.target());
    return out;
}

Json to_json(const LowDegreeSearch& r)
{
    Json out;
    if (r.config) {
        Json c;
        c["kind"] = to_string(r.config->kind);
        c["x"] = r.config->x;
        c["y"] = r.config->y;
        c["z"] = r.config->z;
        c["w"] = r.config->w ? Json(*r.config->w) : Json(nullptr);
        c["degree_bound_used"] = r.config->degree_bound_used;
        out["config"] = c;
    } else {
        out["config"] = nullptr;
    }
    out["minimal_bound"] = r.minimal_bound;
    return out;
}

Json to_json(const MemberReport& r)
{
    Json out;
    out["f"] = r.f;
    out["boundary_count"] = r.boundary_count;
    out["l_invariant"] = r.l_invariant;
    out["internal_faces"] = r.internal_faces;
    out["closed_sub_mu"] = r.closed_sub_mu ? rational_json(*r.closed_sub_mu) : Json(nullptr);
    out["mu_tilde"] = rational_json(r.mu_tilde);
    out["bound"] = rational_json(r.bound);
    out["l_le_boundary"] = r.l_le_boundary;
    out["l_le_f_minus_3"] = r.l_le_f_minus_3;
    out["inequality_holds"] = r.inequality_holds;
    out["internal_faces_ok"] = r.internal_faces_ok;
    out["mu_tilde_ok"] = r.mu_tilde_ok;
    out["all_checks"] = r.all_checks();
    return out;
}

Json to_json(const Embedding& e)
{
    Json out = Json::object();
    for (const auto& [a, b] : e.vertex_map) out[std::to_string(a)] = b;
    return out;
}

Json to_json(const Certificate& c)
{
    Json out;
    Json tetra = Json::array();
    for (const auto& t : c.tetrahedra) tetra.push_back(t);
    out["tetrahedra"] = tetra;
    out["pairwise_face_disjoint"] = c.pairwise_face_disjoint;
    out["sigma_free"] = c.sigma_free;
    out["l2_free"] = c.l2_free;
    out["verdict"] = to_string(c.verdict);
    if (c.witness) {
        Json w;
        w["member"] = c.witness->member;
        w["vertex_map"] = to_json(c.witness->embedding);
        w["image"] = faces_json(c.witness->image);
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    out["note"] = c.note;
    return out;
}

namespace {

Json envelope(const char* kind)
{
    Json out;
    out["tool"] = tool_name;
    out["version"] = tool_version;
    out["kind"] = kind;
    return out;
}

} // namespace

Json to_json(const ThresholdReport& r, bool include_timing)
{
    Json out = envelope("threshold");
    Json params;
    params["n_grid"] = r.n_grid;
    params["alpha_grid"] = r.alpha_grid;
    params["c"] = r.c;
    params["trials"] = r.trials;
    params["seed"] = r.seed;
    params["pattern_mu_tilde"] = rational_json(r.pattern_mu_tilde);
    params["pattern_vertices"] = r.pattern_vertices;
    params["pattern_faces"] = r.pattern_faces;
    out["parameters"] = params;
    Json cells = Json::array();
    for (const auto& c : r.cells)
        cells.push_back(Json{{"n", c.n},
                             {"alpha", c.alpha},
                             {"p", c.p},
                             {"trials", c.trials},
                             {"successes", c.successes},
                             {"probability", c.probability()}});
    out["cells"] = cells;
    if (include_timing) out["wall_time_seconds"] = r.wall_time_seconds;
    return out;
}

Json to_json(const BettiReport& r, bool include_timing)
{
    Json out = envelope("betti");
    Json params;
    params["n"] = r.n;
    params["c"] = r.c;
    params["epsilon"] = r.epsilon;
    params["p"] = r.p;
    params["trials"] = r.trials;
    params["seed"] = r.seed;
    params["rational_face_limit"] = r.rational_face_limit;
    out["parameters"] = params;

    Json cell;
    cell["n"] = r.n;
    cell["trials"] = r.trials;
    cell["all_ftwo"] = r.all_ftwo;
    cell["all_wedge"] = r.all_wedge;
    cell["disjoint_trials"] = r.disjoint_trials;
    cell["mean_f2"] = r.mean_f2;
    cell["expected_f2"] = r.expected_f2;
    cell["mean_b2_y"] = r.mean_b2_y;
    cell["mean_b2_z"] = r.mean_b2_z;
    cell["fraction_b2_z_positive"] = r.fraction_b2_z_positive;
    cell["mean_tetrahedra"] = r.mean_tetrahedra;
    cell["expected_tetrahedra"] = r.expected_tetrahedra;
    cell["b2_z_over_n2"] = r.b2_z_over_n2;
    cell["lower_constant"] = r.lower_constant;
    cell["upper_bound"] = r.upper_bound;
    cell["p_in_range"] = r.p_in_range;
    cell["note"] = "b2_z is the second Betti number of the pruned complex Z, not of a group; the "
                   "asymptotic constants are reported without being asserted at finite n";
    out["cells"] = Json::array({cell});

    Json rows = Json::array();
    for (const auto& t : r.rows) {
        Json row;
        row["seed"] = t.seed;
        row["f2"] = t.f2;
        row["tetrahedra"] = t.tetrahedra;
        row["face_disjoint"] = t.face_disjoint;
        row["field"] = to_string(t.field);
        row["b1_y"] = t.b1_y;
        row["b2_y"] = t.b2_y;
        row["b1_z"] = t.b1_z ? Json(*t.b1_z) : Json(nullptr);
        row["b2_z"] = t.b2_z ? Json(*t.b2_z) : Json(nullptr);
        row["ftwo_holds"] = t.ftwo_holds;
        row["wedge_holds"] = t.wedge_holds ? Json(*t.wedge_holds) : Json(nullptr);
        rows.push_back(row);
    }
    out["trials"] = rows;
    if (include_timing) out["wall_time_seconds"] = r.wall_time_seconds;
    return out;
}

Json to_json(const CollapseReport& r, bool include_timing)
{
    Json out = envelope("collapse");
    Json params;
    params["n"] = r.n;
    params["c"] = r.rule.c;
    params["delta"] = r.rule.delta;
    params["p"] = r.p;
    params["trials"] = r.trials;
    params["seed"] = r.seed;
    out["parameters"] = params;
    out["cells"] = Json::array({Json{{"n", r.n},
                                     {"p", r.p},
                                     {"trials", r.trials},
                                     {"graph", r.graph},
                                     {"closed_core", r.closed_core},
                                     {"mixed", r.mixed},
                                     {"graph_fraction", r.graph_fraction()}}});
    if (include_timing) out["wall_time_seconds"] = r.wall_time_seconds;
    return out;
}

std::string to_csv(const ThresholdReport& r)
{
    std::ostringstream out;
    out << "n,alpha,p,trials,successes,probability\n";
    for (const auto& c : r.cells)
        out << c.n << ',' << fixed(c.alpha) << ',' << fixed(c.p) << ',' << c.trials << ',' << c.successes << ','
            << fixed(c.probability()) << '\n';
    return out.str();
}

std::string to_csv(const BettiReport& r)
{
    std::ostringstream out;
    out << "n,c,p,trials,all_ftwo,all_wedge,disjoint_trials,mean_f2,mean_b2_y,mean_b2_z,fraction_b2_z_positive,"
           "mean_tetrahedra,expected_tetrahedra,b2_z_over_n2,lower_constant\n";
    out << r.n << ',' << fixed(r.c) << ',' << fixed(r.p) << ',' << r.trials << ',' << r.all_ftwo << ','
        << r.all_wedge << ',' << r.disjoint_trials << ',' << fixed(r.mean_f2) << ',' << fixed(r.mean_b2_y) << ','
        << fixed(r.mean_b2_z) << ',' << fixed(r.fraction_b2_z_positive) << ',' << fixed(r.mean_tetrahedra) << ','
        << fixed(r.expected_tetrahedra) << ',' << fixed(r.b2_z_over_n2) << ',' << fixed(r.lower_constant) << '\n';
    return out.str();
}

std::string to_csv(const CollapseReport& r)
{
    std::ostringstream out;
    out << "n,p,trials,graph,closed_core,mixed,graph_fraction\n";
    out << r.n << ',' << fixed(r.p) << ',' << r.trials << ',' << r.graph << ',' << r.closed_core << ',' << r.mixed
        << ',' << fixed(r.graph_fraction()) << '\n';
    return out.str();
}

namespace {

struct SetSpec {
    const char* name;
    const char* prefix;
    std::vector<ListMember> ForbiddenList::*members;
};

constexpr SetSpec list_sets[] = {{"L1", "l1", &ForbiddenList::l1},
                                 {"Lprime", "lprime", &ForbiddenList::lprime},
                                 {"Ldoubleprime", "ldoubleprime", &ForbiddenList::ldoubleprime},
                                 {"L2", "l2", &ForbiddenList::l2}};

std::string member_file(const char* prefix, std::size_t i)
{
    std::ostringstream name;
    name << prefix << '_' << std::setw(4) << std::setfill('0') << i << ".txt";
    return name.str();
}

} // namespace

void save_forbidden_list(const std::filesystem::path& dir, const ForbiddenList& list)
{
    std::filesystem::create_directories(dir);
    Json manifest = envelope("forbidden_list");
    manifest["parameters"] = Json{{"degree_bound", list.parameters.degree_bound},
                                  {"face_cap", list.parameters.face_cap},
                                  {"max_merges", list.parameters.max_merges}};
    if (list.budget) {
        manifest["budget"] = Json{{"count", list.budget->count},
                                  {"min_vertices", list.budget->min_vertices},
                                  {"max_vertices", list.budget->max_vertices},
                                  {"seed", list.budget->seed},
                                  {"max_lprime", list.budget->max_lprime}};
    } else {
        manifest["budget"] = nullptr;
    }
    manifest["spheres_examined"] = list.spheres_examined;
    manifest["truncated"] = list.truncated;
    manifest["complete"] = list.complete;
    Json members = Json::array();
    for (const auto& set : list_sets) {
        const auto& vec = list.*(set.members);
        for (std::size_t i = 0; i < vec.size(); ++i) {
            const auto file = member_file(set.prefix, i);
            write_complex_file(dir / file, vec[i].complex);
            members.push_back(Json{{"set", set.name},
                                   {"index", i},
                                   {"file", file},
                                   {"label", to_hex(vec[i].label)},
                                   {"v", vec[i].complex.num_vertices()},
                                   {"f", vec[i].complex.num_faces()},
                                   {"provenance", provenance_json(vec[i].provenance)}});
        }
    }
    manifest["members"] = members;
    std::ofstream out(dir / "manifest.json");
    if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
    out << manifest.dump(2) << '\n';
}

ForbiddenList load_forbidden_list(const std::filesystem::path& dir)
{
    std::ifstream in(dir / "manifest.json");
    if (!in) throw Error("cannot open " + (dir / "manifest.json").string());
    Json manifest;
    try {
        manifest = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed manifest: " + std::string(e.what()));
    }
    ForbiddenList list;
    try {
        const auto& params = manifest.at("parameters");
        list.parameters.degree_bound = params.at("degree_bound").get<int>();
        list.parameters.face_cap = params.at("face_cap").get<int>();
        list.parameters.max_merges = params.at("max_merges").get<int>();
        if (!manifest.at("budget").is_null()) {
            const auto& b = manifest.at("budget");
            SphereBudget budget;
            budget.count = b.at("count").get<std::size_t>();
            budget.min_vertices = b.at("min_vertices").get<int>();
            budget.max_vertices = b.at("max_vertices").get<int>();
            budget.seed = b.at("seed").get<std::uint64_t>();
            budget.max_lprime = b.at("max_lprime").get<std::size_t>();
            list.budget = budget;
        }
        list.spheres_examined = manifest.at("spheres_examined").get<std::size_t>();
        list.truncated = manifest.at("truncated").get<bool>();
        list.complete = manifest.at("complete").get<bool>();
        for (const auto& m : manifest.at("members")) {
            const auto set_name = m.at("set").get<std::string>();
            const SetSpec* set = nullptr;
            for (const auto& s : list_sets)
                if (set_name == s.name) set = &s;
            if (!set) throw Error("unknown member set '" + set_name + "'");
            auto complex = parse_complex_file(dir / m.at("file").get<std::string>());
            auto label = canonical_form(complex);
            if (to_hex(label) != m.at("label").get<std::string>())
                throw Error("canonical label mismatch for " + m.at("file").get<std::string>());
            (list.*(set->members))
                .push_back(ListMember{std::move(complex), std::move(label), provenance_from_json(m.at("provenance"))});
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed manifest: " + std::string(e.what()));
    }
    return list;
}

} // namespace lmtopo
