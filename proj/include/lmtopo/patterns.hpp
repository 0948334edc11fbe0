#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lmtopo/complex.hpp"
#include "lmtopo/embedding.hpp"
#include "lmtopo/quotient.hpp"
#include "lmtopo/rational.hpp"

namespace lmtopo {

/// Three low degree vertices that either span a face (kind a) or sit on
/// two faces {x,y,w} and {y,z,w} (kind b).
struct LowDegreeConfig {
    enum class Kind { a, b };
    Kind kind = Kind::a;
    Vertex x = 0;
    Vertex y = 0;
    Vertex z = 0;
    std::optional<Vertex> w;
    int degree_bound_used = 0;
};

std::string to_string(LowDegreeConfig::Kind kind);

struct LowDegreeSearch {
    std::optional<LowDegreeConfig> config;
    /// Smallest bound for which some configuration exists.
    int minimal_bound = 0;
};

/// Looks for a configuration whose three vertices have degree <= bound,
/// preferring kind a. Throws PreconditionError unless the input is a closed
/// surface.
LowDegreeSearch low_degree_configuration(const Complex2& surface, int bound);

/// Two tetrahedra glued along a face.
Complex2 sigma_pattern();

struct SphereBudget {
    std::size_t count = 0;
    int min_vertices = 4;
    int max_vertices = 12;
    std::uint64_t seed = 1;
    /// Stop once this many distinct L' members are known (0: no limit).
    std::size_t max_lprime = 0;
};

struct ListParameters {
    int degree_bound = 17;
    int face_cap = 47;
    /// Identifications allowed per regular quotient.
    int max_merges = 2;
};

struct MemberProvenance {
    /// Description of the sphere the disc was cut from.
    std::string sphere;
    std::array<Vertex, 3> triple{};
    /// Vertex shared by the two faces in a kind b configuration.
    std::optional<Vertex> w;
    /// Which triple vertex sits between the other two in kind b.
    std::optional<Vertex> middle;
    /// For quotients: index of the parent L' member and the partition.
    std::optional<std::size_t> parent;
    Partition partition;
};

struct ListMember {
    Complex2 complex;
    std::string label;
    MemberProvenance provenance;
};

/**
 * Desk scale forbidden list. L1 holds the two tetrahedra glued along a
 * face; L' holds unions of three vertex stars cut out of sphere
 * triangulations; L'' their regular quotients; L2 the tetrahedron free part
 * of L''. Lists built from a finite sphere sample are incomplete.
 */
struct ForbiddenList {
    ListParameters parameters;
    std::optional<SphereBudget> budget;
    std::vector<ListMember> l1;
    std::vector<ListMember> lprime;
    std::vector<ListMember> ldoubleprime;
    std::vector<ListMember> l2;
    std::size_t spheres_examined = 0;
    bool truncated = false;
    bool complete = false;
};

struct SphereSource {
    Complex2 sphere;
    std::string description;
};

/// Builds the list from explicitly supplied spheres.
ForbiddenList build_forbidden_list(const ListParameters& parameters, const std::vector<SphereSource>& spheres,
                                   std::size_t max_lprime = 0);

/// Generates the spheres from a budget (sphere i uses derive_seed(seed, i)).
ForbiddenList build_forbidden_list(const ListParameters& parameters, const SphereBudget& budget);

/// Unions of stars st(x) u st(y) u st(z) extracted from one sphere for every
/// triple meeting the low degree configuration conditions with the bound.
std::vector<ListMember> extract_star_unions(const Complex2& sphere, const std::string& description,
                                            int degree_bound, int face_cap);

struct MemberReport {
    std::int64_t f = 0;
    std::int64_t boundary_count = 0;
    std::int64_t l_invariant = 0;
    std::int64_t internal_faces = 0;
    /// mu of the closed core left by collapsing, if faces survive.
    std::optional<Rational> closed_sub_mu;
    Rational mu_tilde;
    Rational bound;
    bool l_le_boundary = false;
    bool l_le_f_minus_3 = false;
    /// |boundary| <= f - 3
    bool inequality_holds = false;
    bool internal_faces_ok = false;
    bool mu_tilde_ok = false;
    bool all_checks() const
    {
        return l_le_boundary && l_le_f_minus_3 && inequality_holds && internal_faces_ok && mu_tilde_ok;
    }
};

/// Checks the density inequalities a list member must satisfy against
/// the face cap F: mu_tilde <= (F - 1) / F.
MemberReport verify_list_member(const Complex2& s, int face_cap);

struct CertificateWitness {
    /// "L1[0]" or "L2[i]"
    std::string member;
    Embedding embedding;
    std::vector<Face> image;
};

enum class Verdict { certified_asphericable, not_certified };

std::string to_string(Verdict verdict);

struct Certificate {
    std::vector<Tetrahedron> tetrahedra;
    bool pairwise_face_disjoint = false;
    bool sigma_free = false;
    bool l2_free = false;
    Verdict verdict = Verdict::not_certified;
    std::optional<CertificateWitness> witness;
    /// Always explains that a negative verdict only means the sufficient
    /// condition failed.
    std::string note;
};

Certificate certify_asphericable(const Complex2& y, const ForbiddenList& list);

struct PruneResult {
    Complex2 pruned;
    std::vector<Face> removed;
};

/// Removes the lexicographically smallest face of every tetrahedron.
/// Throws PreconditionError if two tetrahedra share a face.
PruneResult prune_tetrahedra(const Complex2& y);

} // namespace lmtopo
