#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lmtopo/complex.hpp"
#include "lmtopo/homology.hpp"
#include "lmtopo/rational.hpp"

namespace lmtopo {

std::int64_t binomial(std::int64_t n, std::int64_t k);

/**
 * One uniform draw per triple of {1..n}, triples enumerated in colex order
 * (by largest vertex, then middle, then smallest). Thresholding the same
 * draws at several p couples the samples: the face set grows with p.
 */
class LMDraws {
  public:
    LMDraws(int n, std::uint64_t seed);

    int n() const { return n_; }
    std::uint64_t seed() const { return seed_; }

    /// Full 1-skeleton plus every triple whose draw is below p.
    Complex2 complex_at(double p) const;

  private:
    int n_;
    std::uint64_t seed_;
    std::vector<double> draws_;
};

struct LMSample {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    Complex2 complex;
    std::int64_t f2 = 0;
};

LMSample sample_lm(int n, double p, std::uint64_t seed);

/// f2 log p + (C(n,3) - f2) log(1 - p). For p in {0, 1} returns 0 when the
/// sample is consistent and throws PreconditionError otherwise.
double log_probability(const LMSample& sample);

/// Worker count from LMTOPO_WORKERS, defaulting to the hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on a worker pool.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

struct ThresholdCell {
    int n = 0;
    double alpha = 0.0;
    double p = 0.0;
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    double probability() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
};

struct ThresholdReport {
    Rational pattern_mu_tilde;
    std::int64_t pattern_faces = 0;
    std::int64_t pattern_vertices = 0;
    std::vector<int> n_grid;
    std::vector<double> alpha_grid;
    double c = 1.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<ThresholdCell> cells;
    double wall_time_seconds = 0.0;
};

/// For each (n, alpha), p = c n^-alpha clamped to [0, 1]; records how often
/// the pattern embeds. Draws are shared across alpha for a given (n, trial).
ThresholdReport threshold_experiment(const Complex2& pattern, const std::vector<int>& n_grid,
                                     const std::vector<double>& alpha_grid, double c, std::int64_t trials,
                                     std::uint64_t seed);

struct BettiTrial {
    std::uint64_t seed = 0;
    std::int64_t f2 = 0;
    std::int64_t tetrahedra = 0;
    bool face_disjoint = false;
    Field field = Field::rationals;
    std::int64_t b1_y = 0;
    std::int64_t b2_y = 0;
    std::optional<std::int64_t> b1_z;
    std::optional<std::int64_t> b2_z;
    /// f2 - C(n-1, 2) <= b2(Y) <= f2
    bool ftwo_holds = false;
    /// b2(Z) = b2(Y) - k and b1(Z) = b1(Y); only when tetrahedra are disjoint.
    std::optional<bool> wedge_holds;
};

struct BettiReport {
    int n = 0;
    double c = 0.0;
    double epsilon = 0.0;
    double p = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    /// Exact rational ranks are used while f2 stays below this.
    std::int64_t rational_face_limit = 5000;
    std::vector<BettiTrial> rows;

    bool all_ftwo = false;
    bool all_wedge = false;
    std::int64_t disjoint_trials = 0;
    double mean_f2 = 0.0;
    double expected_f2 = 0.0;
    double mean_b2_y = 0.0;
    double mean_b2_z = 0.0;
    double fraction_b2_z_positive = 0.0;
    double mean_tetrahedra = 0.0;
    /// C(n, 4) p^4
    double expected_tetrahedra = 0.0;
    /// mean b2(Z) / n^2 next to (c - 3) / 8
    double b2_z_over_n2 = 0.0;
    double lower_constant = 0.0;
    /// n^(2 + epsilon)
    double upper_bound = 0.0;
    /// c / n < n^(-1 + epsilon)
    bool p_in_range = false;
    double wall_time_seconds = 0.0;
};

BettiReport betti_experiment(int n, double c, double epsilon, std::int64_t trials, std::uint64_t seed,
                             std::int64_t rational_face_limit = 5000);

/// p = c / n^(1 + delta)
struct PRule {
    double c = 1.0;
    double delta = 0.0;
    double at(int n) const;
};

struct CollapseReport {
    int n = 0;
    PRule rule;
    double p = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::int64_t graph = 0;
    std::int64_t closed_core = 0;
    std::int64_t mixed = 0;
    double graph_fraction() const { return trials ? static_cast<double>(graph) / static_cast<double>(trials) : 0.0; }
    double wall_time_seconds = 0.0;
};

CollapseReport collapse_experiment(int n, const PRule& rule, std::int64_t trials, std::uint64_t seed);

} // namespace lmtopo
