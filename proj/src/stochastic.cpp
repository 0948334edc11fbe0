#include "lmtopo/stochastic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "lmtopo/collapse.hpp"
#include "lmtopo/embedding.hpp"
#include "lmtopo/invariants.hpp"
#include "lmtopo/patterns.hpp"
#include "lmtopo/random.hpp"

namespace lmtopo {

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

LMDraws::LMDraws(int n, std::uint64_t seed) : n_(n), seed_(seed)
{
    if (n < 3) throw PreconditionError("Linial-Meshulam sample needs n >= 3");
    Rng rng(seed);
    draws_.resize(static_cast<std::size_t>(binomial(n, 3)));
    for (auto& d : draws_) d = uniform_real(rng);
}

Complex2 LMDraws::complex_at(double p) const
{
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(binomial(n_, 2)));
    for (Vertex a = 1; a <= n_; ++a)
        for (Vertex b = a + 1; b <= n_; ++b) edges.push_back({a, b});
    std::vector<Face> faces;
    std::size_t i = 0;
    for (Vertex c = 3; c <= n_; ++c)
        for (Vertex b = 2; b < c; ++b)
            for (Vertex a = 1; a < b; ++a, ++i)
                if (draws_[i] < p) faces.push_back({a, b, c});
    return Complex2::make({}, std::move(edges), std::move(faces), true);
}

LMSample sample_lm(int n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("sample_lm: p must lie in [0, 1]");
    LMDraws draws(n, seed);
    LMSample s;
    s.n = n;
    s.p = p;
    s.seed = seed;
    s.complex = draws.complex_at(p);
    s.f2 = static_cast<std::int64_t>(s.complex.num_faces());
    return s;
}

double log_probability(const LMSample& sample)
{
    const auto triples = binomial(sample.n, 3);
    if (sample.p <= 0.0 || sample.p >= 1.0) {
        const bool consistent = (sample.p <= 0.0 && sample.f2 == 0) || (sample.p >= 1.0 && sample.f2 == triples);
        if (!consistent) throw PreconditionError("log_probability: sample has probability zero under p");
        return 0.0;
    }
    return static_cast<double>(sample.f2) * std::log(sample.p) +
           static_cast<double>(triples - sample.f2) * std::log1p(-sample.p);
}

std::size_t worker_count()
{
    if (const char* env = std::getenv("LMTOPO_WORKERS")) {
        try {
            auto n = std::stoul(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body)
{
    const auto workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (auto i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

double clamp_probability(double p)
{
    return std::clamp(p, 0.0, 1.0);
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

ThresholdReport threshold_experiment(const Complex2& pattern, const std::vector<int>& n_grid,
                                     const std::vector<double>& alpha_grid, double c, std::int64_t trials,
                                     std::uint64_t seed)
{
    if (pattern.num_faces() == 0) throw PreconditionError("threshold_experiment: pattern has no faces");
    if (trials < 1) throw PreconditionError("threshold_experiment: trials must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    ThresholdReport report;
    report.pattern_mu_tilde = mu_tilde(pattern).value;
    report.pattern_faces = static_cast<std::int64_t>(pattern.num_faces());
    report.pattern_vertices = static_cast<std::int64_t>(pattern.num_vertices());
    report.n_grid = n_grid;
    report.alpha_grid = alpha_grid;
    report.c = c;
    report.trials = trials;
    report.seed = seed;

    for (std::size_t ni = 0; ni < n_grid.size(); ++ni) {
        const int n = n_grid[ni];
        std::vector<double> ps;
        for (double alpha : alpha_grid) ps.push_back(clamp_probability(c * std::pow(static_cast<double>(n), -alpha)));
        // hits[t * alphas + a]
        std::vector<char> hits(static_cast<std::size_t>(trials) * alpha_grid.size(), 0);
        parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
            LMDraws draws(n, derive_seed(derive_seed(seed, ni), t));
            for (std::size_t a = 0; a < ps.size(); ++a) {
                auto y = draws.complex_at(ps[a]);
                hits[t * ps.size() + a] = find_embedding(pattern, y, SearchMode::first).count > 0 ? 1 : 0;
            }
        });
        for (std::size_t a = 0; a < alpha_grid.size(); ++a) {
            ThresholdCell cell{n, alpha_grid[a], ps[a], trials, 0};
            for (std::int64_t t = 0; t < trials; ++t) cell.successes += hits[static_cast<std::size_t>(t) * ps.size() + a];
            report.cells.push_back(cell);
        }
    }
    report.wall_time_seconds = seconds_since(start);
    return report;
}

BettiReport betti_experiment(int n, double c, double epsilon, std::int64_t trials, std::uint64_t seed,
                             std::int64_t rational_face_limit)
{
    if (n < 3) throw PreconditionError("betti_experiment: n must be >= 3");
    if (trials < 1) throw PreconditionError("betti_experiment: trials must be >= 1");
    const double p = c / static_cast<double>(n);
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("betti_experiment: c / n must lie in [0, 1]");
    const auto start = std::chrono::steady_clock::now();

    BettiReport report;
    report.n = n;
    report.c = c;
    report.epsilon = epsilon;
    report.p = p;
    report.trials = trials;
    report.seed = seed;
    report.rational_face_limit = rational_face_limit;
    report.rows.resize(static_cast<std::size_t>(trials));

    const auto lower = binomial(n - 1, 2);
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        BettiTrial row;
        row.seed = derive_seed(seed, t);
        const auto y = sample_lm(n, p, row.seed);
        row.f2 = y.f2;
        row.field = y.f2 <= rational_face_limit ? Field::rationals : Field::gf2;
        const auto tetra = find_tetrahedra(y.complex);
        row.tetrahedra = static_cast<std::int64_t>(tetra.tetrahedra.size());
        row.face_disjoint = tetra.pairwise_face_disjoint;
        const auto by = betti_numbers(y.complex, row.field);
        row.b1_y = by.b1;
        row.b2_y = by.b2;
        row.ftwo_holds = (row.f2 - lower <= row.b2_y) && (row.b2_y <= row.f2);
        if (row.face_disjoint) {
            const auto z = prune_tetrahedra(y.complex).pruned;
            const auto bz = betti_numbers(z, row.field);
            row.b1_z = bz.b1;
            row.b2_z = bz.b2;
            row.wedge_holds = bz.b2 == row.b2_y - row.tetrahedra && bz.b1 == row.b1_y;
        }
        report.rows[t] = row;
    });

    report.all_ftwo = true;
    report.all_wedge = true;
    double sum_f2 = 0, sum_b2y = 0, sum_b2z = 0, sum_k = 0;
    std::int64_t positive = 0;
    for (const auto& row : report.rows) {
        report.all_ftwo = report.all_ftwo && row.ftwo_holds;
        sum_f2 += static_cast<double>(row.f2);
        sum_b2y += static_cast<double>(row.b2_y);
        sum_k += static_cast<double>(row.tetrahedra);
        if (row.wedge_holds) {
            ++report.disjoint_trials;
            report.all_wedge = report.all_wedge && *row.wedge_holds;
            sum_b2z += static_cast<double>(*row.b2_z);
            positive += *row.b2_z > 0 ? 1 : 0;
        }
    }
    const auto count = static_cast<double>(trials);
    report.mean_f2 = sum_f2 / count;
    report.expected_f2 = p * static_cast<double>(binomial(n, 3));
    report.mean_b2_y = sum_b2y / count;
    report.mean_tetrahedra = sum_k / count;
    report.expected_tetrahedra = static_cast<double>(binomial(n, 4)) * std::pow(p, 4);
    if (report.disjoint_trials > 0) {
        report.mean_b2_z = sum_b2z / static_cast<double>(report.disjoint_trials);
        report.fraction_b2_z_positive = static_cast<double>(positive) / static_cast<double>(report.disjoint_trials);
    }
    const double nn = static_cast<double>(n);
    report.b2_z_over_n2 = report.mean_b2_z / (nn * nn);
    report.lower_constant = (c - 3.0) / 8.0;
    report.upper_bound = std::pow(nn, 2.0 + epsilon);
    report.p_in_range = p < std::pow(nn, -1.0 + epsilon);
    report.wall_time_seconds = seconds_since(start);
    return report;
}

double PRule::at(int n) const
{
    return clamp_probability(c / std::pow(static_cast<double>(n), 1.0 + delta));
}

CollapseReport collapse_experiment(int n, const PRule& rule, std::int64_t trials, std::uint64_t seed)
{
    if (trials < 1) throw PreconditionError("collapse_experiment: trials must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    CollapseReport report;
    report.n = n;
    report.rule = rule;
    report.p = rule.at(n);
    report.trials = trials;
    report.seed = seed;

    std::vector<CollapseOutcome> outcomes(static_cast<std::size_t>(trials));
    parallel_for(outcomes.size(), [&](std::size_t t) {
        const auto y = sample_lm(n, report.p, derive_seed(seed, t));
        outcomes[t] = collapse(y.complex).outcome;
    });
    for (auto o : outcomes) {
        if (o == CollapseOutcome::graph) ++report.graph;
        else if (o == CollapseOutcome::closed_core) ++report.closed_core;
        else ++report.mixed;
    }
    report.wall_time_seconds = seconds_since(start);
    return report;
}

} // namespace lmtopo
