#include "isocone/saturate.hpp"

#include <algorithm>
#include <cmath>

namespace isocone {

namespace {

// traceless, unit Frobenius norm representative of the ray of g modulo
// identity shifts; empty when g is (numerically) scalar
std::optional<RVec> ray_coordinates(const Hermitian& g) {
    const int n = g.dim();
    const Hermitian t = g - Hermitian::identity(n) * (g.trace() / n);
    const double nn = t.norm();
    if (nn < 1e-11 * std::max(1.0, g.norm())) return std::nullopt;
    return real_vectorize(t * (1.0 / nn));
}

struct Hull {
    int dim = 0;
    std::vector<RVec> columns;     // ray coordinates, plus +-identity
    std::vector<Hermitian> mats;   // matching matrices (identity included)
    SpanTracker span;

    explicit Hull(int n) : dim(n), span(1e-9) {
        const Hermitian id = Hermitian::identity(n);
        columns.push_back(real_vectorize(id * (1.0 / id.norm())));
        columns.push_back(real_vectorize(id * (-1.0 / id.norm())));
        mats.push_back(id);
        span.add(real_vectorize(id));
    }

    bool add(const Hermitian& g) {
        const auto rc = ray_coordinates(g);
        if (!rc) return false;  // scalar, already covered by +-identity
        for (const RVec& c : columns)
            if ((c - *rc).norm() < 1e-8) return false;
        columns.push_back(*rc);
        mats.push_back(g);
        span.add(real_vectorize(g));
        return true;
    }

    RMat basis() const {
        RMat b(dim * dim, static_cast<int>(columns.size()));
        for (std::size_t j = 0; j < columns.size(); ++j)
            b.col(static_cast<int>(j)) = columns[j];
        return b;
    }

    double residual(const Hermitian& target) const {
        return nnls(basis(), real_vectorize(target)).residual;
    }
};

}  // namespace

SaturationReport saturate(const std::vector<Hermitian>& generators,
                          const SaturationConfig& cfg) {
    if (generators.empty()) throw InputError("saturate: need at least one generator");
    const int n = generators.front().dim();
    if (n < 2) throw InputError("saturate: dimension must be at least 2");
    for (const auto& g : generators)
        if (g.dim() != n) throw InputError("saturate: generators have mixed dimensions");

    Rng rng(cfg.seed);
    Hull hull(n);
    std::vector<Projection> registry;
    std::size_t fresh_begin = 0;  // registry index where the last round's additions start

    const auto add_projection = [&](const Projection& p) {
        if (p.rank() == 0 || p.rank() == n) return;  // 0 and 1 carry no information
        if (static_cast<int>(registry.size()) >= cfg.max_projections) return;
        for (const Projection& q : registry)
            if ((q.mat() - p.mat()).norm() < 1e-8) return;
        registry.push_back(p);
        hull.add(p.matrix());
    };

    const auto harvest = [&](const Hermitian& m) {
        const LayerCake lc = layer_cake(m, 1e-9);
        for (const Projection& p : lc.projections) add_projection(p);
    };

    // seed: original generators enter the hull; their layer cakes seed the
    // projection registry
    for (const auto& g : generators) {
        hull.add(g);
        harvest(g);
    }

    SaturationReport report;
    report.dim = n;
    report.span_target = n * n;

    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double combo_ts[3] = {0.5, 0.3, 0.7};

    for (int round = 1; round <= cfg.max_rounds; ++round) {
        const std::size_t reg_before = registry.size();

        // deterministic pair sweeps, newest members first
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = fresh_begin; i < reg_before; ++i)
            for (std::size_t j = 0; j < i; ++j) pairs.emplace_back(j, i);
        std::vector<std::pair<std::size_t, std::size_t>> older;
        for (std::size_t i = 1; i < fresh_begin; ++i)
            for (std::size_t j = 0; j < i; ++j) older.emplace_back(j, i);
        std::shuffle(older.begin(), older.end(), rng);
        pairs.insert(pairs.end(), older.begin(), older.end());
        if (static_cast<int>(pairs.size()) > cfg.pair_sweeps_per_round)
            pairs.resize(cfg.pair_sweeps_per_round);

        for (const auto& [i, j] : pairs) {
            const Projection& p = registry[i];
            const Projection& q = registry[j];
            const Mat comm = p.mat() * q.mat() - q.mat() * p.mat();
            if (comm.norm() < 1e-10) {
                add_projection(proj_meet(p, q));
                add_projection(proj_join(p, q));
                continue;
            }
            for (double t : combo_ts)
                harvest(p.matrix() * t + q.matrix() * (1.0 - t));
        }
        fresh_begin = reg_before;

        // random nonnegative combinations fed through the isotone dictionary
        for (int op = 0; op < cfg.random_ops_per_round; ++op) {
            if (static_cast<int>(hull.mats.size()) >= cfg.max_generators) break;
            std::uniform_int_distribution<std::size_t> pick(0, hull.mats.size() - 1);
            Hermitian c = Hermitian::zero(n);
            const int terms = 2 + static_cast<int>(u01(rng) * 3.0);
            for (int k = 0; k < terms; ++k) {
                double coef = 0.2 + u01(rng);
                const std::size_t idx = pick(rng);
                // the hull stores only +identity; flip its sign sometimes to
                // exercise the constants axiom in combinations
                if (idx == 0 && u01(rng) < 0.5) coef = -coef;
                c = c + hull.mats[idx] * coef;
            }
            const SpectralDecomposition s = eig_hermitian(c);
            const double lo = s.eigenvalues(0), hi = s.eigenvalues(n - 1);
            const IsotoneFunction f = random_isotone(rng, lo - 0.5, hi + 0.5);
            hull.add(apply_function(f, c));
            harvest(c);
        }

        // witness check
        report.witness_residuals.assign(generators.size(), 0.0);
        bool witnessed = true;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            const double res = hull.residual(generators[g] * -1.0);
            report.witness_residuals[g] = res;
            witnessed = witnessed &&
                        res <= cfg.witness_residual * std::max(1.0, generators[g].norm());
        }

        SaturationRound stats;
        stats.round = round;
        stats.span_dim = hull.span.rank();
        stats.triviality_witnessed = witnessed;
        stats.generators = static_cast<int>(hull.mats.size());
        report.history.push_back(stats);
        report.span_full = hull.span.rank() == n * n;
        report.triviality_witnessed = witnessed;

        if (report.span_full && witnessed) break;
    }

    if (!report.triviality_witnessed || !report.span_full)
        report.note = "not saturated within budget";
    return report;
}

SaturationCone::SaturationCone(std::vector<Hermitian> generators, double residual_tol)
    : algebra_({generators.empty() ? 1 : generators.front().dim()}),
      generators_(std::move(generators)),
      residual_tol_(residual_tol) {
    if (generators_.empty()) throw InputError("SaturationCone: need generators");
    const int n = generators_.front().dim();
    algebra_ = BlockAlgebra({n});
    std::vector<RVec> cols;
    const Hermitian id = Hermitian::identity(n);
    cols.push_back(real_vectorize(id));
    cols.push_back(real_vectorize(id * -1.0));
    for (const auto& g : generators_) {
        if (g.dim() != n) throw InputError("SaturationCone: mixed dimensions");
        cols.push_back(real_vectorize(g));
    }
    basis_ = RMat(n * n, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) basis_.col(static_cast<int>(j)) = cols[j];
}

MembershipResult SaturationCone::classify_matrix(const Hermitian& a, double tol) const {
    const double scale = std::max(1.0, a.norm());
    const double res = nnls(basis_, real_vectorize(a)).residual;
    return classify_margin(residual_tol_ * scale - res, tol * scale);
}

MembershipResult SaturationCone::classify(const BlockElement& a, double tol) const {
    if (a.algebra() != algebra_) throw InputError("SaturationCone: algebra mismatch");
    return classify_matrix(a.block(0), tol);
}

}  // namespace isocone
