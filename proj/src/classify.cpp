#include "isocone/classify.hpp"

#include <algorithm>
#include <cmath>

namespace isocone {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<Vec3> fibonacci_grid(int n) {
    std::vector<Vec3> pts;
    pts.reserve(n);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = 2.0 * kPi * (i / golden - std::floor(i / golden));
        pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return pts;
}

Ball3 ball_from(const std::vector<Vec3>& support) {
    switch (support.size()) {
        case 0: return {Vec3::Zero(), -1.0};
        case 1: return {support[0], 0.0};
        case 2: {
            const Vec3 c = 0.5 * (support[0] + support[1]);
            return {c, (support[0] - c).norm()};
        }
        case 3: {
            const Vec3 a = support[1] - support[0];
            const Vec3 b = support[2] - support[0];
            const Vec3 axb = a.cross(b);
            const double denom = 2.0 * axb.squaredNorm();
            if (denom < 1e-18) {  // collinear: fall back to the widest pair
                Ball3 best{Vec3::Zero(), -1.0};
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        const Vec3 c = 0.5 * (support[i] + support[j]);
                        const double r = (support[i] - c).norm();
                        if (r > best.radius) best = {c, r};
                    }
                return best;
            }
            const Vec3 c = support[0] +
                           (a.squaredNorm() * b.cross(axb) + b.squaredNorm() * axb.cross(a)) /
                               denom;
            return {c, (support[0] - c).norm()};
        }
        default: {
            // circumsphere of four points
            Eigen::Matrix3d m;
            Vec3 rhs;
            for (int i = 1; i < 4; ++i) {
                m.row(i - 1) = 2.0 * (support[i] - support[0]).transpose();
                rhs(i - 1) = support[i].squaredNorm() - support[0].squaredNorm();
            }
            if (std::abs(m.determinant()) < 1e-14) {
                // degenerate: drop one point
                std::vector<Vec3> sub(support.begin(), support.begin() + 3);
                return ball_from(sub);
            }
            const Vec3 c = m.colPivHouseholderQr().solve(rhs);
            return {c, (support[0] - c).norm()};
        }
    }
}

Ball3 welzl(std::vector<Vec3>& pts, std::size_t end, std::vector<Vec3>& support) {
    if (end == 0 || support.size() == 4) return ball_from(support);
    Ball3 b = welzl(pts, end - 1, support);
    const Vec3& p = pts[end - 1];
    if (b.radius >= 0.0 && (p - b.center).norm() <= b.radius + 1e-12) return b;
    support.push_back(p);
    b = welzl(pts, end - 1, support);
    support.pop_back();
    return b;
}

}  // namespace

Ball3 smallest_enclosing_ball(std::vector<Vec3> points, uint64_t seed) {
    if (points.empty()) return {Vec3::Zero(), 0.0};
    Rng rng(seed);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Vec3> support;
    Ball3 b = welzl(points, points.size(), support);
    if (b.radius < 0.0) b = {points[0], 0.0};
    return b;
}

FittedCap smallest_enclosing_cap(const std::vector<Vec3>& directions, uint64_t seed) {
    if (directions.empty()) throw InputError("smallest_enclosing_cap: no directions");
    const Ball3 b = smallest_enclosing_ball(directions, seed);
    FittedCap cap;
    if (b.center.norm() < 1e-9) {
        // directions wrap the sphere; no proper cap
        cap.center = Vec3::UnitZ();
        cap.angle = kPi;
        return cap;
    }
    cap.center = b.center.normalized();
    double worst = 0.0;
    for (const Vec3& d : directions)
        worst = std::max(worst, std::acos(std::clamp(cap.center.dot(d.normalized()), -1.0, 1.0)));
    cap.angle = worst;
    return cap;
}

namespace {

// probe with x-block b, y-block 0 (optional), and the f^x padding for the
// relation rel: +1 on blocks above x, -1 below, 0 parallel
BlockElement padded_probe(const BlockAlgebra& a, const Poset& rel, int x, const Hermitian& b,
                          int forced_zero_y) {
    std::vector<Hermitian> blocks;
    for (int z = 0; z < a.blocks(); ++z) {
        if (z == x) {
            blocks.push_back(b);
        } else if (z == forced_zero_y) {
            blocks.push_back(Hermitian::zero(a.dim(z)));
        } else if (rel.strictly_less(x, z)) {
            blocks.push_back(Hermitian::identity(a.dim(z)));
        } else if (rel.strictly_less(z, x)) {
            blocks.push_back(Hermitian::identity(a.dim(z)) * -1.0);
        } else {
            blocks.push_back(Hermitian::zero(a.dim(z)));
        }
    }
    return BlockElement(a, std::move(blocks));
}

}  // namespace

Poset recover_poset(const MembershipOracle& oracle, const BlockAlgebra& a,
                    const ClassifyConfig& cfg) {
    if (!cfg.sampler) throw InputError("recover_poset: cfg.sampler is required");
    Rng rng(cfg.seed);
    const int k = a.blocks();

    // sample-based candidate relation
    std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, true));
    int used = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        const BlockElement s = cfg.sampler(rng);
        if (oracle.classify(s, cfg.tol).verdict == Verdict::outside) continue;
        ++used;
        std::vector<double> lo(k), hi(k);
        double scale = 1.0;
        for (int x = 0; x < k; ++x) {
            const SpectralDecomposition sd = eig_hermitian(s.block(x));
            lo[x] = sd.eigenvalues(0);
            hi[x] = sd.eigenvalues(sd.eigenvalues.size() - 1);
            scale = std::max({scale, std::abs(lo[x]), std::abs(hi[x])});
        }
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y)
                if (x != y && hi[x] > lo[y] + cfg.tol * scale) rel[x][y] = false;
    }
    if (used == 0) throw InputError("recover_poset: sampler produced no inside elements");

    // separating probes, iterated to a fixpoint as the padding relation
    // shrinks
    Poset probe_rel = Poset::antichain(k);
    {
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y)
                if (x != y && rel[x][y]) pairs.emplace_back(x, y);
        probe_rel = Poset(k, pairs);  // may throw on antisymmetry; handled below
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y) {
                if (x == y || !rel[x][y]) continue;
                const BlockElement probe =
                    padded_probe(a, probe_rel, x, Hermitian::identity(a.dim(x)), y);
                if (oracle.classify(probe, cfg.tol).verdict != Verdict::outside) {
                    rel[x][y] = false;
                    changed = true;
                }
            }
        if (changed) {
            std::vector<std::pair<int, int>> pairs;
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y)
                    if (x != y && rel[x][y]) pairs.emplace_back(x, y);
            try {
                probe_rel = Poset(k, pairs);
            } catch (const InputError& e) {
                throw AmbiguityError(std::string("recover_poset: probe evidence is not a "
                                                 "partial order: ") +
                                     e.what());
            }
        }
    }

    // final validation: antisymmetry and transitivity of the raw relation
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            if (x != y && rel[x][y] && rel[y][x])
                throw AmbiguityError("recover_poset: blocks " + std::to_string(x) + " and " +
                                     std::to_string(y) + " appear mutually below each other");
            for (int z = 0; z < k; ++z)
                if (x != y && y != z && x != z && rel[x][y] && rel[y][z] && !rel[x][z])
                    throw AmbiguityError("recover_poset: transitivity fails through " +
                                         std::to_string(y));
        }
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (x != y && rel[x][y]) pairs.emplace_back(x, y);
    return Poset(k, pairs);
}

RecoveredInner recover_inner(const MembershipOracle& oracle, const BlockAlgebra& a, int x,
                             const Poset& poset, const ClassifyConfig& cfg) {
    if (x < 0 || x >= a.blocks()) throw InputError("recover_inner: block index out of range");
    if (a.dim(x) != 2) return {InnerCone::full(a.dim(x)), {}};

    std::vector<Vec3> accepted;
    for (const Vec3& d : fibonacci_grid(cfg.grid)) {
        const BlockElement probe = padded_probe(a, poset, x, pauli_vector(d), -1);
        if (oracle.classify(probe, cfg.tol).verdict != Verdict::outside) accepted.push_back(d);
    }
    if (accepted.empty())
        throw AmbiguityError("recover_inner: no Bloch direction accepted on block " +
                             std::to_string(x) +
                             "; the identity padding should always be inside");

    const double grid_res = std::sqrt(4.0 * kPi / cfg.grid);
    const FittedCap cap = smallest_enclosing_cap(accepted, cfg.seed);
    if (cap.angle > kPi / 2 + 2.0 * grid_res) return {InnerCone::full(2), std::move(accepted)};
    return {InnerCone::m2_cap(cap.center, std::min(cap.angle, kPi / 2)), std::move(accepted)};
}

ClassifiedIsocone ClassificationResult::to_isocone(const BlockAlgebra& a) const {
    std::vector<InnerCone> cones;
    for (const auto& r : inner) cones.push_back(r.cone);
    return ClassifiedIsocone(a, poset, std::move(cones));
}

ClassificationResult classify_oracle(const MembershipOracle& oracle, const BlockAlgebra& a,
                                     const ClassifyConfig& cfg) {
    ClassificationResult out;
    out.poset = recover_poset(oracle, a, cfg);
    out.samples_used = cfg.trials;
    for (int x = 0; x < a.blocks(); ++x)
        out.inner.push_back(recover_inner(oracle, a, x, out.poset, cfg));
    return out;
}

AgreementReport verify_classification(const MembershipOracle& oracle,
                                      const ClassifiedIsocone& candidate,
                                      const ClassifyConfig& cfg) {
    if (oracle.algebra() != candidate.algebra())
        throw InputError("verify_classification: algebra mismatch");
    const BlockAlgebra& a = candidate.algebra();
    Rng rng(cfg.seed);
    AgreementReport report;

    const auto compare = [&](const BlockElement& e) {
        const Verdict vo = oracle.classify(e, cfg.tol).verdict;
        const Verdict vc = candidate.classify(e, cfg.tol).verdict;
        if (vo == Verdict::boundary || vc == Verdict::boundary) return;
        ++report.compared;
        if (vo == vc)
            ++report.agreed;
        else if (report.witnesses.size() < 32)
            report.witnesses.push_back({e, vo, vc});
    };

    // random elements: raw, interior-biased, and boundary-biased toward each
    // side's decision surface
    const Sampler inside = cfg.sampler ? cfg.sampler : interior_sampler(candidate);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int t = 0; t < cfg.trials; ++t) {
        std::vector<Hermitian> blocks;
        for (int x = 0; x < a.blocks(); ++x)
            blocks.push_back(random_hermitian(rng, a.dim(x), 0.3 + 2.0 * u01(rng)));
        const BlockElement raw(a, std::move(blocks));
        compare(raw);

        const BlockElement seed = inside(rng);
        compare(seed);

        // walk from an inside seed toward a raw element until the chosen
        // side's margin crosses zero, then probe just past the surface
        const MembershipOracle& side =
            (t % 2 == 0) ? static_cast<const MembershipOracle&>(candidate) : oracle;
        double loc = 0.0, hic = 1.0;
        if (side.classify(raw, cfg.tol).verdict == Verdict::outside &&
            side.classify(seed, cfg.tol).verdict == Verdict::inside) {
            for (int it = 0; it < 24; ++it) {
                const double mid = 0.5 * (loc + hic);
                const BlockElement probe = seed + (raw - seed) * mid;
                if (side.classify(probe, cfg.tol).verdict == Verdict::outside)
                    hic = mid;
                else
                    loc = mid;
            }
            compare(seed + (raw - seed) * std::max(0.0, loc - 1e-3));
            compare(seed + (raw - seed) * std::min(1.0, hic + 1e-3));
        }
    }

    // exhaustive 0/1 block-scalar patterns
    if (a.total() <= 12) {
        for (uint32_t mask = 0; mask < (1u << a.blocks()); ++mask) {
            std::vector<Hermitian> blocks;
            for (int x = 0; x < a.blocks(); ++x)
                blocks.push_back(mask & (1u << x) ? Hermitian::identity(a.dim(x))
                                                  : Hermitian::zero(a.dim(x)));
            compare(BlockElement(a, std::move(blocks)));
        }
    }

    // Bloch-direction probes on 2x2 blocks
    for (int x = 0; x < a.blocks(); ++x) {
        if (a.dim(x) != 2) continue;
        for (const Vec3& d : fibonacci_grid(512))
            compare(padded_probe(a, candidate.poset(), x, pauli_vector(d), -1));
    }

    return report;
}

}  // namespace isocone
