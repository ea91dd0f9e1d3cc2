#include "isocone/axioms.hpp"

#include "isocone/conic.hpp"

#include <cmath>

namespace isocone {

bool AxiomReport::all_passed() const {
    for (const auto& r : axioms)
        if (r.testable && !r.passed) return false;
    return true;
}

const AxiomResult& AxiomReport::result(const std::string& name) const {
    for (const auto& r : axioms)
        if (r.axiom == name) return r;
    throw InputError("AxiomReport: no axiom named " + name);
}

namespace {

bool member(const MembershipOracle& oracle, const BlockElement& a, double tol) {
    return oracle.classify(a, tol).verdict != Verdict::outside;
}

// spectral range over all blocks
std::pair<double, double> spectral_range(const BlockElement& a) {
    double lo = kInf, hi = -kInf;
    for (int x = 0; x < a.algebra().blocks(); ++x) {
        const SpectralDecomposition s = eig_hermitian(a.block(x));
        lo = std::min(lo, s.eigenvalues(0));
        hi = std::max(hi, s.eigenvalues(s.eigenvalues.size() - 1));
    }
    return {lo, hi};
}

}  // namespace

AxiomReport check_axioms(const MembershipOracle& oracle, const Sampler& sampler,
                         const AxiomCheckConfig& cfg) {
    Rng rng(cfg.seed);
    AxiomReport report;
    report.seed = cfg.seed;
    report.tol = cfg.tol;

    // Verify the sampler feeds inside elements; keep the draws for reuse.
    std::vector<BlockElement> pool;
    {
        int rejected = 0;
        while (static_cast<int>(pool.size()) < cfg.trials && rejected < 10 * cfg.trials + 50) {
            BlockElement a = sampler(rng);
            if (member(oracle, a, cfg.tol))
                pool.push_back(std::move(a));
            else
                ++rejected;
        }
        if (pool.empty())
            throw InputError("check_axioms: sampler produced no elements inside the cone");
    }
    const int trials = static_cast<int>(pool.size());
    std::uniform_int_distribution<int> pick(0, trials - 1);
    std::uniform_real_distribution<double> uc(-10.0, 10.0);

    // 1. constants
    {
        AxiomResult r{"constants"};
        r.trials = cfg.trials;
        for (int t = 0; t < cfg.trials; ++t) {
            const double c = uc(rng);
            const BlockElement e = BlockElement::scalar(oracle.algebra(), c);
            if (!member(oracle, e, cfg.tol)) {
                ++r.failures;
                if (!r.counterexample)
                    r.counterexample = Counterexample{
                        {e}, "scalar " + std::to_string(c) + " rejected",
                        oracle.classify(e, cfg.tol).margin};
            }
        }
        r.passed = r.failures == 0;
        report.axioms.push_back(std::move(r));
    }

    // 2. sums
    {
        AxiomResult r{"sums"};
        r.trials = cfg.trials;
        for (int t = 0; t < cfg.trials; ++t) {
            const BlockElement& a = pool[pick(rng)];
            const BlockElement& b = pool[pick(rng)];
            const BlockElement s = a + b;
            if (!member(oracle, s, cfg.tol)) {
                ++r.failures;
                if (!r.counterexample)
                    r.counterexample = Counterexample{{a, b},
                                                      "sum of two inside elements rejected",
                                                      oracle.classify(s, cfg.tol).margin};
            }
        }
        r.passed = r.failures == 0;
        report.axioms.push_back(std::move(r));
    }

    // 3. isotone functional calculus
    {
        AxiomResult r{"isotone_calculus"};
        r.trials = cfg.trials;
        for (int t = 0; t < cfg.trials; ++t) {
            const BlockElement& a = pool[pick(rng)];
            const auto [lo, hi] = spectral_range(a);
            const IsotoneFunction f = random_isotone(rng, lo - 0.5, hi + 0.5);
            const BlockElement fa = apply_function(f, a);
            if (!member(oracle, fa, cfg.tol)) {
                ++r.failures;
                if (!r.counterexample)
                    r.counterexample = Counterexample{
                        {a, fa}, "isotone image of an inside element rejected",
                        oracle.classify(fa, cfg.tol).margin};
            }
        }
        r.passed = r.failures == 0;
        report.axioms.push_back(std::move(r));
    }

    // 4. span density surrogate: differences must span all of Re(A)
    {
        AxiomResult r{"span_density"};
        r.trials = cfg.trials;
        SpanTracker span;
        for (int t = 0; t < cfg.trials; ++t) {
            const BlockElement& a = pool[pick(rng)];
            const BlockElement& b = pool[pick(rng)];
            span.add(real_vectorize(a - b));
        }
        const int target = oracle.algebra().herm_dim();
        r.passed = span.rank() == target;
        r.note = "span rank " + std::to_string(span.rank()) + " of " + std::to_string(target);
        if (!r.passed) r.failures = 1;
        report.axioms.push_back(std::move(r));
    }

    // 5. meet/join of commuting pairs (f(a), g(a) always commute)
    {
        AxiomResult r{"commuting_meet_join"};
        r.trials = cfg.trials;
        for (int t = 0; t < cfg.trials; ++t) {
            const BlockElement& a = pool[pick(rng)];
            const auto [lo, hi] = spectral_range(a);
            const IsotoneFunction f = random_isotone(rng, lo - 0.5, hi + 0.5);
            const IsotoneFunction g = random_isotone(rng, lo - 0.5, hi + 0.5);
            const BlockElement b = apply_function(f, a);
            const BlockElement c = apply_function(g, a);
            std::vector<Hermitian> jo, me;
            for (int x = 0; x < a.algebra().blocks(); ++x) {
                jo.push_back(join(b.block(x), c.block(x)));
                me.push_back(meet(b.block(x), c.block(x)));
            }
            const BlockElement bj(a.algebra(), std::move(jo));
            const BlockElement bm(a.algebra(), std::move(me));
            if (!member(oracle, bj, cfg.tol) || !member(oracle, bm, cfg.tol)) {
                ++r.failures;
                if (!r.counterexample)
                    r.counterexample = Counterexample{
                        {b, c}, "meet or join of commuting inside pair rejected", 0.0};
            }
        }
        r.passed = r.failures == 0;
        report.axioms.push_back(std::move(r));
    }

    // closedness cannot be decided from finitely many samples
    {
        AxiomResult r{"closedness"};
        r.testable = false;
        r.passed = false;
        r.note = "not testable from finite samples";
        report.axioms.push_back(std::move(r));
    }

    return report;
}

}  // namespace isocone
