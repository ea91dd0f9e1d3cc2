#pragma once

// Statistical check of the pre-isocone axioms against a membership oracle:
// constants, sums, stability under nondecreasing functional calculus, span
// density of I - I, and meet/join closure for commuting pairs.  Norm
// closedness is reported as not testable.

#include "isocone/cone.hpp"
#include "isocone/sampling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isocone {

struct AxiomCheckConfig {
    int trials = 200;
    double tol = 1e-9;
    uint64_t seed = 1;
};

struct Counterexample {
    std::vector<BlockElement> elements;
    std::string description;
    double margin = 0.0;
};

struct AxiomResult {
    std::string axiom;
    bool testable = true;
    bool passed = false;
    int trials = 0;
    int failures = 0;
    std::string note;
    std::optional<Counterexample> counterexample;
};

struct AxiomReport {
    std::vector<AxiomResult> axioms;
    uint64_t seed = 0;
    double tol = 0.0;

    bool all_passed() const;
    const AxiomResult& result(const std::string& name) const;
};

// Runs the checks.  The sampler must produce elements the oracle labels
// inside; if it cannot, an InputError is raised.
AxiomReport check_axioms(const MembershipOracle& oracle, const Sampler& sampler,
                         const AxiomCheckConfig& cfg);

}  // namespace isocone
