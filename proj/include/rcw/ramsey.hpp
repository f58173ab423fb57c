#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcw/budget.hpp"
#include "rcw/coloring.hpp"
#include "rcw/rational.hpp"

namespace rcw::ramsey {

struct TargetSpec {
    enum class Kind { Cycle, Wheel };
    Kind kind = Kind::Cycle;
    int size = 3;  // cycle length t, or wheel rim length m

    static TargetSpec cycle(int t);
    static TargetSpec wheel(int m);

    /// "cycle:<t>" / "wheel:<m>", the CLI syntax.
    std::string str() const;
    static TargetSpec parse(const std::string& s);
};

struct Verdict {
    enum class Kind { Arrows, Counterexample, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<CompleteColoring> coloring;  // verified avoidance coloring
    std::uint64_t nodes = 0;
};

struct ArrowsOptions {
    Budget budget;
    int threads = 1;
    // Disabling symmetry breaking must not change any verdict kind; kept as
    // a switch so that invariant stays testable.
    bool symmetry_breaking = true;

    static ArrowsOptions with_budget(const Budget& b) {
        ArrowsOptions o;
        o.budget = b;
        return o;
    }
};

/// Exhaustive arrowing search: Arrows iff every red/blue coloring of K_N
/// contains the red target or the blue target. Depth-first over edges in
/// lexicographic order, red branch first; after each assignment only targets
/// through the newly decided edge are checked. Symmetry breaking constrains
/// vertex 0's edge row to a blue block followed by a red block. One node =
/// one edge-color assignment attempt.
Verdict arrows(int n, TargetSpec red, TargetSpec blue, const ArrowsOptions& opt = {});

/// Closed-form Ramsey values: the full cycle-cycle table, the cycle-wheel
/// cases (both parities, including r(C_{2k+1}, W_{2k+1}) = 6k+1), wheel-cycle
/// by color swap. nullopt when the parameter pair is not covered -- notably
/// odd n, even m with n < m < 3(n-1)/2.
std::optional<int> known_value(TargetSpec red, TargetSpec blue);

/// Degree-bound parameters under which 2-connected non-bipartite graphs
/// contain every cycle length from 6 up to the circumference. Exact
/// rationals; alpha in [1/4, 1), beta > 0.
struct AdmissiblePair {
    Rational alpha;
    Rational beta;

    AdmissiblePair(Rational a, Rational b);
};

/// floor((3j + beta) / (1 - alpha)), the tightest integer upper bound on
/// r(C_{2k+1}, W_{2j}) implied by an admissible pair; exact arithmetic.
/// Requires j >= 4.
std::int64_t admissible_bound(const AdmissiblePair& p, std::int64_t j);

struct ScanViolation {
    int n = 0;
    std::uint64_t sample_index = 0;
    int missing_length = 0;
    std::vector<std::pair<int, int>> edges;  // offending graph
};

struct ScanSizeReport {
    int n = 0;
    int degree_bound = 0;
    bool vacuous = false;  // degree bound exceeds n-1: no graph qualifies
    int samples_accepted = 0;
    std::uint64_t samples_tried = 0;
};

struct ScanReport {
    std::vector<ScanSizeReport> sizes;
    std::vector<ScanViolation> violations;
    std::uint64_t seed = 0;
    std::string generator;

    bool all_ok() const { return violations.empty(); }
};

/// Samples 2-connected non-bipartite graphs with min degree >= ceil(alpha n
/// + beta) (uniform edge sets, rejection sampling) and asserts the cycle
/// condition 6..c(G) on each. Sizes where the degree bound is unattainable
/// are reported vacuous rather than silently skipped. Desk scale: n <= 14.
ScanReport admissible_pair_scan(const AdmissiblePair& p, int n_lo, int n_hi, int samples,
                                std::uint64_t seed, const Budget& b = {});

struct LowerBoundWitness {
    int n = 0;  // witness order; certifies r > n
    CompleteColoring coloring;
};

/// Dispatches to the construction generators and returns a coloring that
/// passes the avoidance check for the pair, certifying r >= n+1. Covered:
/// (C_odd, W_m), (C_{2k+1}, W_{2k+1}) via the three-clique shape, and
/// (C_{2k+1}, C_{2k+1}); nullopt otherwise.
std::optional<LowerBoundWitness> ramsey_lower_bound_witness(TargetSpec red, TargetSpec blue,
                                                            const Budget& b = {});

}  // namespace rcw::ramsey
