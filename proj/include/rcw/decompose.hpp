#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rcw/budget.hpp"
#include "rcw/coloring.hpp"
#include "rcw/witness.hpp"

namespace rcw::decompose {

/// Input contract for the stability decomposition: k >= 6, 5k+3 <= n <= 6k,
/// and the coloring passes avoidance_check(2k+1, 2k+1).
struct StabilityInput {
    CompleteColoring coloring;
    int k = 6;
};

enum class Branch { NoLeftover, D2, CaseA, CaseBConnected, CaseBSplit, FinalDegree };

const char* branch_name(Branch b);

/// Balanced red-clique split of the wheel rim: |U1'| = |U2'| = k+1, both red
/// cliques, all pairs across (U1' - v, U2' - v) blue. v is normalized into
/// U2', so removing it leaves sizes k+1 and k.
struct RimSplit {
    std::vector<int> u1;  // U1'
    std::vector<int> u2;  // U2'
    int v = -1;
};

/// Everything the decomposition did, re-validatable against the coloring.
struct DecompositionTrace {
    WheelWitness wheel;  // blue wheel with rim 2k+2
    RimSplit rim_split;  // in original labels
    std::array<std::vector<int>, 3> triple;     // X1, X2, X3
    std::array<std::vector<int>, 3> w_classes;  // W1, W2, W3 (== triple when NoLeftover)
    std::optional<int> separator;               // Case B only
    Branch branch = Branch::NoLeftover;
    Partition result;
};

/// Monochromatic witness extracted when a proof-impossible branch fires.
struct MonoWitness {
    std::optional<CycleWitness> red_cycle;
    std::optional<WheelWitness> blue_wheel;

    bool has_witness() const { return red_cycle.has_value() || blue_wheel.has_value(); }
};

/// Input fails the avoidance or range preconditions; the offending
/// monochromatic witness is attached when one exists.
class precondition_violated : public std::runtime_error {
public:
    precondition_violated(const std::string& msg, MonoWitness w = {})
        : std::runtime_error(msg), witness(std::move(w)) {}
    MonoWitness witness;
};

/// A branch the proof rules out was reached and re-extraction found the
/// monochromatic witness proving the input invalid despite the precondition
/// check. Never a valid outcome; it means detection missed the witness
/// earlier.
class internal_contradiction : public std::runtime_error {
public:
    internal_contradiction(const std::string& step_, MonoWitness w)
        : std::runtime_error("internal contradiction at " + step_),
          step(step_),
          witness(std::move(w)) {}
    std::string step;
    MonoWitness witness;
};

/// A refine hypothesis (A-D) does not hold for the supplied arguments.
class hypothesis_violated : public std::runtime_error {
public:
    hypothesis_violated(char which_, const std::string& detail)
        : std::runtime_error(std::string("hypothesis ") + which_ + " violated: " + detail),
          which(which_) {}
    char which;
};

/// No candidate split passes the three checks; the rim hypothesis failed.
class no_split_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Searches the rim coloring (order 2k+2) for the balanced red-clique split:
/// for each candidate v ascending, A is seeded from the least vertex's red
/// neighborhood and v is tried on either side; the first (v, A, B) passing
/// the three checks wins.
RimSplit find_rim_split(const CompleteColoring& rim, int k);

/// Greedy maximal extension of the seed triple: ascending vertex, then
/// ascending class index; no remaining vertex can join any class afterwards.
/// Seeds must be pairwise disjoint with all cross pairs blue.
std::array<VertexSet, 3> maximal_blue_triple(const CompleteColoring& c, const VertexSet& u1,
                                             const VertexSet& u2, const VertexSet& u3);

/// W_i per the priority definitions: v joins W1 if all-red to X1, else W2 if
/// all-red to X2, else W3. Throws internal_contradiction if some vertex is
/// all-red to no class (that vertex yields a blue wheel on invalid input).
std::array<VertexSet, 3> classify_w(const CompleteColoring& c,
                                    const std::array<VertexSet, 3>& x, int k, const Budget& b);

enum class RefineHypothesis { D1, D2 };

/// The two-clique refinement: splits W' by the bipartition of its blue
/// graph, covers the residual red cross edges with at most two vertices
/// (star centers), and returns {V0, V1, V2, V3} with every inside edge red
/// and every cross edge blue on G - V0. Hypotheses A-C plus the D side
/// condition are checked up front.
Partition two_clique_refine(const CompleteColoring& c, const VertexSet& w, const VertexSet& x,
                            const VertexSet& wp, const VertexSet& xp, RefineHypothesis hyp,
                            const VertexSet& extras, int k, const Budget& b = {});

struct VerifyReport {
    bool shape_ok = false;  // exactly four classes partitioning V
    int u0_size = 0;
    std::array<int, 3> class_sizes{};
    bool u0_ok = false;
    bool sizes_ok = false;
    int color_violations = 0;
    // first offending pair and the color it should have had
    std::optional<std::pair<int, int>> first_offender;

    bool passed() const { return shape_ok && u0_ok && sizes_ok && color_violations == 0; }
};

/// Checks |U0| <= 2, |Ui| <= 2k, every edge of G - U0 inside U1..U3 red and
/// every edge between distinct classes blue.
VerifyReport verify_stability_partition(const CompleteColoring& c, const Partition& p, int k);

struct AuditEntry {
    std::string lemma;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/// Re-checks the proof's intermediate conclusions directly on the coloring:
/// each X_i red inside, |W_1| and |W_2| at most 2k, and at most one
/// vertex-disjoint red (W1, W2)-path.
AuditReport lemma_audit(const StabilityInput& in, const DecompositionTrace& trace);

/// Computes the stability partition. check_preconditions exists so negative
/// tests can push invalid colorings into the machinery and watch the
/// internal_contradiction surface a monochromatic witness.
std::pair<Partition, DecompositionTrace> stability_partition(const StabilityInput& in,
                                                             const Budget& b = {},
                                                             bool check_preconditions = true);

nlohmann::json trace_to_json(const DecompositionTrace& trace);
nlohmann::json verify_report_to_json(const VerifyReport& report);
nlohmann::json audit_report_to_json(const AuditReport& report);

}  // namespace rcw::decompose
