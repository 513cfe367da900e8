#pragma once

#include "legsurg/knot_table.hpp"
#include "legsurg/surgery.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace legsurg {

// Verdict lattice. Overtwisted implies a vanishing contact invariant, which
// implies the plus-invariant vanishes; NonvanishingC conflicts with all
// three. "Maximum fired level" uses this rank order.
enum class VerdictLevel {
    Inconclusive = 0,
    NonvanishingC = 1,
    CPlusVanishes = 2,
    CVanishes = 3,
    Overtwisted = 4,
};

std::string to_string(VerdictLevel level);
VerdictLevel verdict_level_from_string(const std::string& s);

using HypValue = std::variant<Rational, bool>;
using Hypotheses = std::map<std::string, HypValue>;

struct Verdict {
    VerdictLevel level;
    std::string rule;
    Hypotheses hypotheses;
    std::vector<std::string> notes;
    std::string scope;  // "" or "any_positive_surgery"
};

// Raised when rules that cannot simultaneously hold all fire.
struct InternalInconsistencyError : std::runtime_error {
    std::vector<std::string> rules;
    explicit InternalInconsistencyError(std::vector<std::string> fired);
};

// Raised by rule_cor2 outside its domain (tb2 = 1).
struct ExcludedCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- individual rules ------------------------------------------------------
// The inequality rules are pure predicates over exact values; every
// inequality is strict, so each rule is silent at equality. Gating on
// presentations (signs, annotations, data availability) happens in
// classify().

// Fires when nothing is surgered with coefficient +1: the result is Stein
// fillable, so the contact invariant does not vanish.
std::optional<Verdict> rule_stein(const SurgeryPresentation& p);

// tb + |rot| < 2 tau* - 1 forces the contact invariant of the +1-surgery to
// vanish.
std::optional<Verdict> rule_main1(const Rational& tb, const Rational& rot,
                                  const Rational& tau_star);

// Isolated connected summand with tb3 + |rot3| < 2 tau3 - 1 inside a
// +1-component, over a QHS3 (-1)-sublink.
std::optional<Verdict> rule_pro0(const SurgeryPresentation& p);

// Two-component clasp configuration: tb2 != 1 and tb1 + |rot1| < 2 tau1 - 1.
std::optional<Verdict> rule_fig3(const Rational& tb1, const Rational& rot1, const Rational& tau1,
                                 const Rational& tb2);

// In a tight contact L-space, tb_q < -1 kills the plus-invariant of the
// +1-surgery.
std::optional<Verdict> rule_prop_tb(const Rational& tb_q, bool ambient_l_space_tight);

// Two-component all-(+1) surgery with an L-space-knot companion:
// l^2 > 2 g(L2) (tb(L1) + 1).
std::optional<Verdict> rule_cor0(const Rational& tb1, const Rational& l, const KnotRecord& rec2);

// Overtwistedness of the +1-surgery: tb < -1 and tb - |rot| < chi/q.
std::optional<Verdict> rule_main3_1(const Rational& tb, const Rational& rot, const Rational& chi,
                                    const Integer& q);

// Overtwistedness of any positive surgery: tb + |rot| < chi/q - 2.
std::optional<Verdict> rule_main3_2(const Rational& tb, const Rational& rot, const Rational& chi,
                                    const Integer& q);

// Clasp configuration with computed image invariants; throws
// ExcludedCaseError at tb2 = 1.
std::optional<Verdict> rule_cor2(const Rational& tb1, const Rational& rot1, const Rational& tb2,
                                 const Rational& rot2, int g1, int g2);

// Annotated two-component +1/+1 front configuration; attaches the
// machine-checked disk witness.
std::optional<Verdict> rule_main2(const SurgeryPresentation& p);

// Diagnostic: -|tb| + |rot| > -chi/q means the knot complement is
// overtwisted (a note, not a verdict about the surgered manifold).
std::optional<std::string> rule_loose(const Rational& tb, const Rational& rot, const Rational& chi,
                                      const Integer& q);

// --- orchestration ---------------------------------------------------------

enum class RuleStatus { Fired, Silent, Skipped, Excluded };

std::string to_string(RuleStatus s);

struct RuleEval {
    std::string rule;
    std::string staging;  // component name when evaluated inside a staging
    RuleStatus status = RuleStatus::Skipped;
    std::optional<VerdictLevel> level;
    Hypotheses hypotheses;
    std::vector<std::string> notes;
    std::string scope;
};

// Derived data of one staging: surgery on every other signed component,
// with the distinguished knot receiving the final +1.
struct StagingInfo {
    int distinguished = 0;
    std::string name;
    std::vector<int> surgered;
    Rational det_m;
    bool is_qhs3 = false;
    std::optional<Rational> tb_q, rot_q;
    std::optional<Integer> q;
    std::optional<Rational> chi;
    bool chi_defaulted = false;
    std::vector<Integer> torsion;
    std::optional<Rational> dual_tb, dual_rot;
    std::optional<Integer> dual_ord;
    bool ambient_l_space_tight = false;
    std::string gate_reason;
    std::vector<std::string> notes;
};

struct Report {
    std::string presentation_echo;
    std::vector<StagingInfo> stagings;
    std::vector<RuleEval> rules;
    VerdictLevel final_level = VerdictLevel::Inconclusive;
    std::vector<std::string> fired_rules;
    std::vector<std::string> notes;
};

struct ClassifyOptions {
    std::set<std::string> disabled_rules;
};

extern const std::vector<std::string> kAllRules;

// Consistency guard: NonvanishingC may never coexist with a vanishing or
// overtwisted conclusion. Throws InternalInconsistencyError.
void enforce_verdict_consistency(const std::vector<std::pair<std::string, VerdictLevel>>& fired);

// Evaluates every rule whose data requirements are met and takes the
// lattice maximum. Throws InternalInconsistencyError when NonvanishingC
// fires together with any vanishing/overtwisted conclusion.
Report classify(const SurgeryPresentation& p, const KnotTable& table,
                const ClassifyOptions& options = {});

}  // namespace legsurg
