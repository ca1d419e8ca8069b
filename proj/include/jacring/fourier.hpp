#pragma once

#include "jacring/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace jacring {
namespace fourier {

// Two object labels: V (the degree-0 side) and M (the degree-d side).
enum class Leg { V, M };

// F(i): V -> M and G(i): M -> V, 0 <= i <= 2g; a word is a composition
// applied right to left.  F(i) and G(i) both carry shift 2i - 2g.
struct Gen {
    bool is_f = true;
    int index = 0;

    bool operator<(const Gen& o) const {
        if (is_f != o.is_f)
            return is_f < o.is_f;
        return index < o.index;
    }
    bool operator==(const Gen& o) const = default;
};

struct CorrWord {
    Leg source_if_empty = Leg::M;
    std::vector<Gen> gens;

    Leg source() const;
    Leg target() const;
    int shift(int g) const;
    bool operator<(const CorrWord& o) const;
    bool operator==(const CorrWord& o) const = default;
    std::string str() const;
};

using CorrExpr = std::map<CorrWord, Rational>;

// head o CUP o (leg_a (x) leg_b); legs target M, the head consumes the cup
// output.  CUP is a free bilinear symbol with no internal relations.
struct TensorTerm {
    CorrWord head;   // source M
    CorrWord leg_a;  // target M
    CorrWord leg_b;  // target M

    bool operator<(const TensorTerm& o) const;
    bool operator==(const TensorTerm& o) const = default;
    std::string str() const;
};

using TensorExpr = std::map<TensorTerm, Rational>;

struct AxiomSet {
    enum class Kind { None, Full, Half };
    Kind kind = Kind::Full;
    int g = 2;
};

// --- builders -------------------------------------------------------------

CorrWord id_word(Leg l);
CorrWord f_word(int i);
CorrWord g_word(int i);
CorrWord compose(const CorrWord& after, const CorrWord& before);  // after o before

CorrExpr expr_of(const CorrWord& w, Rational c = 1);
CorrExpr expr_add(CorrExpr a, const CorrExpr& b);
CorrExpr expr_scale(const Rational& c, CorrExpr e);
CorrExpr expr_compose(const CorrExpr& after, const CorrExpr& before);

// p^d_{<=k}, p^v_{<=k}, q^d_{>=a}, q^v_{>=a} (q is the tail sum of the
// resolution; a <= 0 gives the identity, a > 2g gives zero), and the
// individual idempotents p_i.
CorrExpr p_le(int k, Leg side, int g);
CorrExpr q_ge(int a, Leg side, int g);
CorrExpr p_idem(int i, Leg side, int g);

// --- rewriting ------------------------------------------------------------

// Canonical form under the axiom set: kill words containing a vanishing
// adjacent pair, merge duplicates, drop zeros.  Deterministic; idempotent.
CorrExpr expand(const CorrExpr& e, const AxiomSet& ax);
TensorExpr expand(const TensorExpr& e, const AxiomSet& ax);

struct TraceStep {
    int side = 0;  // 0 = left, 1 = right
    std::string kind;
    std::string data;
};

struct Verdict {
    bool verified = false;
    std::vector<TraceStep> trace;
};

// Bounded bidirectional search: normalization plus up to `depth` insertions
// or collapses of the resolution of identity on either side.  Verified
// verdicts carry a replayable trace; failure to find a proof within depth
// is NotWithinDepth, never "false".
Verdict verify_identity(const CorrExpr& lhs, const CorrExpr& rhs, const AxiomSet& ax, int depth);

// Re-run a trace mechanically and confirm both sides meet.
bool replay_trace(const CorrExpr& lhs, const CorrExpr& rhs, const AxiomSet& ax,
                  const std::vector<TraceStep>& trace);

// --- catalog --------------------------------------------------------------

struct GoalResult {
    std::string name;
    std::string verdict;  // "Verified" | "NotWithinDepth"
    int trace_steps = 0;
    std::string note;
};

// Every catalog goal evaluated under the given axioms, sorted by name.
std::vector<GoalResult> catalog_run(const AxiomSet& ax);

// Representative identity of a named grid goal (for trace output); returns
// false for goals that are not single identities (shift arithmetic,
// mult_kernel, graded goals).
bool goal_sample(const std::string& name, const AxiomSet& ax, CorrExpr* lhs, CorrExpr* rhs);

// Graded transport: Fbar_{k+l} o STAR_red = CUP o (Fbar_k (x) Fbar_l) in the
// graded quotient, for all 0 <= k, l with k + l <= 2g.  Requires Half.
struct TransportResult {
    int k = 0;
    int l = 0;
    bool commutes = false;
    int discarded_terms = 0;
    bool discarded_all_lower = false;  // every discarded head term has i+j > k+l
};

std::vector<TransportResult> graded_ring_transport(int g);

}  // namespace fourier
}  // namespace jacring
