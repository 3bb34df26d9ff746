#pragma once

#include <optional>
#include <string>

#include "homalg.hpp"

namespace hk {

/* Checkers for tilting/cotilting axioms and for the kernel-vanishing
 * criteria that decide whether the induced kernel class behaves
 * homologically.  Every verdict is exact over the ground field; a result is
 * inconclusive only when a stated precondition could not be certified. */

enum class Verdict { satisfied, violated, inconclusive };
const char* verdict_name(Verdict v);

/* One measured quantity backing a verdict. */
struct Evidence {
    std::string label;
    int degree = 0;
    int dimension = 0;
};

struct CriterionReport {
    std::string criterion;
    Verdict verdict = Verdict::inconclusive;
    std::vector<Evidence> evidence;
    std::string cited_condition;
    std::vector<std::string> notes;

    bool satisfied() const { return verdict == Verdict::satisfied; }
};

/* Split membership of x in add(t).  x is a summand of a finite power of t
 * exactly when the identity of x decomposes as a sum of composites through
 * t; the witness satisfies mul(section, retraction) == identity. */
struct AddMembership {
    bool member = false;
    int copies = 0;
    Mat section;     // x -> t^copies
    Mat retraction;  // t^copies -> x
};
AddMembership in_add(const ModulePtr& x, const ModulePtr& t);

/* Exact chain 0 -> anchor -> Y_0 -> ... -> Y_k -> 0 with every Y_i a power
 * of the candidate except the last, which carries an explicit split pair.
 * Each stage embeds through a spanning set of maps that generates the full
 * hom space over the candidate's endomorphisms, so the stage map is a left
 * approximation and a failed stage refutes existence of any such chain. */
struct CoresolveChain {
    bool found = false;
    std::string failure;              // reason when not found
    int failed_stage = -1;
    ModulePtr anchor;
    ModuleMap first;                  // anchor -> Y_0, injective
    std::vector<ModulePtr> terms;     // Y_0 .. Y_k
    std::vector<int> copies;          // candidate copies used per term
    std::vector<ModuleMap> maps;      // Y_i -> Y_{i+1}
    AddMembership terminal;           // split data for Y_k

    int length() const { return static_cast<int>(terms.size()) - 1; }
};
CoresolveChain coresolve_by_add(const ModulePtr& anchor, const ModulePtr& t, int max_len);

/* Mirror image: exact chain 0 -> Y_k -> ... -> Y_0 -> anchor -> 0 built from
 * covers by powers of the candidate, kernels, and a terminal split stage. */
struct ResolveChain {
    bool found = false;
    std::string failure;
    int failed_stage = -1;
    ModulePtr anchor;
    ModuleMap last;                   // Y_0 -> anchor, surjective
    std::vector<ModulePtr> terms;     // Y_0 .. Y_k
    std::vector<int> copies;
    std::vector<ModuleMap> maps;      // Y_{i+1} -> Y_i
    AddMembership terminal;

    int length() const { return static_cast<int>(terms.size()) - 1; }
};
ResolveChain resolve_by_add(const ModulePtr& anchor, const ModulePtr& u, int max_len);

/* The chain terms as a cochain complex in degrees 0..k (anchor omitted). */
Complex chain_complex(const CoresolveChain& ch);

/* Everything a verdict rests on, in re-checkable form: the resolution or
 * coresolution, the self-extension table, and the add-chain witness. */
struct TiltingCertificate {
    std::optional<Resolution> resolution;
    std::optional<Coresolution> coresolution;
    std::vector<Evidence> ext_table;
    std::optional<CoresolveChain> chain;
    std::optional<ResolveChain> cochain;
};

struct AxiomCheck {
    std::string criterion;
    Verdict verdict = Verdict::inconclusive;
    std::string detail;  // first failed axiom, empty when satisfied
    std::vector<Evidence> evidence;
    std::vector<std::string> notes;
    TiltingCertificate certificate;

    bool passed() const { return verdict == Verdict::satisfied; }
};

/* Axioms for an n-tilting module: finite projective resolution, vanishing
 * self-extensions, finite coresolution of the regular module by summands of
 * powers of the candidate. */
AxiomCheck check_tilting(const ModulePtr& t, int n);

/* Dual axioms for an n-cotilting module; w must be an injective cogenerator
 * (checked first; an unusable w yields an inconclusive verdict). */
AxiomCheck check_cotilting(const ModulePtr& u, int n, const ModulePtr& w);

/* Tilting axioms plus the two Mittag-Leffler style conditions, which hold
 * automatically for finite dimensional modules and are recorded as notes. */
AxiomCheck check_ringel(const ModulePtr& m, int n);

/* Kernel-vanishing criterion for a verified n-tilting module t: the upper
 * cohomology of the dualized resolution tensored back through t must vanish,
 * and all endo-side extensions against the comparison kernel must vanish in
 * degrees 0..n.  Pass a previously computed check_tilting result to avoid
 * recomputation; the precondition must hold or the call fails. */
CriterionReport kernel_homological_tilting(const ModulePtr& t, int n,
                                           const AxiomCheck* pre = nullptr);

/* Dual criterion for a verified n-cotilting module u against the injective
 * cogenerator w. */
CriterionReport kernel_homological_cotilting(const ModulePtr& u, int n, const ModulePtr& w,
                                             const AxiomCheck* pre = nullptr);

/* Sufficiency shortcut: when t decomposes as m (+) c with the first summand
 * of projective dimension at most one, the kernel class is homological with
 * no further computation.  Reports inapplicable (inconclusive) when the
 * dimension hypothesis fails; cross-checks the full criterion when it can. */
CriterionReport split_sufficiency(const ModulePtr& t, const ModulePtr& m_part,
                                  const ModulePtr& c_part);

/* Dimension tables for the orthogonality hypotheses appearing in the
 * necessity results: hom spaces between consecutive chain parts and, when a
 * cogenerator w is given, extensions from w against each part.  Reports the
 * hypothesis values only; no conclusion about the kernel class is drawn. */
CriterionReport orthogonality_scan(const std::vector<ModulePtr>& parts,
                                   const ModulePtr& w = nullptr);

/* Records that a verified finite dimensional tilting module is classical
 * (its resolution uses finitely generated projectives only), recomputes the
 * kernel criterion, and asserts the forced agreement. */
CriterionReport classicality_check(const ModulePtr& t, int n);

}  // namespace hk
