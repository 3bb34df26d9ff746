#pragma once

#include <cstdint>

#include "criteria.hpp"

namespace hk {

/* Randomized and anchored cross-checks.  Each oracle computes one quantity
 * along two routes that share no resolution state and records every
 * disagreement with enough data to replay the trial. */
struct OracleResult {
    std::string name;
    bool passed = false;
    int trials = 0;   // completed comparisons
    int checks = 0;   // individual equalities that held
    uint64_t seed = 0;
    std::vector<std::string> failures;  // one line per mismatch, replayable
    std::vector<std::string> notes;     // anchored values and tripped controls
};

/* Cohomology of a module tensored against a finite complex of projectives
 * that is exact below its top degree, compared with torsion spaces of the
 * top cohomology in complementary degrees.  A zero-differential complex
 * serves as the negative control for the exactness hypothesis. */
OracleResult tensor_shift_oracle(uint64_t seed, int trials);

/* Torsion against a two-sided carrier versus extensions into its space of
 * functionals, with the two routes resolving different legs; includes the
 * one-algebra form where duality swaps torsion and extension outright. */
OracleResult duality_swap_oracle(uint64_t seed, int trials);

/* Extension dimensions by projective resolution of the source versus
 * injective coresolution of the target, anchored on the simples of the
 * two-vertex line. */
OracleResult ext_routes_oracle(uint64_t seed, int trials);

/* Acting by the algebra inside endomorphisms over the endomorphism algebra
 * recovers the algebra exactly on balanced carriers; a simple module is the
 * negative control. */
OracleResult double_centralizer_oracle();

/* Extensions into the algebra read from a projective resolution of a
 * self-orthogonal candidate versus the candidate's add-closure coresolution
 * of the algebra. */
OracleResult chain_extension_oracle();

const std::vector<std::string>& oracle_names();
/* Dispatch by name; seed and trials are ignored by the anchored oracles. */
OracleResult run_oracle(const std::string& name, uint64_t seed, int trials);

}  // namespace hk
