#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "glq/coset.hpp"

namespace glq {
namespace verify {

// Outcome of one check. Serialization omits the wall time so that reports
// are byte-reproducible for a fixed (seed, parameters).
struct CheckReport {
    std::string name;
    long trials = 0;
    long failures = 0;
    uint64_t seed = 0;
    double elapsed_seconds = 0.0;
    std::vector<std::string> witnesses;  // up to 3 serialized failing inputs
    std::string notes;

    bool passed() const { return failures == 0; }
    void fail(const std::string& witness);
    nlohmann::json to_json() const;
    std::string to_text() const;
};

CheckReport merge(const std::string& name, const std::vector<CheckReport>& parts);

// Star products are unchanged when an operand moves inside its double coset
// by a random generator of the stabilizer subgroup, family by family.
CheckReport check_well_definedness(const FieldSpec& f, int max_block, int max_pad,
                                   long trials_per_family, uint64_t seed);

enum class AssocMode { Exhaustive, Random };

// (a*b)*c == a*(b*c); exhaustive over unit-size objects with offset sweeps,
// or random windows through the matrix route.
CheckReport check_associativity(const FieldSpec& f, AssocMode mode, long budget, uint64_t seed);

// Matrix route and invariant route agree, and the two forms of the eta
// correction term match.
CheckReport check_isomorphism(const FieldSpec& f, long trials, uint64_t seed, int max_block,
                              int max_pad);

struct CompletenessSizes {
    int row_minus = 1, a_size = 1, row_plus = 1;
    int col_minus = 1, b_size = 1, col_plus = 1;
};

// Exhausts the finite matrix group at the truncation, partitions it into
// double cosets by BFS, and checks the partition against the invariants.
CheckReport check_completeness_bruteforce(const FieldSpec& f, const CompletenessSizes& sizes);

// Involution: (a*b)^* == b^* * a^* and involutivity, exhaustive over the
// unit-size offset suite.
CheckReport check_involution(const FieldSpec& f, int eta_max);

// Central elements and the ordered-category morphisms.
CheckReport check_zeta_lmt(const FieldSpec& f, int max_obj, int k_max, int eta_max);

// All structural identities (zeta, lambda/mu/theta, involution).
CheckReport check_structure(const FieldSpec& f, int max_obj = 2, int k_max = 2, int eta_max = 2);

// Kappa completion succeeds exactly at and above the eta lower bound, the
// table entries are consistent, and the canonical window round-trips.
CheckReport check_cone(const FieldSpec& f, int max_obj = 2, int eta_extra = 2);

// Transfer-function multiplicativity, conjugation and padding invariance.
CheckReport check_colligation(const FieldSpec& f, int m, int max_inner, long trials,
                              uint64_t seed);

// Field axioms for q <= 9, subspace counts against Gaussian binomials,
// relation-composition associativity on the exhaustive small case.
CheckReport check_foundations();

}  // namespace verify
}  // namespace glq
