#ifndef EK7_CLASSIFY_HPP
#define EK7_CLASSIFY_HPP

#include <optional>
#include <string>

#include "ek7/congruence.hpp"
#include "ek7/invariants.hpp"

namespace ek7 {

/**
 * How P_k compares with sphere bundles: the standard bundle E_{k,k} it is
 * homeomorphic to, the exotic-sphere multiplicity of the connected-sum
 * decomposition, and the residue sets of a (mod 224) for which E_{ak,k}
 * is oriented / orientation-reversing diffeomorphic to P_k.
 */
struct ClassificationReport {
    long k;
    SphereBundleParams standard_bundle;
    long exotic_count;  // (k - k^3)/6 reduced into [0, 28)
    ResidueSet oriented_solutions;
    ResidueSet reversing_solutions;
    bool oriented_possible;
    bool reversing_possible;
};

/// (k - k^3)/6 mod 28; always integral since k^3 = k (mod 6).
long exotic_sphere_count(long k);

/// Solutions a (mod 224) of a^2 k = (7k - 4k^3)/3, provided k is odd or
/// divisible by 8; the empty set otherwise.
ResidueSet oriented_diffeo_solutions(long k);

/// Solutions a (mod 224) of a^2 k = 2 - (7k - 4k^3)/3, provided 7 does
/// not divide k, k = 1 (mod 4) or k = 2, 10 (mod 32), and -1 is a square
/// mod k; the empty set otherwise.
ResidueSet reversing_diffeo_solutions(long k);

/// A unit b of Z/kZ with q1(b x) = q2(x) for all x, found by exhaustive
/// search over units (smallest witness), or nullopt if the forms are not
/// isomorphic. Both forms must have the same order k.
std::optional<long> quad_forms_isomorphic(const CyclicQuadraticForm& q1,
                                          const CyclicQuadraticForm& q2);

/// Assembles the report for P_k. For small k the residue sets are
/// cross-validated against the invariants themselves (Eells-Kuiper
/// equality and quadratic-form isomorphism per residue); any mismatch is
/// an internal error.
ClassificationReport classify_pk(long k);

/// Renders a residue set the way the classification examples quote them:
/// collapsed to "+/-r1, +/-r2 (mod m)" for the smallest modulus m | 224
/// that expresses the set, or the raw list when none does.
std::string format_residue_set(const ResidueSet& set);

}  // namespace ek7

#endif
