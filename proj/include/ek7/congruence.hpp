#ifndef EK7_CONGRUENCE_HPP
#define EK7_CONGRUENCE_HPP

#include <cstddef>
#include <vector>

namespace ek7 {

/**
 * The full solution set of a congruence, as sorted residues in
 * [0, modulus). Producing operations here are quadratic in the unknown,
 * so every set is closed under a -> modulus - a.
 */
struct ResidueSet {
    long modulus = 1;
    std::vector<long> residues;

    bool empty() const { return residues.empty(); }
    std::size_t size() const { return residues.size(); }

    /// Membership after reduction of a into [0, modulus).
    bool contains(long a) const;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

/// All a in [0, m) with a^2 = c (mod m), by exhaustive search.
/// Supported for 1 <= m <= 10^6; c may be any integer (e.g. -1).
ResidueSet solve_square_congruence(long c, long m);

/// True iff c is a square mod m.
bool is_quadratic_residue(long c, long m);

}  // namespace ek7

#endif
