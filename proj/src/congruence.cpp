#include "ek7/congruence.hpp"

#include <algorithm>
#include <stdexcept>

namespace ek7 {

namespace {

constexpr long kMaxModulus = 1000000;

long mod_reduce(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool ResidueSet::contains(long a) const {
    long r = mod_reduce(a, modulus);
    return std::binary_search(residues.begin(), residues.end(), r);
}

ResidueSet solve_square_congruence(long c, long m) {
    if (m < 1 || m > kMaxModulus) {
        throw std::invalid_argument("solve_square_congruence: modulus out of supported range");
    }
    long target = mod_reduce(c, m);
    ResidueSet out;
    out.modulus = m;
    for (long a = 0; a < m; ++a) {
        if ((a * a) % m == target) {
            out.residues.push_back(a);
        }
    }
    return out;
}

bool is_quadratic_residue(long c, long m) {
    return !solve_square_congruence(c, m).empty();
}

}  // namespace ek7
