#include "ek7/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ek7 {

namespace {

constexpr long kCongruenceModulus = 224;

// Bound up to which classify_pk re-derives its residue sets from the
// invariants; beyond it the congruence route stands alone.
constexpr long kCrossValidationBound = 30;

long mod_reduce(long long a, long m) {
    long long r = a % m;
    return static_cast<long>(r < 0 ? r + m : r);
}

// (7k - 4k^3)/3 as an exact integer; k^3 = k (mod 3) makes the division
// exact, anything else is a bug.
BigInt ek_congruence_rhs(long k) {
    BigInt kb(k);
    BigInt num = 7 * kb - 4 * kb * kb * kb;
    BigInt quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), BigInt(3).get_mpz_t());
    if (sgn(rem) != 0) {
        throw internal_error("classify: (7k - 4k^3) not divisible by 3");
    }
    return quot;
}

ResidueSet solve_ek_congruence(long k, const BigInt& rhs) {
    long target = mod_reduce(mpz_fdiv_ui(rhs.get_mpz_t(), kCongruenceModulus),
                             kCongruenceModulus);
    ResidueSet out;
    out.modulus = kCongruenceModulus;
    for (long a = 0; a < kCongruenceModulus; ++a) {
        if (mod_reduce(a * a % kCongruenceModulus * (k % kCongruenceModulus),
                       kCongruenceModulus) == target) {
            out.residues.push_back(a);
        }
    }
    return out;
}

void cross_validate(const ClassificationReport& report) {
    const long k = report.k;
    QmodZ ek_p = ek_pk(k);
    CyclicQuadraticForm qp = CyclicQuadraticForm::from_pk(k);

    // Skip parity-invalid a: no bundle E_{ak,k} exists for those.
    auto bundle_for = [&](long a) -> std::optional<SphereBundleParams> {
        if ((a * k - k) % 2 != 0) return std::nullopt;
        return SphereBundleParams(a * k, k);
    };

    for (long a : report.oriented_solutions.residues) {
        auto bundle = bundle_for(a);
        if (!bundle) continue;
        if (!(bundle_mu(*bundle) == ek_p) ||
            !quad_forms_isomorphic(qp, CyclicQuadraticForm::from_bundle(*bundle))) {
            throw internal_error("classify: oriented residue fails the invariant route");
        }
    }
    for (long a : report.reversing_solutions.residues) {
        auto bundle = bundle_for(a);
        if (!bundle) continue;
        if (!(bundle_mu(*bundle) == -ek_p) ||
            !quad_forms_isomorphic(qp.negated(), CyclicQuadraticForm::from_bundle(*bundle))) {
            throw internal_error("classify: reversing residue fails the invariant route");
        }
    }
}

}  // namespace

long exotic_sphere_count(long k) {
    if (k < 1) {
        throw std::invalid_argument("exotic_sphere_count: k must be positive");
    }
    BigInt kb(k);
    BigInt num = kb - kb * kb * kb;
    BigInt quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), BigInt(6).get_mpz_t());
    if (sgn(rem) != 0) {
        throw internal_error("exotic_sphere_count: (k - k^3) not divisible by 6");
    }
    return mod_reduce(mpz_fdiv_ui(quot.get_mpz_t(), 28), 28);
}

ResidueSet oriented_diffeo_solutions(long k) {
    if (k < 1) {
        throw std::invalid_argument("oriented_diffeo_solutions: k must be positive");
    }
    if (k % 2 == 0 && k % 8 != 0) {
        return ResidueSet{kCongruenceModulus, {}};
    }
    return solve_ek_congruence(k, ek_congruence_rhs(k));
}

ResidueSet reversing_diffeo_solutions(long k) {
    if (k < 1) {
        throw std::invalid_argument("reversing_diffeo_solutions: k must be positive");
    }
    bool gate = k % 7 != 0 &&
                (k % 4 == 1 || k % 32 == 2 || k % 32 == 10) &&
                is_quadratic_residue(-1, k);
    if (!gate) {
        return ResidueSet{kCongruenceModulus, {}};
    }
    return solve_ek_congruence(k, BigInt(2) - ek_congruence_rhs(k));
}

std::optional<long> quad_forms_isomorphic(const CyclicQuadraticForm& q1,
                                          const CyclicQuadraticForm& q2) {
    if (q1.order() != q2.order()) {
        throw std::invalid_argument("quad_forms_isomorphic: forms have different orders");
    }
    const long k = q1.order();
    if (k == 1) return 1;  // only the trivial form exists
    for (long b = 1; b < k; ++b) {
        if (std::gcd(b, k) != 1) continue;
        bool match = true;
        for (long x = 0; x < k && match; ++x) {
            match = q1(mod_reduce(static_cast<long long>(b) * x, k)) == q2(x);
        }
        if (match) return b;
    }
    return std::nullopt;
}

ClassificationReport classify_pk(long k) {
    if (k < 1) {
        throw std::invalid_argument("classify_pk: k must be positive");
    }
    ResidueSet oriented = oriented_diffeo_solutions(k);
    ResidueSet reversing = reversing_diffeo_solutions(k);
    ClassificationReport report{
        k,
        SphereBundleParams(k, k),
        exotic_sphere_count(k),
        std::move(oriented),
        std::move(reversing),
        false,
        false,
    };
    report.oriented_possible = !report.oriented_solutions.empty();
    report.reversing_possible = !report.reversing_solutions.empty();
    if (k <= kCrossValidationBound) {
        cross_validate(report);
    }
    return report;
}

std::string format_residue_set(const ResidueSet& set) {
    if (set.empty()) {
        return "none";
    }
    // Try moduli m | set.modulus in increasing order: the set must be the
    // full preimage of its image mod m, and that image symmetric under
    // negation; then it reads as "+/- r_i (mod m)".
    for (long m = 1; m <= set.modulus; ++m) {
        if (set.modulus % m != 0) continue;
        std::set<long> image;
        for (long a : set.residues) image.insert(a % m);
        if (image.size() * (set.modulus / m) != set.residues.size()) continue;
        bool symmetric = true;
        for (long r : image) {
            if (!image.count((m - r) % m)) {
                symmetric = false;
                break;
            }
        }
        if (!symmetric) continue;
        // Collect one representative per +/- pair.
        std::vector<long> reps;
        for (long r : image) {
            if (r <= (m - r) % m) reps.push_back(r);
        }
        std::ostringstream os;
        os << "a = ";
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (i > 0) os << ", ";
            long r = reps[i];
            if (r == 0 || 2 * r == m) {
                os << r;
            } else {
                os << "+/-" << r;
            }
        }
        os << " (mod " << m << ")";
        return os.str();
    }
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < set.residues.size(); ++i) {
        if (i > 0) os << ", ";
        os << set.residues[i];
    }
    os << "} (mod " << set.modulus << ")";
    return os.str();
}

}  // namespace ek7
