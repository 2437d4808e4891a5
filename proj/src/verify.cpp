#include "ek7/verify.hpp"

#include <random>
#include <sstream>

#include "ek7/classify.hpp"
#include "ek7/congruence.hpp"
#include "ek7/cyclotomic.hpp"
#include "ek7/invariants.hpp"
#include "ek7/qmodz.hpp"

namespace ek7 {

namespace {

class Suite {
public:
    template <class F>
    void add(const std::string& name, F body) {
        VerifyItem item{name, false, ""};
        try {
            std::string detail;
            item.pass = body(detail);
            item.detail = item.pass ? "" : detail;
        } catch (const std::exception& e) {
            item.pass = false;
            item.detail = e.what();
        }
        items_.push_back(std::move(item));
    }

    std::vector<VerifyItem> take() { return std::move(items_); }

private:
    std::vector<VerifyItem> items_;
};

QmodZ qz(long num, long den) {
    return qmodz_reduce(BigRational(num, den));
}

std::vector<SeifertParams> random_quadruples(int count, long bound, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> draw(0, (bound - 1) / 2);
    auto odd = [&] { return 2 * draw(rng) + 1; };
    std::vector<SeifertParams> out;
    while (static_cast<int>(out.size()) < count) {
        try {
            out.emplace_back(odd(), odd(), odd(), odd());
        } catch (const std::invalid_argument&) {
            // invalid draw, try again
        }
    }
    return out;
}

bool decomposition_identity_holds(const SeifertParams& s) {
    BigRational total = ek_contribution_smooth(s) +
                        ek_contribution_twisted(s, Side::minus) +
                        ek_contribution_twisted(s, Side::plus) +
                        ek_contribution_spectral(s) -
                        ek_contribution_cheeger_simons(s);
    return qmodz_reduce(total) == eells_kuiper(s);
}

bool orientation_reversal_holds(const SeifertParams& s) {
    SeifertParams swapped(s.q_minus, s.p_minus, s.q_plus, s.p_plus);
    return qmodz_reduce(eells_kuiper(swapped).value() + eells_kuiper(s).value()) == QmodZ();
}

}  // namespace

std::vector<VerifyItem> run_verification(const DedekindOptions& opts) {
    Suite suite;

    // ------------------------------------------------------------------
    // Published spot values.
    // ------------------------------------------------------------------

    suite.add("qmodz: -1/4 reduces to 3/4", [](std::string&) {
        return qmodz_reduce(BigRational(-1, 4)) == qz(3, 4) &&
               qmodz_reduce(BigRational(0)) == QmodZ() &&
               qmodz_reduce(BigRational(5444, 224)) == qz(17, 56);
    });

    suite.add("congruence: a^2 = 1 (mod 224) gives +/-1, +/-15 (mod 112)", [](std::string&) {
        ResidueSet expected{224, {1, 15, 97, 111, 113, 127, 209, 223}};
        return solve_square_congruence(1, 224) == expected;
    });

    suite.add("congruence: a^2 = 65 (mod 224) contains 17 and 31", [](std::string&) {
        ResidueSet s = solve_square_congruence(65, 224);
        return s.contains(17) && s.contains(31);
    });

    suite.add("congruence: 5 is not a square mod 8", [](std::string&) {
        return solve_square_congruence(5, 8).empty() && !is_quadratic_residue(5, 8);
    });

    suite.add("congruence: -1 is a square mod 5, not mod 4", [](std::string&) {
        return is_quadratic_residue(-1, 5) && !is_quadratic_residue(-1, 4) &&
               is_quadratic_residue(0, 1);
    });

    suite.add("trig: cos(pi/3) = 1/2, sin(pi/2) = 1, sin^2(pi/3) = 3/4", [](std::string&) {
        auto s13 = sin_pi_frac(1, 3);
        return cos_pi_frac(1, 3).as_rational() == BigRational(1, 2) &&
               sin_pi_frac(1, 2).as_rational() == BigRational(1) &&
               (s13 * s13).as_rational() == BigRational(3, 4);
    });

    suite.add("Dedekind sums: D(1,1) = 0, D(3,5) = 1/28, D(3,1) = -1/28", [](std::string&) {
        return generalized_dedekind_sum(1, 1) == BigRational(0) &&
               generalized_dedekind_sum(3, 5) == BigRational(1, 28) &&
               generalized_dedekind_sum(3, 1) == BigRational(-1, 28);
    });

    suite.add("sin-power sums: closed forms at p <= 9", [](std::string& detail) {
        for (long p = 1; p <= 9; p += 2) {
            BigInt pb(p);
            BigRational l1(BigInt(pb * pb - 1), BigInt(3));
            BigRational l2(BigInt(pb * pb * pb * pb + 10 * pb * pb - 11), BigInt(45));
            if (sin_power_sum(p, 1) != l1 || sin_power_sum(p, 2) != l2) {
                detail = "mismatch at p = " + std::to_string(p);
                return false;
            }
        }
        return sin_power_sum(5, 2) == BigRational(96, 5);
    });

    suite.add("duality defect is 0 at (1,1) and integral on small pairs", [](std::string& detail) {
        if (duality_defect(1, 1) != BigRational(0)) return false;
        for (long p = 1; p <= 11; p += 2) {
            for (long q = 1; q <= 11; q += 2) {
                if (std::gcd(p, q) != 1) continue;
                if (!duality_defect(p, q).is_integer()) {
                    detail = "not integral at (" + std::to_string(p) + "," + std::to_string(q) + ")";
                    return false;
                }
            }
        }
        return true;
    });

    suite.add("D(p,p+2) closed form at p <= 9", [](std::string&) {
        for (long p = 1; p <= 9; p += 2) {
            if (generalized_dedekind_sum(p, p + 2) != dedekind_closed_form_succ(p)) return false;
        }
        return dedekind_closed_form_succ(3) == BigRational(1, 28);
    });

    suite.add("Berger space: ek(3,1,1,3) = -27/1120 mod Z", [](std::string&) {
        SeifertParams berger(3, 1, 1, 3);
        return eells_kuiper(berger) == qz(-27, 1120) &&
               eells_kuiper(berger).value() == BigRational(1093, 1120) &&
               h4_order(berger) == 10;
    });

    suite.add("ek(1,1,3,5) = -1/32 mod Z", [](std::string&) {
        return eells_kuiper(SeifertParams(1, 1, 3, 5)) == qz(-1, 32);
    });

    suite.add("P_k spot values: ek(P_1), ek(P_2), ek(P_3), ek(P_5)", [](std::string&) {
        return ek_pk(1) == QmodZ() && ek_pk(2) == qz(-1, 32) &&
               ek_pk(3) == qz(-15, 112) && ek_pk(5) == qz(-156, 224);
    });

    suite.add("principal bundles: ek(1,1,1,q) = (sign e - e)/224 with e = (1-q^2)/8",
              [](std::string&) {
                  for (long qp = 3; qp <= 9; qp += 2) {
                      long e8 = (1 - qp * qp) / 8;
                      QmodZ expected = qmodz_reduce(
                          BigRational((e8 < 0 ? -1 : 1) - e8, 224));
                      if (!(eells_kuiper(SeifertParams(1, 1, 1, qp)) == expected)) return false;
                  }
                  return true;
              });

    suite.add("Berger quadratic form: q(l) = l(2+9l)/20 = -l(8+l)/20 mod Z", [](std::string&) {
        SeifertParams berger(3, 1, 1, 3);
        for (long l = 0; l < 10; ++l) {
            QmodZ q = q_form(berger, l);
            if (q != qmodz_reduce(BigRational(l * (2 + 9 * l), 20))) return false;
            if (q != qmodz_reduce(BigRational(-l * (8 + l), 20))) return false;
        }
        return q_form(berger, 1) == qz(11, 20);
    });

    suite.add("q_{P_k}(l) = l(l-k)/2k and q_form agree (k <= 10)", [](std::string&) {
        for (long k = 1; k <= 10; ++k) {
            SeifertParams pk = pk_params(k);
            for (long l = 0; l < k; ++l) {
                if (!(q_pk(k, l) == qmodz_reduce(BigRational(l * (l - k), 2 * k)))) return false;
                if (!(q_form(pk, l) == q_pk(k, l))) return false;
            }
        }
        return true;
    });

    suite.add("linking form of P_k is standard: lk(i,j) = ij/k, lk(.,p1/2) = 0",
              [](std::string&) {
                  for (long k = 1; k <= 10; ++k) {
                      CyclicQuadraticForm q = CyclicQuadraticForm::from_pk(k);
                      for (long i = 0; i < k; ++i) {
                          if (!(half_pontryagin_pairing(q, i) == QmodZ())) return false;
                          for (long j = 0; j < k; ++j) {
                              if (!(linking_form(q, i, j) ==
                                    qmodz_reduce(BigRational(i * j, k)))) return false;
                          }
                      }
                  }
                  return true;
              });

    suite.add("bundle invariants: mu(E_{4,2}) = 1/32 = -ek(P_2), q_{E_{4,2}}(1) = 1/4",
              [](std::string&) {
                  SphereBundleParams e42(4, 2);
                  return bundle_mu(e42) == qz(1, 32) && -bundle_mu(e42) == ek_pk(2) &&
                         bundle_q(e42, 1) == qz(1, 4) &&
                         q_pk(2, 1) == qz(3, 4) && -bundle_q(e42, 1) == q_pk(2, 1);
              });

    suite.add("mu(E_{k,k}) = (k-1)/224 for k <= 20", [](std::string&) {
        for (long k = 1; k <= 20; ++k) {
            if (!(bundle_mu(SphereBundleParams(k, k)) == qmodz_reduce(BigRational(k - 1, 224)))) {
                return false;
            }
        }
        return true;
    });

    suite.add("ek(E_{51,3}) = 433/112 = ek(P_3) and the E_{165,5}/E_{55,5} relations",
              [](std::string&) {
                  QmodZ e51 = bundle_mu(SphereBundleParams(51, 3));
                  QmodZ e165 = bundle_mu(SphereBundleParams(165, 5));
                  QmodZ e55 = bundle_mu(SphereBundleParams(55, 5));
                  return e51 == qmodz_reduce(BigRational(433, 112)) && e51 == ek_pk(3) &&
                         e165 == qmodz_reduce(BigRational(5444, 224)) && e165 == ek_pk(5) &&
                         -e55 == ek_pk(5) && e55 == qmodz_reduce(BigRational(604, 224));
              });

    suite.add("q_{P_5}(2l) = -q_{E_{55,5}}(l) for all l", [](std::string&) {
        SphereBundleParams e55(55, 5);
        for (long l = 0; l < 5; ++l) {
            if (!(q_pk(5, 2 * l) == -bundle_q(e55, l))) return false;
        }
        return true;
    });

    suite.add("classification tables for k = 1..5", [](std::string& detail) {
        struct Row {
            long k;
            std::string oriented;
            std::string reversing;
            long exotic;
        };
        const Row rows[] = {
            {1, "a = +/-1, +/-15 (mod 112)", "a = +/-1, +/-15 (mod 112)", 0},
            {2, "none", "a = +/-2 (mod 28)", 27},
            {3, "a = +/-17, +/-31 (mod 112)", "none", 24},
            {4, "none", "none", 18},
            {5, "a = +/-33, +/-47 (mod 112)", "a = +/-11, +/-53 (mod 112)", 8},
        };
        for (const Row& row : rows) {
            ClassificationReport rep = classify_pk(row.k);
            if (format_residue_set(rep.oriented_solutions) != row.oriented ||
                format_residue_set(rep.reversing_solutions) != row.reversing ||
                rep.exotic_count != row.exotic) {
                std::ostringstream os;
                os << "k = " << row.k << ": got oriented ["
                   << format_residue_set(rep.oriented_solutions) << "], reversing ["
                   << format_residue_set(rep.reversing_solutions) << "], exotic "
                   << rep.exotic_count;
                detail = os.str();
                return false;
            }
        }
        return true;
    });

    suite.add("reversing gate: k = 7 has no solutions", [](std::string&) {
        return reversing_diffeo_solutions(7).empty();
    });

    suite.add("quadratic form isomorphism witnesses", [](std::string&) {
        auto identity = quad_forms_isomorphic(CyclicQuadraticForm::from_pk(7),
                                              CyclicQuadraticForm::from_pk(7));
        auto witness = quad_forms_isomorphic(
            CyclicQuadraticForm::from_pk(5),
            CyclicQuadraticForm::from_bundle(SphereBundleParams(55, 5)).negated());
        return identity == 1 && witness == 2;
    });

    // ------------------------------------------------------------------
    // Property suites at default bounds.
    // ------------------------------------------------------------------

    suite.add("property: qmodz addition is a homomorphism", [](std::string&) {
        std::mt19937 rng(7);
        std::uniform_int_distribution<long> num(-400, 400);
        std::uniform_int_distribution<long> den(1, 60);
        for (int i = 0; i < 200; ++i) {
            BigRational a(num(rng), den(rng)), b(num(rng), den(rng));
            if (qmodz_reduce(a + b) !=
                qmodz_reduce(qmodz_reduce(a).value() + qmodz_reduce(b).value())) {
                return false;
            }
        }
        return true;
    });

    suite.add("property: rational text form round-trips", [](std::string&) {
        std::mt19937 rng(11);
        std::uniform_int_distribution<long> num(-100000, 100000);
        std::uniform_int_distribution<long> den(1, 9999);
        for (int i = 0; i < 300; ++i) {
            BigRational a(num(rng), den(rng));
            if (BigRational::parse(a.str()) != a) return false;
        }
        return true;
    });

    suite.add("property: square-congruence sets are negation-symmetric", [](std::string&) {
        std::mt19937 rng(13);
        std::uniform_int_distribution<long> cs(-50, 200);
        std::uniform_int_distribution<long> ms(1, 300);
        for (int i = 0; i < 60; ++i) {
            long m = ms(rng);
            ResidueSet s = solve_square_congruence(cs(rng), m);
            for (long a : s.residues) {
                if (!s.contains(m - a)) return false;
            }
        }
        return true;
    });

    suite.add("property: sin^2 + cos^2 = 1 exactly", [](std::string&) {
        const long cases[][2] = {{1, 3}, {2, 5}, {3, 7}, {5, 9}, {4, 11}, {7, 15}};
        for (auto& c : cases) {
            auto s = sin_pi_frac(c[0], c[1]);
            auto cc = cos_pi_frac(c[0], c[1]);
            if ((s * s + cc * cc).as_rational() != BigRational(1)) return false;
        }
        return true;
    });

    suite.add("property: a * invert(a) = 1 exactly", [](std::string&) {
        const long cases[][2] = {{1, 3}, {2, 5}, {3, 7}, {5, 9}};
        for (auto& c : cases) {
            auto s = sin_pi_frac(c[0], c[1]);
            if ((s * s.invert()).as_rational() != BigRational(1)) return false;
            auto mix = s + cos_pi_frac(c[0], c[1]) * BigRational(3, 2);
            if ((mix * mix.invert()).as_rational() != BigRational(1)) return false;
        }
        return true;
    });

    suite.add("property: Galois-fixed elements extract to rationals", [](std::string&) {
        // The sum over primitive n-th roots of unity is fixed by the whole
        // Galois group and must extract to the Moebius function of n.
        const long mu[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1,
                           0, -1, 0, -1, 0, 1, 1, -1, 0, 0, 1, 0, 0, -1, -1};
        for (long n = 2; n <= 30; ++n) {
            FieldPtr f = CycloField::get(n);
            CycloElement sum = CycloElement::zero(f);
            for (long j = 1; j <= n; ++j) {
                if (std::gcd(j, n) == 1) sum += root_of_unity(f, j);
            }
            for (long k = 2; k < n; ++k) {
                if (std::gcd(k, n) != 1) continue;
                if (!(sum.galois(k) == sum)) return false;
            }
            if (sum.as_rational() != BigRational(mu[n])) return false;
        }
        return true;
    });

    suite.add("property: Dedekind summands are symmetric under a -> p-a", [](std::string&) {
        const long pairs[][2] = {{5, 3}, {7, 9}, {9, 5}, {13, 3}};
        for (auto& pq : pairs) {
            for (long a = 1; a < pq[0]; ++a) {
                if (!(dedekind_summand(pq[0], pq[1], a) ==
                      dedekind_summand(pq[0], pq[1], pq[0] - a))) return false;
            }
        }
        return true;
    });

    suite.add("property: halved summation doubles to the full sum", [](std::string&) {
        const long pairs[][2] = {{5, 3}, {7, 9}, {9, 5}, {11, 7}};
        for (auto& pq : pairs) {
            FieldPtr f = CycloField::get(4 * pq[0]);
            CycloElement half = CycloElement::zero(f);
            for (long a = 1; a <= (pq[0] - 1) / 2; ++a) {
                half += dedekind_summand(pq[0], pq[1], a);
            }
            if (!(half * BigRational(2) == dedekind_sum_element(pq[0], pq[1]))) return false;
        }
        return true;
    });

    suite.add("property: float oracle matches exact sums to 1e-30", [&opts](std::string&) {
        // Summand-by-summand evaluation at the complex root, added in
        // floating point, so the two routes share nothing but the input.
        const BigRational tol(BigInt(1), BigInt("1000000000000000000000000000000"));
        const long pairs[][2] = {{3, 1}, {5, 3}, {9, 7}, {13, 11}, {13, 25}};
        for (auto& pq : pairs) {
            BigFloat re(opts.precision_bits), im(opts.precision_bits);
            for (long a = 1; a < pq[0]; ++a) {
                ComplexApprox term = eval_float(dedekind_summand(pq[0], pq[1], a),
                                                opts.precision_bits);
                re += term.re;
                im += term.im;
            }
            if (!approx_equals(re, generalized_dedekind_sum(pq[0], pq[1]), tol)) {
                return false;
            }
            if (!approx_equals(im, BigRational(0), tol)) return false;
        }
        return true;
    });

    suite.add("property: decomposition identity on random quadruples", [](std::string&) {
        for (const SeifertParams& s : random_quadruples(10, 9, 0x5eed)) {
            if (!decomposition_identity_holds(s)) return false;
        }
        return true;
    });

    suite.add("property: orientation reversal negates ek", [](std::string&) {
        for (const SeifertParams& s : random_quadruples(10, 9, 0xbeef)) {
            if (!orientation_reversal_holds(s)) return false;
        }
        return true;
    });

    suite.add("property: ek(P_k) closed form = full pipeline (k <= 12)", [](std::string&) {
        for (long k = 1; k <= 12; ++k) {
            if (!(ek_pk(k) == eells_kuiper(pk_params(k)))) return false;
        }
        return true;
    });

    suite.add("property: 12 t = q_form mod Z", [](std::string&) {
        for (const SeifertParams& s : random_quadruples(40, 9, 0xcafe)) {
            if (std::gcd(s.p_minus, s.p_plus) != 1) continue;
            long k = h4_order(s);
            for (long l = 0; l < std::min(k, 40L); ++l) {
                QmodZ twelve_t = qmodz_reduce(BigRational(12) * t_invariant(s, l).value());
                if (!(twelve_t == q_form(s, l))) return false;
            }
        }
        return true;
    });

    suite.add("property: linking form is biadditive", [](std::string&) {
        for (long k : {4L, 5L, 9L, 12L}) {
            CyclicQuadraticForm forms[] = {
                CyclicQuadraticForm::from_pk(k),
                CyclicQuadraticForm::from_bundle(SphereBundleParams(k + 2, k)),
            };
            for (const CyclicQuadraticForm& q : forms) {
                for (long a = 0; a < k; ++a) {
                    for (long b = 0; b < k; ++b) {
                        for (long c = 0; c < k; ++c) {
                            if (!(linking_form(q, a + b, c) ==
                                  linking_form(q, a, c) + linking_form(q, b, c))) return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    suite.add("property: q_form depends on l only mod k", [](std::string&) {
        for (const SeifertParams& s : random_quadruples(10, 9, 0xfeed)) {
            if (std::gcd(s.p_minus, s.p_plus) != 1) continue;
            long k = h4_order(s);
            for (long l = -5; l <= 5; ++l) {
                if (!(q_form(s, l) == q_form(s, l + k))) return false;
            }
        }
        return true;
    });

    suite.add("property: congruence route matches invariant route (k <= 12)",
              [](std::string&) {
                  for (long k = 1; k <= 12; ++k) {
                      ResidueSet oriented = oriented_diffeo_solutions(k);
                      CyclicQuadraticForm qp = CyclicQuadraticForm::from_pk(k);
                      for (long a = 0; a < 224; ++a) {
                          if ((a * k - k) % 2 != 0) continue;  // no bundle E_{ak,k}
                          SphereBundleParams bundle(a * k, k);
                          bool invariants_match =
                              bundle_mu(bundle) == ek_pk(k) &&
                              quad_forms_isomorphic(
                                  qp, CyclicQuadraticForm::from_bundle(bundle)).has_value();
                          if (invariants_match != oriented.contains(a)) return false;
                      }
                  }
                  return true;
              });

    suite.add("property: exotic count equals 28 * (ek(P_k) - mu(E_{k,k}))", [](std::string&) {
        for (long k = 1; k <= 20; ++k) {
            QmodZ diff = ek_pk(k) - bundle_mu(SphereBundleParams(k, k));
            if (!(diff == qmodz_reduce(BigRational(exotic_sphere_count(k), 28)))) return false;
        }
        return true;
    });

    return suite.take();
}

}  // namespace ek7
