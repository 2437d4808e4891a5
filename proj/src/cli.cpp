#include "ek7/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ek7/classify.hpp"
#include "ek7/dedekind.hpp"
#include "ek7/invariants.hpp"
#include "ek7/verify.hpp"

namespace ek7 {

namespace {

using nlohmann::json;

const char* mode_name(bool reconstructed) {
    return reconstructed ? "reconstructed" : "exact";
}

json rational_result(const BigRational& v) {
    return json{{"type", "rational"}, {"value", v.str()}};
}

json qmodz_result(const QmodZ& v) {
    json j{{"type", "qmodz"}, {"value", v.str()}};
    if (v.symmetric() != v.value()) {
        j["symmetric"] = v.symmetric().str();
    }
    return j;
}

json residues_result(const ResidueSet& s) {
    return json{{"type", "residues"},
                {"modulus", s.modulus},
                {"residues", s.residues},
                {"pretty", format_residue_set(s)}};
}

json report_result(const ClassificationReport& r) {
    return json{{"type", "report"},
                {"k", r.k},
                {"standard_bundle", {{"p", r.standard_bundle.p}, {"n", r.standard_bundle.n}}},
                {"exotic_count", r.exotic_count},
                {"oriented_possible", r.oriented_possible},
                {"reversing_possible", r.reversing_possible},
                {"oriented_solutions", residues_result(r.oriented_solutions)},
                {"reversing_solutions", residues_result(r.reversing_solutions)}};
}

json make_record(const std::string& command, json inputs, json result, bool reconstructed) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"mode", mode_name(reconstructed)}};
}

// Text renderers read the value strings back out of the record, so both
// formats always quote the same rationals.
std::string value_text(const json& result) {
    std::string s = result.at("value").get<std::string>();
    if (result.contains("symmetric")) {
        s += " (= " + result["symmetric"].get<std::string>() + " mod 1)";
    }
    return s;
}

void print_report_text(const json& record, std::ostream& out) {
    const json& r = record.at("result");
    long k = r.at("k").get<long>();
    out << "P_" << k << ":  H^4 = Z/" << k << ", standard bundle E_{" << k << "," << k
        << "}, exotic count " << r.at("exotic_count").get<long>() << " (mod 28)\n";
    out << "  oriented diffeomorphic to E_{" << k << "a," << k << "}:  "
        << r.at("oriented_solutions").at("pretty").get<std::string>() << "\n";
    out << "  reversing diffeomorphic to E_{" << k << "a," << k << "}:  "
        << r.at("reversing_solutions").at("pretty").get<std::string>() << "\n";
}

struct Options {
    std::string format = "text";
    long precision = 192;
    long max_exact_p = 499;

    DedekindOptions dedekind() const {
        DedekindOptions o;
        o.max_exact_p = max_exact_p;
        o.precision_bits = precision;
        return o;
    }
    bool json_mode() const { return format == "json"; }
};

void emit(const json& record, const Options& opts, std::ostream& out,
          const std::string& text_line) {
    if (opts.json_mode()) {
        out << record.dump(2) << "\n";
    } else {
        out << text_line << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Eells-Kuiper invariants, generalized Dedekind sums, quadratic "
                 "linking forms and diffeomorphism classification for the 7-manifolds "
                 "M_{(p-,q-),(p+,q+)} and S^3-bundles over S^4"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--precision", opts.precision,
                   "Working precision in bits for the float oracle")
        ->check(CLI::Range(64L, 1000000L))
        ->capture_default_str();
    app.add_option("--max-exact-p", opts.max_exact_p,
                   "Largest p evaluated in the exact cyclotomic ring")
        ->capture_default_str();

    long p = 0, q = 0, pm = 0, qm = 0, pp = 0, qp = 0, l = 0, n = 0, k = 0;
    long range_end = -1;
    bool verify_json = false;

    CLI::App* cmd_dedekind = app.add_subcommand("dedekind", "Generalized Dedekind sum D(p,q)");
    cmd_dedekind->add_option("p", p, "odd positive, coprime to q")->required();
    cmd_dedekind->add_option("q", q, "odd positive, coprime to p")->required();

    CLI::App* cmd_ek = app.add_subcommand("ek", "Eells-Kuiper invariant of M_{(p-,q-),(p+,q+)}");
    for (auto [name, var] : {std::pair{"p-", &pm}, {"q-", &qm}, {"p+", &pp}, {"q+", &qp}}) {
        cmd_ek->add_option(name, *var)->required();
    }

    CLI::App* cmd_qform = app.add_subcommand("qform", "Quadratic form q_M(l) on H^4");
    CLI::App* cmd_tinv = app.add_subcommand("tinv", "t-invariant of the degree-l bundle");
    for (CLI::App* cmd : {cmd_qform, cmd_tinv}) {
        for (auto [name, var] :
             {std::pair{"p-", &pm}, {"q-", &qm}, {"p+", &pp}, {"q+", &qp}, {"l", &l}}) {
            cmd->add_option(name, *var)->required();
        }
    }

    CLI::App* cmd_bundle = app.add_subcommand("bundle", "Invariants of the S^3-bundle E_{p,n}");
    cmd_bundle->require_subcommand(1);
    CLI::App* bundle_mu_cmd = cmd_bundle->add_subcommand("mu", "mu(E_{p,n})");
    CLI::App* bundle_q_cmd = cmd_bundle->add_subcommand("q", "q_{E_{p,n}}(l)");
    for (CLI::App* cmd : {bundle_mu_cmd, bundle_q_cmd}) {
        cmd->add_option("p", p, "half Pontrjagin class")->required();
        cmd->add_option("n", n, "Euler class, nonzero")->required();
    }
    bundle_q_cmd->add_option("l", l)->required();

    CLI::App* cmd_classify = app.add_subcommand("classify", "Compare P_k with sphere bundles");
    cmd_classify->add_option("k", k)->required();
    cmd_classify->add_option("--range", range_end, "Classify k..end inclusive");

    CLI::App* cmd_verify = app.add_subcommand("verify", "Run the full regression table");
    cmd_verify->add_flag("--json", verify_json, "Machine-readable summary");

    // Let the global flags appear after the subcommand as well.
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }
    bundle_mu_cmd->fallthrough();
    bundle_q_cmd->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*cmd_dedekind) {
            DedekindValue v = evaluate_dedekind_sum(p, q, opts.dedekind());
            json record = make_record("dedekind", {{"p", p}, {"q", q}},
                                      rational_result(v.value), v.reconstructed);
            emit(record, opts, out,
                 "D(" + std::to_string(p) + "," + std::to_string(q) +
                     ") = " + record["result"]["value"].get<std::string>());
        } else if (*cmd_ek) {
            EkValue v = eells_kuiper(SeifertParams(pm, qm, pp, qp), opts.dedekind());
            json record = make_record(
                "ek", {{"p-", pm}, {"q-", qm}, {"p+", pp}, {"q+", qp}},
                qmodz_result(v.value), v.reconstructed);
            std::ostringstream name;
            name << "ek(M_{(" << pm << "," << qm << "),(" << pp << "," << qp << ")}) = ";
            emit(record, opts, out, name.str() + value_text(record["result"]));
        } else if (*cmd_qform || *cmd_tinv) {
            SeifertParams params(pm, qm, pp, qp);
            bool is_q = static_cast<bool>(*cmd_qform);
            QmodZ v = is_q ? q_form(params, l) : t_invariant(params, l);
            json record = make_record(
                is_q ? "qform" : "tinv",
                {{"p-", pm}, {"q-", qm}, {"p+", pp}, {"q+", qp}, {"l", l}},
                qmodz_result(v), false);
            std::string head = is_q ? "q_M(" : "t_M(";
            emit(record, opts, out,
                 head + std::to_string(l) + ") = " + value_text(record["result"]));
        } else if (*cmd_bundle) {
            SphereBundleParams bundle(p, n);
            if (*bundle_mu_cmd) {
                json record = make_record("bundle mu", {{"p", p}, {"n", n}},
                                          qmodz_result(bundle_mu(bundle)), false);
                std::ostringstream name;
                name << "mu(E_{" << p << "," << n << "}) = ";
                emit(record, opts, out, name.str() + value_text(record["result"]));
            } else {
                json record = make_record("bundle q", {{"p", p}, {"n", n}, {"l", l}},
                                          qmodz_result(bundle_q(bundle, l)), false);
                std::ostringstream name;
                name << "q_{E_{" << p << "," << n << "}}(" << l << ") = ";
                emit(record, opts, out, name.str() + value_text(record["result"]));
            }
        } else if (*cmd_classify) {
            long end = range_end < 0 ? k : range_end;
            if (end < k) {
                err << "classify: --range end must be >= k\n";
                return 1;
            }
            json records = json::array();
            for (long kk = k; kk <= end; ++kk) {
                ClassificationReport rep = classify_pk(kk);
                records.push_back(make_record("classify", {{"k", kk}},
                                              report_result(rep), false));
            }
            if (opts.json_mode()) {
                out << (range_end < 0 ? records[0] : records).dump(2) << "\n";
            } else {
                for (const json& record : records) {
                    print_report_text(record, out);
                }
            }
        } else if (*cmd_verify) {
            std::vector<VerifyItem> items = run_verification(opts.dedekind());
            int failures = 0;
            for (const VerifyItem& item : items) {
                if (!item.pass) ++failures;
            }
            if (verify_json || opts.json_mode()) {
                json jitems = json::array();
                for (const VerifyItem& item : items) {
                    json ji{{"name", item.name}, {"pass", item.pass}};
                    if (!item.pass) ji["detail"] = item.detail;
                    jitems.push_back(std::move(ji));
                }
                json record = make_record(
                    "verify", json::object(),
                    json{{"type", "verification"},
                         {"items", std::move(jitems)},
                         {"total", items.size()},
                         {"failures", failures}},
                    false);
                out << record.dump(2) << "\n";
            } else {
                for (const VerifyItem& item : items) {
                    if (item.pass) {
                        out << "PASS  " << item.name << "\n";
                    } else {
                        out << "FAIL  " << item.name;
                        if (!item.detail.empty()) out << "  [" << item.detail << "]";
                        out << "\n";
                    }
                }
                out << (failures == 0 ? "all " : "FAILURES: ")
                    << (failures == 0 ? std::to_string(items.size()) + " checks passed"
                                      : std::to_string(failures) + " of " +
                                            std::to_string(items.size()))
                    << "\n";
            }
            return failures == 0 ? 0 : 2;
        }
    } catch (const internal_error& e) {
        err << "internal consistency error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace ek7
