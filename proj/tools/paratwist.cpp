// Command-line surface for exact quadratic-character twisting of paramodular
// Fourier coefficients: classification, twisting (table- or lift-backed),
// support reporting, reduction, lemma verification, and the lift-vanishing
// sweep. Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 internal invariant violation, 2 input or level error, 3 missing data,
// 4 verification failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paratwist/coeffs.hpp"
#include "paratwist/maass.hpp"
#include "paratwist/qform.hpp"
#include "paratwist/twist.hpp"
#include "paratwist/verify.hpp"

namespace {

using namespace paratwist;
using nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitMissingData = 3;
constexpr int kExitVerification = 4;

struct MissingDataReport {
    std::vector<std::string> keys;
    std::string kind;
};

std::vector<Int> parse_int_list(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in list \"" + csv + "\"");
        out.push_back(Int(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return in;
}

std::string sign_str(int s) { return s >= 0 ? "+1" : "-1"; }

// Display a twist value over the power of p the evaluation was assembled
// over (the "natural" denominator), falling back to lowest terms when the
// scaled numerator is not integral. Zero prints as plain "0".
std::string twist_value_display(const Rat& v, const Int& p, long e) {
    if (v == 0) return "0";
    if (e <= 0) return rat_to_string(v);
    Int den = pow_int(p, e);
    Rat scaled = v * Rat(den);
    if (scaled.get_den() != 1) return rat_to_string(v);
    return scaled.get_num().get_str() + "/" + den.get_str();
}

void emit_twist_text(std::ostream& out, const TwistReport& rep, const Int& p) {
    out << "case: " << case_name(rep.case_label) << "\n";
    out << "value: " << twist_value_display(rep.value, p, rep.denom_exponent) << "\n";
    out << "w_chi_factor: true\n";
    if (rep.approximate) out << "approximate: true\n";
    out << "consumed:";
    for (const auto& key : rep.consumed) out << " [" << key << "]";
    out << "\n";
    for (const auto& [name, note] : rep.branches) out << "branch " << name << ": " << note << "\n";
}

void emit_twist_json(std::ostream& out, const TwistReport& rep, const Int& p) {
    ordered_json j;
    j["case"] = case_name(rep.case_label);
    j["value"] = twist_value_display(rep.value, p, rep.denom_exponent);
    j["w_chi_factor"] = true;
    if (rep.approximate) j["approximate"] = true;
    j["consumed"] = ordered_json::array();
    for (const auto& key : rep.consumed)
        j["consumed"].push_back({key.alpha.get_str(), key.two_beta.get_str(), key.gamma.get_str()});
    j["branches"] = ordered_json::object();
    for (const auto& [name, note] : rep.branches) j["branches"][name] = note;
    out << j.dump(2) << "\n";
}

int cmd_classify(const std::string& form, long p, long N) {
    TwistContext ctx(Int(N), 2, Int(p));
    std::cout << case_name(classify(parse_form(form), ctx)) << "\n";
    return kExitSuccess;
}

int cmd_reduce(const std::string& form) {
    ReductionResult res = reduce_gl2z(parse_form(form));
    std::cout << res.reduced << " det_sign=" << sign_str(res.det_sign) << "\n";
    return kExitSuccess;
}

int cmd_support(const std::string& form, long p, long k, long N) {
    TwistContext ctx(Int(N), k, Int(p));
    for (const auto& key : required_support(parse_form(form), ctx)) std::cout << key << "\n";
    return kExitSuccess;
}

int cmd_twist(const std::string& form, long p, long k, long N, const std::string& coeffs_path,
              const std::string& jacobi_path, const std::string& format, bool assume_zero) {
    TwistContext ctx(Int(N), k, Int(p));
    HalfIntegralForm S = parse_form(form);
    TwistReport rep;
    if (!jacobi_path.empty()) {
        auto in = open_or_throw(jacobi_path);
        JacobiCoeffs jc = JacobiCoeffs::ingest(in);
        SymbolicTwist sym = a_chi_symbolic(S, ctx);
        rep.case_label = sym.case_label;
        rep.branches = sym.branches;
        rep.consumed = sym.form.support();
        for (const auto& [key, coeff] : sym.form.terms()) {
            Int den = coeff.get_den();
            if (den != 1)
                rep.denom_exponent =
                    std::max(rep.denom_exponent, static_cast<long>(v_p(den, ctx.p)));
        }
        try {
            for (const auto& [key, coeff] : sym.form.terms())
                rep.value += coeff * maass_coeff(key, k, jc);
        } catch (const MissingJacobiCoefficient&) {
            MissingDataReport missing;
            missing.kind = "Jacobi coefficients";
            std::set<Int> keys;
            for (const auto& [key, coeff] : sym.form.terms())
                for (const Int& D : maass_symbolic(key, k).support()) keys.insert(D);
            for (const Int& D : keys) missing.keys.push_back(D.get_str());
            throw missing;
        }
    } else {
        CoeffTable table(Int(N), k);
        if (!coeffs_path.empty()) {
            auto in = open_or_throw(coeffs_path);
            table = CoeffTable::ingest(in);
        }
        try {
            rep = a_chi(S, ctx, table, assume_zero);
        } catch (const MissingCoefficient&) {
            MissingDataReport missing;
            missing.kind = "coefficients";
            for (const auto& key : required_support(S, ctx)) missing.keys.push_back(form_to_string(key));
            throw missing;
        }
    }
    if (format == "json")
        emit_twist_json(std::cout, rep, ctx.p);
    else
        emit_twist_text(std::cout, rep, ctx.p);
    return kExitSuccess;
}

int cmd_lemma_check(const std::string& p_csv, bool exhaustive, long samples, unsigned long seed) {
    CheckMode mode;
    mode.exhaustive = exhaustive || samples <= 0;
    mode.samples = samples;
    mode.seed = seed;
    auto results = run_lemma_checks(parse_int_list(p_csv), mode);
    for (const auto& [label, rep] : results) {
        std::cerr << label << ": " << rep.cases << " cases\n";
        if (!rep.ok) {
            std::cout << "lemma check failed: " << label << ": " << rep.counterexample << "\n";
            return kExitVerification;
        }
    }
    std::string line = "all lemmas verified:";
    for (size_t i = 0; i < results.size(); ++i)
        line += (i == 0 ? " " : ", ") + results[i].first;
    std::cout << line << "\n";
    return kExitSuccess;
}

int cmd_maass_vanish(const std::string& p_csv, const std::string& k_csv, const std::string& sweep,
                     unsigned long seed, int count) {
    long total = 0;
    for (const Int& p : parse_int_list(p_csv)) {
        for (const Int& kz : parse_int_list(k_csv)) {
            long k = to_long_checked(kz);
            TwistContext ctx(Int(1), k, p);
            std::vector<SweepEntry> entries;
            if (sweep == "default" || sweep == "all") {
                auto curated = curated_sweep(p, k);
                entries.insert(entries.end(), curated.begin(), curated.end());
            }
            if (sweep == "random" || sweep == "all") {
                auto random = random_sweep(p, k, seed, count);
                entries.insert(entries.end(), random.begin(), random.end());
            }
            if (entries.empty())
                throw std::invalid_argument("unknown sweep \"" + sweep +
                                            "\" (expected default, random, or all)");
            for (const SweepEntry& entry : entries) {
                VanishingReport rep = verify_maass_vanishing(entry.S, ctx);
                std::cout << "p=" << p << " k=" << k << " S=" << entry.S << " " << entry.profile
                          << ": " << (rep.vanishes ? "vanishes" : "RESIDUAL") << "\n";
                if (!rep.vanishes) {
                    std::cout << "counterexample: S=" << entry.S << " residual keys:";
                    for (const Int& D : rep.residual.support()) std::cout << " " << D;
                    std::cout << "\n";
                    return kExitVerification;
                }
                ++total;
            }
        }
    }
    std::cout << "all branches vanish (" << total << " cases)\n";
    return kExitSuccess;
}

int cmd_ingest_validate(const std::string& coeffs_path, const std::string& jacobi_path) {
    if (!coeffs_path.empty()) {
        auto in = open_or_throw(coeffs_path);
        CoeffTable table = CoeffTable::ingest(in);
        std::cout << "ok: N=" << table.level() << " k=" << table.weight()
                  << " entries=" << table.entries().size() << "\n";
    }
    if (!jacobi_path.empty()) {
        auto in = open_or_throw(jacobi_path);
        JacobiCoeffs jc = JacobiCoeffs::ingest(in);
        std::cout << "ok: k=" << jc.k << " entries=" << jc.c.size() << "\n";
    }
    if (coeffs_path.empty() && jacobi_path.empty())
        throw std::invalid_argument("pass --coeffs and/or --jacobi");
    return kExitSuccess;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Exact Fourier-coefficient twisting of degree-2 paramodular forms by the quadratic character mod p"};
    app.require_subcommand(1);

    std::string form, coeffs_path, jacobi_path, p_csv = "3", k_csv = "20", sweep = "default",
                                                format = "text";
    long p = 3, k = 20, N = 1, samples = 0;
    unsigned long seed = 0;
    int count = 25;
    bool exhaustive = false, assume_zero = false;

    CLI::App* classify_cmd = app.add_subcommand("classify", "Print the case label of a form");
    classify_cmd->add_option("--form", form, "Form as alpha,two_beta,gamma")->required();
    classify_cmd->add_option("--p", p, "Odd prime of the twisting character")->required();
    classify_cmd->add_option("--N", N, "Base level")->capture_default_str();

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "Reduce a positive form to its canonical class");
    reduce_cmd->add_option("--form", form, "Form as alpha,two_beta,gamma")->required();

    CLI::App* support_cmd = app.add_subcommand("support", "List the base-level keys a twist evaluation reads");
    support_cmd->add_option("--form", form, "Form as alpha,two_beta,gamma")->required();
    support_cmd->add_option("--p", p, "Odd prime of the twisting character")->required();
    support_cmd->add_option("--k", k, "Weight")->capture_default_str();
    support_cmd->add_option("--N", N, "Base level")->capture_default_str();

    CLI::App* twist_cmd = app.add_subcommand("twist", "Evaluate one twisted coefficient");
    twist_cmd->add_option("--form", form, "Form as alpha,two_beta,gamma")->required();
    twist_cmd->add_option("--p", p, "Odd prime of the twisting character")->required();
    twist_cmd->add_option("--k", k, "Weight")->capture_default_str();
    twist_cmd->add_option("--N", N, "Base level")->capture_default_str();
    twist_cmd->add_option("--coeffs", coeffs_path, "Coefficient table file");
    twist_cmd->add_option("--jacobi", jacobi_path, "Jacobi coefficient file (divisor-sum lift mode)");
    twist_cmd->add_option("--format", format, "Output format: text or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    twist_cmd->add_flag("--assume-zero-outside-box", assume_zero,
                        "Treat absent table keys as zero and flag the result approximate");

    CLI::App* lemma_cmd = app.add_subcommand("lemma-check", "Closed forms versus brute-force oracles");
    lemma_cmd->add_option("--p", p_csv, "Comma-separated odd primes")->capture_default_str();
    lemma_cmd->add_flag("--exhaustive", exhaustive, "Sweep all residue tuples");
    lemma_cmd->add_option("--samples", samples, "Random tuples per check instead of full sweeps");
    lemma_cmd->add_option("--seed", seed, "Seed for sampled sweeps")->capture_default_str();

    CLI::App* vanish_cmd = app.add_subcommand("maass-vanish", "Twisted lift coefficients vanish identically");
    vanish_cmd->add_option("--p", p_csv, "Comma-separated odd primes")->capture_default_str();
    vanish_cmd->add_option("--k", k_csv, "Comma-separated even weights")->capture_default_str();
    vanish_cmd->add_option("--sweep", sweep, "Sweep spec: default, random, or all")->capture_default_str();
    vanish_cmd->add_option("--seed", seed, "Seed for the random sweep")->capture_default_str();
    vanish_cmd->add_option("--count", count, "Random sweep size")->capture_default_str();

    CLI::App* ingest_cmd = app.add_subcommand("ingest-validate", "Parse a data file and report its shape");
    ingest_cmd->add_option("--coeffs", coeffs_path, "Coefficient table file");
    ingest_cmd->add_option("--jacobi", jacobi_path, "Jacobi coefficient file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    if (classify_cmd->parsed()) return cmd_classify(form, p, N);
    if (reduce_cmd->parsed()) return cmd_reduce(form);
    if (support_cmd->parsed()) return cmd_support(form, p, k, N);
    if (twist_cmd->parsed())
        return cmd_twist(form, p, k, N, coeffs_path, jacobi_path, format, assume_zero);
    if (lemma_cmd->parsed()) return cmd_lemma_check(p_csv, exhaustive, samples, seed);
    if (vanish_cmd->parsed()) return cmd_maass_vanish(p_csv, k_csv, sweep, seed, count);
    if (ingest_cmd->parsed()) return cmd_ingest_validate(coeffs_path, jacobi_path);
    std::cerr << "error: no subcommand\n";
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const MissingDataReport& missing) {
        std::cout << "missing " << missing.kind << " (" << missing.keys.size() << " keys):\n";
        for (const auto& key : missing.keys) std::cout << key << "\n";
        return kExitMissingData;
    } catch (const MissingCoefficient& e) {
        std::cout << "missing coefficient: " << e.what() << "\n";
        return kExitMissingData;
    } catch (const MissingJacobiCoefficient& e) {
        std::cout << "missing Jacobi coefficient: " << e.what() << "\n";
        return kExitMissingData;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
