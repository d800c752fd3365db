// Command-line surface of the exact lambda-adic evaluation pipeline.
//
// Exit codes: 0 success, 1 usage/parse error, 2 validation reject,
// 3 resource cap exceeded, 4 verification failure.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "panto/evaluator.hpp"
#include "panto/numerics.hpp"
#include "panto/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitReject = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerify = 4;

struct CommonOptions {
    std::string subst;
    std::string out;
    bool json = false;
    int digits = 6;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_digits = true) {
    cmd->add_option("--subst", opts.subst, "substitution, a:<word>,b:<word> or JSON {\"a\":..,\"b\":..}")
        ->required();
    cmd->add_option("--out", opts.out, "write output to this file instead of stdout");
    cmd->add_flag("--json", opts.json, "machine-readable JSON output");
    if (with_digits)
        cmd->add_option("--digits", opts.digits, "decimal digits in rendered columns")
            ->check(CLI::Range(1, 50));
}

int emit(const CommonOptions& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file '" << opts.out << "'\n";
        return kExitUsage;
    }
    f << text;
    return kExitOk;
}

std::uint64_t max_values_default() {
    if (const char* env = std::getenv("PANTO_MAX_VALUES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed PANTO_MAX_VALUES='" << env << "'\n";
    }
    return 10'000'000;
}

unsigned threads_from_env() {
    if (const char* env = std::getenv("PANTO_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 256) return static_cast<unsigned>(v);
        std::cerr << "warning: ignoring malformed PANTO_THREADS='" << env << "'\n";
    }
    return 1;
}

panto::Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return panto::Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(std::string(flag) + ": " + e.what());
    }
}

std::string validation_text(const panto::ValidationReport& r) {
    std::ostringstream os;
    os << "substitution: a:" << r.image_a.str() << ",b:" << r.image_b.str() << "\n";
    os << "accepted: " << (r.accepted ? "yes" : "no") << "\n";
    if (!r.accepted) os << "failure: " << r.message() << "\n";
    os << "lambda: " << r.lambda << "\n";
    os << "lambda_a: " << r.lambda_a << "\n";
    os << "lambda_b: " << r.lambda_b << "\n";
    os << "delta1_a_in_sigma_a: " << r.delta1_a_in_sigma_a << "\n";
    os << "delta1_a_in_sigma_b: " << r.delta1_a_in_sigma_b << "\n";
    os << "prolongable:";
    if (r.prolongable_a) os << " a";
    if (r.prolongable_b) os << " b";
    os << "\n";
    return os.str();
}

std::string validation_json(const panto::ValidationReport& r) {
    nlohmann::ordered_json j;
    j["substitution"] = "a:" + r.image_a.str() + ",b:" + r.image_b.str();
    j["accepted"] = r.accepted;
    j["failure"] = r.accepted ? nlohmann::ordered_json(nullptr)
                              : nlohmann::ordered_json(std::string(failure_name(r.failure)));
    j["lambda"] = r.lambda;
    j["lambda_a"] = r.lambda_a;
    j["lambda_b"] = r.lambda_b;
    j["delta1_a_in_sigma_a"] = r.delta1_a_in_sigma_a;
    j["delta1_a_in_sigma_b"] = r.delta1_a_in_sigma_b;
    auto prolongable = nlohmann::ordered_json::array();
    if (r.prolongable_a) prolongable.push_back("a");
    if (r.prolongable_b) prolongable.push_back("b");
    j["prolongable"] = prolongable;
    return j.dump(2) + "\n";
}

int cmd_validate(const CommonOptions& opts) {
    auto [image_a, image_b] = panto::parse_image_pair(opts.subst);
    const panto::ValidationReport report = panto::validate(image_a, image_b);
    const std::string text = opts.json ? validation_json(report) : validation_text(report);
    const int emit_rc = emit(opts, text);
    if (emit_rc != kExitOk) return emit_rc;
    if (report.accepted) return kExitOk;
    return report.shape_failure() ? kExitUsage : kExitReject;
}

int cmd_invariants(const CommonOptions& opts, int levels) {
    const panto::Substitution sub = panto::Substitution::parse(opts.subst);
    using panto::Letter;
    std::ostringstream os;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    if (!opts.json)
        os << "level,delta_a_in_sigma_a,delta_b_in_sigma_a,delta_a_in_sigma_b,delta_b_in_sigma_b,"
              "decimal_a_in_sigma_a,decimal_b_in_sigma_a,decimal_a_in_sigma_b,decimal_b_in_sigma_b\n";
    for (int ell = 0; ell <= levels; ++ell) {
        const panto::Rational daa = panto::delta_level(sub, Letter::a, Letter::a, ell);
        const panto::Rational dba = panto::delta_level(sub, Letter::b, Letter::a, ell);
        const panto::Rational dab = panto::delta_level(sub, Letter::a, Letter::b, ell);
        const panto::Rational dbb = panto::delta_level(sub, Letter::b, Letter::b, ell);
        if (opts.json) {
            nlohmann::ordered_json row;
            row["level"] = ell;
            row["delta_a_in_sigma_a"] = daa.str();
            row["delta_b_in_sigma_a"] = dba.str();
            row["delta_a_in_sigma_b"] = dab.str();
            row["delta_b_in_sigma_b"] = dbb.str();
            row["decimal_a_in_sigma_a"] = daa.to_decimal(opts.digits);
            row["decimal_b_in_sigma_a"] = dba.to_decimal(opts.digits);
            row["decimal_a_in_sigma_b"] = dab.to_decimal(opts.digits);
            row["decimal_b_in_sigma_b"] = dbb.to_decimal(opts.digits);
            arr.push_back(std::move(row));
        } else {
            os << ell << ',' << daa.str() << ',' << dba.str() << ',' << dab.str() << ',' << dbb.str()
               << ',' << daa.to_decimal(opts.digits) << ',' << dba.to_decimal(opts.digits) << ','
               << dab.to_decimal(opts.digits) << ',' << dbb.to_decimal(opts.digits) << '\n';
        }
    }
    if (opts.json) os << arr.dump(2) << "\n";
    return emit(opts, os.str());
}

int cmd_moments(const CommonOptions& opts, const std::string& f0_text, const std::string& f1_text,
                int levels, bool alternating) {
    const panto::Substitution sub = panto::Substitution::parse(opts.subst);
    const panto::BoundaryData boundary{parse_rational_flag(f0_text, "--f0"),
                                       parse_rational_flag(f1_text, "--f1")};
    const auto form = alternating ? panto::RelationForm::alternating : panto::RelationForm::standard;
    panto::MomentTable table = panto::MomentTable::init(sub, boundary, form);
    table.extend(levels);
    using panto::Letter;
    std::ostringstream os;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    if (!opts.json)
        os << "level,mt_a,mt_b,m_a,m_b,mt_a_decimal,mt_b_decimal,m_a_decimal,m_b_decimal\n";
    for (int ell = 0; ell <= levels; ++ell) {
        const panto::Rational mt_a = table.normalized(ell, Letter::a);
        const panto::Rational mt_b = table.normalized(ell, Letter::b);
        const panto::Rational m_a = table.unnormalized(ell, Letter::a);
        const panto::Rational m_b = table.unnormalized(ell, Letter::b);
        if (opts.json) {
            nlohmann::ordered_json row;
            row["level"] = ell;
            row["mt_a"] = mt_a.str();
            row["mt_b"] = mt_b.str();
            row["m_a"] = m_a.str();
            row["m_b"] = m_b.str();
            row["mt_a_decimal"] = mt_a.to_decimal(opts.digits);
            row["mt_b_decimal"] = mt_b.to_decimal(opts.digits);
            row["m_a_decimal"] = m_a.to_decimal(opts.digits);
            row["m_b_decimal"] = m_b.to_decimal(opts.digits);
            arr.push_back(std::move(row));
        } else {
            os << ell << ',' << mt_a.str() << ',' << mt_b.str() << ',' << m_a.str() << ',' << m_b.str()
               << ',' << mt_a.to_decimal(opts.digits) << ',' << mt_b.to_decimal(opts.digits) << ','
               << m_a.to_decimal(opts.digits) << ',' << m_b.to_decimal(opts.digits) << '\n';
        }
    }
    if (opts.json) os << arr.dump(2) << "\n";
    return emit(opts, os.str());
}

int cmd_evaluate(const CommonOptions& opts, const std::string& f0_text, const std::string& f1_text,
                 int depth, std::int64_t extent, bool all_levels, std::uint64_t max_values,
                 bool alternating) {
    const panto::Substitution sub = panto::Substitution::parse(opts.subst);
    const panto::BoundaryData boundary{parse_rational_flag(f0_text, "--f0"),
                                       parse_rational_flag(f1_text, "--f1")};
    panto::TabulateOptions tab;
    tab.max_values = max_values;
    tab.threads = threads_from_env();
    tab.form = alternating ? panto::RelationForm::alternating : panto::RelationForm::standard;
    const panto::GridTable grid = panto::tabulate(sub, boundary, depth, extent, tab);

    const int lambda = sub.lambda();
    std::ostringstream os;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    if (!opts.json) os << "level,index,x_exact,value_num,value_den,value_decimal\n";
    const int first_level = all_levels ? 0 : depth;
    for (int level = first_level; level <= depth; ++level) {
        for (std::int64_t n = 0; n <= grid.max_index(); ++n) {
            const panto::Rational& v = grid.value(level, n);
            const std::string x_exact = std::to_string(n) + "/" + std::to_string(lambda) + "^" +
                                        std::to_string(level);
            if (opts.json) {
                nlohmann::ordered_json row;
                row["level"] = level;
                row["index"] = n;
                row["x_exact"] = x_exact;
                row["value"] = v.str();
                row["value_decimal"] = v.to_decimal(opts.digits);
                arr.push_back(std::move(row));
            } else {
                os << level << ',' << n << ',' << x_exact << ',' << v.numerator().str() << ','
                   << v.denominator().str() << ',' << v.to_decimal(opts.digits) << '\n';
            }
        }
    }
    if (opts.json) os << arr.dump(2) << "\n";
    return emit(opts, os.str());
}

int cmd_verify(const CommonOptions& opts, const std::string& f0_text, const std::string& f1_text,
               const std::string& suite, std::optional<int> depth, std::uint64_t seed,
               std::uint64_t max_values, bool alternating) {
    const panto::Substitution sub = panto::Substitution::parse(opts.subst);
    const panto::BoundaryData boundary{parse_rational_flag(f0_text, "--f0"),
                                       parse_rational_flag(f1_text, "--f1")};
    panto::SuiteConfig config;
    config.seed = seed;
    config.max_values = max_values;
    if (depth) {
        const int d = *depth;
        std::vector<int> sweep = sub.lambda() == 2
                                     ? std::vector<int>{d - 4, d - 2, d}
                                     : std::vector<int>{d - 2, d - 1, d};
        for (int& v : sweep) v = std::max(1, v);
        sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());
        config.depths = sweep;
    }
    const auto form = alternating ? panto::RelationForm::alternating : panto::RelationForm::standard;
    const panto::ResidualReport report = panto::run_suites(sub, suite, boundary, config, form);
    const int emit_rc = emit(opts, report.to_json() + "\n");
    if (emit_rc != kExitOk) return emit_rc;
    return report.all_pass() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, moments, lambda-adic tabulation and verification\n"
                 "for two-letter uniform substitutions"};
    app.require_subcommand(1);

    CommonOptions vo;
    CLI::App* validate = app.add_subcommand("validate", "check the standing hypotheses on a substitution");
    add_common(validate, vo, false);

    CommonOptions io;
    int inv_levels = 4;
    CLI::App* invariants = app.add_subcommand("invariants", "tabulate the level invariants");
    add_common(invariants, io);
    invariants->add_option("--levels", inv_levels, "highest level to print")->check(CLI::Range(0, 60));

    CommonOptions mo;
    std::string m_f0, m_f1;
    int m_levels = 4;
    bool m_alt = false;
    CLI::App* moments = app.add_subcommand("moments", "run the normalized-moment recursion");
    add_common(moments, mo);
    moments->add_option("--f0", m_f0, "boundary value f(0), rational literal")->required();
    moments->add_option("--f1", m_f1, "boundary value f(1), rational literal")->required();
    moments->add_option("--levels", m_levels, "highest level to compute")->check(CLI::Range(0, 60));
    moments->add_flag("--printed-lemma1", m_alt, "diagnostic: alternating-sign relation variant");

    CommonOptions eo;
    std::string e_f0, e_f1;
    int e_depth = 2;
    std::int64_t e_extent = 1;
    bool e_all = false;
    bool e_alt = false;
    std::uint64_t e_max_values = max_values_default();
    CLI::App* evaluate = app.add_subcommand("evaluate", "tabulate the candidate solution on the grid");
    add_common(evaluate, eo);
    evaluate->add_option("--f0", e_f0, "boundary value f(0), rational literal")->required();
    evaluate->add_option("--f1", e_f1, "boundary value f(1), rational literal")->required();
    evaluate->add_option("--depth", e_depth, "finest level")->check(CLI::Range(0, 40));
    evaluate->add_option("--extent", e_extent, "real interval [0, extent] at the finest level")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    evaluate->add_flag("--all-levels", e_all, "emit every level, not only the finest");
    evaluate->add_option("--max-values", e_max_values, "cap on stored grid values (env PANTO_MAX_VALUES)");
    evaluate->add_flag("--printed-lemma1", e_alt, "diagnostic: alternating-sign relation variant");

    CommonOptions ve;
    std::string v_f0 = "0", v_f1 = "1";
    std::string v_suite = "all";
    std::optional<int> v_depth;
    std::uint64_t v_seed = 12345;
    bool v_alt = false;
    std::uint64_t v_max_values = max_values_default();
    CLI::App* verify = app.add_subcommand("verify", "run the verification suites, print the residual report");
    add_common(verify, ve, false);
    verify->add_option("--f0", v_f0, "candidate boundary f(0)");
    verify->add_option("--f1", v_f1, "candidate boundary f(1)");
    verify->add_option("--suite", v_suite,
                       "equation | moments | vk | expansion | linearity | zero | identities | all");
    verify->add_option("--depth", v_depth, "deepest grid level swept by the quadrature suites");
    verify->add_option("--seed", v_seed, "seed for the linearity draws");
    verify->add_option("--max-values", v_max_values, "cap on stored grid values (env PANTO_MAX_VALUES)");
    verify->add_flag("--printed-lemma1", v_alt, "diagnostic: alternating-sign relation variant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(vo);
        if (app.got_subcommand(invariants)) return cmd_invariants(io, inv_levels);
        if (app.got_subcommand(moments)) return cmd_moments(mo, m_f0, m_f1, m_levels, m_alt);
        if (app.got_subcommand(evaluate))
            return cmd_evaluate(eo, e_f0, e_f1, e_depth, e_extent, e_all, e_max_values, e_alt);
        if (app.got_subcommand(verify))
            return cmd_verify(ve, v_f0, v_f1, v_suite, v_depth, v_seed, v_max_values, v_alt);
    } catch (const panto::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const panto::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.report.shape_failure() ? kExitUsage : kExitReject;
    } catch (const panto::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
