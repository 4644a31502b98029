// Command-line front door: single-query evaluation of the Jacobi symbol and
// the multiplication permutations, plus exhaustive verification campaigns
// with machine-readable reports.
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

#include <CLI11.hpp>

#include "zolosign/zolosign.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

zolosign::OddModulus parse_modulus(std::int64_t n) {
    if (n % 2 == 0 || n < 3)
        throw std::invalid_argument("modulus must be an odd integer >= 3, got " +
                                    std::to_string(n));
    if (n > zolosign::kMaxModulus)
        throw std::invalid_argument("modulus exceeds the supported bound " +
                                    std::to_string(zolosign::kMaxModulus));
    return zolosign::OddModulus(n);
}

/// Writes rendered output to --out when given, stdout otherwise.
void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    file << content;
    if (!file.good()) throw std::invalid_argument("failed writing output file: " + out_path);
}

int cmd_jacobi(std::int64_t a, std::int64_t n, const std::string& method) {
    const zolosign::OddModulus modulus = parse_modulus(n);
    if (std::gcd(zolosign::least_nonneg_residue(a, n), n) != 1) {
        // The symbol is 0 on non-units under every evaluation route.
        std::cout << 0 << '\n';
        return kExitPass;
    }
    const zolosign::UnitResidue unit(a, modulus);
    zolosign::JacobiValue value(0);
    if (method == "standard")
        value = zolosign::jacobi_standard(a, modulus);
    else if (method == "zolotarev")
        value = zolosign::jacobi_zolotarev(unit);
    else if (method == "gauss")
        value = zolosign::jacobi_gauss(unit);
    else if (method == "lemma3")
        value = zolosign::jacobi_lemma3(unit);
    else
        throw std::invalid_argument("unknown method: " + method);
    std::cout << value.value() << '\n';
    return kExitPass;
}

int cmd_perm(const std::string& kind, std::int64_t a, std::int64_t n) {
    const zolosign::OddModulus modulus = parse_modulus(n);
    const zolosign::UnitResidue unit(a, modulus);  // NotAUnitError -> exit 2
    if (kind == "sigma") {
        const auto p = zolosign::sigma(unit);
        std::cout << zolosign::cycle_notation(p)
                  << "  sign=" << (zolosign::sign_by_cycles(p).value() > 0 ? "+1" : "-1") << '\n';
    } else if (kind == "gamma") {
        const auto p = zolosign::gamma_half(unit);
        const auto parity = zolosign::sign_by_inversions(p);
        std::cout << zolosign::cycle_notation(p)
                  << "  sign=" << (parity.sign.value() > 0 ? "+1" : "-1")
                  << "  inversions=" << parity.inversions << '\n';
    } else if (kind == "gamma-full" || kind == "gamma-prime") {
        const auto p = kind == "gamma-full" ? zolosign::gamma_full(unit)
                                            : zolosign::gamma_prime_full(unit);
        std::cout << zolosign::cycle_notation(p)
                  << "  sign=" << (zolosign::sign_by_cycles(p).value() > 0 ? "+1" : "-1") << '\n';
    } else {
        throw std::invalid_argument("unknown permutation kind: " + kind);
    }
    return kExitPass;
}

int cmd_verify(const std::string& campaign_str, std::int64_t max_n, const std::string& format,
               const std::string& out_path, int jobs, const std::string& mutate_str) {
    const auto campaign = zolosign::parse_campaign(campaign_str);
    if (!campaign) throw std::invalid_argument("unknown campaign: " + campaign_str);

    zolosign::CampaignOptions options;
    options.n_max = max_n;
    options.jobs = jobs;
    if (!mutate_str.empty()) {
        const auto mutation = zolosign::parse_mutation(mutate_str);
        if (!mutation || *mutation == zolosign::Mutation::none)
            throw std::invalid_argument("unknown mutation: " + mutate_str);
        options.mutate = *mutation;
    }

    const zolosign::VerificationReport report = zolosign::run_campaign(*campaign, options);

    std::string rendered;
    if (format == "text")
        rendered = zolosign::to_text(report);
    else if (format == "csv")
        rendered = zolosign::to_csv(report);
    else if (format == "json")
        rendered = zolosign::to_json(report).dump(2) + "\n";
    else
        throw std::invalid_argument("unknown format: " + format);
    emit(rendered, out_path);

    return report.passed() ? kExitPass : kExitVerificationFailure;
}

int cmd_report(std::int64_t max_n, const std::string& out_path, int jobs) {
    zolosign::CampaignOptions options;
    options.n_max = max_n;
    options.jobs = jobs;
    const auto reports = zolosign::run_all_campaigns(options);
    emit(zolosign::to_json_bundle(reports).dump(2) + "\n", out_path);
    for (const auto& r : reports)
        if (!r.passed()) return kExitVerificationFailure;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation-theoretic Jacobi symbol toolkit: evaluators, the sigma/gamma "
                 "permutations, and exhaustive verification campaigns"};
    app.require_subcommand(1);

    std::int64_t a = 0, n = 0, max_n = 501;
    int jobs = 1;
    std::string method = "standard", kind, campaign, format = "text", out_path, mutate;

    auto* jacobi = app.add_subcommand("jacobi", "evaluate the Jacobi symbol (a/n)");
    jacobi->add_option("a", a, "upper argument (any integer)")->required();
    jacobi->add_option("n", n, "odd modulus >= 3")->required();
    jacobi->add_option("--method", method,
                       "evaluator: standard|zolotarev|gauss|lemma3 (default standard)");

    auto* perm = app.add_subcommand("perm", "print a multiplication permutation in cycle notation");
    perm->add_option("kind", kind, "sigma|gamma|gamma-full|gamma-prime")->required();
    perm->add_option("a", a, "unit residue (any integer representative)")->required();
    perm->add_option("n", n, "odd modulus >= 3")->required();

    auto* verify = app.add_subcommand("verify", "run one exhaustive verification campaign");
    verify->add_option("campaign", campaign,
                       "theorem1|zolotarev|gauss-lemma|lemma1|lemma2|lemma3|character|crt|prime-power")
        ->required();
    verify->add_option("--max-n", max_n, "largest modulus to sweep (default 501)");
    verify->add_option("--format", format, "text|csv|json (default text)");
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");
    verify->add_option("--jobs", jobs, "worker threads, work split by modulus (default 1)");
    verify->add_option("--mutate", mutate,
                       "inject a named defect into the evaluator under test (harness self-check)");

    auto* report = app.add_subcommand("report", "run every campaign and emit a combined JSON bundle");
    report->add_option("--max-n", max_n, "largest modulus to sweep (default 501)");
    report->add_option("--out", out_path, "write the bundle to a file instead of stdout");
    report->add_option("--jobs", jobs, "worker threads (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (jacobi->parsed()) return cmd_jacobi(a, n, method);
        if (perm->parsed()) return cmd_perm(kind, a, n);
        if (verify->parsed()) return cmd_verify(campaign, max_n, format, out_path, jobs, mutate);
        return cmd_report(max_n, out_path, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
