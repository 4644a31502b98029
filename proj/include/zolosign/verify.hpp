#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "zolosign/identities.hpp"
#include "zolosign/modmath.hpp"
#include "zolosign/perm.hpp"
#include "zolosign/proofkit.hpp"
#include "zolosign/symbols.hpp"
#include "zolosign/zperms.hpp"

/// Exhaustive verification campaigns. Each campaign sweeps one identity over
/// every odd modulus up to a limit and every admissible unit (or (a, k, l)
/// tuple) and reports the witnesses of any failure.
///
/// Campaigns partition work by modulus when run with several jobs; failure
/// lists are merged and sorted afterwards, so the report is deterministic
/// regardless of job count.
///
/// Every campaign accepts an optional named fault injection ("mutation")
/// that corrupts the evaluator under test. A healthy harness must turn each
/// of these into a nonzero-exit report with concrete witnesses; the
/// acceptance suite checks exactly that.
namespace zolosign {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Campaign {
    theorem1,
    zolotarev,
    gauss_lemma,
    lemma1,
    lemma2,
    lemma3,
    character,
    crt,
    prime_power,
};

inline constexpr std::array<Campaign, 9> kAllCampaigns = {
    Campaign::theorem1, Campaign::zolotarev, Campaign::gauss_lemma,
    Campaign::lemma1,   Campaign::lemma2,    Campaign::lemma3,
    Campaign::character, Campaign::crt,      Campaign::prime_power,
};

inline std::string_view campaign_name(Campaign c) {
    switch (c) {
        case Campaign::theorem1: return "theorem1";
        case Campaign::zolotarev: return "zolotarev";
        case Campaign::gauss_lemma: return "gauss-lemma";
        case Campaign::lemma1: return "lemma1";
        case Campaign::lemma2: return "lemma2";
        case Campaign::lemma3: return "lemma3";
        case Campaign::character: return "character";
        case Campaign::crt: return "crt";
        case Campaign::prime_power: return "prime-power";
    }
    return "unknown";
}

inline std::optional<Campaign> parse_campaign(std::string_view name) {
    for (Campaign c : kAllCampaigns)
        if (campaign_name(c) == name) return c;
    return std::nullopt;
}

/// Named fault injections, one per campaign. Each corrupts a single
/// evaluator inside the named campaign; the production evaluators in the
/// library are never touched.
enum class Mutation {
    none,
    theorem1_ignore_branch,    ///< closed form returns (a/n) for every n mod 4
    zolotarev_drop_two_rule,   ///< reference evaluator loses the (2/n) flips
    gauss_drop_member,         ///< |S| undercounted by one when S is nonempty
    lemma1_flip_comparison,    ///< eq (1) decided by {ak}_n > {al}_n instead of <
    lemma2_flip_epsilon,       ///< inversion indicator inverted
    lemma3_drop_exponent,      ///< (a-1)(n^2-1)/8 term dropped from the exponent
    character_expect_odd,      ///< evenness check demands opposite signs at a, n-a
    crt_expect_even,           ///< restricted class sign expected +1
    prime_power_expect_even,   ///< sign on the non-multiples expected +1
};

inline constexpr std::array<Mutation, 9> kAllMutations = {
    Mutation::theorem1_ignore_branch, Mutation::zolotarev_drop_two_rule,
    Mutation::gauss_drop_member,      Mutation::lemma1_flip_comparison,
    Mutation::lemma2_flip_epsilon,    Mutation::lemma3_drop_exponent,
    Mutation::character_expect_odd,   Mutation::crt_expect_even,
    Mutation::prime_power_expect_even,
};

inline std::string_view mutation_name(Mutation m) {
    switch (m) {
        case Mutation::none: return "none";
        case Mutation::theorem1_ignore_branch: return "theorem1-ignore-branch";
        case Mutation::zolotarev_drop_two_rule: return "zolotarev-drop-two-rule";
        case Mutation::gauss_drop_member: return "gauss-drop-member";
        case Mutation::lemma1_flip_comparison: return "lemma1-flip-comparison";
        case Mutation::lemma2_flip_epsilon: return "lemma2-flip-epsilon";
        case Mutation::lemma3_drop_exponent: return "lemma3-drop-exponent";
        case Mutation::character_expect_odd: return "character-expect-odd";
        case Mutation::crt_expect_even: return "crt-expect-even";
        case Mutation::prime_power_expect_even: return "prime-power-expect-even";
    }
    return "unknown";
}

inline std::optional<Mutation> parse_mutation(std::string_view name) {
    for (Mutation m : kAllMutations)
        if (mutation_name(m) == name) return m;
    return std::nullopt;
}

inline Campaign mutation_campaign(Mutation m) {
    switch (m) {
        case Mutation::theorem1_ignore_branch: return Campaign::theorem1;
        case Mutation::zolotarev_drop_two_rule: return Campaign::zolotarev;
        case Mutation::gauss_drop_member: return Campaign::gauss_lemma;
        case Mutation::lemma1_flip_comparison: return Campaign::lemma1;
        case Mutation::lemma2_flip_epsilon: return Campaign::lemma2;
        case Mutation::lemma3_drop_exponent: return Campaign::lemma3;
        case Mutation::character_expect_odd: return Campaign::character;
        case Mutation::crt_expect_even: return Campaign::crt;
        case Mutation::prime_power_expect_even: return Campaign::prime_power;
        case Mutation::none: break;
    }
    throw std::invalid_argument("mutation_campaign: no campaign for 'none'");
}

/// One falsified check: the modulus, the unit, the (k, l) pair when the
/// campaign works per-pair, and a human-readable account of what diverged.
struct Failure {
    std::int64_t n = 0;
    std::int64_t a = 0;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> l;
    std::string detail;
};

struct VerificationReport {
    std::string campaign;
    std::int64_t n_min = 3;
    std::int64_t n_max = 0;
    std::uint64_t pairs_checked = 0;
    std::vector<Failure> failures;
    std::int64_t elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
};

struct CampaignOptions {
    std::int64_t n_max = 501;
    int jobs = 1;
    Mutation mutate = Mutation::none;
};

namespace detail {

struct Tally {
    std::uint64_t pairs = 0;
    std::vector<Failure> failures;

    void fail(std::int64_t n, std::int64_t a, std::string detail,
              std::optional<std::int64_t> k = std::nullopt,
              std::optional<std::int64_t> l = std::nullopt) {
        failures.push_back({n, a, k, l, std::move(detail)});
    }
};

/// Runs fn once per odd n in [3, n_max], splitting moduli across jobs and
/// merging tallies deterministically (failures sorted by n, a, k, l).
template <typename PerModulus>
Tally sweep_odd_moduli(std::int64_t n_max, int jobs, PerModulus fn) {
    Tally total;
    if (jobs <= 1) {
        for (std::int64_t n = 3; n <= n_max; n += 2) fn(n, total);
    } else {
        std::atomic<std::int64_t> next{3};
        std::vector<Tally> tallies(static_cast<std::size_t>(jobs));
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) {
            threads.emplace_back([&, j] {
                for (std::int64_t n = next.fetch_add(2); n <= n_max; n = next.fetch_add(2))
                    fn(n, tallies[static_cast<std::size_t>(j)]);
            });
        }
        for (auto& t : threads) t.join();
        for (auto& t : tallies) {
            total.pairs += t.pairs;
            total.failures.insert(total.failures.end(),
                                  std::make_move_iterator(t.failures.begin()),
                                  std::make_move_iterator(t.failures.end()));
        }
    }
    std::sort(total.failures.begin(), total.failures.end(), [](const Failure& x, const Failure& y) {
        auto key = [](const Failure& f) {
            return std::make_tuple(f.n, f.a, f.k.value_or(-1), f.l.value_or(-1), f.detail);
        };
        return key(x) < key(y);
    });
    return total;
}

inline std::string sign_str(Sign s) { return s.value() > 0 ? "+1" : "-1"; }

/// Corrupted reference evaluator: the classical algorithm with the factor-2
/// flips removed. Harness self-test only.
inline JacobiValue jacobi_standard_without_two_rule(std::int64_t x, const OddModulus& n) {
    std::int64_t num = least_nonneg_residue(x, n.value());
    std::int64_t den = n.value();
    int s = 1;
    while (num != 0) {
        while (num % 2 == 0) num /= 2;
        std::swap(num, den);
        if (num % 4 == 3 && den % 4 == 3) s = -s;
        num %= den;
    }
    return den == 1 ? JacobiValue(s) : JacobiValue(0);
}

/// Corrupted floor-sum evaluator without the (a-1)(n^2-1)/8 term. Harness
/// self-test only.
inline JacobiValue jacobi_lemma3_without_exponent(const UnitResidue& a) {
    const std::int64_t n = a.modulus().value();
    std::int64_t t = 0;
    for (std::int64_t k = 1; k <= a.modulus().half(); ++k) t += a.value() * k / n;
    return JacobiValue(Sign::pow_minus_one(t));
}

template <typename PerUnit>  // void(const UnitResidue&)
void for_each_unit(const OddModulus& modulus, PerUnit fn) {
    for (std::int64_t a = 1; a < modulus.value(); ++a) {
        if (std::gcd(a, modulus.value()) != 1) continue;
        fn(UnitResidue(a, modulus));
    }
}

inline void run_theorem1(std::int64_t n, Mutation mutate, Tally& tally) {
    OddModulus modulus(n);
    for_each_unit(modulus, [&](const UnitResidue& a) {
        ++tally.pairs;
        const Sign measured = sign_by_inversions(gamma_half(a)).sign;
        const Sign expected = mutate == Mutation::theorem1_ignore_branch
                                  ? jacobi_standard(a.value(), modulus).to_sign()
                                  : theorem1_sign(a);
        if (!(measured == expected))
            tally.fail(n, a.value(),
                       "sign(gamma_half) = " + sign_str(measured) + " but closed form gives " +
                           sign_str(expected));
    });
}

inline void run_zolotarev(std::int64_t n, Mutation mutate, Tally& tally) {
    OddModulus modulus(n);
    for_each_unit(modulus, [&](const UnitResidue& a) {
        ++tally.pairs;
        const JacobiValue measured = jacobi_zolotarev(a);
        const JacobiValue expected = mutate == Mutation::zolotarev_drop_two_rule
                                         ? jacobi_standard_without_two_rule(a.value(), modulus)
                                         : jacobi_standard(a.value(), modulus);
        if (!(measured == expected))
            tally.fail(n, a.value(),
                       "sign(sigma) = " + std::to_string(measured.value()) +
                           " but Jacobi symbol is " + std::to_string(expected.value()));
    });
}

inline void run_gauss_lemma(std::int64_t n, Mutation mutate, Tally& tally) {
    OddModulus modulus(n);
    for_each_unit(modulus, [&](const UnitResidue& a) {
        ++tally.pairs;
        std::int64_t size = gauss_set(a, GaussVariant::lower).size();
        if (mutate == Mutation::gauss_drop_member && size > 0) --size;
        const Sign from_set = Sign::pow_minus_one(size);
        const JacobiValue expected = jacobi_standard(a.value(), modulus);
        if (!(JacobiValue(from_set) == expected))
            tally.fail(n, a.value(),
                       "(-1)^|S| = " + sign_str(from_set) + " with |S| = " + std::to_string(size) +
                           " but Jacobi symbol is " + std::to_string(expected.value()));
        const Sign product =
            sign_by_cycles(gamma_full(a)) * sign_by_cycles(gamma_prime_full(a)) *
            sign_by_cycles(sigma(a));
        if (!(from_set == product))
            tally.fail(n, a.value(),
                       "(-1)^|S| = " + sign_str(from_set) +
                           " but sign(gamma)*sign(gamma')*sign(sigma) = " + sign_str(product));
    });
}

inline void run_lemma1(std::int64_t n, Mutation mutate, Tally& tally) {
    OddModulus modulus(n);
    const std::int64_t half = modulus.half();
    for_each_unit(modulus, [&](const UnitResidue& a) {
        const std::int64_t av = a.value();
        for (std::int64_t k = 2; k <= half; ++k) {
            for (std::int64_t l = 1; l < k; ++l) {
                ++tally.pairs;
                PairWitness w1 = lemma1_eq1(a, k, l);
                if (mutate == Mutation::lemma1_flip_comparison) {
                    w1.rhs = (av * k % n > av * l % n) ? 1 : 0;
                    w1.holds = w1.lhs == w1.rhs;
                }
                if (!w1.holds)
                    tally.fail(n, av,
                               "eq1: floor expression = " + std::to_string(w1.lhs) +
                                   ", residue comparison gives " + std::to_string(w1.rhs),
                               k, l);
                const PairWitness w2 = lemma1_eq2(a, k, l);
                if (!w2.holds)
                    tally.fail(n, av,
                               "eq2: floor expression = " + std::to_string(w2.lhs) +
                                   ", residue-sum comparison gives " + std::to_string(w2.rhs),
                               k, l);
            }
        }
    });
}

inline void run_lemma2(std::int64_t n, Mutation mutate, Tally& tally) {
    OddModulus modulus(n);
    const std::int64_t half = modulus.half();
    for_each_unit(modulus, [&](const UnitResidue& a) {
        const Permutation gamma = gamma_half(a);
        for (std::int64_t k = 2; k <= half; ++k) {
            for (std::int64_t l = 1; l < k; ++l) {
                ++tally.pairs;
                PairWitness w = lemma2_pair(gamma, a, k, l);
                if (mutate == Mutation::lemma2_flip_epsilon) {
                    w.lhs = 1 - w.lhs;
                    w.holds = w.lhs == w.rhs;
                }
                if (!w.holds)
                    tally.fail(n, a.value(),
                               "epsilon = " + std::to_string(w.lhs) + " but floor sum is " +
                                   std::to_string(w.rhs) + " (mod 2)",
                               k, l);
            }
        }
        ++tally.pairs;
        const SumWitness s = lemma2_sum(gamma, a);
        if (!s.holds)
            tally.fail(n, a.value(),
                       "summed form: I(a,n) = " + std::to_string(s.lhs) +
                           " but double floor sum is " + std::to_string(s.rhs) + " (mod 2)");
    });
}

inline void run_lemma3(std::int64_t n, Mutation mutate, Tally& tally) {
    OddModulus modulus(n);
    for_each_unit(modulus, [&](const UnitResidue& a) {
        ++tally.pairs;
        const JacobiValue measured = mutate == Mutation::lemma3_drop_exponent
                                         ? jacobi_lemma3_without_exponent(a)
                                         : jacobi_lemma3(a);
        const JacobiValue expected = jacobi_standard(a.value(), modulus);
        if (!(measured == expected))
            tally.fail(n, a.value(),
                       "floor-sum formula gives " + std::to_string(measured.value()) +
                           " but Jacobi symbol is " + std::to_string(expected.value()));
    });
}

inline void run_character(std::int64_t n, Mutation mutate, Tally& tally) {
    OddModulus modulus(n);
    std::vector<int> sign_of(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> units;
    for_each_unit(modulus, [&](const UnitResidue& a) {
        sign_of[static_cast<std::size_t>(a.value())] = sign_by_cycles(gamma_half(a)).value();
        units.push_back(a.value());
    });
    for (std::int64_t a : units) {
        for (std::int64_t b : units) {
            ++tally.pairs;
            const int lhs = sign_of[static_cast<std::size_t>(a * b % n)];
            const int rhs = sign_of[static_cast<std::size_t>(a)] * sign_of[static_cast<std::size_t>(b)];
            if (lhs != rhs)
                tally.fail(n, a,
                           "multiplicativity fails at b = " + std::to_string(b) + ": sign(gamma_{ab}) = " +
                               std::to_string(lhs) + " but product is " + std::to_string(rhs));
        }
    }
    for (std::int64_t a : units) {
        ++tally.pairs;
        const int at_a = sign_of[static_cast<std::size_t>(a)];
        const int at_neg = sign_of[static_cast<std::size_t>(n - a)];
        const int expected = mutate == Mutation::character_expect_odd ? -at_a : at_a;
        if (at_neg != expected)
            tally.fail(n, a,
                       "evenness fails: sign at n-a = " + std::to_string(at_neg) +
                           ", expected " + std::to_string(expected));
    }
}

inline void run_crt(std::int64_t n, Mutation mutate, Tally& tally) {
    OddModulus modulus(n);
    if (modulus.prime_power()) return;
    ++tally.pairs;
    if (mutate == Mutation::crt_expect_even) {
        // Corrupted per-class expectation: the restricted sign of the first
        // class of each generator must be +1 (it is always -1 in truth).
        const GeneratorFamily family = build_generator_family(modulus);
        for (const auto& entry : family.entries) {
            const Permutation sig = sigma(entry.g);
            const std::int64_t cofactor = n / entry.prime_power;
            std::vector<std::int64_t> cls(static_cast<std::size_t>(entry.prime_power));
            for (std::int64_t j = 0; j < entry.prime_power; ++j)
                cls[static_cast<std::size_t>(j)] = j * cofactor;
            const Sign s = sign_by_cycles(restrict(sig, cls));
            if (!(s == Sign::positive()))
                tally.fail(n, entry.g.value(),
                           "restricted sign on the class of 0 mod " + std::to_string(cofactor) +
                               " is " + sign_str(s) + ", expected +1");
        }
        return;
    }
    if (!verify_crt_partition(modulus))
        tally.fail(n, 0, "CRT partition check failed");
}

inline void run_prime_power(std::int64_t n, Mutation mutate, Tally& tally) {
    OddModulus modulus(n);
    const auto& factors = modulus.factorization();
    if (factors.size() != 1 || factors[0].exponent < 2) return;
    const std::int64_t p = factors[0].prime;
    const int alpha = factors[0].exponent;
    ++tally.pairs;
    const UnitResidue g = primitive_root(n);
    if (mutate == Mutation::prime_power_expect_even) {
        std::vector<std::int64_t> complement;
        for (std::int64_t x = 0; x < n; ++x)
            if (x % p != 0) complement.push_back(x);
        const Sign s = sign_by_cycles(restrict(sigma(g), complement));
        if (!(s == Sign::positive()))
            tally.fail(n, g.value(),
                       "sign on the non-multiples of " + std::to_string(p) + " is " + sign_str(s) +
                           ", expected +1");
        return;
    }
    if (!verify_prime_power_induction(p, alpha))
        tally.fail(n, g.value(), "prime-power induction step failed");
}

}  // namespace detail

/// Runs one campaign over every odd modulus in [3, n_max].
inline VerificationReport run_campaign(Campaign campaign, const CampaignOptions& options) {
    if (options.n_max < 3)
        throw std::invalid_argument("run_campaign: n_max must be at least 3");
    if (options.n_max > kMaxModulus)
        throw std::invalid_argument("run_campaign: n_max exceeds the modulus bound " +
                                    std::to_string(kMaxModulus));
    if (options.jobs < 1) throw std::invalid_argument("run_campaign: jobs must be >= 1");
    if (options.mutate != Mutation::none && mutation_campaign(options.mutate) != campaign)
        throw std::invalid_argument("run_campaign: mutation '" +
                                    std::string(mutation_name(options.mutate)) +
                                    "' does not belong to campaign '" +
                                    std::string(campaign_name(campaign)) + "'");

    const auto started = std::chrono::steady_clock::now();
    const Mutation mutate = options.mutate;
    auto body = [campaign, mutate](std::int64_t n, detail::Tally& tally) {
        switch (campaign) {
            case Campaign::theorem1: detail::run_theorem1(n, mutate, tally); break;
            case Campaign::zolotarev: detail::run_zolotarev(n, mutate, tally); break;
            case Campaign::gauss_lemma: detail::run_gauss_lemma(n, mutate, tally); break;
            case Campaign::lemma1: detail::run_lemma1(n, mutate, tally); break;
            case Campaign::lemma2: detail::run_lemma2(n, mutate, tally); break;
            case Campaign::lemma3: detail::run_lemma3(n, mutate, tally); break;
            case Campaign::character: detail::run_character(n, mutate, tally); break;
            case Campaign::crt: detail::run_crt(n, mutate, tally); break;
            case Campaign::prime_power: detail::run_prime_power(n, mutate, tally); break;
        }
    };
    detail::Tally tally = detail::sweep_odd_moduli(options.n_max, options.jobs, body);

    VerificationReport report;
    report.campaign = campaign_name(campaign);
    report.n_min = 3;
    report.n_max = options.n_max;
    report.pairs_checked = tally.pairs;
    report.failures = std::move(tally.failures);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

inline std::vector<VerificationReport> run_all_campaigns(const CampaignOptions& options) {
    std::vector<VerificationReport> reports;
    reports.reserve(kAllCampaigns.size());
    for (Campaign c : kAllCampaigns) reports.push_back(run_campaign(c, options));
    return reports;
}

// ---------------------------------------------------------------------------
// Report rendering

inline nlohmann::json to_json(const Failure& f) {
    nlohmann::json j{{"n", f.n}, {"a", f.a}, {"detail", f.detail}};
    j["k"] = f.k ? nlohmann::json(*f.k) : nlohmann::json(nullptr);
    j["l"] = f.l ? nlohmann::json(*f.l) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) failures.push_back(to_json(f));
    return nlohmann::json{{"campaign", r.campaign},
                          {"range", {{"n_min", r.n_min}, {"n_max", r.n_max}}},
                          {"pairs_checked", r.pairs_checked},
                          {"failures", failures},
                          {"elapsed", r.elapsed_ms},
                          {"verdict", r.passed() ? "PASS" : "FAIL"}};
}

/// Combined document for the `report` command.
inline nlohmann::json to_json_bundle(const std::vector<VerificationReport>& reports) {
    nlohmann::json campaigns = nlohmann::json::array();
    for (const auto& r : reports) campaigns.push_back(to_json(r));
    return nlohmann::json{{"campaigns", campaigns}, {"tool_version", kToolVersion}};
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

/// Failure table as CSV: campaign,n,a,k,l,detail with k and l blank for
/// per-unit campaigns. A passing report renders as the header alone.
inline std::string to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "campaign,n,a,k,l,detail\n";
    for (const auto& r : reports) {
        for (const auto& f : r.failures) {
            out += r.campaign;
            out += ',' + std::to_string(f.n) + ',' + std::to_string(f.a) + ',';
            if (f.k) out += std::to_string(*f.k);
            out += ',';
            if (f.l) out += std::to_string(*f.l);
            out += ',' + detail::csv_escape(f.detail) + '\n';
        }
    }
    return out;
}

inline std::string to_csv(const VerificationReport& report) {
    return to_csv(std::vector<VerificationReport>{report});
}

inline std::string to_text(const VerificationReport& r) {
    std::string out = r.campaign + ": " + (r.passed() ? "PASS" : "FAIL") + "  n in [" +
                      std::to_string(r.n_min) + ", " + std::to_string(r.n_max) +
                      "]  pairs_checked=" + std::to_string(r.pairs_checked) +
                      "  elapsed=" + std::to_string(r.elapsed_ms) + "ms\n";
    for (const auto& f : r.failures) {
        out += "  FAIL n=" + std::to_string(f.n) + " a=" + std::to_string(f.a);
        if (f.k) out += " k=" + std::to_string(*f.k);
        if (f.l) out += " l=" + std::to_string(*f.l);
        out += "  " + f.detail + '\n';
    }
    return out;
}

}  // namespace zolosign
