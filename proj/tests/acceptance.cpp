// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include "oracles.hpp"

#include "tsg/char_table.hpp"
#include "tsg/cli.hpp"
#include "tsg/growth.hpp"
#include "tsg/markov.hpp"
#include "tsg/modular_fusion.hpp"
#include "tsg/pieri.hpp"
#include "tsg/torus.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace tsg;

namespace {

struct Criterion {
    int id;
    std::string title;
    double time_limit_s; // 0: no runtime bound stated
    std::function<bool(std::string&)> body;
};

BigInt catalan(unsigned k) { return binomial(2 * k, k) / (k + 1); }

bool ac1(std::string& note)
{
    const std::vector<BigInt> expected{1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
    const auto s = ts_series_sl(2, 12);
    for (unsigned k = 1; k <= 12; ++k)
        if (expected[k - 1] != oracle::syt_by_corners({static_cast<int>(k), static_cast<int>(k)}) ||
            expected[k - 1] != catalan(k)) {
            note = "frozen table disagrees with the SYT oracle at k=" + std::to_string(k);
            return false;
        }
    if (s.values != expected) {
        note = "series differs from Catalan numbers";
        return false;
    }
    return true;
}

bool ac2(std::string& note)
{
    std::size_t checked = 0;
    for (int m = 2; m <= 4; ++m) {
        Decomposition d = Decomposition::unit(m);
        for (int n = 0; n <= 10; ++n) {
            for (const auto& [lambda, mult] : d.mults) {
                ++checked;
                if (mult != hook_syt_count(lambda)) {
                    note = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " key " + lambda.to_string();
                    return false;
                }
            }
            if (d.total_dimension() != power(BigInt(m), static_cast<unsigned long>(n))) {
                note = "dimension sum fails at m=" + std::to_string(m) + " n=" + std::to_string(n);
                return false;
            }
            d = pieri_step(d);
        }
    }
    note = std::to_string(checked) + " multiplicities checked";
    return true;
}

bool ac3(std::string& note)
{
    for (int m : {2, 3}) {
        const auto s = ts_series_sl(m, 10);
        if (!fekete_check(s)) {
            note = "supermultiplicativity fails for SL_" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool ac4(std::string& note)
{
    const auto full = ts_series_sl(2, 12);
    double previous = 0.0;
    for (std::size_t k = 1; k <= full.values.size(); ++k) {
        GrowthSeries prefix{full.step, {full.values.begin(), full.values.begin() + static_cast<long>(k)}, full.dim_v};
        const double lower = estimate(prefix).lower;
        if (lower < previous - 1e-9) {
            note = "lower bound decreased at horizon " + std::to_string(k);
            return false;
        }
        previous = lower;
    }
    const auto e = estimate(full);
    char buf[96];
    std::snprintf(buf, sizeof buf, "lower=%.12g upper=%g", e.lower, e.upper);
    note = buf;
    return e.lower >= 1.66 && e.lower <= e.upper && e.upper == 2.0;
}

bool ac5(std::string& note)
{
    int pairs = 0;
    for (int p : {2, 3, 5, 7})
        for (int m = 0; m < p; ++m)
            for (int n = 0; n < p; ++n) {
                ++pairs;
                if (fuse_basis(p, m, n) != jordan_oracle(p, m, n)) {
                    note = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
                    return false;
                }
            }
    note = std::to_string(pairs) + " index pairs";
    return true;
}

bool ac6(std::string&)
{
    const IntegerRingMap s = example_map();
    const TransitionMatrix ps = p_of_map(s);
    const TransitionMatrix ps2 = p_of_map(s.compose(s));
    const TransitionMatrix expected_ps(2, {1, Rational(1, 3), 0, Rational(2, 3)});
    const TransitionMatrix expected_ps2(2, {1, Rational(3, 5), 0, Rational(2, 5)});
    return ps == expected_ps && ps2 == expected_ps2 && ps2 != ps * ps;
}

bool ac7(std::string& note)
{
    for (int p : {2, 3, 5})
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                const auto va = FusionVector::basis(p, a);
                const auto vb = FusionVector::basis(p, b);
                if (p_of_tensor_by(va) * p_of_tensor_by(vb) != p_of_tensor_by(fuse(va, vb))) {
                    note = "multiplicativity fails p=" + std::to_string(p);
                    return false;
                }
            }
    for (int p : {2, 3, 5}) {
        const auto v1 = FusionVector::basis(p, 1);
        const auto e1 = q_of(FusionVector::basis(p, 0));
        const TransitionMatrix t = p_of_tensor_by(v1);
        for (unsigned n = 0; n <= 10; ++n)
            if (t.pow(n) * e1 != q_of(tensor_power(v1, n))) {
                note = "trajectory fails p=" + std::to_string(p) + " n=" + std::to_string(n);
                return false;
            }
    }
    return true;
}

bool ac8(std::string& note)
{
    for (int p : {3, 5}) {
        const auto v1 = FusionVector::basis(p, 1);
        const Rational r = decay_rate(v1);
        if (r >= 1) {
            note = "decay rate not below 1";
            return false;
        }
        for (unsigned n = 0; n <= 8; ++n) {
            const auto v = tensor_power(v1, static_cast<unsigned>(p - 1) * n);
            if (non_projective_mass(q_of(v)) > power(r, n)) {
                note = "p=" + std::to_string(p) + " n=" + std::to_string(n);
                return false;
            }
        }
    }
    const auto s = ts_series_modular(FusionVector::basis(3, 1), 2, 15);
    for (const auto& a : s.values)
        if (a != 1) {
            note = "TS(V1^{2n}) != 1 for p=3";
            return false;
        }
    const double lower = estimate(s).lower;
    note = "r3=" + decay_rate(FusionVector::basis(3, 1)).get_str() + " r5=" + decay_rate(FusionVector::basis(5, 1)).get_str();
    return lower < 2.0;
}

bool ac9(std::string& note)
{
    double worst_gap = -1.0;
    for (const std::vector<long>& k : {std::vector<long>{2, -1}, std::vector<long>{1, 1, -1}, std::vector<long>{3, -1, -1}})
        for (int n = 1; n <= 60; ++n) {
            const double exact = zero_weight_probability({k}, n).get_d();
            const double bound = bernstein_zero_bound({k}, n).bound;
            worst_gap = std::max(worst_gap, exact - bound);
            if (exact > bound + 1e-12) {
                note = "violated at n=" + std::to_string(n);
                return false;
            }
        }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max(prob - bound) = %.3g", worst_gap);
    note = buf;
    return true;
}

bool ac10(std::string& note)
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= 6; ++n)
            if (diagonal_zero_count(m, n) != oracle::equal_occupancy_dp(m, n)) {
                note = "closed form vs DP at m=" + std::to_string(m) + " n=" + std::to_string(n);
                return false;
            }
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 6; ++n)
            if (diagonal_zero_count(m, n) < trivial_multiplicity(m, m * n)) {
                note = "weight-zero space smaller than TS at m=" + std::to_string(m);
                return false;
            }
    return true;
}

bool ac11(std::string& note)
{
    const auto t = CharacterTable::builtin("S3");
    const auto& f = t.irreps()[t.index_of("std")].character;
    const unsigned cap = static_cast<unsigned>(t.order());
    const bool first = first_power_containing(t, f, t.index_of("triv"), cap) == 2u &&
                       first_power_containing(t, f, t.index_of("sign"), cap) == 2u &&
                       first_power_containing(t, f, t.index_of("std"), cap) == 1u;
    const auto reg = regular_tensor_check(t, f);
    const bool regular = reg.ok && reg.multiplicities == std::vector<long>{2, 2, 4} && reg.trivial_summands == 2;
    const auto minimal = min_power_containing_regular(t, f, 4 * cap);
    const bool min_ok = minimal.power == 2u && minimal.monotone_next;
    if (!first)
        note = "first_power_containing";
    else if (!regular)
        note = "regular_tensor_check";
    else if (!min_ok)
        note = "min_power_containing_regular";
    return first && regular && min_ok;
}

std::string run_binary(const std::string& cmdline, int& code)
{
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmdline.c_str(), "r"), pclose);
    if (!pipe) {
        code = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe.release());
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

bool ac12(std::string& note)
{
    const std::string bin = TSG_CLI_PATH;
    const std::string s3 = std::string(TSG_DATA_DIR) + "/s3.tbl";
    const std::vector<std::string> commands{
        "pieri --m 2 --n 4",
        "pieri --m 2 --n 0",
        "pieri --m 2 --n 4 --canonical",
        "pieri --m 3 --n 6 --json",
        "pieri --m 3 --n 6 --csv",
        "ts sl --m 2 --max 4",
        "ts modular --p 3 --seed V1 --step 2 --max 4",
        "ts modular --p 2 --seed V1 --step 1 --max 3",
        "fusion --p 5 3 3 --oracle",
        "fusion --p 3 1 1",
        "fusion --p 7 0 4",
        "markov --p 2 --example",
        "markov --p 3 --seed V1 --power 2",
        "markov --p 3 --seed V0 --power 5",
        "torus --weights 2,-1 --n 3",
        "torus --diagonal --m 3 --n 2",
        "chartab " + s3 + " regular-check --irrep std",
        "chartab " + s3 + " decompose --irrep std --power 2",
        "chartab " + s3 + " first-power --irrep std",
        "chartab " + s3 + " min-regular --irrep std",
    };
    for (const auto& c : commands) {
        int code1 = 0, code2 = 0;
        const std::string a = run_binary(bin + " " + c + " 2>&1", code1);
        const std::string b = run_binary(bin + " " + c + " 2>&1", code2);
        if (a != b || code1 != 0 || code2 != 0 || a.empty()) {
            note = "'" + c + "' not deterministic or failed";
            return false;
        }
    }

    // Injected fault: an oracle that miscounts one trivial block.
    cli::Hooks faulty;
    faulty.fusion_oracle = [](int p, int m, int n) {
        FusionVector v = jordan_oracle(p, m, n);
        v[0] += 1;
        return v;
    };
    std::ostringstream out, err;
    const int fault_code = cli::run({"fusion", "--p", "5", "3", "3", "--oracle"}, out, err, faulty);
    if (fault_code != 1) {
        note = "fault fixture returned " + std::to_string(fault_code);
        return false;
    }
    int usage_code = 0;
    run_binary(bin + " fusion --p 4 1 1 2>&1", usage_code);
    if (usage_code != 2) {
        note = "usage error returned " + std::to_string(usage_code);
        return false;
    }
    note = std::to_string(commands.size()) + " commands x2, fault exit 1";
    return true;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Catalan identity for the SL_2 TS series", 1.0, ac1},
        {2, "Pieri multiplicities = hook-length counts, dimension sum m^n", 5.0, ac2},
        {3, "Fekete supermultiplicativity for SL_2, SL_3 series", 1.0, ac3},
        {4, "SL_2 growth lower bound >= 1.66 and monotone", 1.0, ac4},
        {5, "closed-form fusion = Jordan oracle for p in {2,3,5,7}", 10.0, ac5},
        {6, "p=2 example matrices and P(S^2) != P(S)^2", 0.0, ac6},
        {7, "P(a)P(b) = P(a⊗b) and walk = Q(V1^n)", 0.0, ac7},
        {8, "non-projective mass <= r^n; TS(V1^{2n}) = 1 for p=3", 0.0, ac8},
        {9, "zero-weight probability <= Bernstein bound + 1e-12", 2.0, ac9},
        {10, "diagonal zero count = DP count and >= trivial multiplicity", 0.0, ac10},
        {11, "S3 faithful-power, regular-tensor and min-regular facts", 1.0, ac11},
        {12, "CLI determinism and oracle-fault exit code", 0.0, ac12},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string note;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
            ok = false;
            note += " (runtime limit exceeded)";
        }
        std::printf("[%s] AC%-2d %-62s %8.3fs%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), elapsed,
                    note.empty() ? "" : "  ", note.c_str());
        failures += ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
