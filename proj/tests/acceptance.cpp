// Acceptance suite: runs every headline criterion at its pinned tolerance and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "a4witt/generic.hpp"
#include "a4witt/numeric.hpp"
#include "a4witt/rng.hpp"
#include "a4witt/suites.hpp"

using namespace a4witt;

namespace {

int failures = 0;

void line(int criterion, const std::string& name, bool pass, const std::string& detail,
          double seconds) {
    std::printf("criterion %2d [%s]: %s (%s, %.1fs)\n", criterion, name.c_str(),
                pass ? "PASS" : "FAIL", detail.c_str(), seconds);
    if (!pass) failures++;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration_cast<std::chrono::duration<double>>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

bool all_pass(const std::vector<Check>& checks, std::string* summary) {
    bool ok = true;
    int pass = 0;
    for (const Check& c : checks) {
        if (!c.passed()) {
            ok = false;
            *summary += c.id + " failed; ";
        } else {
            pass++;
        }
    }
    if (ok) *summary = std::to_string(pass) + " claims pass";
    return ok;
}

}  // namespace

int main() {
    const SuiteOptions opt{0xA4, 100};

    {  // 1: exact symbolic identities of the resolvent machinery
        Timer t;
        std::string s;
        std::vector<Check> checks{check_resolvent_formulas(), check_disc_product_identity(),
                                  check_hessian_identity(), check_birational_roundtrip()};
        PencilReport pencil = pencil_analysis();
        checks.push_back(pencil.disc_identity_holds
                             ? Check::pass("pencil_disc", "prop2.3")
                             : Check::fail("pencil_disc", "prop2.3"));
        bool ok = all_pass(checks, &s);
        line(1, "prop2 symbolic identities", ok, s, t.seconds());
    }
    {  // 2: the pencil remainder is U(T) * Q for a definite modulus
        Timer t;
        std::string detail;
        bool ok = false;
        try {
            PencilReport pencil = pencil_analysis();
            ok = pencil.u_at_zero_is_one;
            detail = "modulus " + pencil.str_modulus() + ", U(0)=1 " +
                     (pencil.u_at_zero_is_one ? "holds" : "fails");
        } catch (const NoProportionality& e) {
            detail = e.what();
        }
        line(2, "pencil proportionality", ok, detail, t.seconds());
    }
    {  // 3: numeric root formula, 100 seeded quartics, |Q(value)| < 1e-9 * scale
        Timer t;
        Check c = check_root_formula_random(opt.seed, opt.samples, 1e-9);
        line(3, "paired-root values solve Q", c.passed(),
             "100 quartics, tol 1e-9: " + c.status, t.seconds());
    }
    {  // 4: both family discriminants have exact polynomial square roots
        Timer t;
        Check a = check_prop1_disc_square();
        Check b = check_cubic_disc_square();
        line(4, "family discriminants are squares", a.passed() && b.passed(),
             "quartic " + a.status + ", cubic " + b.status, t.seconds());
    }
    {  // 5: the change of variables recovers the family quartic
        Timer t;
        Check c = check_change_of_variables();
        line(5, "birational change of variables", c.passed(), c.status, t.seconds());
    }
    {  // 6: pinned classifier corpus + 50 family specializations in {A4, V4}
        Timer t;
        std::string s;
        std::vector<Check> checks = verify_prop1(SuiteOptions{opt.seed, opt.samples});
        std::vector<Check> relevant;
        for (Check& c : checks)
            if (c.id == "prop1.galois_corpus" || c.id == "prop1.specialization_labels")
                relevant.push_back(std::move(c));
        bool ok = all_pass(relevant, &s);
        line(6, "galois classification corpus", ok, s, t.seconds());
    }
    {  // 7: exactly one Witt convention matches on calibration + fresh batches
        Timer t;
        Check c = check_witt_calibration(opt);
        std::string detail = c.status;
        if (c.witness.contains("selected"))
            detail += ", selected " + c.witness["selected"].get<std::string>();
        line(7, "witt convention calibration", c.passed(), detail, t.seconds());
    }
    {  // 8: sign - reaches rate 1.0; sign + exhibits a nontrivial case
        Timer t;
        Check c = check_sign_calibration(opt);
        std::string detail = c.status;
        if (c.witness.contains("selected_sign"))
            detail += ", sign " + c.witness["selected_sign"].get<std::string>();
        line(8, "criterion sign calibration", c.passed(), detail, t.seconds());
    }
    {  // 9: parametrized samples embed; irreducible ones are totally real
        Timer t;
        std::string s;
        std::vector<Check> checks = verify_criterion(opt);
        std::vector<Check> relevant;
        for (Check& c : checks)
            if (c.id == "criterion.end_to_end_embeddable" || c.id == "criterion.total_reality")
                relevant.push_back(std::move(c));
        bool ok = all_pass(relevant, &s);
        line(9, "end-to-end embeddability", ok, s, t.seconds());
    }
    {  // 10: infrastructure property suites, zero failures allowed
        Timer t;
        std::string s;
        std::vector<Check> checks = verify_infrastructure(opt);
        bool ok = all_pass(checks, &s);
        line(10, "infrastructure properties", ok, s, t.seconds());
    }

    if (failures == 0)
        std::printf("acceptance: all 10 criteria pass\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
