// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "circlesum/approx.hpp"
#include "circlesum/cpolynomial.hpp"
#include "circlesum/harmonics.hpp"
#include "circlesum/oracle.hpp"
#include "circlesum/representation.hpp"
#include "circlesum/series.hpp"
#include "../unit/test_support.hpp"

using namespace circlesum;
using circlesum::testing::bounded_coeffs;
using circlesum::testing::two_pi;
using circlesum::testing::uniform;
using circlesum::testing::unimodular;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (first_.empty()) first_ = what;
        }
    }
    void track(double value) { worst_ = std::max(worst_, value); }
    Verdict verdict(const std::string& summary) const {
        std::ostringstream out;
        out << summary << "; " << checks_ << " checks";
        if (worst_ > 0.0) out << ", worst " << worst_;
        if (failures_ > 0) out << ", " << failures_ << " failed (first: " << first_ << ")";
        return {failures_ == 0, out.str()};
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    double worst_ = 0.0;
    std::string first_;
};

CoeffSeq negate(const std::vector<Complex>& a, std::size_t len) {
    std::vector<Complex> f(len);
    for (std::size_t j = 0; j < len; ++j) f[j] = -a[j];
    return CoeffSeq(std::move(f));
}

// Direct evaluation, independent of the library's Horner routine.
Complex naive_eval(std::span<const Complex> c, Complex z) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * std::pow(z, static_cast<int>(k));
    return acc;
}

// ---- criteria 1-3 share their inputs --------------------------------------------

struct RepresentationRuns {
    std::vector<std::vector<Complex>> targets;  // 50 vectors, 33 entries each
    RepresentationRuns() {
        for (int i = 0; i < 50; ++i) targets.push_back(bounded_coeffs(33));
    }
};

const RepresentationRuns& runs() {
    static const RepresentationRuns r;
    return r;
}

Verdict head_identities() {
    Tally t;
    for (const auto& a : runs().targets) {
        for (int n = 1; n <= 12; ++n) {
            const auto rep = represent(CoeffSeq(a), n);
            const auto p = build_p(exp_antiderivative_taylor(negate(a, n), n));
            const auto newton = oracle::newton_power_sums(p, n);
            for (int j = 0; j < n; ++j) {
                const Complex from_roots = circlesum::testing::naive_power_sum(rep.lambdas, j + 1);
                const double head = std::abs(from_roots - a[j]);
                const double agree = std::abs(from_roots - newton[j]);
                t.track(std::max(head, agree));
                t.check(head <= 1e-9, "n=" + std::to_string(n) + " j=" + std::to_string(j) + " head");
                t.check(std::abs(newton[j] - a[j]) <= 1e-9, "n=" + std::to_string(n) + " newton head");
                t.check(agree <= 1e-9, "n=" + std::to_string(n) + " roots vs newton");
            }
        }
    }
    return t.verdict("50 target vectors x n=1..12");
}

Verdict root_structure() {
    Tally t;
    double min_gap = 10.0;
    for (const auto& a : runs().targets) {
        for (int n = 1; n <= 12; ++n) {
            const auto p = build_p(exp_antiderivative_taylor(negate(a, n), n));
            const auto roots = roots_on_circle(p);
            t.check(static_cast<int>(roots.size()) == 2 * n + 1, "root count n=" + std::to_string(n));
            double worst = 0.0;
            for (double theta : roots.phases) worst = std::max(worst, std::abs(naive_eval(p.coeffs(), std::polar(1.0, theta))));
            t.track(worst / p.max_abs_coeff());
            t.check(worst <= 1e-10 * p.max_abs_coeff(), "residual n=" + std::to_string(n));
            std::vector<double> ph = roots.phases;
            std::sort(ph.begin(), ph.end());
            double gap = two_pi - (ph.back() - ph.front());
            for (std::size_t k = 1; k < ph.size(); ++k) gap = std::min(gap, ph[k] - ph[k - 1]);
            min_gap = std::min(min_gap, gap);
            t.check(gap > 1e-6, "separation n=" + std::to_string(n));
        }
    }
    std::ostringstream s;
    s << "N = 2n+1 roots, relative residual, min gap " << min_gap;
    return t.verdict(s.str());
}

Verdict tail_bounds() {
    Tally t;
    for (const auto& a : runs().targets) {
        for (int n = 1; n <= 12; ++n) {
            const auto rep = represent(CoeffSeq(a), n);
            for (int j = n; j <= n + 20; ++j) {
                const double value = std::abs(circlesum::testing::naive_power_sum(rep.lambdas, j + 1) - a[j]);
                const double bound = best_tail_bound(n, j, TailBoundKind::bounded).value;
                t.track(value / bound);
                t.check(value <= bound, "n=" + std::to_string(n) + " j=" + std::to_string(j));
            }
        }
    }
    return t.verdict("j in [n, n+20], worst value/bound ratio shown");
}

// ---- criterion 4 -------------------------------------------------------------

Verdict spf_bound() {
    Tally t;
    for (int trial = 0; trial < 20; ++trial) {
        const CoeffSeq f(bounded_coeffs(60));
        for (int n = 1; n <= 10; ++n) {
            const auto p = build_p(exp_antiderivative_taylor(f, n));
            const auto roots = roots_on_circle(p);
            for (double radius : {0.2, 0.5, 0.8}) {
                double sup = 0.0;
                for (int k = 0; k < 720; ++k) {
                    const Complex z = std::polar(radius, two_pi * k / 720.0);
                    sup = std::max(sup, std::abs(spf_eval(roots, z) - naive_eval(f.span(), z)));
                }
                const double bound = spf_bound_bounded(n, radius);
                t.track(sup / bound);
                t.check(sup <= bound, "n=" + std::to_string(n) + " |z|=" + std::to_string(radius));
            }
            t.check(spf_interpolation_order(f, n) >= n, "interpolation order n=" + std::to_string(n));
        }
    }
    return t.verdict("20 f x n=1..10 x |z| in {0.2,0.5,0.8}, worst sup/bound ratio shown");
}

// ---- criterion 5 -------------------------------------------------------------

Verdict harmonic_extraction() {
    Tally t;
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 19;
        std::vector<double> a(n), b(n);
        for (int m = 0; m < n; ++m) {
            a[m] = uniform(-1.0, 1.0);
            b[m] = uniform(-1.0, 1.0);
        }
        const TrigPolynomial sig(a, b);
        const double tol = extraction_tolerance(n, sig.coeff_l1());
        for (int nu = 1; nu <= n; ++nu) {
            const auto op = extraction_phases(n, nu);
            double sup = 0.0;
            for (int i = 0; i < 720; ++i) {
                const double tt = two_pi * i / 720.0;
                double theta = 0.0;
                for (double tk : op.phases) theta += sig(tt - tk);
                sup = std::max(sup, std::abs(theta - sig.harmonic(nu, tt)));
            }
            worst_ratio = std::max(worst_ratio, sup / tol);
            t.check(sup <= tol, "n=" + std::to_string(n) + " nu=" + std::to_string(nu));
            const auto [fa, fb] = fourier_coeffs(sig, nu);
            t.check(std::abs(fa - a[nu - 1]) <= tol && std::abs(fb - b[nu - 1]) <= tol,
                    "fourier n=" + std::to_string(n) + " nu=" + std::to_string(nu));
        }
    }
    t.track(worst_ratio);
    return t.verdict("100 signals, n=2..20, every nu; worst error/tolerance ratio shown");
}

// ---- criterion 6 -------------------------------------------------------------

Verdict exponential_sums() {
    Tally t;
    for (int n = 2; n <= 8; ++n) {
        for (int draw = 0; draw < 5; ++draw) {
            std::vector<Complex> p(80);
            for (int j = 0; j < 80; ++j) p[j] = unimodular() / ((j + 2.0) * (j + 2.0));
            const CoeffSeq pc(p);
            const auto rep = represent(pc, n);
            for (int i = 1; i <= 20; ++i) {
                for (int k = 0; k < 20; ++k) {
                    const Complex z = std::polar(3.0 * i / 20.0, two_pi * k / 20.0);
                    Complex sum{0.0, 0.0};
                    for (const auto& l : rep.lambdas) sum += l * std::exp(l * z);
                    const double err = std::abs(sum - exp_generating_eval(pc, z));
                    const double bound = exp_sum_bound(n, z, 0.9);
                    t.track(err / bound);
                    t.check(err <= bound, "n=" + std::to_string(n) + " |z|=" + std::to_string(std::abs(z)));
                }
            }
        }
    }
    return t.verdict("n=2..8, 5 draws each, 20x20 polar grid on |z|<=3; worst err/bound ratio shown");
}

// ---- criterion 7 -------------------------------------------------------------

Verdict h_sums() {
    Tally t;
    double pole_worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 8;
        const auto a = bounded_coeffs(n + 5);
        const auto h = HSeries::simple_pole();
        const auto rep = h_sum_build(negate(a, a.size()), h, n);
        for (int i = 0; i < 24; ++i) {
            const Complex z = std::polar(0.1 + 0.5 * (i % 6) / 5.0, two_pi * i / 24.0);
            const double d = std::abs(h_sum_eval(h, rep.lambdas, z).value - spf_eval(rep.roots, z));
            pole_worst = std::max(pole_worst, d);
            t.check(d <= 1e-9, "pole reduction n=" + std::to_string(n));
        }
    }

    double ratio = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 7;
        // h_0 = 0, 0 < |h_j| <= M; f_j / h_j = a_{j-1} with |a_{j-1}| <= (j+1)^{-2}
        const double m_bound = uniform(0.5, 2.0);
        std::vector<Complex> hc(60), f(60);
        hc[0] = 0.0;
        f[0] = 0.0;
        for (int j = 1; j < 60; ++j) {
            hc[j] = m_bound * uniform(0.2, 1.0) * unimodular();
            f[j] = hc[j] * uniform(0.0, 1.0) / ((j + 1.0) * (j + 1.0)) * unimodular();
        }
        const auto h = HSeries::from_coeffs(CoeffSeq(hc), m_bound);
        const CoeffSeq fc(f);
        const auto rep = h1_sum_build(fc, h, n);
        for (int ri = 1; ri <= 6; ++ri) {
            for (int k = 0; k < 36; ++k) {
                const Complex z = std::polar(0.1 * ri, two_pi * k / 36.0);
                const auto v = h1_sum_eval(h, rep.lambdas, z);
                const double err = std::abs(v.value - naive_eval(fc.span(), z));
                const double bound = h1_sum_bound(n, std::abs(z), m_bound);
                ratio = std::max(ratio, err / bound);
                t.check(err <= bound, "first-kind bound n=" + std::to_string(n));
            }
        }
    }
    std::ostringstream s;
    s << "pole case max diff " << pole_worst << "; 10 (h, f) pairs, worst err/bound " << ratio;
    return t.verdict(s.str());
}

// ---- criterion 8 -------------------------------------------------------------

Verdict coefficient_bound_suite() {
    Tally t;
    for (double sigma : {0.5, 1.0, 2.0}) {
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<Complex> f(41);
            const int style = trial % 4;
            for (int k = 0; k <= 40; ++k) {
                const double cap = std::pow(k + 2.0, -1.0 - sigma);
                switch (style) {
                    case 0: f[k] = cap * uniform(0.0, 1.0) * unimodular(); break;
                    case 1: f[k] = cap * (1.0 - 1e-12) * unimodular(); break;  // on the boundary, up to rounding
                    case 2: f[k] = -cap; break;                      // all weight on one direction
                    default: f[k] = cap * (k % 2 ? 1.0 : -1.0); break;
                }
            }
            t.check(oracle::coefficient_bound_check(CoeffSeq(f), sigma, 40),
                    "sigma=" + std::to_string(sigma) + " trial " + std::to_string(trial));
        }
    }
    return t.verdict("3000 admissible f, coefficients k <= 40");
}

// ---- criterion 9 -------------------------------------------------------------

Verdict threshold_constants() {
    Tally t;
    const int n_minus_one = n0(CoeffSeq{-1.0}, 50);
    t.check(n_minus_one == 2, "n0(-1) = " + std::to_string(n_minus_one));
    std::ostringstream s;
    s << "n0(-1) = " << n_minus_one << "; n0(-z^(nu-1)) =";
    for (int nu = 2; nu <= 10; ++nu) {
        std::vector<Complex> f(nu, 0.0);
        f[nu - 1] = -1.0;
        const int v = n0(CoeffSeq(f), 50);
        s << ' ' << v;
        t.check(v == 1, "nu=" + std::to_string(nu));
    }
    return t.verdict(s.str() + " for nu=2..10");
}

// ---- criterion 10 ------------------------------------------------------------

int run_cli(const std::string& args, const fs::path& out) {
    const std::string cmd = std::string("\"") + CIRCLESUM_CLI + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json load(const fs::path& p) {
    std::ifstream in(p);
    return json::parse(in);
}

// Structural equality with a relative tolerance on numbers.
bool same(const json& x, const json& y, std::string& where, const std::string& path = "$") {
    if (x.is_number() && y.is_number()) {
        const double a = x.get<double>(), b = y.get<double>();
        if (std::abs(a - b) <= 1e-9 * (1.0 + std::max(std::abs(a), std::abs(b)))) return true;
        where = path + ": " + x.dump() + " vs " + y.dump();
        return false;
    }
    if (x.type() != y.type()) {
        where = path + ": type differs";
        return false;
    }
    if (x.is_object()) {
        if (x.size() != y.size()) {
            where = path + ": key count differs";
            return false;
        }
        for (auto it = x.begin(); it != x.end(); ++it) {
            if (!y.contains(it.key())) {
                where = path + "." + it.key() + ": missing";
                return false;
            }
            if (!same(it.value(), y.at(it.key()), where, path + "." + it.key())) return false;
        }
        return true;
    }
    if (x.is_array()) {
        if (x.size() != y.size()) {
            where = path + ": length differs";
            return false;
        }
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!same(x[i], y[i], where, path + "[" + std::to_string(i) + "]")) return false;
        return true;
    }
    if (x != y) where = path + ": " + x.dump() + " vs " + y.dump();
    return x == y;
}

Verdict cli_golden() {
    Tally t;
    const fs::path fixtures = CIRCLESUM_FIXTURES;
    const fs::path work = fs::temp_directory_path() / ("circlesum_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(work);

    auto golden = [&](const std::string& name, const std::string& args, const std::string& expected, int code) {
        const fs::path out = work / (name + ".json");
        const int rc = run_cli(args, out);
        t.check(rc == code, name + " exit " + std::to_string(rc));
        if (rc != code || expected.empty()) return;
        std::string where;
        const json got = load(out);
        t.check(same(got, load(fixtures / expected), where), name + " " + where);
        t.check(json::parse(got.dump()) == got, name + " re-parse");
    };
    auto fx = [&](const std::string& f) { return "\"" + (fixtures / f).string() + "\""; };

    for (const std::string name : {"represent_zeros_n1", "represent_a01_n2", "represent_invsq_n10"}) {
        golden(name, "represent --in " + fx(name + ".job.json"), name + ".out.json", 0);
        golden("verify_" + name, "verify --in " + fx(name + ".out.json"), "verify_" + name + ".out.json", 0);
        // the freshly emitted document must verify too
        golden("reverify_" + name, "verify --in \"" + (work / (name + ".json")).string() + "\"", "", 0);
    }
    golden("harmonics_nu2", "harmonics --signal " + fx("signal_3cos2t_4sin2t.txt") + " --nu 2 --grid 16",
           "harmonics_nu2.out.json", 0);
    golden("verify_harmonics_nu2", "verify --in " + fx("harmonics_nu2.out.json"), "verify_harmonics_nu2.out.json", 0);
    golden("fourier_all", "fourier --signal " + fx("signal_3cos2t_4sin2t.txt") + " --nu all", "fourier_all.out.json",
           0);

    golden("tampered_represent", "verify --in " + fx("represent_a01_n2.tampered.json"), "", 1);
    golden("tampered_harmonics", "verify --in " + fx("harmonics_nu2.tampered.json"), "", 1);
    golden("below_threshold", "represent --in " + fx("represent_below_n0.job.json"), "", 2);
    golden("nu_above_n", "harmonics --signal " + fx("signal_3cos2t_4sin2t.txt") + " --nu 3", "", 64);

    const fs::path csv = work / "curve.csv";
    const int rc = run_cli("harmonics --signal " + fx("signal_3cos2t_4sin2t.txt") + " --nu 2 --grid 16 --csv \"" +
                               csv.string() + "\"",
                           work / "csv_run.json");
    t.check(rc == 0, "csv run");
    std::ifstream got(csv), want(fixtures / "harmonics_nu2.csv");
    std::string gl, wl;
    int line = 0;
    while (std::getline(want, wl)) {
        ++line;
        const bool have = static_cast<bool>(std::getline(got, gl));
        if (line == 1) {
            t.check(have && gl == wl, "csv header");
            continue;
        }
        double g[4] = {}, w[4] = {};
        const bool ok = have && std::sscanf(gl.c_str(), "%lf,%lf,%lf,%lf", &g[0], &g[1], &g[2], &g[3]) == 4 &&
                        std::sscanf(wl.c_str(), "%lf,%lf,%lf,%lf", &w[0], &w[1], &w[2], &w[3]) == 4;
        bool close = ok;
        for (int c = 0; c < 4 && ok; ++c) close = close && std::abs(g[c] - w[c]) <= 1e-9 * (1.0 + std::abs(w[c]));
        t.check(close, "csv line " + std::to_string(line));
    }
    fs::remove_all(work);
    return t.verdict("golden round-trips, tampered certificates, exit codes");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "head identities", head_identities},
        {2, "root structure", root_structure},
        {3, "tail bound", tail_bounds},
        {4, "SPF bound and interpolation order", spf_bound},
        {5, "harmonic extraction identity", harmonic_extraction},
        {6, "exponential-sum bound", exponential_sums},
        {7, "h-sum reduction and first-kind bound", h_sums},
        {8, "Taylor coefficient bounds", coefficient_bound_suite},
        {9, "zero-free thresholds", threshold_constants},
        {10, "CLI golden tests", cli_golden},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << v.detail
                  << " [" << std::fixed << std::setprecision(2) << secs << "s]" << std::defaultfloat << std::endl;
    }
    std::cout << (failed == 0 ? "all 10 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
