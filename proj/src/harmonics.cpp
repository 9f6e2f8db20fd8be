#include "circlesum/harmonics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "circlesum/cpolynomial.hpp"
#include "circlesum/representation.hpp"
#include "circlesum/series.hpp"

namespace circlesum {

namespace {

struct PhaseCache {
    std::shared_mutex mutex;
    std::map<std::pair<int, int>, ExtractionOperator> entries;
};

PhaseCache& phase_cache() {
    static PhaseCache cache;
    return cache;
}

void fill_certificate(ExtractionOperator& op) {
    std::vector<Complex> lambdas;
    lambdas.reserve(op.phases.size());
    for (double t : op.phases) lambdas.push_back(std::polar(1.0, -t));

    double target_max = 0.0;
    op.power_sums.assign(op.n, Complex{0.0, 0.0});
    op.certificate_residual = 0.0;
    for (int j = 1; j <= op.n; ++j) {
        op.power_sums[j - 1] = power_sum(lambdas, j);
        op.certificate_residual = std::max(op.certificate_residual, std::abs(op.power_sums[j - 1] - op.targets[j - 1]));
        target_max = std::max(target_max, std::abs(op.targets[j - 1]));
    }
    op.certificate_tolerance = head_tolerance(target_max, op.n);
}

ExtractionOperator build_single(int n, int nu) {
    ExtractionOperator op;
    op.n = n;
    op.nu = nu;
    op.q = n / nu;
    op.targets.assign(n, Complex{0.0, 0.0});
    op.targets[nu - 1] = 1.0;
    op.phases = roots_on_circle(extraction_polynomial(n, nu)).phases;
    fill_certificate(op);
    if (!op.certified()) {
        throw NumericalError("extraction certificate residual " + std::to_string(op.certificate_residual) +
                             " exceeds tolerance");
    }
    return op;
}

void check_degree_and_harmonic(int n, int nu) {
    if (n < 2) {
        throw PreconditionError("harmonic extraction requires n >= 2; the n = 1 case is excluded, got n = " +
                                std::to_string(n));
    }
    if (nu < 1 || nu > n)
        throw InvalidArgument("harmonic index must satisfy 1 <= nu <= n, got nu = " + std::to_string(nu));
}

}  // namespace

CPolynomial extraction_polynomial(int n, int nu) {
    check_degree_and_harmonic(n, nu);
    const int deg = 2 * n + 1;
    std::vector<Complex> c(static_cast<std::size_t>(deg) + 1, Complex{0.0, 0.0});
    double term = 1.0;
    for (int j = 0; j * nu <= n; ++j) {
        if (j > 0) term *= -1.0 / (static_cast<double>(nu) * j);
        c[j * nu] = term;
        c[deg - j * nu] = term;
    }
    return CPolynomial(std::move(c), n);
}

ExtractionOperator extraction_phases(int n, int nu) {
    check_degree_and_harmonic(n, nu);
    auto& cache = phase_cache();
    const auto key = std::pair{n, nu};
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
    }
    ExtractionOperator op = build_single(n, nu);
    std::unique_lock lock(cache.mutex);
    return cache.entries.try_emplace(key, std::move(op)).first->second;
}

std::size_t extraction_cache_size() {
    auto& cache = phase_cache();
    std::shared_lock lock(cache.mutex);
    return cache.entries.size();
}

ExtractionOperator combination_phases(std::span<const Complex> gamma, int n_max) {
    const int len = static_cast<int>(gamma.size());
    if (len < 1) throw InvalidArgument("combination needs at least one weight");
    if (std::all_of(gamma.begin(), gamma.end(), [](Complex g) { return g == Complex{0.0, 0.0}; }))
        throw InvalidArgument("combination weights must not all vanish");
    for (const auto& g : gamma)
        if (!is_finite(g)) throw InvalidArgument("non-finite combination weight");

    std::vector<Complex> neg(gamma.size());
    std::transform(gamma.begin(), gamma.end(), neg.begin(), [](Complex g) { return -g; });
    const CoeffSeq f(std::move(neg));
    const int threshold = n0(f, n_max);

    for (int n = std::max({threshold, len, 2}); n <= n_max; ++n) {
        if (!disk_zero_free(exp_antiderivative_taylor(f, n))) continue;
        std::vector<Complex> targets(n, Complex{0.0, 0.0});
        std::copy(gamma.begin(), gamma.end(), targets.begin());
        const Representation rep = represent(CoeffSeq(targets), n);
        ExtractionOperator op;
        op.n = n;
        op.threshold = threshold;
        op.targets = std::move(targets);
        op.phases = rep.roots.phases;
        fill_certificate(op);
        return op;
    }
    throw NotFoundError("no admissible degree for the combination weights up to n_max = " + std::to_string(n_max),
                        n_max);
}

double combination_reference(const TrigPolynomial& signal, std::span<const Complex> gamma, double t) {
    Complex acc{0.0, 0.0};
    for (int m = 1; m <= static_cast<int>(gamma.size()) && m <= signal.degree(); ++m)
        acc += gamma[m - 1] * signal.c(m) * std::polar(1.0, m * t);
    return 2.0 * acc.real();
}

double extraction_tolerance(int n, double coeff_l1) { return 1e-8 * (2 * n + 1) * (1.0 + coeff_l1); }

TrigPolynomial fit_trig_polynomial(std::span<const double> t, std::span<const double> y, int n) {
    if (n < 1) throw InvalidArgument("fit degree must be >= 1");
    if (t.size() != y.size()) throw InvalidArgument("sample abscissae and values differ in length");
    const auto rows = static_cast<Eigen::Index>(t.size());
    const Eigen::Index cols = 2 * n + 1;
    if (rows < cols)
        throw InvalidArgument("need at least 2n+1 = " + std::to_string(cols) + " samples, got " + std::to_string(rows));

    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        design(i, 0) = 1.0;
        for (int m = 1; m <= n; ++m) {
            design(i, 2 * m - 1) = std::cos(m * t[i]);
            design(i, 2 * m) = std::sin(m * t[i]);
        }
        rhs(i) = y[i];
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < cols) throw InvalidArgument("sample abscissae do not determine a degree-n signal");
    const Eigen::VectorXd sol = qr.solve(rhs);

    std::vector<double> a(n), b(n);
    for (int m = 1; m <= n; ++m) {
        a[m - 1] = sol(2 * m - 1);
        b[m - 1] = sol(2 * m);
    }
    return TrigPolynomial(std::move(a), std::move(b));
}

}  // namespace circlesum
