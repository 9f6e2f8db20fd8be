#include "circlesum/series.hpp"

#include <string>
#include <vector>

namespace circlesum {

TaylorPolynomial exp_antiderivative_taylor(const CoeffSeq& f, int n) {
    if (n < 0) throw InvalidArgument("truncation order must be non-negative, got " + std::to_string(n));

    std::vector<Complex> g(static_cast<std::size_t>(n) + 1);
    g[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < k; ++j) acc += f.at_or_zero(j) * g[k - 1 - j];
        g[k] = acc / static_cast<double>(k);
    }
    return TaylorPolynomial{CoeffSeq(std::move(g)), n};
}

Complex eval_poly(std::span<const Complex> p, Complex z) noexcept {
    Complex acc{0.0, 0.0};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex eval_deriv(std::span<const Complex> p, Complex z) noexcept {
    Complex acc{0.0, 0.0};
    for (std::size_t k = p.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * p[k];
    return acc;
}

}  // namespace circlesum
