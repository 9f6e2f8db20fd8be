#include "circlesum/signal_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace circlesum {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw InvalidArgument("signal line " + std::to_string(line_no) + ": " + msg);
}

std::vector<double> numbers(const std::string& s, int line_no) {
    std::istringstream ss(s);
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
            fail(line_no, "not a finite number: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

TrigPolynomial parse_signal(std::istream& in) {
    std::optional<int> n;
    bool sampled = false;
    std::vector<double> a, b, ts, ys;
    std::set<int> seen;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty()) continue;

        if (!n) {
            if (line.rfind("n=", 0) != 0) fail(line_no, "expected header 'n=<int>'");
            const std::string digits = strip(line.substr(2));
            int value = 0;
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
                fail(line_no, "bad degree '" + digits + "'");
            if (value < 1) fail(line_no, "degree must be >= 1");
            n = value;
            a.assign(value, 0.0);
            b.assign(value, 0.0);
            continue;
        }
        if (line == "samples") {
            if (!seen.empty()) fail(line_no, "cannot mix coefficient lines and samples");
            sampled = true;
            continue;
        }

        const auto v = numbers(line, line_no);
        if (sampled) {
            if (v.size() != 2) fail(line_no, "expected 't y'");
            ts.push_back(v[0]);
            ys.push_back(v[1]);
            continue;
        }
        if (v.size() != 3) fail(line_no, "expected 'm a_m b_m'");
        const double m_real = v[0];
        const int m = static_cast<int>(m_real);
        if (m != m_real || m < 1 || m > *n) fail(line_no, "harmonic index out of range 1.." + std::to_string(*n));
        if (!seen.insert(m).second) fail(line_no, "harmonic " + std::to_string(m) + " given twice");
        a[m - 1] = v[1];
        b[m - 1] = v[2];
    }
    if (!n) throw InvalidArgument("signal is empty: missing 'n=<int>' header");
    if (sampled) return fit_trig_polynomial(ts, ys, *n);
    return TrigPolynomial(std::move(a), std::move(b));
}

TrigPolynomial read_signal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open signal file '" + path + "'");
    return parse_signal(in);
}

std::string format_signal(const TrigPolynomial& signal) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "n=" << signal.degree() << '\n';
    for (int m = 1; m <= signal.degree(); ++m) out << m << ' ' << signal.a(m) << ' ' << signal.b(m) << '\n';
    return out.str();
}

}  // namespace circlesum
