#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <string>

#include <json.hpp>

#include "circlesum/errors.hpp"
#include "circlesum/harmonics.hpp"

// JSON-in/JSON-out pipelines behind the command-line tool. Complex numbers are
// [re, im] pairs; every document carries a "command" field so verify can
// dispatch on it.
namespace circlesum::jobs {

using json = nlohmann::json;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verify_failed = 1;
inline constexpr int precondition = 2;
inline constexpr int numerical = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

/// Malformed job document or option value.
class UsageError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Cap on every order n, from CIRCLESUM_MAX_N (default 200).
int max_n();

/// {a: [[re,im]...], n} -> lambdas, phases, n0, residual_head, tail_bounds.
json cmd_represent(const json& job);

/// nu is a decimal index or "all"; grid is the number of t samples on [0, 2pi).
json cmd_harmonics(const TrigPolynomial& signal, const std::string& nu, int grid);

/// Columns t,T,tau_nu,Theta for a single-harmonic document.
std::string harmonics_csv(const json& harmonics_doc);

json cmd_fourier(const TrigPolynomial& signal, const std::string& nu);

/// mode is spf, exp or hsum; see the README for the job fields of each.
json cmd_approx(const std::string& mode, const json& job);

/// Re-checks an emitted document with power sums rebuilt from elementary
/// symmetric functions. The report's "ok" field decides exit code 0 or 1.
json cmd_verify(const json& doc);

/// Random test data: kind "targets" gives a represent job with |a_j| <= (j+2)^{-2},
/// kind "signal" gives a signal file with coefficients in [-1, 1].
std::string cmd_generate(const std::string& kind, int n, std::uint64_t seed);

struct Outcome {
    int exit_code = exit_code::ok;
    json document;  ///< output document, or an error description
};

/// Runs a job and maps exceptions onto the exit-code contract.
Outcome run(const std::function<json()>& job);

int exit_code_for(const std::exception_ptr& error);
json error_document(const std::exception_ptr& error);

}  // namespace circlesum::jobs
