#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "circlesum/jobs.hpp"
#include "circlesum/signal_io.hpp"

using namespace circlesum;
using jobs::json;

namespace {

json read_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw jobs::UsageError("cannot open '" + path + "'");
    return json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw jobs::UsageError("cannot write '" + path + "'");
    out << text;
}

int finish(const jobs::Outcome& outcome, const std::string& out_path) {
    if (outcome.exit_code == jobs::exit_code::ok || outcome.exit_code == jobs::exit_code::verify_failed) {
        try {
            write_text(out_path, outcome.document.dump(2) + "\n");
        } catch (...) {
            std::cerr << jobs::error_document(std::current_exception()).dump(2) << "\n";
            return jobs::exit_code::usage;
        }
    } else {
        std::cerr << outcome.document.dump(2) << "\n";
    }
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unit-circle power-sum representations and harmonic extraction"};
    app.require_subcommand(1);

    std::string in_path, out_path, signal_path, csv_path, nu = "1", mode, kind = "targets";
    int grid = 720;
    int n = 5;
    std::uint64_t seed = 1;

    auto* represent = app.add_subcommand("represent", "Represent n targets as power sums of 2n+1 unit points");
    represent->add_option("--in", in_path, "Job JSON with fields a (complex pairs) and n")->required();
    represent->add_option("--out", out_path, "Output file (default stdout)");

    auto* harmonics = app.add_subcommand("harmonics", "Extract a harmonic of a trigonometric signal");
    harmonics->add_option("--signal", signal_path, "Signal file")->required()->check(CLI::ExistingFile);
    harmonics->add_option("--nu", nu, "Harmonic index or 'all'");
    harmonics->add_option("--grid", grid, "Number of t samples on [0, 2pi)");
    harmonics->add_option("--csv", csv_path, "Write t,T,tau_nu,Theta columns here");
    harmonics->add_option("--out", out_path, "Output file (default stdout)");

    auto* fourier = app.add_subcommand("fourier", "Fourier coefficients by phase-shifted sums");
    fourier->add_option("--signal", signal_path, "Signal file")->required()->check(CLI::ExistingFile);
    fourier->add_option("--nu", nu, "Harmonic index or 'all'");
    fourier->add_option("--out", out_path, "Output file (default stdout)");

    auto* approx = app.add_subcommand("approx", "Approximation error sweeps");
    approx->add_option("--mode", mode, "spf, exp or hsum")->required()->check(CLI::IsMember({"spf", "exp", "hsum"}));
    approx->add_option("--in", in_path, "Job JSON")->required();
    approx->add_option("--out", out_path, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Re-check an emitted document");
    verify->add_option("--in", in_path, "Document to verify")->required();
    verify->add_option("--out", out_path, "Report file (default stdout)");

    auto* generate = app.add_subcommand("generate", "Random test data");
    generate->add_option("--kind", kind, "targets or signal")->check(CLI::IsMember({"targets", "signal"}));
    generate->add_option("--n", n, "Order");
    generate->add_option("--seed", seed, "RNG seed");
    generate->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return jobs::exit_code::usage;
    }

    if (*represent) return finish(jobs::run([&] { return jobs::cmd_represent(read_json(in_path)); }), out_path);
    if (*harmonics) {
        const auto outcome = jobs::run([&] {
            json doc = jobs::cmd_harmonics(read_signal_file(signal_path), nu, grid);
            if (!csv_path.empty()) write_text(csv_path, jobs::harmonics_csv(doc));
            return doc;
        });
        return finish(outcome, out_path);
    }
    if (*fourier) return finish(jobs::run([&] { return jobs::cmd_fourier(read_signal_file(signal_path), nu); }), out_path);
    if (*approx) return finish(jobs::run([&] { return jobs::cmd_approx(mode, read_json(in_path)); }), out_path);
    if (*verify) return finish(jobs::run([&] { return jobs::cmd_verify(read_json(in_path)); }), out_path);
    if (*generate) {
        try {
            write_text(out_path, jobs::cmd_generate(kind, n, seed));
            return jobs::exit_code::ok;
        } catch (...) {
            const auto error = std::current_exception();
            std::cerr << jobs::error_document(error).dump(2) << "\n";
            return jobs::exit_code_for(error);
        }
    }
    return jobs::exit_code::usage;
}
