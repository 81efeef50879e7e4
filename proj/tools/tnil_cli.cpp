// tnil: verification runs with JSON or text reports.
//
// Exit codes: 0 all checks pass, 1 usage error, 2 a check failed (theorem violation).
#include "tnil/errors.hpp"
#include "tnil/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

namespace {

using tnil::report::Json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

Json error_report(const std::string& command, const std::string& kind, const std::string& message)
{
    return {{"schema", "tnil.report"},
            {"schema_version", tnil::report::kSchemaVersion},
            {"command", command},
            {"error", {{"kind", kind}, {"message", message}}},
            {"passed", false}};
}

int emit(const Json& report, const std::string& format, const std::string& out)
{
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "tnil: cannot write " << out << "\n";
            return kUsage;
        }
        f << report.dump(2) << "\n";
    }
    if (format == "text")
        std::cout << tnil::report::render_text(report);
    else
        std::cout << report.dump(2) << "\n";
    return report.value("passed", false) ? kOk : kViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for the tower of 2-connected maps out of <a, b | a^{b^2} = a a^{3b}, [a, a^b] = 1>"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string out;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out, "also write the JSON report to this path");

    std::string command;
    std::function<Json()> run;

    std::string s_text;
    auto* norm = app.add_subcommand("norm", "|s|, its 2-adic split and the parity prediction");
    norm->add_option("--s", s_text, "Laurent polynomial in b")->required();
    norm->callback([&] { run = [&] { return tnil::report::norm(tnil::parse_laurent(s_text)); }; });

    int max_span = 6, max_coeff = 3;
    auto* parity = app.add_subcommand("parity-verify", "exhaustive parity check over a box of S");
    parity->add_option("--max-span", max_span)->check(CLI::Range(0, 10));
    parity->add_option("--max-coeff", max_coeff)->check(CLI::Range(0, 6));
    parity->callback([&] { run = [&] { return tnil::report::parity_verify(max_span, max_coeff); }; });

    unsigned k = 0;
    auto* phi = app.add_subcommand("phi-check", "build phi_s : Gamma_k -> Gamma_{k+p(s)} and check it");
    phi->add_option("--s", s_text, "element of S")->required();
    phi->add_option("--k", k, "source level")->check(CLI::Range(0u, 256u));
    phi->callback([&] { run = [&] { return tnil::report::phi_check(tnil::parse_laurent(s_text), k); }; });

    std::string edges;
    bool checks = false;
    std::size_t cohn_trials = 50;
    auto* tower = app.add_subcommand("tower", "build a tower prefix from comma-separated edges");
    tower->add_option("--edges", edges, "e.g. \"1-b+b^2,b\"")->required();
    tower->add_flag("--checks", checks, "per-edge certificates, colimit H_2 and locality evidence");
    tower->add_option("--cohn-trials", cohn_trials)->check(CLI::Range(1, 100000));
    tower->callback([&] { run = [&] { return tnil::report::tower(tnil::report::parse_edges(edges), checks, cohn_trials); }; });

    std::string model = "H";
    int depth = 12, J = 20;
    auto* lcs = app.add_subcommand("lcs", "lower central series, gamma_omega and gamma_{omega+j}");
    lcs->add_option("--model", model, "H, G2 or Gamma_<k>")->required();
    lcs->add_option("--depth", depth)->check(CLI::Range(1, 200));
    lcs->add_option("--J", J)->check(CLI::Range(0, 200));
    lcs->callback([&] { run = [&] { return tnil::report::lcs(tnil::report::parse_model(model), depth, J); }; });

    std::string witness_edges = "1-b+b^2";
    std::size_t samples = 64;
    unsigned max_k = 10;
    int witness_J = 20;
    auto* witness = app.add_subcommand("witness", "evidence that gamma_{omega+j} of the colimit never shrinks");
    witness->add_option("--edges", witness_edges);
    witness->add_option("--J", witness_J)->check(CLI::Range(0, 200));
    witness->add_option("--samples", samples, "number of dyadic samples")->check(CLI::Range(1, 4096));
    witness->add_option("--max-k", max_k, "largest sample denominator exponent")->check(CLI::Range(1u, 30u));
    witness->callback([&] {
        run = [&] { return tnil::report::witness(tnil::report::parse_edges(witness_edges), witness_J, samples, max_k); };
    });

    unsigned m = 4;
    std::size_t trials = 200, n = 3;
    int deg = 3;
    std::uint64_t seed = 1;
    auto* cohn = app.add_subcommand("cohn", "unique lifting through augmentation-invertible matrices on Z/2^m");
    cohn->add_option("--m", m)->check(CLI::Range(0u, 64u));
    cohn->add_option("--trials", trials)->check(CLI::Range(1, 100000));
    cohn->add_option("--n", n, "largest matrix size")->check(CLI::Range(1, 8));
    cohn->add_option("--deg", deg, "largest |exponent| in entries")->check(CLI::Range(0, 16));
    cohn->add_option("--seed", seed);
    cohn->callback([&] { run = [&] { return tnil::report::cohn(m, trials, n, deg, seed); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }
    command = app.get_subcommands().front()->get_name();

    try {
        return emit(run(), format, out);
    } catch (const tnil::TheoremViolation& e) {
        emit(error_report(command, "theorem-violation", e.what()), format, out);
        return kViolation;
    } catch (const tnil::ParseError& e) {
        std::cerr << "tnil " << command << ": parse error: " << e.what() << "\n";
    } catch (const tnil::PreconditionError& e) {
        std::cerr << "tnil " << command << ": " << e.what() << "\n";
    } catch (const tnil::InsufficientTower& e) {
        std::cerr << "tnil " << command << ": " << e.what() << "\n";
    } catch (const tnil::LevelMismatch& e) {
        std::cerr << "tnil " << command << ": " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "tnil " << command << ": " << e.what() << "\n";
    }
    return kUsage;
}
