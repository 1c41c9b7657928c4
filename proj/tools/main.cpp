#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfib/constants.hpp"
#include "dfib/ermakov.hpp"
#include "dfib/fibonacci.hpp"
#include "dfib/report.hpp"
#include "dfib/sequences.hpp"
#include "dfib/verify.hpp"

namespace {

dfib::Parity parse_parity(const std::string& s) {
    return s == "even" ? dfib::Parity::even : dfib::Parity::odd;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::vector<double> sample_grid(double start, double stop, double step) {
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        g.push_back(start + step * i);
    }
    return g;
}

int emit(const std::string& text) {
    std::fputs(text.c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* prec = std::getenv("DARBOUX_FIB_PRECISION")) {
        if (std::string(prec) != "f64") {
            std::fprintf(stderr, "darboux-fib: unsupported DARBOUX_FIB_PRECISION \"%s\" "
                                 "(only \"f64\" is available)\n", prec);
            return 2;
        }
    }

    CLI::App app{"Continuous Fibonacci functions, their one-parameter deformations, "
                 "and the companion nonlinear-oscillator solutions"};
    app.require_subcommand(1);

    double w_norm = dfib::golden().w_canonical;
    double x0 = 0.0;
    app.add_option("--w-norm", w_norm,
                   "Normalization of the second deformed solution")
        ->capture_default_str();
    app.add_option("--x0", x0, "Base point for the quadrature engine")
        ->capture_default_str();

    auto* table = app.add_subcommand("table", "Darboux-shift table for one parity branch");
    table->fallthrough();
    std::string t_parity = "odd";
    std::vector<double> t_gammas{2.0, 3.0, 4.0};
    int t_count = 4;
    std::string t_format = "csv";
    table->add_option("--parity", t_parity)->check(CLI::IsMember({"odd", "even"}));
    table->add_option("--gamma", t_gammas, "Family parameters, comma separated")
        ->delimiter(',');
    table->add_option("--count", t_count, "Number of table rows");
    table->add_option("--format", t_format)->check(CLI::IsMember({"csv", "json"}));

    auto* series = app.add_subcommand("series", "Sample one function over an x-grid");
    series->fallthrough();
    std::string s_function;
    std::string s_parity = "odd";
    double s_gamma = 2.0;
    double s_k = -1.0;
    std::vector<double> s_range{0.0, 8.0};
    double s_step = 0.05;
    std::string s_format = "csv";
    series->add_option("--function", s_function)
        ->required()
        ->check(CLI::IsMember({"fc", "fe", "fo", "A", "B", "F", "G", "potential",
                               "pinney", "v_deformed"}));
    series->add_option("--parity", s_parity)->check(CLI::IsMember({"odd", "even"}));
    series->add_option("--gamma", s_gamma, "Family parameter");
    series->add_option("--k", s_k, "Inverse-cubic coupling");
    series->add_option("--range", s_range, "Grid endpoints a,b")->delimiter(',');
    series->add_option("--step", s_step, "Grid spacing")->check(CLI::PositiveNumber);
    series->add_option("--format", s_format)->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->fallthrough();
    std::string v_level = "quick";
    std::string v_format = "text";
    verify->add_option("--level", v_level)->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));

    auto* invariant = app.add_subcommand("invariant", "Conserved-quantity profile");
    invariant->fallthrough();
    double i_m = 1.0;
    double i_n = 0.0;
    double i_k = -1.0;
    std::string i_parity = "odd";
    double i_gamma = 2.0;
    bool i_deformed = false;
    std::string i_format = "csv";
    invariant->add_option("--m", i_m, "Weight of the first linear solution");
    invariant->add_option("--n", i_n, "Weight of the second linear solution");
    invariant->add_option("--k", i_k, "Inverse-cubic coupling");
    invariant->add_option("--parity", i_parity)->check(CLI::IsMember({"odd", "even"}));
    invariant->add_option("--gamma", i_gamma, "Family parameter (deformed pair)");
    invariant->add_flag("--deformed", i_deformed, "Use the deformed solution pair");
    invariant->add_option("--format", i_format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!std::isfinite(w_norm) || w_norm == 0.0 || !std::isfinite(x0)) {
        std::fprintf(stderr,
                     "darboux-fib: --w-norm must be finite and nonzero, --x0 finite\n");
        return 2;
    }

    try {
        if (*table) {
            const dfib::ShiftTable t =
                dfib::shift_table(parse_parity(t_parity), t_gammas, t_count, w_norm);
            return emit(t_format == "json" ? dfib::to_json(t) : dfib::to_csv(t));
        }

        if (*series) {
            if (s_range.size() != 2 || s_range[0] > s_range[1]) {
                std::fprintf(stderr, "darboux-fib: --range expects a,b with a <= b\n");
                return 2;
            }
            const dfib::Parity p = parse_parity(s_parity);
            std::function<double(double)> eval;
            std::string params;
            if (s_function == "fc") {
                eval = [](double x) { return dfib::fib_continuous(x); };
            } else if (s_function == "fe") {
                eval = [](double x) { return dfib::fib_parity(dfib::Parity::even, x); };
            } else if (s_function == "fo") {
                eval = [](double x) { return dfib::fib_parity(dfib::Parity::odd, x); };
            } else if (s_function == "A") {
                eval = [p, s_gamma](double x) { return dfib::factor_A(p, s_gamma, x); };
                params = "parity=" + s_parity + " gamma=" + num(s_gamma);
            } else if (s_function == "B") {
                eval = [p, s_gamma, w_norm](double x) {
                    return dfib::factor_B(p, s_gamma, w_norm, x);
                };
                params = "parity=" + s_parity + " gamma=" + num(s_gamma)
                       + " w_norm=" + num(w_norm);
            } else if (s_function == "F") {
                eval = [p, s_gamma](double x) {
                    return dfib::deformed_F(p, s_gamma, x).value;
                };
                params = "parity=" + s_parity + " gamma=" + num(s_gamma);
            } else if (s_function == "G") {
                eval = [p, s_gamma, w_norm](double x) {
                    return dfib::deformed_G(p, s_gamma, w_norm, x).value;
                };
                params = "parity=" + s_parity + " gamma=" + num(s_gamma)
                       + " w_norm=" + num(w_norm);
            } else if (s_function == "potential") {
                eval = [p, s_gamma](double x) {
                    return dfib::deformed_potential_closed(p, s_gamma, x);
                };
                params = "parity=" + s_parity + " gamma=" + num(s_gamma);
            } else if (s_function == "pinney") {
                eval = [s_k](double x) { return dfib::v_sep(s_k, x); };
                params = "k=" + num(s_k);
            } else {
                eval = [p, s_gamma, s_k](double x) {
                    return dfib::v_deformed(p, s_gamma, s_k, x);
                };
                params = "parity=" + s_parity + " gamma=" + num(s_gamma)
                       + " k=" + num(s_k);
            }

            dfib::SampleSeries out;
            out.function = s_function;
            out.parameters = params;
            for (double x : sample_grid(s_range[0], s_range[1], s_step)) {
                dfib::SamplePoint point;
                point.x = x;
                try {
                    point.value = eval(x);
                    point.status = dfib::CellStatus::ok;
                } catch (const dfib::PoleEncountered&) {
                    point.value = std::nan("");
                    point.status = dfib::CellStatus::pole;
                } catch (const dfib::Error&) {
                    point.value = std::nan("");
                    point.status = dfib::CellStatus::singular;
                }
                out.points.push_back(point);
            }
            return emit(s_format == "json" ? dfib::to_json(out) : dfib::to_csv(out));
        }

        if (*verify) {
            const dfib::VerifyLevel level = (v_level == "full") ? dfib::VerifyLevel::full
                                                                : dfib::VerifyLevel::quick;
            const dfib::VerifyReport report = dfib::run_verification(level, w_norm, x0);
            emit(v_format == "json" ? dfib::to_json(report) : dfib::format_report(report));
            return report.overall ? 0 : 1;
        }

        if (*invariant) {
            const dfib::Parity p = parse_parity(i_parity);
            dfib::PinneyInputs in;
            std::vector<double> grid;
            if (i_deformed) {
                in = dfib::PinneyInputs{dfib::deformed_F_field(p, i_gamma),
                                        dfib::deformed_G_field(p, i_gamma, w_norm), i_k,
                                        std::abs(w_norm)};
                grid = sample_grid(0.5, 6.0, 0.05);
            } else {
                in = dfib::PinneyInputs{dfib::fib_parity_field(dfib::Parity::even),
                                        dfib::fib_parity_field(dfib::Parity::odd), i_k,
                                        -4.0 * dfib::golden().phi_tilde / 5.0};
                grid = sample_grid(-3.0, 3.0, 0.05);
            }
            const dfib::InvariantReport r = dfib::invariant_profile(in, i_m, i_n, grid);
            return emit(i_format == "json" ? dfib::to_json(r) : dfib::to_csv(r));
        }
    } catch (const dfib::Error& e) {
        std::fprintf(stderr, "darboux-fib: %s\n", e.what());
        return 2;
    }
    return 0;
}
