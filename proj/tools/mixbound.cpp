// Command-line front end: load or generate a chain, run spectral analysis,
// evaluate mixing-time bounds, and emit CSV tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mixbound/mixbound.hpp"

namespace mb = mixbound;

namespace {

struct ChainInput {
    std::string file;    // matrix file (.csv or .json)
    std::string example; // or a generator name
    long n = 8;
    double beta = 0.5;
    double p = 0.25, q = 0.5, r = 0.25;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", file, "matrix file (.csv or .json)");
        cmd->add_option("--example", example,
                        "generator: pure-birth|biased-walk|sticky-walk|skip-free|hypercube");
        cmd->add_option("--n", n, "state count (or hypercube dimension)");
        cmd->add_option("--beta", beta, "holding probability");
        cmd->add_option("--p", p, "left step probability (biased walk)");
        cmd->add_option("--q", q, "holding probability (biased walk)");
        cmd->add_option("--r", r, "right step probability (biased walk)");
    }

    std::optional<mb::ExampleChain> make_example() const {
        if (example.empty()) return std::nullopt;
        if (example == "pure-birth") return mb::pure_birth(n, beta);
        if (example == "biased-walk") return mb::biased_walk(n, p, q, r);
        if (example == "sticky-walk") return mb::sticky_walk(n);
        if (example == "skip-free") return mb::skip_free(n, beta);
        if (example == "hypercube") return mb::hypercube(n);
        throw mb::InputError("unknown example '" + example + "'");
    }

    /// Generated chains use their closed-form ground truths; a dense
    /// eigensolver cannot recover the defective examples' spectra.
    mb::Spectrum spectrum_of(const mb::TransitionMatrix& P) const {
        if (auto ex = make_example()) return mb::example_spectrum(*ex);
        return mb::spectrum(P);
    }

    mb::TransitionMatrix load() const {
        if (auto ex = make_example()) return ex->matrix;
        if (file.empty()) throw mb::InputError("no input matrix given");
        std::ifstream in(file);
        if (!in) throw mb::InputError("cannot open '" + file + "'");
        if (file.size() > 5 && file.substr(file.size() - 5) == ".json")
            return mb::read_matrix_json(in);
        return mb::read_matrix_csv(in);
    }
};

mb::Budget budget_from_env() {
    mb::Budget budget;
    if (const char* env = std::getenv("MIXBOUND_BUDGET"))
        budget.max_steps = std::atoll(env);
    return budget;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw mb::InputError("cannot open output '" + path + "'");
    return file;
}

mb::RowVector parse_mu(const std::string& spec, long n) {
    if (spec.empty() || spec == "delta:0")
        return mb::RowVector::Unit(n, 0);
    if (spec == "uniform") return mb::RowVector::Constant(n, 1.0 / n);
    if (spec.rfind("delta:", 0) == 0) {
        long k = std::stol(spec.substr(6));
        if (k < 0 || k >= n) throw mb::InputError("mu state out of range");
        return mb::RowVector::Unit(n, k);
    }
    // comma-separated weights
    std::stringstream ss(spec);
    std::string cell;
    std::vector<double> w;
    while (std::getline(ss, cell, ',')) w.push_back(std::stod(cell));
    if (static_cast<long>(w.size()) != n) throw mb::DimensionMismatch();
    mb::RowVector mu(n);
    for (long i = 0; i < n; ++i) mu(i) = w[i];
    if (std::abs(mu.sum() - 1.0) > 1e-10 || mu.minCoeff() < 0)
        throw mb::NotAProbabilityVector();
    return mu;
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::stringstream ss(csv);
    std::string cell;
    std::vector<double> out;
    while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

int cmd_analyze(const ChainInput& input) {
    mb::TransitionMatrix P = input.load();
    std::cout << "N: " << P.size() << '\n';
    mb::Spectrum spec = input.spectrum_of(P);
    try {
        mb::StationaryDistribution pi = mb::stationary_distribution(P);
        std::cout << "pi:";
        for (long i = 0; i < P.size(); ++i)
            std::cout << ' ' << mb::format_number(pi(i));
        std::cout << '\n';
        std::cout << "pi_min: " << mb::format_number(pi.pi_min) << '\n';
        std::cout << "reversible: " << (mb::is_reversible(P, pi) ? "true" : "false")
                  << '\n';
    } catch (const mb::NonUniqueStationary&) {
        std::cout << "pi: not unique\n";
    }
    std::cout << "eigenvalues:";
    for (const auto& z : spec.eigenvalues) {
        std::cout << ' ' << mb::format_number(z.real());
        if (std::abs(z.imag()) > 1e-12)
            std::cout << (z.imag() >= 0 ? "+" : "") << mb::format_number(z.imag())
                      << 'i';
    }
    std::cout << '\n';
    std::cout << "beta_star: " << mb::format_number(spec.beta_star) << '\n';
    std::cout << "gap: " << mb::format_number(spec.gap) << '\n';
    std::cout << "t_rel: " << mb::format_number(spec.t_rel) << '\n';
    if (!spec.ergodic) std::cout << "warning: chain is not ergodic\n";
    return 0;
}

int cmd_bounds(const ChainInput& input, const std::vector<double>& epsilons,
               long exact_horizon, const std::string& out_path) {
    mb::TransitionMatrix P = input.load();
    mb::StationaryDistribution pi = mb::stationary_distribution(P);
    mb::Spectrum spec = input.spectrum_of(P);

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << "name,epsilon,value,applicable,exact,ratio\n";
    for (double eps : epsilons) {
        std::optional<long> exact;
        if (exact_horizon > 0) {
            try {
                mb::DistanceProfile prof =
                    mb::distance_profile(P, pi, exact_horizon, budget_from_env());
                exact = mb::exact_mixing_time(prof, eps, mb::DistanceKind::tv).time;
            } catch (const mb::Error&) {
                // horizon too short: leave the exact column empty
            }
        }
        for (const auto& rep : mb::evaluate_all_bounds(P, pi, spec, eps)) {
            out << rep.name << ',' << mb::format_number(eps) << ','
                << mb::format_number(rep.value) << ','
                << (rep.applicable ? "true" : "false") << ',';
            if (exact) {
                out << *exact << ',';
                if (*exact > 0)
                    out << mb::format_number(rep.value / *exact);
                else
                    out << "";
            } else {
                out << ',';
            }
            out << '\n';
        }
    }
    return 0;
}

int cmd_dual(const ChainInput& input, const std::string& mu_spec, long t_max,
             const std::string& out_link, const std::string& out_tail) {
    mb::TransitionMatrix P = input.load();
    mb::StationaryDistribution pi = mb::stationary_distribution(P);
    mb::RowVector mu = parse_mu(mu_spec, P.size());
    // generated examples with a defective spectrum (pure birth, skip-free)
    // need their closed-form betas; the eigensolver scatters Jordan blocks
    std::vector<double> betas;
    if (input.example == "pure-birth")
        betas.assign(P.size() - 1, input.beta);
    else if (input.example == "skip-free")
        betas.assign(P.size() - 1, input.beta); // beta = 0 unless lazy
    mb::LinkMatrix link = betas.empty() ? mb::build_link(P, pi, mu)
                                        : mb::build_link(P, pi, mu, betas);
    mb::TransitionMatrix Q = mb::to_transition_matrix(link.dual);
    double residual = mb::verify_intertwining(link, P, Q);

    {
        std::ofstream file;
        std::ostream& out = open_out(file, out_link);
        mb::write_link_csv(out, link);
    }
    std::vector<double> absorb = mb::dual_absorption_profile(link.dual, t_max);
    mb::DistanceProfile prof = mb::distance_profile_from(P, pi, mu, t_max);
    {
        std::ofstream file;
        std::ostream& out = open_out(file, out_tail);
        out << "t,sep,sst_tail\n";
        for (long t = 0; t <= t_max && t <= prof.horizon; ++t)
            out << t << ',' << mb::format_number(prof.sep[t]) << ','
                << mb::format_number(1.0 - absorb[t]) << '\n';
    }
    std::cerr << "intertwining residual: " << mb::format_number(residual) << '\n';
    return 0;
}

int cmd_schur(const std::vector<long>& shape, long m,
              const std::string& point_csv, bool count_only,
              const std::string& companion_csv, long t, long i, long j) {
    if (!companion_csv.empty()) {
        std::vector<double> esym = parse_doubles(companion_csv);
        long deg = static_cast<long>(esym.size());
        if (i > 0 && j > 0) {
            std::cout << mb::format_number(
                             mb::companion_power_entry(esym, deg, t, i, j))
                      << '\n';
        } else {
            for (long r = 1; r <= deg; ++r) {
                for (long c = 1; c <= deg; ++c) {
                    if (c > 1) std::cout << ',';
                    std::cout << mb::format_number(
                        mb::companion_power_entry(esym, deg, t, r, c));
                }
                std::cout << '\n';
            }
        }
        return 0;
    }
    if (shape.empty()) throw mb::InputError("need --shape or --companion");
    std::vector<double> point;
    if (!point_csv.empty()) point = parse_doubles(point_csv);
    mb::SsytEnumeration enumr = mb::ssyt_enumerate(shape, m, point);
    std::cout << "count: " << enumr.count << '\n';
    if (shape.size() == 1 || (shape.size() >= 1 &&
                              std::all_of(shape.begin() + 1, shape.end(),
                                          [](long k) { return k == 1; }))) {
        mb::BigInt formula = mb::ssyt_count_hook(
            shape[0], static_cast<long>(shape.size()) - 1, m);
        std::cout << "hook formula: " << formula << '\n';
    }
    if (!point.empty() && !count_only)
        std::cout << "value: " << mb::format_number(enumr.value) << '\n';
    return 0;
}

int cmd_example(const ChainInput& input, const std::string& format) {
    mb::TransitionMatrix P = input.load();
    if (format == "json")
        mb::write_matrix_json(std::cout, P);
    else
        mb::write_matrix_csv(std::cout, P);
    return 0;
}

int cmd_profile(const ChainInput& input, long t_max, const std::string& out_path) {
    mb::TransitionMatrix P = input.load();
    mb::StationaryDistribution pi = mb::stationary_distribution(P);
    mb::DistanceProfile prof = mb::distance_profile(P, pi, t_max, budget_from_env());
    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    mb::write_profile_csv(out, prof);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral analysis and mixing-time bounds for finite Markov chains"};
    app.require_subcommand(1);

    ChainInput input;

    auto* analyze = app.add_subcommand("analyze", "summarize a chain");
    input.attach(analyze);

    auto* bounds = app.add_subcommand("bounds", "evaluate all bounds");
    std::vector<double> epsilons{0.25};
    long exact_horizon = 0;
    std::string out_path;
    input.attach(bounds);
    bounds->add_option("--epsilon", epsilons, "epsilon values");
    bounds->add_option("--exact-horizon", exact_horizon,
                       "profile horizon for exact mixing time (0: skip)");
    bounds->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* dual = app.add_subcommand("dual", "pure-birth dual and link");
    std::string mu_spec, out_link, out_tail;
    long t_max = 100;
    input.attach(dual);
    dual->add_option("--mu", mu_spec, "initial distribution: delta:K | uniform | w1,w2,...");
    dual->add_option("--t-max", t_max, "profile horizon");
    dual->add_option("--out-link", out_link, "link CSV path");
    dual->add_option("--out-tail", out_tail, "tail profile CSV path");

    auto* schur = app.add_subcommand("schur", "SSYT counts and companion powers");
    std::vector<long> shape;
    long m = 3, sch_t = 0, sch_i = 0, sch_j = 0;
    std::string point_csv, companion_csv;
    bool count_only = false;
    schur->add_option("--shape", shape, "partition shape");
    schur->add_option("--m", m, "alphabet size");
    schur->add_option("--point", point_csv, "evaluation point x1,...,xm");
    schur->add_flag("--count", count_only, "print counts only");
    schur->add_option("--companion", companion_csv, "e1,...,em of the roots");
    schur->add_option("--t", sch_t, "power");
    schur->add_option("--i", sch_i, "row (1-based)");
    schur->add_option("--j", sch_j, "column (1-based)");

    auto* example = app.add_subcommand("example", "emit a generated chain");
    std::string format = "csv";
    input.attach(example);
    example->add_option("--format", format, "csv or json");

    auto* profile = app.add_subcommand("profile", "exact distance profile");
    long prof_t_max = 1000;
    std::string prof_out;
    input.attach(profile);
    profile->add_option("--t-max", prof_t_max, "horizon");
    profile->add_option("--out", prof_out, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(input);
        if (app.got_subcommand(bounds))
            return cmd_bounds(input, epsilons, exact_horizon, out_path);
        if (app.got_subcommand(dual))
            return cmd_dual(input, mu_spec, t_max, out_link, out_tail);
        if (app.got_subcommand(schur))
            return cmd_schur(shape, m, point_csv, count_only, companion_csv,
                             sch_t, sch_i, sch_j);
        if (app.got_subcommand(example)) return cmd_example(input, format);
        if (app.got_subcommand(profile))
            return cmd_profile(input, prof_t_max, prof_out);
    } catch (const mb::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const mb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
