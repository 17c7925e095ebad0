#include "hcv/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hcv/errors.hpp"
#include "hcv/io.hpp"
#include "hcv/maps.hpp"
#include "hcv/tables.hpp"
#include "hcv/verifier.hpp"

namespace hcv {

namespace {

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    bool open(const std::string& path) {
        if (path.empty() || path == "-") return true;
        file.open(path, std::ios::binary);
        if (!file) return false;
        os = &file;
        return true;
    }
};

double minor_tolerance_from_env(double fallback) {
    if (const char* env = std::getenv("HCV_TOLERANCE_MINOR")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return fallback;
}

int run_verify(int n, double a, double theta, const PointOptions& opts) {
    const CaseVerdict cv = verify_point(n, a, theta, opts);
    std::cout << "point n=" << n << " a=" << fmt17(a) << " theta=" << fmt17(theta) << "\n"
              << "branch:                " << cv.branch << "\n"
              << "min minor:             " << fmt17(cv.min_minor) << "\n"
              << "closed-form rel error: " << fmt17(cv.rel_error) << "\n"
              << "max |root|:            " << fmt17(cv.roots_max_modulus) << "\n"
              << "max sampled |omega~|:  " << fmt17(cv.max_dilatation_sample) << "\n"
              << "chd max crossings:     " << cv.chd_max_crossings << "\n";
    if (!cv.detail.empty()) std::cout << "notes: " << cv.detail << "\n";
    std::cout << "verdict: " << to_string(cv.verdict) << "\n";
    switch (cv.verdict) {
        case PointVerdict::Pass: return 0;
        case PointVerdict::Exploratory: return 0;
        case PointVerdict::Fail: return 2;
        case PointVerdict::Undecided: return 3;
    }
    return 3;
}

int run_sweep(int n_min, int n_max, int a_count, int theta_count, const std::string& format,
              const std::string& output, const PointOptions& opts) {
    OutputTarget out;
    if (!out.open(output)) {
        std::cerr << "sweep: cannot open output path " << output << "\n";
        return 64;
    }
    if (format == "csv") {
        SweepCsvWriter w(*out.os);
        sweep(n_min, n_max, a_count, theta_count, [&](const SweepRecord& r) { w.write(r); }, opts);
        w.finish();
    } else {
        SweepJsonWriter w(*out.os);
        sweep(n_min, n_max, a_count, theta_count, [&](const SweepRecord& r) { w.write(r); }, opts);
        w.finish();
    }
    return 0;
}

std::string fmt_complex(Complex v) {
    std::ostringstream os;
    os << fmt17(v.real()) << (v.imag() < 0 ? "" : "+") << fmt17(v.imag()) << "i";
    return os.str();
}

int run_tables(int table, int n, double a, double theta, const std::string& output) {
    OutputTarget out;
    if (!out.open(output)) {
        std::cerr << "tables: cannot open output path " << output << "\n";
        return 64;
    }
    const TableReport rep = table_verify(table, n, a, theta);
    std::ostream& os = *out.os;
    os << "table " << table << " at n=" << n << " a=" << fmt17(a) << " theta=" << fmt17(theta)
       << "\n";
    for (const TableEntry& e : rep.entries) {
        os << (e.passed ? "  ok   " : "  FAIL ") << e.column_pattern << "  formula "
           << fmt_complex(e.formula_value) << "  numeric " << fmt_complex(e.numeric_value)
           << "  abs err " << fmt17(e.abs_error) << "  (" << e.reading << ")\n";
    }
    os << "nonzero determinants: " << rep.observed_nonzero << " (table lists "
       << rep.expected_nonzero << ") " << (rep.counts_match ? "ok" : "MISMATCH") << "\n";
    os << "unlisted determinants max |det|: " << fmt17(rep.max_unlisted_abs) << " "
       << (rep.zeros_ok ? "ok" : "MISMATCH") << "\n";
    os << "split sum vs unsplit minor rel error: " << fmt17(rep.split_sum_rel_error) << " "
       << (rep.sum_ok ? "ok" : "MISMATCH") << "\n";
    if (!rep.ambiguous_resolution.empty()) os << "readings: " << rep.ambiguous_resolution << "\n";
    const bool all_ok = rep.all_entries_pass && rep.counts_match && rep.zeros_ok && rep.sum_ok;
    os << (all_ok ? "table check passed" : "table check FAILED") << "\n";
    return all_ok ? 0 : 2;
}

struct RenderConfig {
    std::string map = "conv";
    double beta = kPi / 2.0;
    double theta = 0.0;
    double a = 0.5;
    int n = 1;
    double r = 0.99;
    int radial = 12;
    int angular = 16;
    int circle_samples = 512;
    int ray_samples = 256;
    std::string output;
};

int run_render(const RenderConfig& cfg) {
    SvgWriter svg;
    std::ostringstream comment;
    comment << "hcv render map=" << cfg.map << " n=" << cfg.n << " a=" << fmt17(cfg.a)
            << " theta=" << fmt17(cfg.theta) << " beta=" << fmt17(cfg.beta)
            << " r=" << fmt17(cfg.r) << " grid=" << cfg.radial << "x" << cfg.angular
            << " circle_samples=" << cfg.circle_samples << " ray_samples=" << cfg.ray_samples;
    svg.set_config_comment(comment.str());

    const double c = (1.0 - cfg.a) / (2.0 * (1.0 + cfg.a));
    auto conv_point = [&](Complex z, Complex diff) {
        const Complex sum = fbeta_sum(kPi / 2.0, z);
        const Complex h = 0.5 * (sum + diff), g = 0.5 * (sum - diff);
        const Complex hp = fbeta_hprime(kPi / 2.0, cfg.theta, cfg.n, z);
        const Complex gp = unit_phase(cfg.theta) * cpow(z, cfg.n) * hp;
        return 0.5 * h + c * z * hp + std::conj(0.5 * g - c * z * gp);
    };
    auto fbeta_point = [&](Complex z, Complex diff) {
        const Complex sum = fbeta_sum(cfg.beta, z);
        return 0.5 * (sum + diff) + std::conj(0.5 * (sum - diff));
    };

    try {
        for (int i = 1; i <= cfg.radial; ++i) {
            const double rho = cfg.r * i / cfg.radial;
            std::vector<Complex> pts;
            pts.reserve(static_cast<size_t>(cfg.circle_samples) + 1);
            if (cfg.map == "F_a") {
                for (int j = 0; j <= cfg.circle_samples; ++j) {
                    const Complex z =
                        rho * unit_phase(2.0 * kPi * (j % cfg.circle_samples) / cfg.circle_samples);
                    pts.push_back(half_plane_analytic(cfg.a, z) +
                                  std::conj(half_plane_coanalytic(cfg.a, z)));
                }
            } else {
                const double b = (cfg.map == "conv") ? kPi / 2.0 : cfg.beta;
                const std::vector<Complex> diff =
                    fbeta_diff_circle(b, cfg.theta, cfg.n, rho, cfg.circle_samples);
                for (int j = 0; j <= cfg.circle_samples; ++j) {
                    const int jj = j % cfg.circle_samples;
                    const Complex z = rho * unit_phase(2.0 * kPi * jj / cfg.circle_samples);
                    pts.push_back(cfg.map == "conv" ? conv_point(z, diff[static_cast<size_t>(jj)])
                                                    : fbeta_point(z, diff[static_cast<size_t>(jj)]));
                }
            }
            svg.add_polyline(pts, "#1f77b4");
        }
        for (int j = 0; j < cfg.angular; ++j) {
            const double angle = 2.0 * kPi * j / cfg.angular;
            std::vector<Complex> pts;
            pts.reserve(static_cast<size_t>(cfg.ray_samples));
            if (cfg.map == "F_a") {
                const Complex dir = unit_phase(angle);
                for (int s = 1; s <= cfg.ray_samples; ++s) {
                    const Complex z = dir * (cfg.r * s / cfg.ray_samples);
                    pts.push_back(half_plane_analytic(cfg.a, z) +
                                  std::conj(half_plane_coanalytic(cfg.a, z)));
                }
            } else {
                const double b = (cfg.map == "conv") ? kPi / 2.0 : cfg.beta;
                const std::vector<Complex> diff =
                    fbeta_diff_ray(b, cfg.theta, cfg.n, angle, cfg.r, cfg.ray_samples);
                const Complex dir = unit_phase(angle);
                for (int s = 1; s <= cfg.ray_samples; ++s) {
                    const Complex z = dir * (cfg.r * s / cfg.ray_samples);
                    pts.push_back(cfg.map == "conv"
                                      ? conv_point(z, diff[static_cast<size_t>(s - 1)])
                                      : fbeta_point(z, diff[static_cast<size_t>(s - 1)]));
                }
            }
            svg.add_polyline(pts, "#d62728");
        }

        OutputTarget out;
        if (!out.open(cfg.output)) {
            std::cerr << "render: cannot open output path " << cfg.output << "\n";
            return 64;
        }
        svg.write(*out.os);

        if (cfg.map == "conv") {
            // The CHD sampler's boundary data, next to the picture.
            const std::string csv_path =
                (cfg.output.empty() || cfg.output == "-") ? "" : cfg.output + ".csv";
            OutputTarget csv;
            if (!csv_path.empty() && !csv.open(csv_path)) {
                std::cerr << "render: cannot open output path " << csv_path << "\n";
                return 64;
            }
            const ConvBoundary b = conv_boundary(cfg.n, cfg.theta, cfg.a, cfg.r, 4096);
            std::ostream& os = *csv.os;
            os << "j,z_re,z_im,phi_re,phi_im,f_re,f_im\n";
            for (size_t j = 0; j < b.z.size(); ++j)
                os << j << ',' << fmt17(b.z[j].real()) << ',' << fmt17(b.z[j].imag()) << ','
                   << fmt17(b.phi[j].real()) << ',' << fmt17(b.phi[j].imag()) << ','
                   << fmt17(b.fmap[j].real()) << ',' << fmt17(b.fmap[j].imag()) << '\n';
        }
    } catch (const Error& e) {
        std::cerr << "render: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"certification tool for harmonic convolution dilatations"};
    app.require_subcommand(1);

    PointOptions opts;
    opts.minor_rel = minor_tolerance_from_env(opts.minor_rel);

    int n = 1, table = 1;
    double a = 0.0, theta = 0.0;
    std::string output = "-";
    std::string format = "csv";
    int n_min = 1, n_max = 8, a_count = 8, theta_count = 16;
    RenderConfig rcfg;

    CLI::App* verify = app.add_subcommand("verify", "certify one parameter point");
    verify->add_option("--n", n, "dilatation power")->required();
    verify->add_option("--a", a, "half-plane parameter, in (-1, 1)")->required();
    verify->add_option("--theta", theta, "dilatation rotation (radians)");
    verify->add_option("--tol-minor", opts.minor_rel, "closed-form relative tolerance");
    verify->add_option("--root-tol", opts.root_tol, "root modulus tolerance");
    verify->add_option("--sample-margin", opts.sample_margin, "required gap below |omega~| = 1");
    verify->add_option("--radial", opts.grid_radial, "dilatation grid, radial");
    verify->add_option("--angular", opts.grid_angular, "dilatation grid, angular");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify a parameter grid");
    sweep_cmd->add_option("--n-min", n_min, "lowest n");
    sweep_cmd->add_option("--n-max", n_max, "highest n");
    sweep_cmd->add_option("--a-count", a_count, "a grid size per n");
    sweep_cmd->add_option("--theta-count", theta_count, "theta grid size");
    sweep_cmd->add_option("--output", output, "output path or -");
    sweep_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--radial", opts.grid_radial, "dilatation grid, radial");
    sweep_cmd->add_option("--angular", opts.grid_angular, "dilatation grid, angular");

    CLI::App* tables_cmd = app.add_subcommand("tables", "certify the split-determinant tables");
    tables_cmd->add_option("--table", table, "table index 1-4")->required();
    tables_cmd->add_option("--n", n, "n (odd for tables 1/3, even for 2/4)")->required();
    tables_cmd->add_option("--a", a, "half-plane parameter")->required();
    tables_cmd->add_option("--theta", theta, "dilatation rotation (radians)");
    tables_cmd->add_option("--output", output, "output path or -");

    CLI::App* render_cmd = app.add_subcommand("render", "trace grid images to SVG");
    render_cmd->add_option("--map", rcfg.map, "f_beta, F_a, or conv")
        ->check(CLI::IsMember({"f_beta", "F_a", "conv"}));
    render_cmd->add_option("--beta", rcfg.beta, "strip parameter (f_beta only)");
    render_cmd->add_option("--n", rcfg.n, "dilatation power");
    render_cmd->add_option("--theta", rcfg.theta, "dilatation rotation");
    render_cmd->add_option("--a", rcfg.a, "half-plane parameter");
    render_cmd->add_option("--r", rcfg.r, "outer radius, < 1");
    render_cmd->add_option("--radial", rcfg.radial, "number of circles");
    render_cmd->add_option("--angular", rcfg.angular, "number of rays");
    render_cmd->add_option("--output", rcfg.output, "output SVG path")->required();

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (verify->parsed()) {
            if (n < 1 || !(a > -1.0 && a < 1.0)) {
                std::cerr << "verify: need n >= 1 and a in (-1, 1)\n";
                return 64;
            }
            if (opts.minor_rel <= 0.0 || opts.root_tol <= 0.0 || opts.grid_radial < 8 ||
                opts.grid_angular < 8) {
                std::cerr << "verify: tolerances must be positive and grids >= 8\n";
                return 64;
            }
            return run_verify(n, a, theta, opts);
        }
        if (sweep_cmd->parsed()) {
            if (opts.grid_radial < 8 || opts.grid_angular < 8) {
                std::cerr << "sweep: grids must be >= 8\n";
                return 64;
            }
            return run_sweep(n_min, n_max, a_count, theta_count, format, output, opts);
        }
        if (tables_cmd->parsed()) {
            if (!(a > -1.0 && a < 1.0)) {
                std::cerr << "tables: a must lie in (-1, 1)\n";
                return 64;
            }
            return run_tables(table, n, a, theta, output);
        }
        if (render_cmd->parsed()) {
            if (!(rcfg.r > 0.0 && rcfg.r < 1.0) || rcfg.radial < 1 || rcfg.angular < 1) {
                std::cerr << "render: need 0 < r < 1 and positive grid counts\n";
                return 64;
            }
            return run_render(rcfg);
        }
    } catch (const BranchMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}

}  // namespace hcv
