// dqw: discrete-time Dirac quantum walk simulator on triangular and
// honeycomb lattices. Subcommands: dispersion, zitter, evolve, gauge-check,
// cone-check.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dqw/dispersion.hpp"
#include "dqw/experiment.hpp"
#include "dqw/io.hpp"
#include "dqw/walk.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

dqw::WalkKind parse_walk(const std::string& name) {
    if (name == "six") return dqw::WalkKind::SixStepEquilateral;
    if (name == "three") return dqw::WalkKind::ThreeStepEquilateral;
    if (name == "isosceles") return dqw::WalkKind::ThreeStepIsosceles;
    if (name == "honeycomb") return dqw::WalkKind::ThreeStepHoneycomb;
    throw std::invalid_argument("expected six|three|isosceles|honeycomb, got " + name);
}

// Accepts plain numbers and pi fractions: "0", "pi", "2pi/3", "-pi/2", "1.5".
double parse_angle(const std::string& text) {
    std::string s = text;
    double sign = 1.0;
    size_t pos = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') sign = -1.0;
        pos = 1;
    }
    size_t pi_at = s.find("pi", pos);
    if (pi_at == std::string::npos) return sign * std::stod(s.substr(pos));
    double num = pi_at == pos ? 1.0 : std::stod(s.substr(pos, pi_at - pos));
    double den = 1.0;
    size_t slash = s.find('/', pi_at + 2);
    if (slash != std::string::npos) den = std::stod(s.substr(slash + 1));
    return sign * num * kPi / den;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(parse_angle(tok));
    return out;
}

std::string joined(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac quantum walks on triangular and honeycomb lattices"};
    app.require_subcommand(1);

    std::string walk = "three", mass = "0", masses = "0";
    std::string out_dir = ".", out_name;
    int resolution = 256, grid_n = 512;

    auto* disp = app.add_subcommand("dispersion", "export an omega(k) grid as CSV");
    disp->add_option("--walk", walk, "six|three|isosceles|honeycomb");
    disp->add_option("--mass", mass, "mass (accepts pi fractions, e.g. 2pi/3)");
    disp->add_option("--resolution", resolution, "grid points per axis")
        ->check(CLI::Range(8, 4096));
    disp->add_option("--out-dir", out_dir, "output directory");
    disp->add_option("--out", out_name, "output file name");

    auto* zit = app.add_subcommand("zitter", "minimal Zitterbewegung gap table");
    zit->add_option("--walk", walk, "six|three|isosceles (triangular only)");
    zit->add_option("--masses", masses, "comma-separated mass list");
    zit->add_option("--grid", grid_n, "coarse scan resolution")
        ->check(CLI::Range(64, 2048));
    zit->add_option("--out-dir", out_dir, "output directory");
    zit->add_option("--out", out_name, "output file name");

    std::string config_path, init_mode, spinor_text;
    int nx = 1024, ny = 64, steps = 2000;
    double ex = 0.0, ey = 0.0, packet_kx = 0.0, packet_ky = 0.0, packet_width = 4.0;
    std::uint64_t eseed = 1;
    bool static_field = false;
    auto* evo = app.add_subcommand("evolve", "run a walk and export density artifacts");
    evo->add_option("--config", config_path, "JSON experiment config (flags override)");
    auto* o_walk = evo->add_option("--walk", walk, "six|three|isosceles|honeycomb");
    auto* o_mass = evo->add_option("--mass", mass, "mass");
    auto* o_nx = evo->add_option("--nx", nx, "lattice width");
    auto* o_ny = evo->add_option("--ny", ny, "lattice height");
    auto* o_steps = evo->add_option("--steps", steps, "time steps");
    auto* o_ex = evo->add_option("--ex", ex, "uniform electric field, x component");
    auto* o_ey = evo->add_option("--ey", ey, "uniform electric field, y component");
    auto* o_static = evo->add_flag("--static-field", static_field,
                                   "use static coin angles instead of the time ramp");
    auto* o_init = evo->add_option("--init", init_mode, "symmetric|spinor|gaussian");
    auto* o_spinor = evo->add_option("--spinor", spinor_text, "re,im,re,im");
    auto* o_pkx = evo->add_option("--packet-kx", packet_kx, "packet center kx");
    auto* o_pky = evo->add_option("--packet-ky", packet_ky, "packet center ky");
    auto* o_pw = evo->add_option("--packet-width", packet_width, "packet width");
    auto* o_out = evo->add_option("--out-dir", out_dir, "output directory");
    auto* o_seed = evo->add_option("--seed", eseed, "random seed");

    std::uint64_t seed = 1;
    int gsize = 12, gsteps = 10;
    bool corrupt = false;
    auto* gch = app.add_subcommand("gauge-check", "randomized gauge-invariance check");
    gch->add_option("--seed", seed, "random seed");
    gch->add_option("--size", gsize, "lattice side")->check(CLI::Range(4, 64));
    gch->add_option("--steps", gsteps, "time steps")->check(CLI::Range(1, 100));
    gch->add_flag("--corrupt", corrupt, "flip one transform sign (negative control)");

    double radius = 0.05;
    int directions = 32;
    auto* cone = app.add_subcommand("cone-check", "massless cone isotropy report");
    cone->add_option("--walk", walk, "six|three|isosceles|honeycomb");
    cone->add_option("--radius", radius, "ring radius")->check(CLI::Range(1e-4, 0.5));
    cone->add_option("--directions", directions, "sampled directions")
        ->check(CLI::Range(4, 1024));
    cone->add_option("--out-dir", out_dir, "output directory");
    cone->add_option("--out", out_name, "output file name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (disp->parsed()) {
            dqw::WalkSpec w = dqw::build_walk(parse_walk(walk), parse_angle(mass), 1.0);
            dqw::DispersionResult grid = dqw::scan_bz(w, resolution, resolution);
            std::filesystem::create_directories(out_dir);
            dqw::write_dispersion_csv(
                joined(out_dir, out_name.empty() ? "dispersion.csv" : out_name), grid);
            return 0;
        }

        if (zit->parsed()) {
            dqw::WalkKind kind = parse_walk(walk);
            if (kind == dqw::WalkKind::ThreeStepHoneycomb)
                throw std::invalid_argument(
                    "minimal-gap tables cover the triangular walks only");
            std::vector<double> ms = parse_number_list(masses);
            if (ms.empty()) throw std::invalid_argument("empty mass list");
            std::vector<std::pair<double, dqw::GapReport>> rows;
            for (double m : ms)
                rows.emplace_back(m, dqw::min_gap(dqw::build_walk(kind, m, 1.0), grid_n));
            std::filesystem::create_directories(out_dir);
            dqw::write_zitter_csv(
                joined(out_dir, out_name.empty() ? "zitter.csv" : out_name), rows);
            return 0;
        }

        if (evo->parsed()) {
            dqw::ExperimentConfig cfg;
            if (!config_path.empty()) {
                std::ifstream f(config_path);
                if (!f) throw std::runtime_error("cannot read config: " + config_path);
                std::stringstream ss;
                ss << f.rdbuf();
                cfg = dqw::experiment_config_from_json(ss.str());
            }
            if (o_walk->count()) cfg.walk = parse_walk(walk);
            if (o_mass->count()) cfg.mass = parse_angle(mass);
            if (o_nx->count()) cfg.n_x = nx;
            if (o_ny->count()) cfg.n_y = ny;
            if (o_steps->count()) cfg.steps = steps;
            if (o_ex->count() || o_ey->count()) cfg.field = dqw::ElectricField{ex, ey};
            if (o_static->count()) cfg.field_ramp = !static_field;
            if (o_init->count()) {
                if (init_mode == "symmetric")
                    cfg.initial.kind = dqw::InitialCondition::Kind::LocalizedSymmetric;
                else if (init_mode == "spinor")
                    cfg.initial.kind = dqw::InitialCondition::Kind::LocalizedSpinor;
                else if (init_mode == "gaussian")
                    cfg.initial.kind = dqw::InitialCondition::Kind::GaussianPacket;
                else
                    throw std::invalid_argument("expected symmetric|spinor|gaussian");
            }
            if (o_spinor->count()) {
                auto vals = parse_number_list(spinor_text);
                if (vals.size() != 4)
                    throw std::invalid_argument("spinor needs re,im,re,im");
                cfg.initial.kind = dqw::InitialCondition::Kind::LocalizedSpinor;
                cfg.initial.spinor_l = {vals[0], vals[1]};
                cfg.initial.spinor_r = {vals[2], vals[3]};
            }
            if (o_pkx->count()) cfg.initial.packet_kx = packet_kx;
            if (o_pky->count()) cfg.initial.packet_ky = packet_ky;
            if (o_pw->count()) cfg.initial.packet_width = packet_width;
            if (o_out->count()) cfg.out_dir = out_dir;
            if (o_seed->count()) cfg.seed = eseed;

            dqw::EvolveResult res = dqw::run_evolve(cfg, true);
            double drift = std::abs(res.norm.back() / res.norm.front() - 1.0);
            if (drift > 1e-8) {
                std::cerr << "numerical consistency failure: norm drift " << drift
                          << "\n";
                return 2;
            }
            if (res.bloch) {
                if (res.bloch->detected)
                    std::printf(
                        "bloch period: %.6g steps (nearest prediction error %.3g)\n",
                        res.bloch->period_steps, res.bloch->relative_error);
                else
                    std::printf("bloch period: not detected\n");
            }
            return 0;
        }

        if (gch->parsed()) {
            double dev = dqw::gauge_invariance_deviation(seed, gsize, gsteps, corrupt);
            bool pass = dev < 1e-12;
            std::printf("gauge check: max pointwise deviation %.3e -> %s\n", dev,
                        pass ? "pass" : "fail");
            return pass ? 0 : 2;
        }

        if (cone->parsed()) {
            dqw::WalkSpec w = dqw::build_walk(parse_walk(walk), 0.0, 1.0);
            dqw::ConeReport rep = dqw::cone_slope_check(w, radius, directions);
            std::filesystem::create_directories(out_dir);
            std::ostringstream os;
            os << "direction_index,slope\n";
            for (size_t i = 0; i < rep.slopes.size(); i++)
                os << i << ',' << dqw::format_g9(rep.slopes[i]) << '\n';
            dqw::write_text_file(joined(out_dir, out_name.empty() ? "cone.csv" : out_name),
                                 os.str());
            std::printf("cone check: mean slope %.6g, max anisotropy %.3g\n",
                        rep.mean_slope, rep.max_anisotropy);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        bool io_error = msg.find("cannot open") != std::string::npos ||
                        msg.find("write failed") != std::string::npos ||
                        msg.find("cannot read") != std::string::npos;
        return io_error ? 3 : 2;
    }
    return 1;
}
