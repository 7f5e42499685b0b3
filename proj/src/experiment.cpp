#include "dqw/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "dqw/io.hpp"

namespace dqw {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

ExperimentConfig experiment_config_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    ExperimentConfig cfg;
    if (j.contains("walk")) {
        std::string w = j["walk"];
        if (w == "six") cfg.walk = WalkKind::SixStepEquilateral;
        else if (w == "three") cfg.walk = WalkKind::ThreeStepEquilateral;
        else if (w == "isosceles") cfg.walk = WalkKind::ThreeStepIsosceles;
        else if (w == "honeycomb") cfg.walk = WalkKind::ThreeStepHoneycomb;
        else throw std::invalid_argument("unknown walk kind: " + w);
    }
    cfg.mass = j.value("mass", cfg.mass);
    cfg.n_x = j.value("nx", cfg.n_x);
    cfg.n_y = j.value("ny", cfg.n_y);
    cfg.steps = j.value("steps", cfg.steps);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.out_dir = j.value("out_dir", cfg.out_dir);
    cfg.field_ramp = j.value("ramp", cfg.field_ramp);
    if (j.contains("Ex") || j.contains("Ey"))
        cfg.field = ElectricField{j.value("Ex", 0.0), j.value("Ey", 0.0)};
    if (j.contains("init")) {
        std::string mode = j["init"].value("kind", "symmetric");
        if (mode == "symmetric") {
            cfg.initial.kind = InitialCondition::Kind::LocalizedSymmetric;
        } else if (mode == "spinor") {
            cfg.initial.kind = InitialCondition::Kind::LocalizedSpinor;
            auto v = j["init"].at("spinor").get<std::vector<double>>();
            if (v.size() != 4) throw std::invalid_argument("spinor needs 4 reals");
            cfg.initial.spinor_l = {v[0], v[1]};
            cfg.initial.spinor_r = {v[2], v[3]};
        } else if (mode == "gaussian") {
            cfg.initial.kind = InitialCondition::Kind::GaussianPacket;
            cfg.initial.packet_kx = j["init"].value("kx", 0.0);
            cfg.initial.packet_ky = j["init"].value("ky", 0.0);
            cfg.initial.packet_width = j["init"].value("width", 4.0);
        } else {
            throw std::invalid_argument("unknown initial condition: " + mode);
        }
    }
    return cfg;
}

SpinorField make_initial_field(const ExperimentConfig& cfg) {
    LatticeSpec lat{lattice_family(cfg.walk), cfg.n_x, cfg.n_y, 1.0};
    validate(lat);
    SpinorField f(lat);
    const SiteIndex c{cfg.n_x / 2, cfg.n_y / 2};
    switch (cfg.initial.kind) {
    case InitialCondition::Kind::LocalizedSymmetric:
        f.psi_l(c) = 1.0 / std::sqrt(2.0);
        f.psi_r(c) = 1.0 / std::sqrt(2.0);
        break;
    case InitialCondition::Kind::LocalizedSpinor: {
        double n = std::sqrt(std::norm(cfg.initial.spinor_l) +
                             std::norm(cfg.initial.spinor_r));
        if (n == 0.0) throw std::invalid_argument("zero initial spinor");
        f.psi_l(c) = cfg.initial.spinor_l / n;
        f.psi_r(c) = cfg.initial.spinor_r / n;
        break;
    }
    case InitialCondition::Kind::GaussianPacket: {
        Vec2d pc = position(lat, c);
        double w = cfg.initial.packet_width;
        for (int b = 0; b < lat.n_y; b++)
            for (int a = 0; a < lat.n_x; a++) {
                Vec2d p = position(lat, {a, b});
                double dx = p.x - pc.x, dy = p.y - pc.y;
                double env = std::exp(-(dx * dx + dy * dy) / (4.0 * w * w));
                cdouble phase = std::polar(
                    env, -(cfg.initial.packet_kx * p.x + cfg.initial.packet_ky * p.y));
                f.psi_l({a, b}) = phase / std::sqrt(2.0);
                f.psi_r({a, b}) = phase / std::sqrt(2.0);
            }
        f.normalize();
        break;
    }
    }
    return f;
}

bool wrap_risk(const ExperimentConfig& cfg) {
    WalkSpec w = build_walk(cfg.walk, cfg.mass, 1.0);
    double reach = static_cast<double>(w.substeps.size()) * cfg.steps;
    return reach >= 0.5 * std::min(cfg.n_x, cfg.n_y);
}

EvolveResult run_evolve(const ExperimentConfig& cfg, bool write_files) {
    WalkSpec walk = build_walk(cfg.walk, cfg.mass, 1.0);
    SpinorField field = make_initial_field(cfg);
    if (wrap_risk(cfg))
        std::cerr << "warning: packet may wrap on " << cfg.n_x << "x" << cfg.n_y
                  << " within " << cfg.steps << " steps\n";

    FieldConfig gauge;
    const FieldConfig* gauge_ptr = nullptr;
    if (cfg.field && (cfg.field->Ex != 0.0 || cfg.field->Ey != 0.0)) {
        gauge = uniform_electric_config(*cfg.field, walk.dt, cfg.field_ramp);
        gauge_ptr = &gauge;
    }

    EvolveResult res;
    const LatticeSpec& lat = field.lattice;
    const int halfcols = 2 * lat.n_x;

    StepObserver record = [&](int, double, const SpinorField& f) {
        double sx = 0.0, sy = 0.0, tot = 0.0;
        std::vector<double> cols(halfcols, 0.0);
        for (int b = 0; b < lat.n_y; b++)
            for (int a = 0; a < lat.n_x; a++) {
                double rho = f.site_density({a, b});
                Vec2d p = position(lat, {a, b});
                sx += rho * p.x;
                sy += rho * p.y;
                tot += rho;
                // x coordinates are exact half-integers: column = 2x mod 2 n_x
                long c = std::lround(2.0 * p.x);
                cols[((c % halfcols) + halfcols) % halfcols] += rho;
            }
        res.centroid_x.push_back(sx / tot);
        res.centroid_y.push_back(sy / tot);
        res.norm.push_back(tot);
        res.half_columns.push_back(std::move(cols));
    };

    evolve(walk, field, cfg.steps, gauge_ptr, {record});

    if (cfg.field) {
        // centroid along the field axis; mixed fields use x, as in the
        // (t,x)-projected density views
        const std::vector<double>& series =
            (cfg.field->Ex == 0.0 && cfg.field->Ey != 0.0) ? res.centroid_y
                                                           : res.centroid_x;
        res.bloch = make_bloch_report(series, cfg.field->Ex, cfg.field->Ey);
    }

    if (write_files) {
        namespace fs = std::filesystem;
        fs::create_directories(cfg.out_dir);
        write_density_csv((fs::path(cfg.out_dir) / "density.csv").string(), walk.dt,
                          res.half_columns);
        // PGM pixels pair adjacent half-columns into epsilon-wide bins
        std::vector<std::vector<double>> raster(res.half_columns.size(),
                                                std::vector<double>(lat.n_x, 0.0));
        for (size_t nrow = 0; nrow < res.half_columns.size(); nrow++)
            for (int i = 0; i < lat.n_x; i++)
                raster[nrow][i] = res.half_columns[nrow][2 * i] +
                                  res.half_columns[nrow][2 * i + 1];
        write_pgm16((fs::path(cfg.out_dir) / "density.pgm").string(), raster);
        if (res.bloch) {
            nlohmann::json j{{"detected", res.bloch->detected},
                             {"period_steps", res.bloch->period_steps},
                             {"predictions",
                              {{"bloch", res.bloch->prediction},
                               {"bloch_two_thirds", res.bloch->prediction_two_thirds},
                               {"bloch_three_halves", res.bloch->prediction_three_halves}}},
                             {"relative_error", res.bloch->relative_error},
                             {"peak_autocorr", res.bloch->peak_autocorr}};
            write_text_file((fs::path(cfg.out_dir) / "bloch.json").string(),
                            j.dump(2) + "\n");
        }
    }
    return res;
}

double gauge_invariance_deviation(std::uint64_t seed, int n, int steps,
                                  bool flip_sign) {
    LatticeSpec lat{LatticeFamily::EquilateralTriangle, n, n, 1.0};
    WalkSpec walk = build_walk(WalkKind::ThreeStepEquilateral, kPi / 3.0, 1.0);
    const double dt = walk.dt;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-kPi, kPi);

    // random base coin fields and phase change, tabulated on the substep grid
    const int subtimes = 3 * steps + 1;
    const size_t sites = static_cast<size_t>(lat.site_count());
    auto make_table = [&] {
        std::vector<double> t(subtimes * sites);
        for (double& v : t) v = angle(rng);
        return t;
    };
    auto lookup = [dt, sites, subtimes, &lat](const std::vector<double>& tab, double t,
                                              SiteIndex s) {
        long r = std::lround(t / (dt / 3.0));
        if (r < 0 || r >= subtimes)
            throw std::runtime_error("phase queried outside tabulated horizon");
        return tab[static_cast<size_t>(r) * sites + lat.site_id(lat.normalized(s))];
    };

    FieldConfig base;
    std::array<std::vector<double>, 3> balpha, bxi;
    for (int i = 0; i < 3; i++) {
        balpha[i] = make_table();
        bxi[i] = make_table();
        base.alpha[i] = [&, i](double t, SiteIndex s) { return lookup(balpha[i], t, s); };
        base.xi[i] = [&, i](double t, SiteIndex s) { return lookup(bxi[i], t, s); };
    }
    std::vector<double> phase_tab = make_table();
    PhaseChange phase{[&](double t, SiteIndex s) { return lookup(phase_tab, t, s); }};

    FieldConfig transformed = gauge_transform(base, phase, lat, dt);
    if (flip_sign) {
        AngleField xi0 = transformed.xi[0];
        AngleField base_xi0 = base.xi[0];
        transformed.xi[0] = [xi0, base_xi0](double t, SiteIndex s) {
            double delta = xi0(t, s) - base_xi0(t, s);
            return base_xi0(t, s) - delta;
        };
    }

    // random normalized start
    SpinorField psi(lat);
    for (cdouble& z : psi.amplitudes) z = {angle(rng), angle(rng)};
    psi.normalize();

    SpinorField psi_primed(lat);
    for (int b = 0; b < n; b++)
        for (int a = 0; a < n; a++) {
            cdouble ph = std::polar(1.0, phase(0.0, {a, b}));
            psi_primed.psi_l({a, b}) = ph * psi.psi_l({a, b});
            psi_primed.psi_r({a, b}) = ph * psi.psi_r({a, b});
        }

    for (int s = 0; s < steps; s++) {
        psi = step(walk, psi, s * dt, &base);
        psi_primed = step(walk, psi_primed, s * dt, &transformed);
    }

    double worst = 0.0;
    const double tfinal = steps * dt;
    for (int b = 0; b < n; b++)
        for (int a = 0; a < n; a++) {
            cdouble ph = std::polar(1.0, phase(tfinal, {a, b}));
            worst = std::max(worst,
                             std::abs(psi_primed.psi_l({a, b}) - ph * psi.psi_l({a, b})));
            worst = std::max(worst,
                             std::abs(psi_primed.psi_r({a, b}) - ph * psi.psi_r({a, b})));
        }
    return worst;
}

} // namespace dqw
