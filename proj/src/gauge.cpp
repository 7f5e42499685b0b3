#include "dqw/gauge.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include <json.hpp>

namespace dqw {

namespace {
constexpr double kSqrt3 = 1.7320508075688772935;

double eval(const AngleField& f, double t, SiteIndex s) {
    return f ? f(t, s) : 0.0;
}
} // namespace

CoinAngles FieldConfig::coin(int slot, double t, SiteIndex site) const {
    return {eval(alpha[slot], t, site), eval(xi[slot], t, site),
            eval(zeta[slot], t, site), 0.0};
}

FieldConfig free_field_config() {
    FieldConfig c;
    c.spatially_uniform = true;
    c.descriptor = nlohmann::json{{"format", "dqw-field-config/1"},
                                  {"type", "uniform_electric"},
                                  {"Ex", 0.0},
                                  {"Ey", 0.0},
                                  {"ramp", true}}
                       .dump();
    return c;
}

FieldConfig gauge_transform(const FieldConfig& config, const PhaseChange& phase,
                            const LatticeSpec& lattice, double dt) {
    FieldConfig out;
    out.spatially_uniform = false;
    for (int i = 0; i < 3; i++) {
        const int dir = i + 1;
        const AngleField base_alpha = config.alpha[i];
        const AngleField base_xi = config.xi[i];
        auto dphi = phase.delta_phi;
        out.alpha[i] = [base_alpha, dphi, lattice, dt, dir](double t, SiteIndex s) {
            SiteIndex fwd = neighbor(lattice, s, dir);
            SiteIndex bwd = neighbor(lattice, s, opposite_direction(lattice.family, dir));
            double sigma = 0.5 * (dphi(t, fwd) + dphi(t, bwd));
            return eval(base_alpha, t, s) + dphi(t + dt / 3.0, s) - sigma;
        };
        out.xi[i] = [base_xi, dphi, lattice, dir](double t, SiteIndex s) {
            SiteIndex fwd = neighbor(lattice, s, dir);
            SiteIndex bwd = neighbor(lattice, s, opposite_direction(lattice.family, dir));
            double delta = 0.5 * (dphi(t, fwd) - dphi(t, bwd));
            return eval(base_xi, t, s) - delta;
        };
        out.zeta[i] = config.zeta[i];
    }
    return out;
}

namespace {

// Step-start time for a substep evaluation time t (substep i of the step
// starting at n*dt is evaluated at n*dt + i*dt/3, i = 0,1,2).
double step_floor(double t, double dt) {
    return std::floor(t / dt + 1e-9) * dt;
}

FieldConfig delta_from_phase(const PhaseChange& phase, const LatticeSpec& lattice,
                             double dt) {
    FieldConfig zero;
    return gauge_transform(zero, phase, lattice, dt);
}

} // namespace

FieldConfig simplified_transform_constant_substeps(
    const std::function<double(double t, SiteIndex)>& phase_at_steps,
    const LatticeSpec& lattice, double dt) {
    // constant within each step: dphi(t) = dphi(t + dt/3) = dphi(t + 2dt/3)
    PhaseChange phase{[phase_at_steps, dt](double t, SiteIndex s) {
        return phase_at_steps(step_floor(t, dt), s);
    }};
    return delta_from_phase(phase, lattice, dt);
}

FieldConfig simplified_transform_linear_interpolation(
    const std::function<double(double t, SiteIndex)>& phase_at_steps,
    const LatticeSpec& lattice, double dt) {
    PhaseChange phase{[phase_at_steps, dt](double t, SiteIndex s) {
        double t0 = step_floor(t, dt);
        double frac = (t - t0) / dt;
        double p0 = phase_at_steps(t0, s);
        double p1 = phase_at_steps(t0 + dt, s);
        return p0 + frac * (p1 - p0);
    }};
    return delta_from_phase(phase, lattice, dt);
}

PotentialTriple continuum_potential(const FieldConfig& config, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    auto bar = [epsilon](const AngleField& f, double t, SiteIndex s) {
        return eval(f, t, s) / epsilon;
    };
    PotentialTriple p;
    p.A0 = [config, bar](double t, SiteIndex s) {
        return (2.0 / 3.0) * (bar(config.alpha[0], t, s) + bar(config.alpha[1], t, s) +
                              bar(config.alpha[2], t, s));
    };
    p.A1 = [config, bar](double t, SiteIndex s) {
        return -(2.0 / 3.0) * (bar(config.xi[0], t, s) +
                               0.5 * (bar(config.xi[1], t, s) - bar(config.xi[2], t, s)));
    };
    p.A2 = [config, bar](double t, SiteIndex s) {
        return -(1.0 / kSqrt3) * (bar(config.xi[1], t, s) + bar(config.xi[2], t, s));
    };
    return p;
}

FieldConfig uniform_electric_config(ElectricField e, double dt, bool ramp) {
    FieldConfig c;
    c.spatially_uniform = true;
    c.descriptor = nlohmann::json{{"format", "dqw-field-config/1"},
                                  {"type", "uniform_electric"},
                                  {"Ex", e.Ex},
                                  {"Ey", e.Ey},
                                  {"ramp", ramp}}
                       .dump();
    if (e.Ex == 0.0 && e.Ey == 0.0) return c;
    if (ramp) {
        // xi_i(t) = (E . e_i) * t/dt, e_i the equilateral neighbor offsets
        const double coef[3] = {e.Ex,
                                0.5 * e.Ex + 0.5 * kSqrt3 * e.Ey,
                                -0.5 * e.Ex + 0.5 * kSqrt3 * e.Ey};
        for (int i = 0; i < 3; i++) {
            double ci = coef[i];
            c.xi[i] = [ci, dt](double t, SiteIndex) { return ci * (t / dt); };
        }
    } else {
        const double coef[3] = {0.0,
                                0.5 * (-3.0 * e.Ex + kSqrt3 * e.Ey),
                                0.5 * (3.0 * e.Ex + kSqrt3 * e.Ey)};
        for (int i = 0; i < 3; i++) {
            double ci = coef[i];
            c.xi[i] = [ci](double, SiteIndex) { return ci; };
        }
    }
    return c;
}

std::string to_json(const FieldConfig& config) {
    if (config.descriptor.empty())
        throw std::runtime_error(
            "field config is not serializable; tabulate() it first");
    return config.descriptor;
}

namespace {

struct Table {
    double dt = 1.0;
    int steps = 0, nx = 0, ny = 0;
    // values[slot][step * sites + site]
    std::array<std::vector<double>, 3> alpha, xi, zeta;
};

AngleField table_field(std::shared_ptr<Table> tab, int slot, int which) {
    return [tab, slot, which](double t, SiteIndex s) {
        double sub = t / (tab->dt / 3.0);
        long r = std::lround(sub);
        if (std::abs(sub - r) > 1e-6)
            throw std::runtime_error("tabulated config queried off the substep grid");
        long n = (r - slot) / 3;
        if ((r - slot) % 3 != 0 || n < 0 || n >= tab->steps)
            throw std::runtime_error("tabulated config queried outside its horizon");
        size_t idx = static_cast<size_t>(n) * tab->nx * tab->ny +
                     static_cast<size_t>(s.b) * tab->nx + s.a;
        const auto& v = which == 0   ? tab->alpha[slot]
                        : which == 1 ? tab->xi[slot]
                                     : tab->zeta[slot];
        return v[idx];
    };
}

FieldConfig config_from_table(std::shared_ptr<Table> tab) {
    FieldConfig c;
    c.spatially_uniform = false;
    for (int i = 0; i < 3; i++) {
        c.alpha[i] = table_field(tab, i, 0);
        c.xi[i] = table_field(tab, i, 1);
        c.zeta[i] = table_field(tab, i, 2);
    }
    nlohmann::json j{{"format", "dqw-field-config/1"},
                     {"type", "tabulated"},
                     {"dt", tab->dt},
                     {"steps", tab->steps},
                     {"nx", tab->nx},
                     {"ny", tab->ny}};
    for (int i = 0; i < 3; i++) {
        j["alpha"][i] = tab->alpha[i];
        j["xi"][i] = tab->xi[i];
        j["zeta"][i] = tab->zeta[i];
    }
    c.descriptor = j.dump();
    return c;
}

} // namespace

FieldConfig tabulate(const FieldConfig& config, const LatticeSpec& lattice,
                     double dt, int steps) {
    auto tab = std::make_shared<Table>();
    tab->dt = dt;
    tab->steps = steps;
    tab->nx = lattice.n_x;
    tab->ny = lattice.n_y;
    const size_t per_step = static_cast<size_t>(lattice.site_count());
    for (int i = 0; i < 3; i++) {
        tab->alpha[i].resize(per_step * steps);
        tab->xi[i].resize(per_step * steps);
        tab->zeta[i].resize(per_step * steps);
        for (int n = 0; n < steps; n++) {
            double t = n * dt + i * dt / 3.0;
            for (int b = 0; b < lattice.n_y; b++)
                for (int a = 0; a < lattice.n_x; a++) {
                    size_t idx = per_step * n + static_cast<size_t>(b) * lattice.n_x + a;
                    SiteIndex s{a, b};
                    tab->alpha[i][idx] = eval(config.alpha[i], t, s);
                    tab->xi[i][idx] = eval(config.xi[i], t, s);
                    tab->zeta[i][idx] = eval(config.zeta[i], t, s);
                }
        }
    }
    return config_from_table(tab);
}

FieldConfig field_config_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (j.at("format") != "dqw-field-config/1")
        throw std::runtime_error("unknown field-config format tag");
    const std::string type = j.at("type");
    if (type == "uniform_electric") {
        // dt only matters for the ramp rate; stored configs use the
        // three-step equilateral dt = 3/2 in lattice units.
        ElectricField e{j.at("Ex").get<double>(), j.at("Ey").get<double>()};
        return uniform_electric_config(e, 1.5, j.at("ramp").get<bool>());
    }
    if (type == "tabulated") {
        auto tab = std::make_shared<Table>();
        tab->dt = j.at("dt").get<double>();
        tab->steps = j.at("steps").get<int>();
        tab->nx = j.at("nx").get<int>();
        tab->ny = j.at("ny").get<int>();
        for (int i = 0; i < 3; i++) {
            tab->alpha[i] = j.at("alpha").at(i).get<std::vector<double>>();
            tab->xi[i] = j.at("xi").at(i).get<std::vector<double>>();
            tab->zeta[i] = j.at("zeta").at(i).get<std::vector<double>>();
        }
        return config_from_table(tab);
    }
    throw std::runtime_error("unknown field-config type: " + type);
}

} // namespace dqw
