#include "dqw/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dqw {

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {
std::ofstream open_out(const std::string& path, bool binary = false) {
    std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}
} // namespace

void write_dispersion_csv(const std::string& path, const DispersionResult& grid) {
    auto f = open_out(path);
    f << "kx,ky,omega_minus\n";
    for (size_t i = 0; i < grid.k.size(); i++)
        f << format_g9(grid.k[i].kx) << ',' << format_g9(grid.k[i].ky) << ','
          << format_g9(-grid.omega_plus[i]) << '\n';
    if (!f) throw std::runtime_error("write failed: " + path);
}

void write_zitter_csv(const std::string& path,
                      const std::vector<std::pair<double, GapReport>>& rows) {
    auto f = open_out(path);
    f << "m,omega_min,gap,kx,ky\n";
    for (const auto& [m, rep] : rows) {
        for (const auto& ln : rep.degenerate_lines) {
            for (double sign : {1.0, -1.0}) {
                if (ln.fixed_axis == 'x')
                    f << format_g9(m) << ',' << format_g9(rep.omega_min) << ','
                      << format_g9(rep.gap) << ',' << format_g9(sign * ln.fixed_value)
                      << ",free\n";
                else
                    f << format_g9(m) << ',' << format_g9(rep.omega_min) << ','
                      << format_g9(rep.gap) << ",free," << format_g9(sign * ln.fixed_value)
                      << '\n';
            }
        }
        for (const auto& k : rep.minimizers)
            f << format_g9(m) << ',' << format_g9(rep.omega_min) << ','
              << format_g9(rep.gap) << ',' << format_g9(k.kx) << ','
              << format_g9(k.ky) << '\n';
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

void write_density_csv(const std::string& path, double dt,
                       const std::vector<std::vector<double>>& half_columns) {
    auto f = open_out(path);
    f << "t,x,rho\n";
    for (size_t n = 0; n < half_columns.size(); n++) {
        const auto& row = half_columns[n];
        for (size_t c = 0; c < row.size(); c++)
            f << format_g9(n * dt) << ',' << format_g9(0.5 * c) << ','
              << format_g9(row[c]) << '\n';
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

void write_pgm16(const std::string& path,
                 const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty raster");
    const size_t w = rows[0].size(), h = rows.size();
    double vmax = 0.0;
    for (const auto& row : rows) {
        if (row.size() != w) throw std::invalid_argument("ragged raster");
        for (double v : row) vmax = std::max(vmax, v);
    }
    if (vmax <= 0.0) vmax = 1.0;
    auto f = open_out(path, true);
    f << "P5\n" << w << ' ' << h << "\n65535\n";
    std::vector<unsigned char> line(2 * w);
    for (const auto& row : rows) {
        for (size_t i = 0; i < w; i++) {
            double clamped = std::min(std::max(row[i] / vmax, 0.0), 1.0);
            unsigned v = static_cast<unsigned>(clamped * 65535.0 + 0.5);
            line[2 * i] = static_cast<unsigned char>(v >> 8); // big-endian
            line[2 * i + 1] = static_cast<unsigned char>(v & 0xff);
        }
        f.write(reinterpret_cast<const char*>(line.data()), line.size());
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

void write_text_file(const std::string& path, const std::string& content) {
    auto f = open_out(path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace dqw
