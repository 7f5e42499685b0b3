#ifndef DQW_IO_HPP
#define DQW_IO_HPP

#include <string>
#include <vector>

#include "dqw/dispersion.hpp"

namespace dqw {

// All writers use 9 significant digits and LF line endings; I/O failures
// throw std::runtime_error.

// header kx,ky,omega_minus, row-major over the grid
void write_dispersion_csv(const std::string& path, const DispersionResult& grid);

// header m,omega_min,gap,kx,ky; one row per (mass, minimizer); degenerate
// lines print the free coordinate as "free"
void write_zitter_csv(const std::string& path,
                      const std::vector<std::pair<double, GapReport>>& rows);

// header t,x,rho; x in units of epsilon (half-integer columns)
void write_density_csv(const std::string& path, double dt,
                       const std::vector<std::vector<double>>& half_columns);

// binary 16-bit P5; rows = time steps (row 0 = t 0), linear scaling to the
// global maximum
void write_pgm16(const std::string& path,
                 const std::vector<std::vector<double>>& rows);

void write_text_file(const std::string& path, const std::string& content);

std::string format_g9(double v);

} // namespace dqw

#endif
