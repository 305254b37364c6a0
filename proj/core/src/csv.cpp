#include "heatbie/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "heatbie/experiment.hpp"

namespace heatbie {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

void write_node_prefix(std::ostream& out, const SpaceTimeGrid& grid, std::size_t i, std::size_t j) {
    const Vec2 p = grid.point(i);
    out << (i + 1) << ',' << (j + 1) << ',' << format_double(grid.zeta(i)) << ','
        << format_double(grid.time(j)) << ',' << format_double(p.x) << ',' << format_double(p.y);
}

}  // namespace

void write_flux_csv(std::ostream& out, const BoundaryField& flux, const BoundaryField* reference) {
    if (reference) require_same_grid(flux, *reference);
    out << "i,j,zeta,t,x1,x2,flux" << (reference ? ",reference,abs_error" : "") << '\n';
    const SpaceTimeGrid& grid = flux.grid();
    for (std::size_t j = 0; j < grid.n_time(); ++j) {
        for (std::size_t i = 0; i < grid.n_space(); ++i) {
            write_node_prefix(out, grid, i, j);
            out << ',' << format_double(flux(i, j));
            if (reference) {
                const double r = (*reference)(i, j);
                out << ',' << format_double(r) << ',' << format_double(std::abs(flux(i, j) - r));
            }
            out << '\n';
        }
    }
}

void write_direct_csv(std::ostream& out, const BoundaryField& g, const BoundaryField* flux) {
    if (flux) require_same_grid(g, *flux);
    out << "i,j,zeta,t,x1,x2,g" << (flux ? ",flux" : "") << '\n';
    const SpaceTimeGrid& grid = g.grid();
    for (std::size_t j = 0; j < grid.n_time(); ++j) {
        for (std::size_t i = 0; i < grid.n_space(); ++i) {
            write_node_prefix(out, grid, i, j);
            out << ',' << format_double(g(i, j));
            if (flux) out << ',' << format_double((*flux)(i, j));
            out << '\n';
        }
    }
}

void write_field_csv(std::ostream& out, const InteriorSamples& samples,
                     const std::vector<double>* reference) {
    out << "x1,x2,t,u" << (reference ? ",reference,abs_error" : "") << '\n';
    for (std::size_t n = 0; n < samples.size(); ++n) {
        const auto& s = samples[n];
        out << format_double(s.point.x) << ',' << format_double(s.point.y) << ','
            << format_double(s.time) << ',' << format_double(s.value);
        if (reference) {
            const double r = reference->at(n);
            out << ',' << format_double(r) << ',' << format_double(std::abs(s.value - r));
        }
        out << '\n';
    }
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
    out << "N,Nprime,l2_error,max_error,relative_l2,wall_time_s\n";
    for (const auto& r : rows) {
        out << r.n_space << ',' << r.n_time << ',' << format_double(r.metrics.l2_error) << ','
            << format_double(r.metrics.max_error) << ',' << format_double(r.metrics.relative_l2) << ','
            << format_double(r.wall_time_s) << '\n';
    }
}

}  // namespace heatbie
