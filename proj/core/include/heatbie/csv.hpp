#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "heatbie/boundary_field.hpp"
#include "heatbie/potentials.hpp"

namespace heatbie {

struct ConvergenceRow;

// All writers emit 17 significant digits, comma separators and LF endings.
// Boundary rows are ordered j-major then i, with 1-based node indices.

/// Header `i,j,zeta,t,x1,x2,flux[,reference,abs_error]`.
void write_flux_csv(std::ostream& out, const BoundaryField& flux,
                    const BoundaryField* reference = nullptr);
/// Header `i,j,zeta,t,x1,x2,g[,flux]`.
void write_direct_csv(std::ostream& out, const BoundaryField& g,
                      const BoundaryField* flux = nullptr);
/// Header `x1,x2,t,u[,reference,abs_error]`.
void write_field_csv(std::ostream& out, const InteriorSamples& samples,
                     const std::vector<double>* reference = nullptr);
/// Header `N,Nprime,l2_error,max_error,relative_l2,wall_time_s`.
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

/// Opens `path` for writing and runs `writer`; throws IoError on failure.
template <class Writer>
void write_file(const std::string& path, Writer&& writer);

std::string format_double(double value);

}  // namespace heatbie

#include <fstream>

#include "heatbie/errors.hpp"

template <class Writer>
void heatbie::write_file(const std::string& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    writer(out);
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}
