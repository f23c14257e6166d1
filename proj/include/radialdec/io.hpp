#pragma once

#include <iosfwd>
#include <vector>

#include "radialdec/sphharm.hpp"

namespace radialdec::io {

// Spectral-field CSV: header n,m,coeff, one row per basis element in storage
// order, coefficients at 17 significant digits.
void write_spectral_csv(std::ostream& os, const sphharm::SpectralField& field);
// Accepts rows in any order; missing (n, m) pairs are zero. The field degree
// is the largest n present.
sphharm::SpectralField read_spectral_csv(std::istream& is);

// Node samples: either one value per line or the "node,value" form dump; a
// non-numeric first line is treated as a header.
std::vector<double> read_samples_csv(std::istream& is);

}  // namespace radialdec::io
