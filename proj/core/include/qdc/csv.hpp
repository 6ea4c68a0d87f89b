#pragma once

#include "qdc/sweep.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qdc {

/// Writes the sweep table as CSV: '#'-prefixed metadata lines recording every
/// resolved parameter and the numeric conventions, a header row, then one row
/// per record (curve-major, tau ascending). Numbers carry 12 significant
/// digits; a missing closed form renders as NA.
void emit_csv(const std::vector<InfoRecord>& records, const std::vector<SweepSpec>& specs,
              std::ostream& out);

/// Same, to a file. Throws std::runtime_error naming the path when it cannot
/// be written.
void emit_csv_file(const std::vector<InfoRecord>& records, const std::vector<SweepSpec>& specs,
                   const std::string& path);

}  // namespace qdc
