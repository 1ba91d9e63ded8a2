// Run output: snapshot files plus a per-snapshot diagnostics report.
#ifndef COSMOFV_REPORT_HPP
#define COSMOFV_REPORT_HPP

#include <iosfwd>
#include <string>

#include "core/driver.hpp"

namespace cosmofv {

// Per-snapshot diagnostics: field ranges, total conserved mass, the fit of the
// (rescaled) density against C b^2 and the largest speed.
void write_report(const RunResult& result, const RunSpec& spec, std::ostream& os);

// Writes snap_NNNN.csv for every scheduled snapshot, final.csv and report.txt
// into out_dir (created if needed).
void write_run_result(const RunResult& result, const RunSpec& spec, const std::string& out_dir);

}  // namespace cosmofv

#endif
