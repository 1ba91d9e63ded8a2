// Snapshot records and their CSV serialization, plus the per-run report.
// Snapshots are written with 17 significant digits so that parsing recovers
// every double bit-exactly.
#ifndef COSMOFV_SNAPSHOT_HPP
#define COSMOFV_SNAPSHOT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cosmofv {

struct SnapshotData {
    int dim = 1;
    int nx = 0;
    int ny = 1;
    double dx = 0.0;
    double dy = 0.0;
    double t = 0.0;
    std::vector<std::pair<std::string, std::string>> echo;  // resolved run parameters
    std::vector<std::pair<std::string, std::vector<double>>> columns;

    std::size_t rows() const { return dim == 2 ? std::size_t(nx) * ny : std::size_t(nx); }
    const std::vector<double>* column(const std::string& name) const;

    bool operator==(const SnapshotData&) const = default;
};

std::string format_g17(double v);

void write_snapshot(const SnapshotData& snap, std::ostream& os);
void write_snapshot_file(const SnapshotData& snap, const std::string& path);
SnapshotData parse_snapshot(std::istream& is);
SnapshotData read_snapshot_file(const std::string& path);

// L1 (cell-size weighted) and max-norm difference of one column. 1D snapshots
// of different resolution are compared after conservative restriction of the
// finer one; 2D snapshots must have matching grids.
struct Norms {
    double l1 = 0.0;
    double linf = 0.0;
};
Norms compare_snapshots(const SnapshotData& a, const SnapshotData& b, const std::string& column);

}  // namespace cosmofv

#endif
