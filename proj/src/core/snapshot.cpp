#include "core/snapshot.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "core/diagnostics.hpp"
#include "core/error.hpp"

namespace cosmofv {

const std::vector<double>* SnapshotData::column(const std::string& name) const {
    for (const auto& [n, v] : columns)
        if (n == name) return &v;
    return nullptr;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_snapshot(const SnapshotData& snap, std::ostream& os) {
    os << "# cosmofv snapshot 1\n";
    os << "# t = " << format_g17(snap.t) << "\n";
    os << "# dim = " << snap.dim << "\n";
    os << "# nx = " << snap.nx << "\n";
    os << "# dx = " << format_g17(snap.dx) << "\n";
    if (snap.dim == 2) {
        os << "# ny = " << snap.ny << "\n";
        os << "# dy = " << format_g17(snap.dy) << "\n";
    }
    for (const auto& [k, v] : snap.echo) os << "# spec " << k << " = " << v << "\n";
    os << "# columns =";
    for (std::size_t c = 0; c < snap.columns.size(); ++c)
        os << (c ? "," : " ") << snap.columns[c].first;
    os << "\n";
    const std::size_t rows = snap.rows();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < snap.columns.size(); ++c) {
            if (c) os << ',';
            os << format_g17(snap.columns[c].second[r]);
        }
        os << '\n';
    }
}

void write_snapshot_file(const SnapshotData& snap, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path);
    write_snapshot(snap, os);
    if (!os) throw IoError("write failed: " + path);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double_strict(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw IoError("bad number in snapshot: '" + s + "'");
    return v;
}

}  // namespace

SnapshotData parse_snapshot(std::istream& is) {
    SnapshotData snap;
    std::string line;
    bool got_magic = false;
    std::vector<std::string> names;
    while (is.peek() == '#' && std::getline(is, line)) {
        std::string body = trim(line.substr(1));
        if (!got_magic) {
            if (body != "cosmofv snapshot 1") throw IoError("unrecognized snapshot header");
            got_magic = true;
            continue;
        }
        if (body.rfind("spec ", 0) == 0) {
            const std::string kv = body.substr(5);
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw IoError("bad spec echo line");
            snap.echo.push_back({trim(kv.substr(0, eq)), trim(kv.substr(eq + 1))});
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw IoError("bad snapshot header line: " + line);
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key == "t") snap.t = parse_double_strict(value);
        else if (key == "dim") snap.dim = std::atoi(value.c_str());
        else if (key == "nx") snap.nx = std::atoi(value.c_str());
        else if (key == "ny") snap.ny = std::atoi(value.c_str());
        else if (key == "dx") snap.dx = parse_double_strict(value);
        else if (key == "dy") snap.dy = parse_double_strict(value);
        else if (key == "columns") {
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) names.push_back(trim(item));
        } else {
            throw IoError("unknown snapshot header key: " + key);
        }
    }
    if (!got_magic) throw IoError("not a cosmofv snapshot");
    if (names.empty()) throw IoError("snapshot without column declaration");
    snap.columns.reserve(names.size());
    for (const auto& n : names) snap.columns.push_back({n, {}});
    const std::size_t rows = snap.rows();
    for (auto& [n, v] : snap.columns) v.reserve(rows);
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string item;
        std::size_t c = 0;
        while (std::getline(ss, item, ',')) {
            if (c >= names.size()) throw IoError("row with too many fields");
            snap.columns[c++].second.push_back(parse_double_strict(trim(item)));
        }
        if (c != names.size()) throw IoError("row with too few fields");
    }
    for (const auto& [n, v] : snap.columns)
        if (v.size() != rows) throw IoError("row count does not match the declared grid");
    return snap;
}

SnapshotData read_snapshot_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open snapshot: " + path);
    return parse_snapshot(is);
}

Norms compare_snapshots(const SnapshotData& a, const SnapshotData& b, const std::string& column) {
    if (a.dim != b.dim) throw DomainError("snapshot dimension mismatch");
    const std::vector<double>* ca = a.column(column);
    const std::vector<double>* cb = b.column(column);
    if (!ca || !cb) throw DomainError("column '" + column + "' missing from a snapshot");

    if (a.dim == 2) {
        if (a.nx != b.nx || a.ny != b.ny) throw DomainError("2D snapshots need matching grids");
        const FieldNorms n = field_norms(*ca, *cb, a.dx * a.dy);
        return {n.l1, n.linf};
    }
    // Restrict the finer 1D field onto the coarser grid.
    const bool a_coarse = a.nx <= b.nx;
    const std::vector<double>& coarse = a_coarse ? *ca : *cb;
    const std::vector<double>& fine = a_coarse ? *cb : *ca;
    const std::size_t nc = a_coarse ? a.nx : b.nx;
    const std::vector<double> restricted = restrict_average(fine, nc);
    const FieldNorms n = field_norms(coarse, restricted, 1.0 / static_cast<double>(nc));
    return {n.l1, n.linf};
}

}  // namespace cosmofv
