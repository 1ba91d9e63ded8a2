// C API of the shared library: thin handle wrappers over the C++ core with
// exceptions mapped onto status codes.
#include "cosmofv.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "core/config.hpp"
#include "core/driver.hpp"
#include "core/error.hpp"
#include "core/initial_conditions.hpp"
#include "core/report.hpp"
#include "core/snapshot.hpp"

using namespace cosmofv;

struct cfv_config {
    Config cfg;
    std::string source;  // resolved text re-parsed on overrides
    std::vector<std::pair<std::string, std::string>> overrides;
};

struct cfv_snapshot {
    SnapshotData data;
};

struct cfv_result {
    RunResult result;
    RunSpec spec;
    std::vector<cfv_snapshot> snapshots;  // scheduled snapshots then the final state
};

namespace {

void put_error(char* err, size_t err_size, const std::string& msg) {
    if (!err || err_size == 0) return;
    const size_t n = msg.size() < err_size - 1 ? msg.size() : err_size - 1;
    std::memcpy(err, msg.data(), n);
    err[n] = '\0';
}

template <class Fn>
cfv_status guarded(char* err, size_t err_size, Fn&& fn) {
    try {
        fn();
        return CFV_OK;
    } catch (const ConfigError& e) {
        put_error(err, err_size, e.what());
        return CFV_ERR_CONFIG;
    } catch (const IoError& e) {
        put_error(err, err_size, e.what());
        return CFV_ERR_IO;
    } catch (const RunAbort& e) {
        put_error(err, err_size, e.what());
        return CFV_ERR_RUNTIME;
    } catch (const std::exception& e) {
        put_error(err, err_size, e.what());
        return CFV_ERR_ARGUMENT;
    }
}

// Rebuild the effective config text from the original plus overrides. Each
// override replaces an existing assignment or is appended.
std::string apply_overrides(const std::string& source,
                            const std::vector<std::pair<std::string, std::string>>& overrides) {
    std::string text = source;
    for (const auto& [k, v] : overrides) {
        std::string out;
        bool replaced = false;
        size_t pos = 0;
        while (pos <= text.size()) {
            const size_t nl = text.find('\n', pos);
            std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
            const size_t eq = line.find('=');
            if (eq != std::string::npos) {
                std::string key = line.substr(0, eq);
                key.erase(0, key.find_first_not_of(" \t"));
                key.erase(key.find_last_not_of(" \t") + 1);
                if (key == k) {
                    line = k + " = " + v;
                    replaced = true;
                }
            }
            out += line;
            if (nl == std::string::npos) break;
            out += '\n';
            pos = nl + 1;
        }
        if (!replaced) out += "\n" + k + " = " + v + "\n";
        text = std::move(out);
    }
    return text;
}

}  // namespace

extern "C" {

const char* cfv_version(void) {
    return "cosmofv 1.0.0";
}

cfv_status cfv_config_parse_text(const char* text, cfv_config** out, char* err, size_t err_size) {
    if (!text || !out) {
        put_error(err, err_size, "null argument");
        return CFV_ERR_ARGUMENT;
    }
    *out = nullptr;
    return guarded(err, err_size, [&] {
        auto handle = new cfv_config{parse_config(text), text, {}};
        *out = handle;
    });
}

cfv_status cfv_config_parse_file(const char* path, cfv_config** out, char* err, size_t err_size) {
    if (!path || !out) {
        put_error(err, err_size, "null argument");
        return CFV_ERR_ARGUMENT;
    }
    *out = nullptr;
    return guarded(err, err_size, [&] {
        Config cfg = parse_config_file(path);
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        *out = new cfv_config{std::move(cfg), ss.str(), {}};
    });
}

cfv_status cfv_config_set(cfv_config* cfg, const char* key, const char* value, char* err,
                          size_t err_size) {
    if (!cfg || !key || !value) {
        put_error(err, err_size, "null argument");
        return CFV_ERR_ARGUMENT;
    }
    return guarded(err, err_size, [&] {
        auto overrides = cfg->overrides;
        overrides.push_back({key, value});
        const std::string text = apply_overrides(cfg->source, overrides);
        Config parsed = parse_config(text);  // validates before committing
        cfg->cfg = std::move(parsed);
        cfg->overrides = std::move(overrides);
    });
}

void cfv_config_free(cfv_config* cfg) {
    delete cfg;
}

cfv_status cfv_run(const cfv_config* cfg, cfv_result** out, char* err, size_t err_size) {
    if (!cfg || !out) {
        put_error(err, err_size, "null argument");
        return CFV_ERR_ARGUMENT;
    }
    *out = nullptr;
    return guarded(err, err_size, [&] {
        auto res = new cfv_result;
        res->spec = make_run_spec(cfg->cfg);
        res->result = run(res->spec);
        for (const auto& s : res->result.snapshots) res->snapshots.push_back({s});
        res->snapshots.push_back({res->result.final});
        *out = res;
    });
}

void cfv_result_free(cfv_result* res) {
    delete res;
}

size_t cfv_result_snapshot_count(const cfv_result* res) {
    return res ? res->result.snapshots.size() : 0;
}

const cfv_snapshot* cfv_result_snapshot(const cfv_result* res, size_t index) {
    if (!res || index >= res->snapshots.size()) return nullptr;
    return &res->snapshots[index];
}

const cfv_snapshot* cfv_result_final(const cfv_result* res) {
    if (!res || res->snapshots.empty()) return nullptr;
    return &res->snapshots.back();
}

cfv_status cfv_result_write(const cfv_result* res, const char* out_dir, char* err,
                            size_t err_size) {
    if (!res || !out_dir) {
        put_error(err, err_size, "null argument");
        return CFV_ERR_ARGUMENT;
    }
    return guarded(err, err_size, [&] { write_run_result(res->result, res->spec, out_dir); });
}

cfv_status cfv_snapshot_load(const char* path, cfv_snapshot** out, char* err, size_t err_size) {
    if (!path || !out) {
        put_error(err, err_size, "null argument");
        return CFV_ERR_ARGUMENT;
    }
    *out = nullptr;
    return guarded(err, err_size, [&] { *out = new cfv_snapshot{read_snapshot_file(path)}; });
}

void cfv_snapshot_free(cfv_snapshot* snap) {
    delete snap;
}

double cfv_snapshot_time(const cfv_snapshot* snap) {
    return snap ? snap->data.t : 0.0;
}

int cfv_snapshot_dim(const cfv_snapshot* snap) {
    return snap ? snap->data.dim : 0;
}

size_t cfv_snapshot_rows(const cfv_snapshot* snap) {
    return snap ? snap->data.rows() : 0;
}

size_t cfv_snapshot_columns(const cfv_snapshot* snap) {
    return snap ? snap->data.columns.size() : 0;
}

const char* cfv_snapshot_column_name(const cfv_snapshot* snap, size_t column) {
    if (!snap || column >= snap->data.columns.size()) return nullptr;
    return snap->data.columns[column].first.c_str();
}

const double* cfv_snapshot_column(const cfv_snapshot* snap, size_t column) {
    if (!snap || column >= snap->data.columns.size()) return nullptr;
    return snap->data.columns[column].second.data();
}

cfv_status cfv_snapshot_write(const cfv_snapshot* snap, const char* path, char* err,
                              size_t err_size) {
    if (!snap || !path) {
        put_error(err, err_size, "null argument");
        return CFV_ERR_ARGUMENT;
    }
    return guarded(err, err_size, [&] { write_snapshot_file(snap->data, path); });
}

cfv_status cfv_compare(const cfv_snapshot* a, const cfv_snapshot* b, const char* column,
                       double* l1, double* linf, char* err, size_t err_size) {
    if (!a || !b || !column || !l1 || !linf) {
        put_error(err, err_size, "null argument");
        return CFV_ERR_ARGUMENT;
    }
    return guarded(err, err_size, [&] {
        const Norms n = compare_snapshots(a->data, b->data, column);
        *l1 = n.l1;
        *linf = n.linf;
    });
}

size_t cfv_test_count(void) {
    return builtin_tests().size();
}

const char* cfv_test_id(size_t index) {
    const auto& tests = builtin_tests();
    if (index >= tests.size()) return nullptr;
    return tests[index].id.c_str();
}

const char* cfv_test_summary(size_t index) {
    const auto& tests = builtin_tests();
    if (index >= tests.size()) return nullptr;
    return tests[index].summary.c_str();
}

}  // extern "C"
