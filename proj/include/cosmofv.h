/*
 * cosmofv — finite-volume simulation of relativistic isothermal flows on
 * expanding or contracting backgrounds.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through these functions; fallible calls return a cfv_status
 * and, on failure, copy a message into the caller-provided error buffer.
 * Handles are not thread-safe; distinct handles may be used from distinct
 * threads.
 */
#ifndef COSMOFV_H
#define COSMOFV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cfv_status {
    CFV_OK = 0,
    CFV_ERR_ARGUMENT = 1, /* null handle or bad argument */
    CFV_ERR_CONFIG = 2,   /* configuration rejected */
    CFV_ERR_RUNTIME = 3,  /* simulation aborted (recovery failure, NaN, dt collapse) */
    CFV_ERR_IO = 4        /* file could not be read or written */
} cfv_status;

typedef struct cfv_config cfv_config;
typedef struct cfv_result cfv_result;
typedef struct cfv_snapshot cfv_snapshot;

const char* cfv_version(void);

/* --- configuration ------------------------------------------------------ */

/* Parse and validate a `key = value` configuration. */
cfv_status cfv_config_parse_file(const char* path, cfv_config** out, char* err, size_t err_size);
cfv_status cfv_config_parse_text(const char* text, cfv_config** out, char* err, size_t err_size);

/* Override one key and re-validate. */
cfv_status cfv_config_set(cfv_config* cfg, const char* key, const char* value, char* err,
                          size_t err_size);

void cfv_config_free(cfv_config* cfg);

/* --- simulation ---------------------------------------------------------- */

cfv_status cfv_run(const cfv_config* cfg, cfv_result** out, char* err, size_t err_size);
void cfv_result_free(cfv_result* res);

size_t cfv_result_snapshot_count(const cfv_result* res);
/* Borrowed handles; valid while the result lives. Index `count` (or the
 * dedicated call below) returns the final state. */
const cfv_snapshot* cfv_result_snapshot(const cfv_result* res, size_t index);
const cfv_snapshot* cfv_result_final(const cfv_result* res);

/* Write snap_NNNN.csv, final.csv and report.txt into out_dir. */
cfv_status cfv_result_write(const cfv_result* res, const char* out_dir, char* err,
                            size_t err_size);

/* --- snapshots ----------------------------------------------------------- */

cfv_status cfv_snapshot_load(const char* path, cfv_snapshot** out, char* err, size_t err_size);
/* Only snapshots from cfv_snapshot_load are owned by the caller. */
void cfv_snapshot_free(cfv_snapshot* snap);

double cfv_snapshot_time(const cfv_snapshot* snap);
int cfv_snapshot_dim(const cfv_snapshot* snap);
size_t cfv_snapshot_rows(const cfv_snapshot* snap);
size_t cfv_snapshot_columns(const cfv_snapshot* snap);
const char* cfv_snapshot_column_name(const cfv_snapshot* snap, size_t column);
const double* cfv_snapshot_column(const cfv_snapshot* snap, size_t column);

cfv_status cfv_snapshot_write(const cfv_snapshot* snap, const char* path, char* err,
                              size_t err_size);

/* L1 (cell-weighted) and max-norm difference of one column; 1D snapshots of
 * different resolution are compared after conservative restriction. */
cfv_status cfv_compare(const cfv_snapshot* a, const cfv_snapshot* b, const char* column,
                       double* l1, double* linf, char* err, size_t err_size);

/* --- built-in test catalog ------------------------------------------------ */

size_t cfv_test_count(void);
const char* cfv_test_id(size_t index);
const char* cfv_test_summary(size_t index);

#ifdef __cplusplus
}
#endif

#endif /* COSMOFV_H */
