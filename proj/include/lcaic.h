/* lcaic — C API for the life-cycle energy and inventory assessment engine.
 *
 * All entry points return an lcaic_status; on any non-OK status a
 * human-readable description (possibly multi-line for validation errors)
 * is available from lcaic_last_error() on the same thread.
 *
 * Objects are opaque handles freed with their _free function. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with lcaic_string_free().
 */

#ifndef LCAIC_H
#define LCAIC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcaic_status {
  LCAIC_OK = 0,
  LCAIC_ERR_VALIDATION = 1, /* bad input data: file contents, domain violations */
  LCAIC_ERR_USAGE = 2,      /* bad arguments: unknown format, model, path */
  LCAIC_ERR_IO = 3          /* file not readable */
} lcaic_status;

typedef struct lcaic_scenario lcaic_scenario;
typedef struct lcaic_inventory lcaic_inventory;

/* Last error message for the calling thread; empty string when none. */
const char* lcaic_last_error(void);

void lcaic_string_free(char* s);

/* ---- scenarios ---- */

lcaic_status lcaic_scenario_load(const char* path, lcaic_scenario** out);
void lcaic_scenario_free(lcaic_scenario* s);
int lcaic_scenario_chip_count(const lcaic_scenario* s);
/* Chip name; valid until the scenario is freed. NULL if out of range. */
const char* lcaic_scenario_chip_name(const lcaic_scenario* s, int index);

/* ---- inventories ---- */

lcaic_status lcaic_inventory_load(const char* path, lcaic_inventory** out);
void lcaic_inventory_free(lcaic_inventory* inv);
lcaic_status lcaic_inventory_stats(const lcaic_inventory* inv, int* step_count,
                                   double* total_kwh);

/* ---- yield and geometry ---- */

/* model is one of "murphy", "poisson", "seeds". */
lcaic_status lcaic_yield(const char* model, double area_cm2,
                         double defect_density_per_cm2, double* out);
lcaic_status lcaic_calibrate_defect_density(const char* model, double area_cm2,
                                            double target_yield, double* out);
lcaic_status lcaic_gross_dies(double diameter_mm, double die_area_mm2,
                              double* gross_real, long long* gross);
lcaic_status lcaic_monte_carlo_yield(double area_cm2, double defect_density_per_cm2,
                                     double wafer_diameter_mm, long long trials,
                                     uint64_t seed, double* out);

/* ---- assessment and reports ----
 * format is one of "table", "json", "csv". */

lcaic_status lcaic_assess_render(const lcaic_scenario* s, const char* format,
                                 char** out);
lcaic_status lcaic_whatif_render(const lcaic_scenario* s, int chip_index,
                                 double factor, int full_geometry,
                                 const char* format, char** out);
lcaic_status lcaic_sweep_render(const lcaic_scenario* s, const char* param_path,
                                const double* values, int value_count,
                                const char* columns_csv, /* NULL = all */
                                char** out);
lcaic_status lcaic_materials_render(const lcaic_inventory* inv, const char* format,
                                    char** out);

#ifdef __cplusplus
}
#endif

#endif /* LCAIC_H */
