/* Well-centered triangulation toolkit: C API.
 *
 * All objects are opaque handles created and destroyed through this
 * interface.  Every fallible function returns a wct_status; on failure the
 * thread-local message from wct_last_error() describes what went wrong.
 */
#ifndef WCT_H
#define WCT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wct_status {
  WCT_OK = 0,
  WCT_ERROR_INVALID_ARGUMENT = 1,
  WCT_ERROR_DEGENERATE = 2,
  WCT_ERROR_PRECONDITION = 3,
  WCT_ERROR_PARSE = 4,
  WCT_ERROR_IO = 5,
  WCT_ERROR_SEARCH_CAP = 6,
  WCT_ERROR_INTERNAL = 7
} wct_status;

typedef enum wct_wc_status {
  WCT_SATISFIED = 0,
  WCT_VIOLATED = 1,
  WCT_BOUNDARY = 2
} wct_wc_status;

typedef enum wct_format { WCT_FORMAT_TEXT = 0, WCT_FORMAT_RECORDS = 1 } wct_format;

/* Zero-initialized fields fall back to the defaults (rel 1e-9, abs 1e-12). */
typedef struct wct_tolerance {
  double rel;
  double abs;
} wct_tolerance;

typedef struct wct_verdict {
  int status;     /* wct_wc_status */
  double margin;  /* dimensionless signed slack */
} wct_verdict;

typedef struct wct_mesh wct_mesh;
typedef struct wct_link wct_link;
typedef struct wct_report wct_report;

const char* wct_version(void);
const char* wct_last_error(void);

/* ---- simplex-level queries ------------------------------------------- */
/* coords: (dim+1) vertices, vertex-major, `ambient` doubles each. */

wct_status wct_circumcenter(int dim, int ambient, const double* coords,
                            const wct_tolerance* tol, double* center,
                            double* radius, double* barycentric, double* lambda,
                            int* degenerate);

/* predicate: "wc-n" | "wc-k" (uses k argument) | "wc-complete" | "equatorial" */
wct_status wct_simplex_test(const char* predicate, int k, int dim, int ambient,
                            const double* coords, const wct_tolerance* tol,
                            wct_verdict* out);

/* predicate: "cylinder" | "prism" | "polynomial" | "isosceles".
 * facet_coords: facet_dim+1 vertices; apex: one vertex. */
wct_status wct_cone_test(const char* predicate, int facet_dim, int ambient,
                         const double* facet_coords, const double* apex,
                         const wct_tolerance* tol, wct_verdict* out);

/* ---- meshes and links ------------------------------------------------- */

wct_status wct_mesh_load(const char* path, wct_mesh** out);
wct_status wct_mesh_save(const wct_mesh* mesh, const char* path);
wct_status wct_mesh_from_arrays(int nv, const double* xyz, int nt,
                                const int* tets, wct_mesh** out);
void wct_mesh_free(wct_mesh* mesh);
int wct_mesh_vertex_count(const wct_mesh* mesh);
int wct_mesh_cell_count(const wct_mesh* mesh);

wct_status wct_link_load(const char* path, wct_link** out);
wct_status wct_link_save(const wct_link* link, const char* path);
wct_status wct_link_from_arrays(int m, int t, const int* triangles,
                                wct_link** out);
void wct_link_free(wct_link* link);
int wct_link_vertex_count(const wct_link* link);
int wct_link_triangle_count(const wct_link* link);

/* ---- generation ------------------------------------------------------- */

wct_status wct_generate_kgon(int k, int rings, wct_mesh** out);
wct_status wct_generate_band(int m, int open_fan, wct_link** out);
wct_status wct_generate_fixture(const char* name, wct_mesh** out);
wct_status wct_insert_degree3_3wc(const wct_mesh* mesh, int u, int tet,
                                  wct_mesh** out);
wct_status wct_insert_degree3_2wc(const wct_mesh* mesh, int u, int a, int b,
                                  int c, wct_mesh** out);
wct_status wct_insert_degree4_2wc(const wct_mesh* mesh, int u, int a, int b,
                                  wct_mesh** out);

/* ---- analysis --------------------------------------------------------- */

typedef struct wct_check_options {
  int k;                   /* 1..3, or 0 for all */
  wct_tolerance tol;
  unsigned long long seed;
  int parallel;
} wct_check_options;

wct_status wct_check(const wct_mesh* mesh, const wct_check_options* options,
                     wct_report** out);

typedef struct wct_classify_options {
  wct_tolerance tol;
  unsigned long long seed;
  int attempt_witnesses;
  int restarts;        /* 0 -> default 64 */
  double margin;       /* 0 -> default 0.05 */
  int max_iterations;  /* 0 -> default 5000 */
  int max_pool;        /* 0 -> default */
  long long max_nodes; /* 0 -> default */
  int parallel;
} wct_classify_options;

wct_status wct_classify_link(const wct_link* link,
                             const wct_classify_options* options,
                             wct_report** out);
wct_status wct_classify_enumeration(int m, const wct_classify_options* options,
                                    wct_report** out);

typedef struct wct_cube_audit_options {
  wct_tolerance tol;
  unsigned long long seed;
} wct_cube_audit_options;

wct_status wct_cube_audit(const wct_mesh* mesh,
                          const wct_cube_audit_options* options,
                          wct_report** out);

/* facet: 9 doubles (3 vertices); bbox: xmin xmax ymin ymax zmin zmax;
 * resolution: nx ny nz (>= 2 each).  Writes the grid file to out_path. */
wct_status wct_region_sample(const double* facet, const double* bbox,
                             const int* resolution, const char* out_path);

/* ---- reports ---------------------------------------------------------- */

void wct_report_free(wct_report* report);
/* 1 when every requested verdict is SATISFIED (check) or no finding was
 * raised (cube-audit); classification reports always return 1. */
int wct_report_all_satisfied(const wct_report* report);
/* Named counters; -1 for unknown keys.  Keys include: "cells", "satisfied",
 * "violated", "boundary", "degenerate", "links", "wc3_blocked",
 * "wc3_realized", "wc3_unknown", "wc2_blocked", "wc2_feasible",
 * "wc2_unknown", "corner_tets", "findings". */
int wct_report_count(const wct_report* report, const char* key);
/* Renders the report; free the string with wct_string_free. */
wct_status wct_report_render(const wct_report* report, int format, char** out);
void wct_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WCT_H */
