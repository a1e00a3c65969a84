/* corridor: dynamic system-optimal and user-equilibrium assignment for
 * single-corridor networks with tandem bottlenecks.
 *
 * C89-compatible shared-library surface. Every object is an opaque handle
 * created by a cdr_*_create / solver call and released by the matching
 * cdr_*_destroy. Functions return CDR_OK or an error code; the message of
 * the most recent failure on the calling thread is available through
 * cdr_last_error(). Handles are immutable after creation and safe to share
 * across threads.
 *
 * Indexing convention: bottleneck/origin 0 is adjacent to the shared node
 * (the destination for the morning commute, the origin for the evening
 * one); free-flow times are measured from location i to the shared node.
 * Array getters follow a two-call pattern: pass NULL buffers to receive the
 * element count, then call again with buffers of that size.
 */
#ifndef CORRIDOR_CORRIDOR_H
#define CORRIDOR_CORRIDOR_H

#include <stddef.h>

#if defined(_WIN32)
#define CDR_API __declspec(dllexport)
#else
#define CDR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cdr_status {
    CDR_OK = 0,
    CDR_ERR_INVALID_ARGUMENT = 1,
    CDR_ERR_DOMAIN = 2,
    CDR_ERR_HORIZON = 3,
    CDR_ERR_AMBIGUOUS_KINK = 4,
    CDR_ERR_NOT_REDUCED = 5,
    CDR_ERR_INFEASIBLE = 6,
    CDR_ERR_LP_INFEASIBLE = 7,
    CDR_ERR_NO_CONVERGENCE = 8,
    CDR_ERR_IO = 9,
    CDR_ERR_INTERNAL = 10,
    CDR_ERR_NULL_ARGUMENT = 11,
    CDR_ERR_OUT_OF_RANGE = 12
} cdr_status;

typedef enum cdr_direction { CDR_MORNING = 0, CDR_EVENING = 1 } cdr_direction;

typedef enum cdr_slope_side {
    CDR_SLOPE_LEFT = -1,
    CDR_SLOPE_AUTO = 0,
    CDR_SLOPE_RIGHT = 1
} cdr_slope_side;

typedef enum cdr_curve_kind {
    CDR_CURVE_ARRIVAL = 0,             /* aggregate arrivals at bottleneck i */
    CDR_CURVE_DEPARTURE = 1,           /* aggregate departures from bottleneck i */
    CDR_CURVE_ORIGIN_DEPARTURE = 2,    /* group i departures at its own bottleneck */
    CDR_CURVE_DESTINATION_ARRIVAL = 3  /* group i arrivals at its terminal node */
} cdr_curve_kind;

typedef struct cdr_network cdr_network;
typedef struct cdr_schedule cdr_schedule;
typedef struct cdr_reduction cdr_reduction;
typedef struct cdr_dso cdr_dso;
typedef struct cdr_due cdr_due;
typedef struct cdr_curves cdr_curves;
typedef struct cdr_lp cdr_lp;
typedef struct cdr_lcp cdr_lcp;
typedef struct cdr_lcp_solution cdr_lcp_solution;
typedef struct cdr_simulation cdr_simulation;

CDR_API const char* cdr_last_error(void);
CDR_API const char* cdr_status_name(cdr_status status);

/* ---- network ---- */
CDR_API cdr_status cdr_network_create(int n, const double* mu, const double* c, const double* q,
                                      double horizon, cdr_direction direction, cdr_network** out);
CDR_API void cdr_network_destroy(cdr_network* net);
CDR_API int cdr_network_size(const cdr_network* net);

/* ---- schedule delay ---- */
CDR_API cdr_status cdr_schedule_create_v(double early_slope, double late_slope,
                                         double desired_time, cdr_schedule** out);
CDR_API cdr_status cdr_schedule_create_pwl(const double* t, const double* v, int n,
                                           cdr_schedule** out);
CDR_API void cdr_schedule_destroy(cdr_schedule* s);
CDR_API cdr_status cdr_schedule_eval(const cdr_schedule* s, double t, double* out);
CDR_API cdr_status cdr_schedule_slope(const cdr_schedule* s, double t, cdr_slope_side side,
                                      double* out);
/* Equal-penalty window of a given length inside [horizon_begin, horizon_end]. */
CDR_API cdr_status cdr_schedule_window(const cdr_schedule* s, double length, double horizon_begin,
                                       double horizon_end, double* begin, double* end,
                                       double* penalty);

/* ---- reduction ---- */
CDR_API cdr_status cdr_reduce(const cdr_network* net, cdr_reduction** out);
CDR_API void cdr_reduction_destroy(cdr_reduction* red);
CDR_API int cdr_reduction_size(const cdr_reduction* red);
CDR_API cdr_status cdr_reduction_network(const cdr_reduction* red, cdr_network** out);
CDR_API int cdr_reduction_false_count(const cdr_reduction* red);
CDR_API cdr_status cdr_reduction_false_indices(const cdr_reduction* red, int* buf);
CDR_API cdr_status cdr_reduction_survivor(const cdr_reduction* red, int reduced_index,
                                          int* original_index);
CDR_API cdr_status cdr_reduction_origin_map(const cdr_reduction* red, int reduced_index, int* buf,
                                            int* count);
CDR_API cdr_status cdr_reduction_normalized_demands(const cdr_reduction* red, double* buf);

/* ---- closed-form system optimum ---- */
CDR_API cdr_status cdr_solve_dso(const cdr_network* reduced_net, const cdr_schedule* s,
                                 cdr_dso** out);
CDR_API cdr_status cdr_disaggregate(const cdr_dso* reduced_solution, const cdr_reduction* red,
                                    const cdr_network* original, cdr_dso** out);
CDR_API void cdr_dso_destroy(cdr_dso* dso);
CDR_API int cdr_dso_size(const cdr_dso* dso);
CDR_API cdr_status cdr_dso_window(const cdr_dso* dso, int i, double* begin, double* end);
CDR_API cdr_status cdr_dso_cost(const cdr_dso* dso, int i, double* rho);
CDR_API cdr_status cdr_dso_rate(const cdr_dso* dso, int i, double* rate);
CDR_API int cdr_dso_flow_split_unique(const cdr_dso* dso);
CDR_API cdr_status cdr_dso_price_at(const cdr_dso* dso, int bottleneck, double t, double* out);
CDR_API cdr_status cdr_dso_price_curve(const cdr_dso* dso, int bottleneck, double* t, double* v,
                                       int* count);
CDR_API cdr_status cdr_dso_objective(const cdr_dso* dso, const cdr_schedule* s,
                                     const cdr_network* net, double* out);

/* ---- feasibility screen and closed-form equilibrium ---- */
CDR_API cdr_status cdr_check_due_feasibility(const cdr_network* net, const cdr_schedule* s,
                                             const cdr_dso* dso, int* feasible, char* message,
                                             size_t message_size);
CDR_API cdr_status cdr_solve_due(const cdr_dso* dso, const cdr_network* net,
                                 const cdr_schedule* s, cdr_due** out);
CDR_API void cdr_due_destroy(cdr_due* due);
CDR_API int cdr_due_size(const cdr_due* due);
CDR_API cdr_status cdr_due_cost(const cdr_due* due, int i, double* rho);
CDR_API cdr_status cdr_due_delay_at(const cdr_due* due, int bottleneck, double t, double* out);
CDR_API cdr_status cdr_due_flow_at(const cdr_due* due, int origin, double t, double* out);
CDR_API cdr_status cdr_due_delay_curve(const cdr_due* due, int bottleneck, double* t, double* v,
                                       int* count);
CDR_API cdr_status cdr_due_flow_curve(const cdr_due* due, int origin, double* t, double* v,
                                      int* count);

/* ---- cumulative curves ---- */
CDR_API cdr_status cdr_curves_from_dso(const cdr_network* net, const cdr_dso* dso,
                                       cdr_curves** out);
CDR_API cdr_status cdr_curves_from_due(const cdr_network* net, const cdr_due* due,
                                       cdr_curves** out);
CDR_API void cdr_curves_destroy(cdr_curves* curves);
CDR_API cdr_status cdr_curves_get(const cdr_curves* curves, cdr_curve_kind kind, int index,
                                  double* t, double* v, int* count);

/* ---- finite linear program (system optimum oracle) ---- */
CDR_API cdr_status cdr_solve_dso_lp(const cdr_network* net, const cdr_schedule* s, int grid_steps,
                                    cdr_lp** out);
CDR_API void cdr_lp_destroy(cdr_lp* lp);
CDR_API cdr_status cdr_lp_objective(const cdr_lp* lp, double* out);
CDR_API cdr_status cdr_lp_rate(const cdr_lp* lp, int k, int i, double* out);
CDR_API cdr_status cdr_lp_price(const cdr_lp* lp, int k, int i, double* out);
CDR_API cdr_status cdr_lp_demand_dual(const cdr_lp* lp, int i, double* out);

/* ---- finite complementarity problem (user-equilibrium oracle) ---- */
CDR_API cdr_status cdr_lcp_create(const cdr_network* net, const cdr_schedule* s, int grid_steps,
                                  cdr_direction direction, cdr_lcp** out);
CDR_API void cdr_lcp_destroy(cdr_lcp* lcp);
CDR_API int cdr_lcp_dimension(const cdr_lcp* lcp);
CDR_API cdr_status cdr_lcp_descriptor(const cdr_lcp* lcp, char* buf, size_t size);
CDR_API cdr_status cdr_lcp_solve(const cdr_lcp* lcp, cdr_lcp_solution** out);
CDR_API void cdr_lcp_solution_destroy(cdr_lcp_solution* sol);
CDR_API cdr_status cdr_lcp_solution_residuals(const cdr_lcp_solution* sol,
                                              double* complementarity, double* min_f,
                                              double* min_x);
CDR_API cdr_status cdr_lcp_solution_cost(const cdr_lcp_solution* sol, int i, double* rho);
CDR_API cdr_status cdr_lcp_solution_delay(const cdr_lcp_solution* sol, int k, int i, double* out);
CDR_API cdr_status cdr_lcp_solution_rate(const cdr_lcp_solution* sol, int k, int i, double* out);
/* Writes M.csv, b.csv and (when a solution is given) X.csv into `directory`. */
CDR_API cdr_status cdr_lcp_dump(const cdr_lcp* lcp, const cdr_lcp_solution* sol,
                                const char* directory);

/* ---- closed form vs numeric comparison ---- */
typedef struct cdr_comparison {
    double cost_gap_max;
    double delay_price_sup;
    double delay_price_l1;
    double departure_curve_sup;
    double origin_departure_curve_sup;
    double destination_arrival_sup;
    double grid_delay_tol;
    double grid_curve_tol;
    int regime; /* 0 morning holds, 1 morning fails, 2 evening holds, 3 evening fails */
    char verdict[192];
} cdr_comparison;

CDR_API cdr_status cdr_compare(const cdr_network* net, const cdr_schedule* s, const cdr_dso* dso,
                               const cdr_lcp* lcp, const cdr_lcp_solution* sol,
                               cdr_comparison* out);

/* ---- point-queue simulation ---- */
CDR_API cdr_status cdr_simulate_due(const cdr_network* net, const cdr_due* due,
                                    cdr_simulation** out);
CDR_API cdr_status cdr_simulate_dso(const cdr_network* net, const cdr_dso* dso,
                                    cdr_simulation** out);
/* counts[i] samples of class i's cumulative departures; t/v are the
 * concatenated breakpoint and value arrays. */
CDR_API cdr_status cdr_simulate_inflows(const cdr_network* net, const int* counts,
                                        const double* t, const double* v, cdr_simulation** out);
CDR_API void cdr_simulation_destroy(cdr_simulation* sim);
CDR_API cdr_status cdr_simulation_terminal_time(const cdr_simulation* sim, int origin,
                                                double depart, double* out);
CDR_API cdr_status cdr_simulation_cost(const cdr_simulation* sim, const cdr_schedule* s,
                                       int origin, double depart, double* out);
CDR_API cdr_status cdr_simulation_delay_at(const cdr_simulation* sim, int bottleneck, double t,
                                           double* out);
CDR_API cdr_status cdr_verify_equilibrium(const cdr_simulation* sim, const cdr_schedule* s,
                                          double tolerance, int* equilibrium, double* max_spread,
                                          double* max_violation);

#ifdef __cplusplus
}
#endif

#endif /* CORRIDOR_CORRIDOR_H */
