#include "corridor/corridor.h"

#include <cstring>
#include <string>

#include "analytic/curves.hpp"
#include "analytic/dso.hpp"
#include "analytic/due.hpp"
#include "numeric/compare.hpp"
#include "numeric/dump.hpp"
#include "numeric/lcp_solve.hpp"
#include "numeric/lp.hpp"
#include "pqsim/simulate.hpp"
#include "pqsim/verify.hpp"
#include "reduction/disaggregate.hpp"
#include "reduction/reduce.hpp"

using namespace corridor;

namespace {

thread_local std::string g_last_error;

cdr_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return CDR_ERR_INVALID_ARGUMENT;
        case ErrorCode::Domain: return CDR_ERR_DOMAIN;
        case ErrorCode::Horizon: return CDR_ERR_HORIZON;
        case ErrorCode::AmbiguousKink: return CDR_ERR_AMBIGUOUS_KINK;
        case ErrorCode::NotReduced: return CDR_ERR_NOT_REDUCED;
        case ErrorCode::Infeasible: return CDR_ERR_INFEASIBLE;
        case ErrorCode::LpInfeasible: return CDR_ERR_LP_INFEASIBLE;
        case ErrorCode::NoConvergence: return CDR_ERR_NO_CONVERGENCE;
        case ErrorCode::Io: return CDR_ERR_IO;
        case ErrorCode::Internal: return CDR_ERR_INTERNAL;
    }
    return CDR_ERR_INTERNAL;
}

template <typename Fn>
cdr_status guarded(Fn&& fn) {
    try {
        fn();
        return CDR_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CDR_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return CDR_ERR_INTERNAL;
    }
}

cdr_status null_arg() {
    g_last_error = "null argument";
    return CDR_ERR_NULL_ARGUMENT;
}

cdr_status out_of_range() {
    g_last_error = "index out of range";
    return CDR_ERR_OUT_OF_RANGE;
}

// two-call array export
cdr_status export_curve(const PwlFunction& f, double* t, double* v, int* count) {
    if (!count) return null_arg();
    int n = static_cast<int>(f.size());
    if (!t || !v) {
        *count = n;
        return CDR_OK;
    }
    if (*count < n) {
        g_last_error = "buffer too small";
        return CDR_ERR_INVALID_ARGUMENT;
    }
    for (int i = 0; i < n; ++i) {
        t[i] = f.breakpoints()[static_cast<std::size_t>(i)];
        v[i] = f.values()[static_cast<std::size_t>(i)];
    }
    *count = n;
    return CDR_OK;
}

void copy_message(const std::string& text, char* buf, size_t size) {
    if (!buf || size == 0) return;
    std::size_t n = std::min(size - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
}

}  // namespace

struct cdr_network {
    CorridorNetwork net;
};
struct cdr_schedule {
    ScheduleDelay s;
};
struct cdr_reduction {
    ReducedNetwork red;
};
struct cdr_dso {
    DsoSolution sol;
};
struct cdr_due {
    DueSolution sol;
};
struct cdr_curves {
    CumulativeCurves curves;
};
struct cdr_lp {
    DsoLp lp;
    LpSolution sol;
};
struct cdr_lcp {
    LcpProblem problem;
};
struct cdr_lcp_solution {
    LcpSolution sol;
};
struct cdr_simulation {
    SimulationResult sim;
};

extern "C" {

const char* cdr_last_error(void) { return g_last_error.c_str(); }

const char* cdr_status_name(cdr_status status) {
    switch (status) {
        case CDR_OK: return "ok";
        case CDR_ERR_INVALID_ARGUMENT: return "invalid argument";
        case CDR_ERR_DOMAIN: return "domain error";
        case CDR_ERR_HORIZON: return "horizon error";
        case CDR_ERR_AMBIGUOUS_KINK: return "ambiguous kink";
        case CDR_ERR_NOT_REDUCED: return "network not reduced";
        case CDR_ERR_INFEASIBLE: return "infeasible";
        case CDR_ERR_LP_INFEASIBLE: return "lp infeasible";
        case CDR_ERR_NO_CONVERGENCE: return "no convergence";
        case CDR_ERR_IO: return "io error";
        case CDR_ERR_INTERNAL: return "internal error";
        case CDR_ERR_NULL_ARGUMENT: return "null argument";
        case CDR_ERR_OUT_OF_RANGE: return "index out of range";
    }
    return "unknown";
}

cdr_status cdr_network_create(int n, const double* mu, const double* c, const double* q,
                              double horizon, cdr_direction direction, cdr_network** out) {
    if (!mu || !c || !q || !out) return null_arg();
    return guarded([&] {
        CorridorNetwork net;
        net.capacity.assign(mu, mu + n);
        net.free_flow_time.assign(c, c + n);
        net.demand.assign(q, q + n);
        net.horizon = horizon;
        net.direction = direction == CDR_MORNING ? Direction::Morning : Direction::Evening;
        net.validate();
        *out = new cdr_network{std::move(net)};
    });
}

void cdr_network_destroy(cdr_network* net) { delete net; }

int cdr_network_size(const cdr_network* net) { return net ? net->net.size() : 0; }

cdr_status cdr_schedule_create_v(double early_slope, double late_slope, double desired_time,
                                 cdr_schedule** out) {
    if (!out) return null_arg();
    return guarded([&] {
        *out = new cdr_schedule{ScheduleDelay::piecewise_v(early_slope, late_slope, desired_time)};
    });
}

cdr_status cdr_schedule_create_pwl(const double* t, const double* v, int n, cdr_schedule** out) {
    if (!t || !v || !out) return null_arg();
    return guarded([&] {
        *out = new cdr_schedule{ScheduleDelay::piecewise_linear(
            std::vector<double>(t, t + n), std::vector<double>(v, v + n))};
    });
}

void cdr_schedule_destroy(cdr_schedule* s) { delete s; }

cdr_status cdr_schedule_eval(const cdr_schedule* s, double t, double* out) {
    if (!s || !out) return null_arg();
    return guarded([&] { *out = s->s.eval(t); });
}

cdr_status cdr_schedule_slope(const cdr_schedule* s, double t, cdr_slope_side side, double* out) {
    if (!s || !out) return null_arg();
    return guarded([&] {
        SlopeSide ss = side == CDR_SLOPE_LEFT    ? SlopeSide::Left
                       : side == CDR_SLOPE_RIGHT ? SlopeSide::Right
                                                 : SlopeSide::Auto;
        *out = s->s.slope(t, ss);
    });
}

cdr_status cdr_schedule_window(const cdr_schedule* s, double length, double horizon_begin,
                               double horizon_end, double* begin, double* end, double* penalty) {
    if (!s || !begin || !end || !penalty) return null_arg();
    return guarded([&] {
        auto w = s->s.window_from_length(length, horizon_begin, horizon_end);
        *begin = w.begin;
        *end = w.end;
        *penalty = w.penalty;
    });
}

cdr_status cdr_reduce(const cdr_network* net, cdr_reduction** out) {
    if (!net || !out) return null_arg();
    return guarded([&] { *out = new cdr_reduction{reduce(net->net)}; });
}

void cdr_reduction_destroy(cdr_reduction* red) { delete red; }

int cdr_reduction_size(const cdr_reduction* red) { return red ? red->red.size() : 0; }

cdr_status cdr_reduction_network(const cdr_reduction* red, cdr_network** out) {
    if (!red || !out) return null_arg();
    return guarded([&] { *out = new cdr_network{red->red.network}; });
}

int cdr_reduction_false_count(const cdr_reduction* red) {
    return red ? static_cast<int>(red->red.false_bottlenecks.size()) : 0;
}

cdr_status cdr_reduction_false_indices(const cdr_reduction* red, int* buf) {
    if (!red || !buf) return null_arg();
    for (std::size_t i = 0; i < red->red.false_bottlenecks.size(); ++i)
        buf[i] = red->red.false_bottlenecks[i];
    return CDR_OK;
}

cdr_status cdr_reduction_survivor(const cdr_reduction* red, int reduced_index,
                                  int* original_index) {
    if (!red || !original_index) return null_arg();
    if (reduced_index < 0 || reduced_index >= red->red.size()) return out_of_range();
    *original_index = red->red.survivors[static_cast<std::size_t>(reduced_index)];
    return CDR_OK;
}

cdr_status cdr_reduction_origin_map(const cdr_reduction* red, int reduced_index, int* buf,
                                    int* count) {
    if (!red || !count) return null_arg();
    if (reduced_index < 0 || reduced_index >= red->red.size()) return out_of_range();
    const auto& members = red->red.origin_map[static_cast<std::size_t>(reduced_index)];
    if (!buf) {
        *count = static_cast<int>(members.size());
        return CDR_OK;
    }
    if (*count < static_cast<int>(members.size())) {
        g_last_error = "buffer too small";
        return CDR_ERR_INVALID_ARGUMENT;
    }
    for (std::size_t i = 0; i < members.size(); ++i) buf[i] = members[i];
    *count = static_cast<int>(members.size());
    return CDR_OK;
}

cdr_status cdr_reduction_normalized_demands(const cdr_reduction* red, double* buf) {
    if (!red || !buf) return null_arg();
    return guarded([&] {
        auto table = normalized_demands(red->red.network);
        for (std::size_t i = 0; i < table.size(); ++i) buf[i] = table[i];
    });
}

cdr_status cdr_solve_dso(const cdr_network* net, const cdr_schedule* s, cdr_dso** out) {
    if (!net || !s || !out) return null_arg();
    return guarded([&] { *out = new cdr_dso{solve_dso(net->net, s->s)}; });
}

cdr_status cdr_disaggregate(const cdr_dso* reduced_solution, const cdr_reduction* red,
                            const cdr_network* original, cdr_dso** out) {
    if (!reduced_solution || !red || !original || !out) return null_arg();
    return guarded(
        [&] { *out = new cdr_dso{disaggregate(reduced_solution->sol, red->red, original->net)}; });
}

void cdr_dso_destroy(cdr_dso* dso) { delete dso; }

int cdr_dso_size(const cdr_dso* dso) { return dso ? dso->sol.size() : 0; }

cdr_status cdr_dso_window(const cdr_dso* dso, int i, double* begin, double* end) {
    if (!dso || !begin || !end) return null_arg();
    if (i < 0 || i >= dso->sol.size()) return out_of_range();
    *begin = dso->sol.windows[static_cast<std::size_t>(i)].begin;
    *end = dso->sol.windows[static_cast<std::size_t>(i)].end;
    return CDR_OK;
}

cdr_status cdr_dso_cost(const cdr_dso* dso, int i, double* rho) {
    if (!dso || !rho) return null_arg();
    if (i < 0 || i >= dso->sol.size()) return out_of_range();
    *rho = dso->sol.cost[static_cast<std::size_t>(i)];
    return CDR_OK;
}

cdr_status cdr_dso_rate(const cdr_dso* dso, int i, double* rate) {
    if (!dso || !rate) return null_arg();
    if (i < 0 || i >= dso->sol.size()) return out_of_range();
    *rate = dso->sol.merged_capacity[static_cast<std::size_t>(i)];
    return CDR_OK;
}

int cdr_dso_flow_split_unique(const cdr_dso* dso) {
    return dso && dso->sol.flow_split_unique ? 1 : 0;
}

cdr_status cdr_dso_price_at(const cdr_dso* dso, int bottleneck, double t, double* out) {
    if (!dso || !out) return null_arg();
    if (bottleneck < 0 || bottleneck >= dso->sol.size()) return out_of_range();
    *out = dso->sol.price[static_cast<std::size_t>(bottleneck)](t);
    return CDR_OK;
}

cdr_status cdr_dso_price_curve(const cdr_dso* dso, int bottleneck, double* t, double* v,
                               int* count) {
    if (!dso) return null_arg();
    if (bottleneck < 0 || bottleneck >= dso->sol.size()) return out_of_range();
    return export_curve(dso->sol.price[static_cast<std::size_t>(bottleneck)], t, v, count);
}

cdr_status cdr_dso_objective(const cdr_dso* dso, const cdr_schedule* s, const cdr_network* net,
                             double* out) {
    if (!dso || !s || !net || !out) return null_arg();
    return guarded([&] { *out = dso->sol.objective(s->s, net->net); });
}

cdr_status cdr_check_due_feasibility(const cdr_network* net, const cdr_schedule* s,
                                     const cdr_dso* dso, int* feasible, char* message,
                                     size_t message_size) {
    if (!net || !s || !dso || !feasible) return null_arg();
    return guarded([&] {
        auto rep = check_due_feasibility(net->net, s->s, dso->sol.windows, net->net.direction);
        *feasible = rep.feasible ? 1 : 0;
        copy_message(rep.feasible ? "" : rep.violations.front().describe(), message, message_size);
    });
}

cdr_status cdr_solve_due(const cdr_dso* dso, const cdr_network* net, const cdr_schedule* s,
                         cdr_due** out) {
    if (!dso || !net || !s || !out) return null_arg();
    return guarded([&] { *out = new cdr_due{solve_due(dso->sol, net->net, s->s)}; });
}

void cdr_due_destroy(cdr_due* due) { delete due; }

int cdr_due_size(const cdr_due* due) { return due ? due->sol.size() : 0; }

cdr_status cdr_due_cost(const cdr_due* due, int i, double* rho) {
    if (!due || !rho) return null_arg();
    if (i < 0 || i >= due->sol.size()) return out_of_range();
    *rho = due->sol.cost[static_cast<std::size_t>(i)];
    return CDR_OK;
}

cdr_status cdr_due_delay_at(const cdr_due* due, int bottleneck, double t, double* out) {
    if (!due || !out) return null_arg();
    if (bottleneck < 0 || bottleneck >= due->sol.size()) return out_of_range();
    *out = due->sol.delay[static_cast<std::size_t>(bottleneck)](t);
    return CDR_OK;
}

cdr_status cdr_due_flow_at(const cdr_due* due, int origin, double t, double* out) {
    if (!due || !out) return null_arg();
    if (origin < 0 || origin >= due->sol.size()) return out_of_range();
    *out = due->sol.flow[static_cast<std::size_t>(origin)](t);
    return CDR_OK;
}

cdr_status cdr_due_delay_curve(const cdr_due* due, int bottleneck, double* t, double* v,
                               int* count) {
    if (!due) return null_arg();
    if (bottleneck < 0 || bottleneck >= due->sol.size()) return out_of_range();
    return export_curve(due->sol.delay[static_cast<std::size_t>(bottleneck)], t, v, count);
}

cdr_status cdr_due_flow_curve(const cdr_due* due, int origin, double* t, double* v, int* count) {
    if (!due) return null_arg();
    if (origin < 0 || origin >= due->sol.size()) return out_of_range();
    return export_curve(due->sol.flow[static_cast<std::size_t>(origin)], t, v, count);
}

cdr_status cdr_curves_from_dso(const cdr_network* net, const cdr_dso* dso, cdr_curves** out) {
    if (!net || !dso || !out) return null_arg();
    return guarded([&] { *out = new cdr_curves{build_cumulative_curves(net->net, dso->sol)}; });
}

cdr_status cdr_curves_from_due(const cdr_network* net, const cdr_due* due, cdr_curves** out) {
    if (!net || !due || !out) return null_arg();
    return guarded([&] { *out = new cdr_curves{build_cumulative_curves(net->net, due->sol)}; });
}

void cdr_curves_destroy(cdr_curves* curves) { delete curves; }

cdr_status cdr_curves_get(const cdr_curves* curves, cdr_curve_kind kind, int index, double* t,
                          double* v, int* count) {
    if (!curves) return null_arg();
    const std::vector<PwlFunction>* family = nullptr;
    switch (kind) {
        case CDR_CURVE_ARRIVAL: family = &curves->curves.arrival; break;
        case CDR_CURVE_DEPARTURE: family = &curves->curves.departure; break;
        case CDR_CURVE_ORIGIN_DEPARTURE: family = &curves->curves.origin_through; break;
        case CDR_CURVE_DESTINATION_ARRIVAL: family = &curves->curves.destination_arrival; break;
    }
    if (!family) return null_arg();
    if (index < 0 || index >= static_cast<int>(family->size())) return out_of_range();
    return export_curve((*family)[static_cast<std::size_t>(index)], t, v, count);
}

cdr_status cdr_solve_dso_lp(const cdr_network* net, const cdr_schedule* s, int grid_steps,
                            cdr_lp** out) {
    if (!net || !s || !out) return null_arg();
    return guarded([&] {
        TimeGrid grid = TimeGrid::over(net->net.horizon, grid_steps);
        DsoLp lp = build_dso_lp(net->net, s->s, grid);
        LpSolution sol = solve_lp(lp);
        *out = new cdr_lp{std::move(lp), std::move(sol)};
    });
}

void cdr_lp_destroy(cdr_lp* lp) { delete lp; }

cdr_status cdr_lp_objective(const cdr_lp* lp, double* out) {
    if (!lp || !out) return null_arg();
    *out = lp->sol.objective;
    return CDR_OK;
}

cdr_status cdr_lp_rate(const cdr_lp* lp, int k, int i, double* out) {
    if (!lp || !out) return null_arg();
    if (k < 0 || k >= lp->lp.grid.steps || i < 0 || i >= lp->lp.n_origins) return out_of_range();
    *out = lp->sol.rate(k, i, lp->lp.n_origins);
    return CDR_OK;
}

cdr_status cdr_lp_price(const cdr_lp* lp, int k, int i, double* out) {
    if (!lp || !out) return null_arg();
    if (k < 0 || k >= lp->lp.grid.steps || i < 0 || i >= lp->lp.n_origins) return out_of_range();
    *out = lp->sol.price(k, i, lp->lp.n_origins);
    return CDR_OK;
}

cdr_status cdr_lp_demand_dual(const cdr_lp* lp, int i, double* out) {
    if (!lp || !out) return null_arg();
    if (i < 0 || i >= lp->lp.n_origins) return out_of_range();
    *out = lp->sol.demand_dual[i];
    return CDR_OK;
}

cdr_status cdr_lcp_create(const cdr_network* net, const cdr_schedule* s, int grid_steps,
                          cdr_direction direction, cdr_lcp** out) {
    if (!net || !s || !out) return null_arg();
    return guarded([&] {
        TimeGrid grid = TimeGrid::over(net->net.horizon, grid_steps);
        Direction dir = direction == CDR_MORNING ? Direction::Morning : Direction::Evening;
        *out = new cdr_lcp{build_lcp(net->net, s->s, grid, dir)};
    });
}

void cdr_lcp_destroy(cdr_lcp* lcp) { delete lcp; }

int cdr_lcp_dimension(const cdr_lcp* lcp) { return lcp ? lcp->problem.dimension() : 0; }

cdr_status cdr_lcp_descriptor(const cdr_lcp* lcp, char* buf, size_t size) {
    if (!lcp || !buf) return null_arg();
    copy_message(lcp->problem.block_descriptor(), buf, size);
    return CDR_OK;
}

cdr_status cdr_lcp_solve(const cdr_lcp* lcp, cdr_lcp_solution** out) {
    if (!lcp || !out) return null_arg();
    return guarded([&] { *out = new cdr_lcp_solution{solve_lcp(lcp->problem)}; });
}

void cdr_lcp_solution_destroy(cdr_lcp_solution* sol) { delete sol; }

cdr_status cdr_lcp_solution_residuals(const cdr_lcp_solution* sol, double* complementarity,
                                      double* min_f, double* min_x) {
    if (!sol) return null_arg();
    if (complementarity) *complementarity = sol->sol.complementarity;
    if (min_f) *min_f = sol->sol.min_f;
    if (min_x) *min_x = sol->sol.min_x;
    return CDR_OK;
}

cdr_status cdr_lcp_solution_cost(const cdr_lcp_solution* sol, int i, double* rho) {
    if (!sol || !rho) return null_arg();
    if (i < 0 || i >= sol->sol.n) return out_of_range();
    *rho = sol->sol.rho(i);
    return CDR_OK;
}

cdr_status cdr_lcp_solution_delay(const cdr_lcp_solution* sol, int k, int i, double* out) {
    if (!sol || !out) return null_arg();
    if (k < 0 || k >= sol->sol.steps || i < 0 || i >= sol->sol.n) return out_of_range();
    *out = sol->sol.delay(k, i);
    return CDR_OK;
}

cdr_status cdr_lcp_solution_rate(const cdr_lcp_solution* sol, int k, int i, double* out) {
    if (!sol || !out) return null_arg();
    if (k < 0 || k >= sol->sol.steps || i < 0 || i >= sol->sol.n) return out_of_range();
    *out = sol->sol.rate(k, i);
    return CDR_OK;
}

cdr_status cdr_lcp_dump(const cdr_lcp* lcp, const cdr_lcp_solution* sol, const char* directory) {
    if (!lcp || !directory) return null_arg();
    return guarded([&] { dump_lcp(lcp->problem, sol ? &sol->sol : nullptr, directory); });
}

cdr_status cdr_compare(const cdr_network* net, const cdr_schedule* s, const cdr_dso* dso,
                       const cdr_lcp* lcp, const cdr_lcp_solution* sol, cdr_comparison* out) {
    if (!net || !s || !dso || !lcp || !sol || !out) return null_arg();
    return guarded([&] {
        ComparisonReport rep =
            compare_solutions(net->net, s->s, dso->sol, lcp->problem, sol->sol);
        out->cost_gap_max = rep.cost_gap_max;
        out->delay_price_sup = rep.delay_price_sup;
        out->delay_price_l1 = rep.delay_price_l1;
        out->departure_curve_sup = rep.departure_curve_sup;
        out->origin_departure_curve_sup = rep.origin_departure_curve_sup;
        out->destination_arrival_sup = rep.destination_arrival_sup;
        out->grid_delay_tol = rep.grid_delay_tol;
        out->grid_curve_tol = rep.grid_curve_tol;
        out->regime = static_cast<int>(rep.regime);
        copy_message(rep.verdict, out->verdict, sizeof(out->verdict));
    });
}

cdr_status cdr_simulate_due(const cdr_network* net, const cdr_due* due, cdr_simulation** out) {
    if (!net || !due || !out) return null_arg();
    return guarded([&] {
        *out = new cdr_simulation{simulate(net->net, inflows_from_due(net->net, due->sol))};
    });
}

cdr_status cdr_simulate_dso(const cdr_network* net, const cdr_dso* dso, cdr_simulation** out) {
    if (!net || !dso || !out) return null_arg();
    return guarded([&] {
        *out = new cdr_simulation{simulate(net->net, inflows_from_dso(net->net, dso->sol))};
    });
}

cdr_status cdr_simulate_inflows(const cdr_network* net, const int* counts, const double* t,
                                const double* v, cdr_simulation** out) {
    if (!net || !counts || !t || !v || !out) return null_arg();
    return guarded([&] {
        InflowProfile inflows;
        std::size_t offset = 0;
        for (int i = 0; i < net->net.size(); ++i) {
            int n = counts[i];
            if (n == 0) {
                inflows.cumulative.emplace_back();
            } else {
                inflows.cumulative.emplace_back(
                    std::vector<double>(t + offset, t + offset + n),
                    std::vector<double>(v + offset, v + offset + n),
                    PwlFunction::Extrapolation::Clamp);
            }
            offset += static_cast<std::size_t>(n);
        }
        *out = new cdr_simulation{simulate(net->net, inflows)};
    });
}

void cdr_simulation_destroy(cdr_simulation* sim) { delete sim; }

cdr_status cdr_simulation_terminal_time(const cdr_simulation* sim, int origin, double depart,
                                        double* out) {
    if (!sim || !out) return null_arg();
    if (origin < 0 || origin >= sim->sim.net.size()) return out_of_range();
    return guarded([&] { *out = sim->sim.terminal_time(origin, depart); });
}

cdr_status cdr_simulation_cost(const cdr_simulation* sim, const cdr_schedule* s, int origin,
                               double depart, double* out) {
    if (!sim || !s || !out) return null_arg();
    if (origin < 0 || origin >= sim->sim.net.size()) return out_of_range();
    return guarded([&] { *out = sim->sim.cost(origin, depart, s->s); });
}

cdr_status cdr_simulation_delay_at(const cdr_simulation* sim, int bottleneck, double t,
                                   double* out) {
    if (!sim || !out) return null_arg();
    if (bottleneck < 0 || bottleneck >= sim->sim.net.size()) return out_of_range();
    *out = sim->sim.delay[static_cast<std::size_t>(bottleneck)].empty()
               ? 0.0
               : sim->sim.delay[static_cast<std::size_t>(bottleneck)](t);
    return CDR_OK;
}

cdr_status cdr_verify_equilibrium(const cdr_simulation* sim, const cdr_schedule* s,
                                  double tolerance, int* equilibrium, double* max_spread,
                                  double* max_violation) {
    if (!sim || !s || !equilibrium) return null_arg();
    return guarded([&] {
        EquilibriumReport rep = verify_equilibrium(sim->sim, s->s, tolerance);
        *equilibrium = rep.equilibrium ? 1 : 0;
        if (max_spread) *max_spread = rep.max_spread;
        if (max_violation) *max_violation = rep.max_violation;
    });
}

}  // extern "C"
