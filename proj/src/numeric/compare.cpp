#include "numeric/compare.hpp"

#include <algorithm>
#include <cmath>

namespace corridor {

namespace {

double max_slope_magnitude(const ScheduleDelay& s, double a, double b) {
    double m = 0.0;
    std::vector<double> cuts{a};
    for (double k : s.kinks_in(a, b)) cuts.push_back(k);
    cuts.push_back(b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        m = std::max(m, std::fabs(s.slope(0.5 * (cuts[i] + cuts[i + 1]), SlopeSide::Auto)));
    return m;
}

}  // namespace

CumulativeCurves curves_from_lcp(const CorridorNetwork& net, const LcpProblem& p,
                                 const LcpSolution& sol) {
    const int n = p.n_origins();
    const int K = p.grid().steps;
    const double sign = p.direction() == Direction::Morning ? -1.0 : 1.0;
    CumulativeCurves out;
    std::vector<double> prefix_w(n, 0.0);

    std::vector<std::vector<double>> sigma(n, std::vector<double>(K + 1));
    std::vector<std::vector<double>> group_mass(n, std::vector<double>(K + 1, 0.0));
    for (int i = 0; i < n; ++i) sigma[i][0] = sign * net.free_flow_time[i];
    for (int k = 0; k < K; ++k) {
        for (int i = 0; i < n; ++i) {
            double below = 0.0;
            int upto = p.direction() == Direction::Morning ? i - 1 : i;
            for (int j = 0; j <= upto; ++j) below += sol.delay(k, j);
            sigma[i][k + 1] = p.grid().time(k) + sign * (below + net.free_flow_time[i]);
            group_mass[i][k + 1] = group_mass[i][k] + sol.mass(k, i);
        }
    }
    for (int i = 0; i < n; ++i) {
        // enforce monotone abscissas against roundoff
        for (int k = 1; k <= K; ++k) sigma[i][k] = std::max(sigma[i][k], sigma[i][k - 1]);
        std::vector<double> through(K + 1, 0.0);
        for (int j = i; j < n; ++j)
            for (int k = 0; k <= K; ++k) through[k] += group_mass[j][k];
        out.departure.emplace_back(sigma[i], through, PwlFunction::Extrapolation::Clamp);
        std::vector<double> tau(K + 1);
        tau[0] = sigma[i][0];
        for (int k = 1; k <= K; ++k) {
            tau[k] = sigma[i][k] - sol.delay(k - 1, i);
            tau[k] = std::max(tau[k], tau[k - 1]);
        }
        out.arrival.emplace_back(tau, through, PwlFunction::Extrapolation::Clamp);
        out.origin_through.emplace_back(sigma[i], group_mass[i], PwlFunction::Extrapolation::Clamp);
        if (net.direction == Direction::Morning) {
            std::vector<double> lag(K + 1);
            for (int k = 0; k <= K; ++k) lag[k] = k * p.grid().dt;
            out.destination_arrival.emplace_back(lag, group_mass[i],
                                                 PwlFunction::Extrapolation::Clamp);
        } else {
            out.destination_arrival.emplace_back(sigma[i], group_mass[i],
                                                 PwlFunction::Extrapolation::Clamp);
        }
    }
    return out;
}

ComparisonReport compare_solutions(const CorridorNetwork& net, const ScheduleDelay& s,
                                   const DsoSolution& dso, const LcpProblem& p,
                                   const LcpSolution& numeric) {
    require(dso.size() == p.n_origins(), ErrorCode::InvalidArgument,
            "compare: network size mismatch");
    const int n = p.n_origins();
    const int K = p.grid().steps;
    ComparisonReport rep;

    for (int i = 0; i < n; ++i)
        rep.cost_gap_max = std::max(rep.cost_gap_max, std::fabs(numeric.rho(i) - dso.cost[i]));

    for (int i = 0; i < n; ++i) {
        double l1 = 0.0;
        for (int k = 0; k < K; ++k) {
            double gap = std::fabs(numeric.delay(k, i) - dso.price[i](p.grid().time(k)));
            rep.delay_price_sup = std::max(rep.delay_price_sup, gap);
            l1 += gap * p.grid().dt;
        }
        rep.delay_price_l1 = std::max(rep.delay_price_l1, l1);
    }

    CumulativeCurves nc = curves_from_lcp(net, p, numeric);
    CumulativeCurves ac = build_cumulative_curves(net, dso);
    for (int i = 0; i < n; ++i) {
        rep.departure_curve_sup =
            std::max(rep.departure_curve_sup, sup_distance(nc.departure[i], ac.departure[i]));
        rep.origin_departure_curve_sup = std::max(
            rep.origin_departure_curve_sup, sup_distance(nc.origin_through[i], ac.origin_through[i]));
        rep.destination_arrival_sup =
            std::max(rep.destination_arrival_sup,
                     sup_distance(nc.destination_arrival[i], ac.destination_arrival[i]));
    }

    double sm = max_slope_magnitude(s, 0.0, net.horizon);
    double mu_max = *std::max_element(net.capacity.begin(), net.capacity.end());
    rep.grid_delay_tol = 3.0 * sm * p.grid().dt;
    rep.grid_curve_tol = 3.0 * sm * p.grid().dt * mu_max;

    auto feas = check_due_feasibility(net, s, dso.windows, net.direction);
    bool w_matches = rep.delay_price_sup <= rep.grid_delay_tol;
    if (net.direction == Direction::Morning) {
        if (feas.feasible && w_matches) {
            rep.regime = Regime::MorningConjectureHolds;
            rep.verdict = "w = p (Conjecture 1 holds); aggregate departure curves coincide";
        } else {
            rep.regime = Regime::MorningConjectureFails;
            rep.verdict = "w and p differ (capacity-ratio slope bound violated)";
        }
    } else {
        if (feas.feasible && w_matches) {
            rep.regime = Regime::EveningConjectureHolds;
            rep.verdict =
                "w = p (Conjecture 2 holds); aggregate departure flows differ, destination "
                "arrivals coincide";
        } else {
            rep.regime = Regime::EveningConjectureFails;
            rep.verdict = "both aggregate and disaggregate flows differ";
        }
    }
    return rep;
}

LpComparison compare_lp(const CorridorNetwork& net, const ScheduleDelay& s, const DsoSolution& dso,
                        const DsoLp& lp, const LpSolution& numeric) {
    LpComparison rep;
    double analytic_obj = dso.objective(s, net);
    rep.objective_gap_rel =
        std::fabs(numeric.objective - analytic_obj) / std::max(1e-12, std::fabs(analytic_obj));
    const int n = lp.n_origins;
    for (int k = 0; k < lp.grid.steps; ++k)
        for (int i = 0; i < n; ++i)
            rep.price_gap_sup =
                std::max(rep.price_gap_sup, std::fabs(numeric.price(k, i, n) -
                                                      dso.price[i](lp.grid.time(k))));
    for (int i = 0; i < n; ++i) {
        double mass = 0.0;
        for (int k = 0; k < lp.grid.steps; ++k) mass += numeric.rate(k, i, n) * lp.grid.dt;
        rep.mass_gap_rel = std::max(
            rep.mass_gap_rel, std::fabs(mass - net.demand[i]) / std::max(1.0, net.demand[i]));
    }
    return rep;
}

}  // namespace corridor
