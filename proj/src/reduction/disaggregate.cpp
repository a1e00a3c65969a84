#include "reduction/disaggregate.hpp"

#include <algorithm>

namespace corridor {

DsoSolution disaggregate(const DsoSolution& sol, const ReducedNetwork& red,
                         const CorridorNetwork& original) {
    require(sol.size() == red.size(), ErrorCode::InvalidArgument,
            "disaggregate: solution does not match the reduction");
    const int n = original.size();
    DsoSolution out;
    out.direction = sol.direction;
    out.windows.resize(n);
    out.cost.resize(n);
    out.price.resize(n);
    out.cumulative_price.resize(n);
    out.flow.resize(n);
    out.merged_capacity.assign(n, 0.0);
    out.flow_split_unique = true;

    for (int r = 0; r < red.size(); ++r) {
        const auto& members = red.origin_map[r];
        if (members.size() > 1) out.flow_split_unique = false;
        double base_cost = sol.cost[r] - red.network.free_flow_time[r];
        double group_q = red.network.demand[r];
        for (int o : members) {
            out.windows[o] = sol.windows[r];
            out.cost[o] = base_cost + original.free_flow_time[o];
            double share = group_q > 0.0 ? original.demand[o] / group_q : 0.0;
            out.flow[o] = sol.flow[r].scaled(share);
            out.merged_capacity[o] = share * sol.merged_capacity[r];  // per-origin constant rate
        }
        out.price[red.survivors[r]] = sol.price[r];
    }
    // cumulative prices in original indexing; false bottlenecks add nothing
    PwlFunction running;
    for (int i = 0; i < n; ++i) {
        if (!out.price[i].empty()) running = running + out.price[i];
        out.cumulative_price[i] = running;
    }

    // the proportional split must respect every original capacity
    PwlFunction through;  // sum of q_j for j >= i, built upstream-to-downstream
    for (int i = n - 1; i >= 0; --i) {
        if (!out.flow[i].empty()) through = through + out.flow[i];
        require(through.max_value() <= original.capacity[i] + 1e-9 * (1.0 + original.capacity[i]),
                ErrorCode::Infeasible, "disaggregate: proportional split exceeds a capacity");
    }
    return out;
}

}  // namespace corridor
