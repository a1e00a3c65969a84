#include "reduction/reduce.hpp"

#include <algorithm>

namespace corridor {

namespace {

struct Segment {
    int head;         // original index of the surviving bottleneck
    double demand;    // demand absorbed so far
};

// Normalized demand of segment `i` in the current survivor list.
double normalized(const std::vector<Segment>& seg, const std::vector<double>& mu, std::size_t i) {
    double drop = i + 1 < seg.size() ? mu[seg[i].head] - mu[seg[i + 1].head] : mu[seg[i].head];
    return seg[i].demand / drop;
}

// True when the neighbour above position i is false and must merge down.
bool neighbour_is_false(const std::vector<Segment>& seg, const std::vector<double>& mu,
                        std::size_t i) {
    double drop = mu[seg[i].head] - mu[seg[i + 1].head];
    if (drop <= 0.0) return true;  // upstream capacity not strictly smaller
    return normalized(seg, mu, i) >= normalized(seg, mu, i + 1);
}

}  // namespace

int ReducedNetwork::reduced_index_of(int original) const {
    for (std::size_t r = 0; r < origin_map.size(); ++r)
        for (int o : origin_map[r])
            if (o == original) return static_cast<int>(r);
    fail(ErrorCode::InvalidArgument, "reduced network: origin index out of range");
}

ReducedNetwork reduce(const CorridorNetwork& net) {
    net.validate();
    const int n = net.size();
    std::vector<Segment> seg(n);
    for (int i = 0; i < n; ++i) seg[i] = {i, net.demand[i]};

    for (int i = n - 2; i >= 0; --i) {
        auto pos = static_cast<std::size_t>(i);
        while (pos + 1 < seg.size() && neighbour_is_false(seg, net.capacity, pos)) {
            seg[pos].demand += seg[pos + 1].demand;
            seg.erase(seg.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        }
    }

    ReducedNetwork out;
    out.network.horizon = net.horizon;
    out.network.direction = net.direction;
    for (std::size_t r = 0; r < seg.size(); ++r) {
        int head = seg[r].head;
        int next_head = r + 1 < seg.size() ? seg[r + 1].head : n;
        out.survivors.push_back(head);
        out.network.capacity.push_back(net.capacity[head]);
        out.network.free_flow_time.push_back(net.free_flow_time[head]);
        out.network.demand.push_back(seg[r].demand);
        std::vector<int> merged;
        for (int o = head; o < next_head; ++o) merged.push_back(o);
        out.origin_map.push_back(std::move(merged));
    }
    for (int i = 0; i < n; ++i)
        if (std::find(out.survivors.begin(), out.survivors.end(), i) == out.survivors.end())
            out.false_bottlenecks.push_back(i);
    return out;
}

std::vector<double> normalized_demands(const CorridorNetwork& net) {
    ReducedNetwork r = reduce(net);
    const auto& mu = r.network.capacity;
    const auto& q = r.network.demand;
    std::vector<double> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        double drop = i + 1 < q.size() ? mu[i] - mu[i + 1] : mu[i];
        out[i] = q[i] / drop;
    }
    return out;
}

bool is_reduced(const CorridorNetwork& net) {
    return reduce(net).false_bottlenecks.empty();
}

}  // namespace corridor
