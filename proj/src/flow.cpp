#include "flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace arbor::detail {

int FlowNet::add_arc(int from, int to, int cap) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap, 0});
    arcs_.push_back({from, 0, 0});
    adj_[static_cast<size_t>(from)].push_back(id);
    adj_[static_cast<size_t>(to)].push_back(id + 1);
    return id;
}

int FlowNet::max_flow(int s, int t) {
    int total = 0;
    for (;;) {
        std::vector<int> pred_arc(adj_.size(), -1);
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty() && !seen[static_cast<size_t>(t)]) {
            int v = q.front();
            q.pop();
            for (int a : adj_[static_cast<size_t>(v)]) {
                const Arc& arc = arcs_[static_cast<size_t>(a)];
                if (arc.flow < arc.cap && !seen[static_cast<size_t>(arc.to)]) {
                    seen[static_cast<size_t>(arc.to)] = 1;
                    pred_arc[static_cast<size_t>(arc.to)] = a;
                    q.push(arc.to);
                }
            }
        }
        if (!seen[static_cast<size_t>(t)]) break;
        int push = std::numeric_limits<int>::max();
        for (int v = t; v != s;) {
            int a = pred_arc[static_cast<size_t>(v)];
            push = std::min(push, arcs_[static_cast<size_t>(a)].cap - arcs_[static_cast<size_t>(a)].flow);
            v = arcs_[static_cast<size_t>(a ^ 1)].to;
        }
        for (int v = t; v != s;) {
            int a = pred_arc[static_cast<size_t>(v)];
            arcs_[static_cast<size_t>(a)].flow += push;
            arcs_[static_cast<size_t>(a ^ 1)].flow -= push;
            v = arcs_[static_cast<size_t>(a ^ 1)].to;
        }
        total += push;
    }
    return total;
}

std::vector<char> FlowNet::source_side(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[static_cast<size_t>(s)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int a : adj_[static_cast<size_t>(v)]) {
            const Arc& arc = arcs_[static_cast<size_t>(a)];
            if (arc.flow < arc.cap && !seen[static_cast<size_t>(arc.to)]) {
                seen[static_cast<size_t>(arc.to)] = 1;
                q.push(arc.to);
            }
        }
    }
    return seen;
}

bool feasible_circulation(int n, const std::vector<BoundedArc>& arcs, std::vector<int>& flow) {
    // Standard lower-bound reduction: route each lo through a super source/sink.
    FlowNet net(n + 2);
    const int super_s = n;
    const int super_t = n + 1;
    std::vector<long long> excess(static_cast<size_t>(n), 0);
    std::vector<int> arc_id(arcs.size(), -1);
    for (size_t i = 0; i < arcs.size(); ++i) {
        const BoundedArc& a = arcs[i];
        arc_id[i] = net.add_arc(a.from, a.to, a.hi - a.lo);
        excess[static_cast<size_t>(a.to)] += a.lo;
        excess[static_cast<size_t>(a.from)] -= a.lo;
    }
    long long need = 0;
    for (int v = 0; v < n; ++v) {
        if (excess[static_cast<size_t>(v)] > 0) {
            net.add_arc(super_s, v, static_cast<int>(excess[static_cast<size_t>(v)]));
            need += excess[static_cast<size_t>(v)];
        } else if (excess[static_cast<size_t>(v)] < 0) {
            net.add_arc(v, super_t, static_cast<int>(-excess[static_cast<size_t>(v)]));
        }
    }
    if (net.max_flow(super_s, super_t) != need) return false;
    flow.assign(arcs.size(), 0);
    for (size_t i = 0; i < arcs.size(); ++i)
        flow[i] = arcs[i].lo + net.arc_flow(arc_id[i]);
    return true;
}

}  // namespace arbor::detail
