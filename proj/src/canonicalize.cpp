#include "lmc/solvers.hpp"
#include "lmc/union_find.hpp"

namespace lmc {

partition canonicalize(const graph& g, const partition& p) {
    if (p.size() != g.node_count())
        throw std::invalid_argument("canonicalize: partition size does not match graph");
    union_find uf(g.node_count());
    for (const auto& [u, v] : g.edges())
        if (p.block_of(u) == p.block_of(v))
            uf.unite(u, v);
    return uf.to_partition();
}

partition canonicalize(const lmp_instance& inst, const partition& p) {
    return canonicalize(inst.base_graph(), p);
}

const char* to_string(step_kind k) {
    switch (k) {
    case step_kind::contract:
        return "contract";
    case step_kind::move_nodes:
        return "move-nodes";
    case step_kind::join:
        return "join";
    case step_kind::new_component:
        return "new-component";
    }
    return "?";
}

} // namespace lmc
