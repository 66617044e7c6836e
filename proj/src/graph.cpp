#include "spirality/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "spirality/errors.hpp"

namespace spirality {

namespace {

// Union-find over vertex indices.
struct Forest {
    std::vector<std::size_t> parent;

    explicit Forest(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool merge(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[y] = x;
        return true;
    }
};

std::map<std::string, std::size_t> vertex_index(const Multigraph& g) {
    std::map<std::string, std::size_t> idx;
    for (const auto& v : g.vertices) idx.emplace(v, idx.size());
    return idx;
}

} // namespace

Multigraph Multigraph::make(std::vector<std::string> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return x.id < y.id; });
    return Multigraph{std::move(vertices), std::move(edges)};
}

bool Multigraph::has_vertex(const std::string& id) const {
    return std::binary_search(vertices.begin(), vertices.end(), id);
}

const Multigraph::Edge* Multigraph::find_edge(const std::string& id) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), id,
                               [](const Edge& e, const std::string& key) { return e.id < key; });
    if (it == edges.end() || it->id != id) return nullptr;
    return &*it;
}

std::size_t component_count(const Multigraph& g) {
    auto idx = vertex_index(g);
    Forest forest(idx.size());
    std::size_t components = idx.size();
    for (const auto& e : g.edges) {
        auto t = idx.find(e.tail);
        auto h = idx.find(e.head);
        if (t == idx.end() || h == idx.end())
            throw UnknownIdError("edge \"" + e.id + "\" touches an unknown vertex");
        if (forest.merge(t->second, h->second)) --components;
    }
    return components;
}

bool connected(const Multigraph& g) {
    return g.vertices.size() <= 1 || component_count(g) == 1;
}

std::size_t cycle_rank(const Multigraph& g) {
    return g.edges.size() + component_count(g) - g.vertices.size();
}

std::vector<Cycle> fundamental_cycles(const Multigraph& g, TreeOrder order) {
    auto idx = vertex_index(g);
    std::vector<const Multigraph::Edge*> scan;
    scan.reserve(g.edges.size());
    for (const auto& e : g.edges) scan.push_back(&e);
    if (order == TreeOrder::DescendingIds) std::reverse(scan.begin(), scan.end());

    Forest forest(idx.size());
    struct Arc {
        const Multigraph::Edge* edge;
        std::size_t to;
        Dir dir; // direction of travel when leaving the adjacent vertex
    };
    std::vector<std::vector<Arc>> tree(idx.size());
    std::vector<const Multigraph::Edge*> chords;
    for (const auto* e : scan) {
        auto t = idx.find(e->tail);
        auto h = idx.find(e->head);
        if (t == idx.end() || h == idx.end())
            throw UnknownIdError("edge \"" + e->id + "\" touches an unknown vertex");
        if (forest.merge(t->second, h->second)) {
            tree[t->second].push_back({e, h->second, Dir::Forward});
            tree[h->second].push_back({e, t->second, Dir::Backward});
        } else {
            chords.push_back(e);
        }
    }

    // Unique tree path between two vertices, as directed steps.
    auto tree_path = [&](std::size_t from, std::size_t to) {
        Cycle path;
        if (from == to) return path;
        std::vector<int> seen(idx.size(), 0);
        std::vector<Arc> via(idx.size(), Arc{nullptr, 0, Dir::Forward});
        std::vector<std::size_t> back(idx.size(), 0);
        std::queue<std::size_t> queue;
        queue.push(from);
        seen[from] = 1;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop();
            if (cur == to) break;
            for (const auto& arc : tree[cur]) {
                if (seen[arc.to]) continue;
                seen[arc.to] = 1;
                via[arc.to] = arc;
                back[arc.to] = cur;
                queue.push(arc.to);
            }
        }
        if (!seen[to]) throw UnknownIdError("vertices lie in different components");
        for (std::size_t cur = to; cur != from; cur = back[cur])
            path.push_back(CycleStep{via[cur].edge->id, via[cur].dir});
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::vector<Cycle> basis;
    basis.reserve(chords.size());
    for (const auto* e : chords) {
        Cycle cycle{CycleStep{e->id, Dir::Forward}};
        Cycle ret = tree_path(idx.at(e->head), idx.at(e->tail));
        cycle.insert(cycle.end(), ret.begin(), ret.end());
        basis.push_back(std::move(cycle));
    }
    return basis;
}

} // namespace spirality
