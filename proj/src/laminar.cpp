#include "planarmatch/laminar.hpp"

#include <algorithm>
#include <numeric>

namespace planarmatch {

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        a[i] < b[j] ? ++i : ++j;
    }
    return true;
}

}  // namespace

LaminarTree::LaminarTree(int ground_size, std::vector<std::vector<int>> sets)
    : ground_size_(ground_size) {
    std::vector<int> root(ground_size);
    std::iota(root.begin(), root.end(), 0);

    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw InvalidParams("laminar family: empty set");
        if (static_cast<int>(s.size()) >= ground_size)
            throw InvalidParams("laminar family: set must be a strict subset of V");
        if (s.front() < 0 || s.back() >= ground_size)
            throw InvalidParams("laminar family: vertex id out of range");
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    // Order by decreasing size, then lexicographic: parents precede children.
    std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.size() > b.size();
    });

    nodes_.push_back(std::move(root));
    parent_.push_back(-1);
    children_.emplace_back();
    for (auto& s : sets) {
        // Parent = deepest already-inserted superset; insertion order
        // guarantees it is the minimal one.
        int par = 0;
        for (int i = static_cast<int>(nodes_.size()) - 1; i >= 1; --i) {
            if (is_subset(s, nodes_[i])) {
                par = i;
                break;
            }
        }
        for (int i = 1; i < static_cast<int>(nodes_.size()); ++i)
            if (!is_subset(s, nodes_[i]) && !is_subset(nodes_[i], s) && !disjoint(s, nodes_[i]))
                throw InvalidParams("family is not laminar");
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back(std::move(s));
        parent_.push_back(par);
        children_.emplace_back();
        children_[par].push_back(id);
    }
}

int LaminarTree::separator() const {
    const int total = size();
    std::vector<int> subtree(total, 1);
    // Children always have larger ids than parents.
    for (int v = total - 1; v >= 1; --v) subtree[parent_[v]] += subtree[v];

    int best = -1, best_load = total + 1;
    for (int v = 0; v < total; ++v) {
        int load = total - subtree[v];  // component containing the parent
        for (int c : children_[v]) load = std::max(load, subtree[c]);
        if (load < best_load) {
            best_load = load;
            best = v;
        }
    }
    return best;
}

int tree_separator(const LaminarTree& t) { return t.separator(); }

}  // namespace planarmatch
