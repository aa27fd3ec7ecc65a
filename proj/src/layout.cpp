#include "qnposet/layout.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qnposet {

namespace {

struct Span {
    int left;
    int right;
};

// Longest chain of spans with strictly increasing left and strictly
// decreasing right. Fills level[i] with the chain length ending at span i
// (minus one) and returns the indices of one longest chain, outermost first.
std::vector<int> longest_nesting_chain(std::span<const Span> spans, std::vector<int>* level) {
    const int m = static_cast<int>(spans.size());
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (spans[a].left != spans[b].left) return spans[a].left < spans[b].left;
        if (spans[a].right != spans[b].right) return spans[a].right < spans[b].right;
        return a < b;
    });

    // Patience sorting on -right: pile k holds chains of length k+1.
    std::vector<int> tail_value;
    std::vector<int> tail_index;
    std::vector<int> parent(m, -1);
    if (level) {
        level->assign(m, 0);
    }
    for (int i : idx) {
        int key = -spans[i].right;
        auto it = std::lower_bound(tail_value.begin(), tail_value.end(), key);
        auto k = static_cast<std::size_t>(it - tail_value.begin());
        parent[i] = k > 0 ? tail_index[k - 1] : -1;
        if (k == tail_value.size()) {
            tail_value.push_back(key);
            tail_index.push_back(i);
        } else {
            tail_value[k] = key;
            tail_index[k] = i;
        }
        if (level) {
            (*level)[i] = static_cast<int>(k);
        }
    }
    std::vector<int> chain;
    if (!tail_index.empty()) {
        for (int i = tail_index.back(); i >= 0; i = parent[i]) {
            chain.push_back(i);
        }
        std::reverse(chain.begin(), chain.end());
    }
    return chain;
}

std::vector<Span> spans_of(const LinearExtension& l, std::span<const CoverEdge> edges) {
    std::vector<Span> spans;
    spans.reserve(edges.size());
    for (auto e : edges) {
        int a = l.position(e.lower);
        int b = l.position(e.upper);
        if (a >= b) {
            throw std::invalid_argument("order does not extend edge (" + std::to_string(e.lower) + "," +
                                        std::to_string(e.upper) + ")");
        }
        spans.push_back({a, b});
    }
    return spans;
}

} // namespace

bool nests(const LinearExtension& l, const CoverEdge& outer, const CoverEdge& inner) {
    return l.position(outer.lower) < l.position(inner.lower) &&
           l.position(inner.lower) < l.position(inner.upper) &&
           l.position(inner.upper) < l.position(outer.upper);
}

bool is_rainbow(const LinearExtension& l, const RainbowWitness& w) {
    for (auto e : w.edges) {
        if (l.position(e.lower) >= l.position(e.upper)) {
            return false;
        }
    }
    for (std::size_t i = 1; i < w.edges.size(); ++i) {
        if (!nests(l, w.edges[i - 1], w.edges[i])) {
            return false;
        }
    }
    return true;
}

RainbowWitness max_rainbow(const LinearExtension& l, std::span<const CoverEdge> edges) {
    auto spans = spans_of(l, edges);
    RainbowWitness w;
    for (int i : longest_nesting_chain(spans, nullptr)) {
        w.edges.push_back(edges[i]);
    }
    return w;
}

QueueAssignment min_queue_partition(const LinearExtension& l, std::span<const CoverEdge> edges) {
    auto spans = spans_of(l, edges);
    QueueAssignment q;
    q.scope = QueueScope::per_extension;
    q.k = static_cast<int>(longest_nesting_chain(spans, &q.queue_of).size());
    return q;
}

std::uint64_t nesting_violations(const LinearExtension& l, std::span<const CoverEdge> edges,
                                 const QueueAssignment& q) {
    std::uint64_t bad = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i != j && q.queue_of[i] == q.queue_of[j] && nests(l, edges[i], edges[j])) {
                ++bad;
            }
        }
    }
    return bad;
}

QueueAssignment hp_queue_assignment(const Poset& p, std::span<const CoverEdge> edges,
                                    const ChainPartition& c) {
    if (!is_chain_partition(p, c)) {
        throw std::invalid_argument("chain partition is inconsistent with the poset");
    }
    QueueAssignment q;
    q.scope = QueueScope::universal;
    q.k = c.k * c.k;
    q.queue_of.reserve(edges.size());
    for (auto e : edges) {
        q.queue_of.push_back(c.chain_of[e.lower] * c.k + c.chain_of[e.upper]);
    }
    return q;
}

namespace {

class QueueSearch {
public:
    QueueSearch(const Poset& p, std::uint64_t cap)
        : n_(p.size()), edges_(cover_edges(p)), cap_(cap), pos_(n_, -1), pending_(n_, 0), up_(n_) {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            up_[edges_[i].lower].push_back(static_cast<int>(i));
            ++pending_[edges_[i].upper];
        }
    }

    ExactQueueResult run(const Poset& p) {
        ExactQueueResult r;
        r.best = greedy_linear_extension(p);
        incumbent_ = max_rainbow(r.best, edges_).size();
        best_order_ = r.best.order();
        floor_ = edges_.empty() ? 0 : 1;
        frontier_min_ = std::numeric_limits<int>::max();
        if (incumbent_ > floor_) {
            search();
        }
        r.qn = incumbent_;
        r.exact = !capped_;
        r.lower_bound = capped_ ? std::min(incumbent_, std::max(frontier_min_, floor_)) : incumbent_;
        r.best = LinearExtension(best_order_);
        r.witness = min_queue_partition(r.best, edges_);
        r.nodes = nodes_;
        return r;
    }

private:
    // Closed edges keep their span; an edge with only its lower end placed
    // gets an unbounded right end, so it can only be the outermost edge.
    int forced_rainbow() {
        spans_.clear();
        const int inf = n_;
        for (Element v : prefix_) {
            for (int ei : up_[v]) {
                int u = edges_[ei].upper;
                spans_.push_back({pos_[v], pos_[u] >= 0 ? pos_[u] : inf});
            }
        }
        return static_cast<int>(longest_nesting_chain(spans_, nullptr).size());
    }

    void search() {
        int lb = forced_rainbow();
        if (lb >= incumbent_) {
            return;
        }
        if (capped_ || nodes_ >= cap_) {
            capped_ = true;
            frontier_min_ = std::min(frontier_min_, lb);
            return;
        }
        ++nodes_;
        if (static_cast<int>(prefix_.size()) == n_) {
            incumbent_ = lb;
            best_order_ = prefix_;
            return;
        }
        for (Element e = 0; e < n_; ++e) {
            if (pos_[e] >= 0 || pending_[e] != 0) {
                continue;
            }
            pos_[e] = static_cast<int>(prefix_.size());
            prefix_.push_back(e);
            for (int ei : up_[e]) --pending_[edges_[ei].upper];
            search();
            for (int ei : up_[e]) ++pending_[edges_[ei].upper];
            prefix_.pop_back();
            pos_[e] = -1;
            if (incumbent_ <= floor_) {
                return;
            }
        }
    }

    int n_;
    CoverGraph edges_;
    std::uint64_t cap_;
    std::vector<int> pos_;
    std::vector<int> pending_;
    std::vector<std::vector<int>> up_;
    std::vector<Element> prefix_;
    std::vector<Span> spans_;
    std::vector<Element> best_order_;
    int incumbent_ = 0;
    int floor_ = 0;
    int frontier_min_ = 0;
    bool capped_ = false;
    std::uint64_t nodes_ = 0;
};

} // namespace

ExactQueueResult exact_queue_number(const Poset& p, std::uint64_t node_cap) {
    QueueSearch search(p, node_cap);
    return search.run(p);
}

} // namespace qnposet
