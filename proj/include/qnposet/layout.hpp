#pragma once

#include "qnposet/linear_extension.hpp"
#include "qnposet/poset.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qnposet {

enum class QueueScope { per_extension, universal };

/// queue_of[i] is the queue id of edges[i] of the cover graph it was built for.
struct QueueAssignment {
    std::vector<int> queue_of;
    int k = 0;
    QueueScope scope = QueueScope::per_extension;
};

/// Edges listed outermost first.
struct RainbowWitness {
    std::vector<CoverEdge> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

/// True when a strictly encloses b in l: a.lower < b.lower < b.upper < a.upper.
/// Edges sharing an endpoint never nest.
bool nests(const LinearExtension& l, const CoverEdge& outer, const CoverEdge& inner);

bool is_rainbow(const LinearExtension& l, const RainbowWitness& w);

/// Largest rainbow of `edges` under `l`. Assumes l orients every edge
/// lower-to-upper; throws std::invalid_argument otherwise.
RainbowWitness max_rainbow(const LinearExtension& l, std::span<const CoverEdge> edges);

/// Fewest queues for a fixed order: each edge gets the length of the longest
/// rainbow in which it is the innermost edge, minus one. k equals the max rainbow.
QueueAssignment min_queue_partition(const LinearExtension& l, std::span<const CoverEdge> edges);

/// Number of same-queue nested pairs under l (0 for a valid assignment).
std::uint64_t nesting_violations(const LinearExtension& l, std::span<const CoverEdge> edges,
                                 const QueueAssignment& q);

/// Chain-pair assignment: edge (u, v) goes to queue chain(u) * k + chain(v).
/// Nesting-free under every linear extension. Throws if c is not a chain
/// partition of p.
QueueAssignment hp_queue_assignment(const Poset& p, std::span<const CoverEdge> edges,
                                    const ChainPartition& c);

struct ExactQueueResult {
    int qn = 0;          // best value found (upper bound)
    int lower_bound = 0; // proven lower bound; equals qn when exact
    bool exact = true;
    LinearExtension best;
    QueueAssignment witness;
    std::uint64_t nodes = 0;
};

/// Minimum over linear extensions of the largest rainbow of the cover graph.
///
/// Depth-first branch and bound over extension prefixes, extending by minimal
/// elements in index order. A prefix is cut once the rainbow it already forces
/// reaches the incumbent. After `node_cap` search nodes the search stops and
/// reports the incumbent with a proven lower bound and exact=false.
ExactQueueResult exact_queue_number(const Poset& p, std::uint64_t node_cap = 50'000'000);

} // namespace qnposet
