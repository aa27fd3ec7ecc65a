#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qnposet {

using Element = int;
using Pair = std::pair<Element, Element>;

/// Square bit matrix, one packed row per element.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    int words() const { return words_; }

    bool test(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
    void set(int i, int j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }

    std::span<std::uint64_t> row(int i) {
        return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
    }
    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
    }

    int row_count(int i) const;
    bool rows_intersect(int i, const BitMatrix& other, int j) const;
    BitMatrix transposed() const;

    bool operator==(const BitMatrix&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Thrown by Poset::from_relations when the generating pairs contain a cycle.
class CycleError : public std::invalid_argument {
public:
    CycleError(std::vector<Element> cycle);
    const std::vector<Element>& cycle() const { return cycle_; }

private:
    std::vector<Element> cycle_;
};

struct CoverEdge {
    Element lower;
    Element upper;
    bool operator==(const CoverEdge&) const = default;
    auto operator<=>(const CoverEdge&) const = default;
};

using CoverGraph = std::vector<CoverEdge>;

/// A finite strict partial order on 0..n-1, stored transitively closed.
///
/// Values are immutable once built; every constructor path normalizes the
/// relation so that less() is irreflexive, antisymmetric and transitive.
class Poset {
public:
    Poset() = default;
    /// Antichain on n elements.
    explicit Poset(int n);

    /// Transitive closure of the generating pairs (i, j) meaning i < j.
    /// Throws std::out_of_range on a bad index and CycleError on a cycle.
    static Poset from_relations(int n, std::span<const Pair> pairs,
                                std::vector<std::string> labels = {});

    int size() const { return n_; }
    bool less(Element i, Element j) const { return up_.test(i, j); }
    bool comparable(Element i, Element j) const { return less(i, j) || less(j, i); }

    /// Elements strictly above / below i, as packed bit rows.
    std::span<const std::uint64_t> upset(Element i) const { return up_.row(i); }
    std::span<const std::uint64_t> downset(Element i) const { return down_.row(i); }
    int upset_size(Element i) const { return up_.row_count(i); }
    int downset_size(Element i) const { return down_.row_count(i); }

    /// All pairs (i, j) with i < j, ordered by (i, j).
    std::vector<Pair> relations() const;

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Element i) const;
    Poset with_labels(std::vector<std::string> labels) const;

    bool same_order(const Poset& other) const { return n_ == other.n_ && up_ == other.up_; }

private:
    int n_ = 0;
    BitMatrix up_;
    BitMatrix down_;
    std::vector<std::string> labels_;
};

/// Cover pairs (transitive reduction), ordered by (lower, upper).
CoverGraph cover_edges(const Poset& p);

Poset dual(const Poset& p);

/// Every element of p below every element of q; q's indices shifted by p.size().
Poset compose_series(const Poset& p, const Poset& q);
/// Disjoint union; q's indices shifted by p.size().
Poset compose_parallel(const Poset& p, const Poset& q);

/// Induced subposet on the listed elements, re-indexed in list order.
Poset restrict_to(const Poset& p, std::span<const Element> elements);

struct ChainPartition {
    std::vector<int> chain_of;
    int k = 0;

    std::vector<std::vector<Element>> chains() const;
};

/// True if every chain id is in range and each chain is totally ordered in p.
bool is_chain_partition(const Poset& p, const ChainPartition& c);
bool is_antichain(const Poset& p, std::span<const Element> elements);

struct WidthResult {
    int width = 0;
    std::vector<Element> antichain;
    ChainPartition chains;
};

/// Dilworth width via maximum matching on the split comparability digraph.
/// Returns a maximum antichain and a minimum chain partition of equal size.
WidthResult width(const Poset& p);

int height(const Poset& p);

/// Order isomorphism search for small posets. The mapping sends an element of
/// p to its image in q.
std::optional<std::vector<Element>> find_isomorphism(const Poset& p, const Poset& q);

/// Checks that map is a bijection with p.less(i,j) iff q.less(map[i],map[j]).
bool is_isomorphism(const Poset& p, const Poset& q, std::span<const Element> map);

} // namespace qnposet
