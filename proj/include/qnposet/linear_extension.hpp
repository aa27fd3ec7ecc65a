#pragma once

#include "qnposet/poset.hpp"

#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

namespace qnposet {

/// A total order of 0..n-1 held both as element-at-position and
/// position-of-element. Construction only checks that the order is a
/// permutation; use is_linear_extension to check it against a poset.
class LinearExtension {
public:
    LinearExtension() = default;
    explicit LinearExtension(std::vector<Element> order);

    static LinearExtension identity(int n);

    int size() const { return static_cast<int>(order_.size()); }
    Element at(int position) const { return order_[position]; }
    int position(Element e) const { return position_[e]; }
    const std::vector<Element>& order() const { return order_; }

    LinearExtension reversed() const;

    bool operator==(const LinearExtension& other) const { return order_ == other.order_; }

private:
    std::vector<Element> order_;
    std::vector<int> position_;
};

/// Throws std::invalid_argument when order is not a permutation of 0..n-1.
bool is_linear_extension(const Poset& p, std::span<const Element> order);
bool is_linear_extension(const Poset& p, const LinearExtension& l);

/// Both orders extend p and their intersection is exactly p.
struct Realizer {
    LinearExtension lx;
    LinearExtension ly;
};

bool is_realizer(const Poset& p, const Realizer& r);

/// Single-consumer stream over all linear extensions of a poset.
///
/// Extensions are produced in lexicographic order of their element sequences,
/// which is the same as always trying the smallest-index minimal element first.
class LinearExtensionStream {
public:
    explicit LinearExtensionStream(const Poset& p);

    /// Advances to the next extension; false once exhausted.
    bool next();
    /// Valid after next() returned true.
    std::span<const Element> current() const { return order_; }

private:
    void fill_from(int depth, Element start);
    void place(Element e);
    Element unplace();

    const Poset* poset_;
    std::vector<std::vector<Element>> cover_up_;
    std::vector<int> pending_;
    std::vector<char> placed_;
    std::vector<Element> order_;
    bool started_ = false;
    bool done_ = false;
};

struct EnumerationStatus {
    std::uint64_t count = 0;
    bool complete = true;
};

/// Calls visit(span<const Element>) for every linear extension, stopping after
/// cap extensions. If visit returns bool, returning false stops early (and the
/// status is reported incomplete).
template <class Visit>
EnumerationStatus for_each_linear_extension(const Poset& p, Visit&& visit,
                                            std::uint64_t cap = UINT64_MAX) {
    EnumerationStatus status;
    LinearExtensionStream stream(p);
    while (stream.next()) {
        if (status.count == cap) {
            status.complete = false;
            return status;
        }
        ++status.count;
        if constexpr (std::is_same_v<decltype(visit(stream.current())), bool>) {
            if (!visit(stream.current())) {
                status.complete = false;
                return status;
            }
        } else {
            visit(stream.current());
        }
    }
    return status;
}

/// Number of linear extensions, or the cap with complete=false.
EnumerationStatus count_linear_extensions(const Poset& p, std::uint64_t cap = UINT64_MAX);

/// Random topological order: at every step a uniformly random minimal element
/// of the remaining poset is taken. This is not uniform over extensions.
LinearExtension sample_linear_extension(const Poset& p, std::uint64_t seed);

/// Smallest-index-minimal-first extension (the first one the stream emits).
LinearExtension greedy_linear_extension(const Poset& p);

} // namespace qnposet
