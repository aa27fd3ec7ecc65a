#include "qnposet/linear_extension.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qnposet {

namespace {

std::vector<int> inverse_permutation(std::span<const Element> order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
        Element e = order[k];
        if (e < 0 || e >= n || pos[e] >= 0) {
            throw std::invalid_argument("order is not a permutation of 0.." + std::to_string(n - 1));
        }
        pos[e] = k;
    }
    return pos;
}

std::vector<std::vector<Element>> upper_covers(const Poset& p) {
    std::vector<std::vector<Element>> up(p.size());
    for (auto e : cover_edges(p)) {
        up[e.lower].push_back(e.upper);
    }
    return up;
}

} // namespace

LinearExtension::LinearExtension(std::vector<Element> order)
    : order_(std::move(order)), position_(inverse_permutation(order_)) {}

LinearExtension LinearExtension::identity(int n) {
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), 0);
    return LinearExtension(std::move(order));
}

LinearExtension LinearExtension::reversed() const {
    return LinearExtension(std::vector<Element>(order_.rbegin(), order_.rend()));
}

bool is_linear_extension(const Poset& p, std::span<const Element> order) {
    if (static_cast<int>(order.size()) != p.size()) {
        throw std::invalid_argument("order length does not match poset size");
    }
    auto pos = inverse_permutation(order);
    for (auto [i, j] : p.relations()) {
        if (pos[i] > pos[j]) {
            return false;
        }
    }
    return true;
}

bool is_linear_extension(const Poset& p, const LinearExtension& l) {
    return is_linear_extension(p, l.order());
}

bool is_realizer(const Poset& p, const Realizer& r) {
    if (r.lx.size() != p.size() || r.ly.size() != p.size()) {
        return false;
    }
    for (Element i = 0; i < p.size(); ++i) {
        for (Element j = 0; j < p.size(); ++j) {
            if (i == j) {
                continue;
            }
            bool both = r.lx.position(i) < r.lx.position(j) && r.ly.position(i) < r.ly.position(j);
            if (both != p.less(i, j)) {
                return false;
            }
        }
    }
    return true;
}

LinearExtensionStream::LinearExtensionStream(const Poset& p)
    : poset_(&p), cover_up_(upper_covers(p)), pending_(p.size(), 0), placed_(p.size(), 0) {
    for (const auto& ups : cover_up_) {
        for (Element v : ups) {
            ++pending_[v];
        }
    }
    order_.reserve(p.size());
}

void LinearExtensionStream::place(Element e) {
    placed_[e] = 1;
    order_.push_back(e);
    for (Element v : cover_up_[e]) {
        --pending_[v];
    }
}

Element LinearExtensionStream::unplace() {
    Element e = order_.back();
    order_.pop_back();
    placed_[e] = 0;
    for (Element v : cover_up_[e]) {
        ++pending_[v];
    }
    return e;
}

void LinearExtensionStream::fill_from(int depth, Element start) {
    const int n = poset_->size();
    for (int d = depth; d < n; ++d) {
        Element pick = -1;
        for (Element e = (d == depth ? start + 1 : 0); e < n; ++e) {
            if (!placed_[e] && pending_[e] == 0) {
                pick = e;
                break;
            }
        }
        place(pick);
    }
}

bool LinearExtensionStream::next() {
    if (done_) {
        return false;
    }
    if (!started_) {
        started_ = true;
        fill_from(0, -1);
        return true;
    }
    const int n = poset_->size();
    while (!order_.empty()) {
        Element last = unplace();
        for (Element e = last + 1; e < n; ++e) {
            if (!placed_[e] && pending_[e] == 0) {
                place(e);
                fill_from(static_cast<int>(order_.size()), -1);
                return true;
            }
        }
    }
    done_ = true;
    return false;
}

EnumerationStatus count_linear_extensions(const Poset& p, std::uint64_t cap) {
    return for_each_linear_extension(p, [](std::span<const Element>) {}, cap);
}

LinearExtension sample_linear_extension(const Poset& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto up = upper_covers(p);
    std::vector<int> pending(p.size(), 0);
    for (const auto& ups : up) {
        for (Element v : ups) {
            ++pending[v];
        }
    }
    std::vector<Element> minimal;
    for (Element e = 0; e < p.size(); ++e) {
        if (pending[e] == 0) {
            minimal.push_back(e);
        }
    }
    std::vector<Element> order;
    order.reserve(p.size());
    while (!minimal.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, minimal.size() - 1);
        std::size_t k = pick(rng);
        Element e = minimal[k];
        minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(k));
        order.push_back(e);
        for (Element v : up[e]) {
            if (--pending[v] == 0) {
                minimal.insert(std::lower_bound(minimal.begin(), minimal.end(), v), v);
            }
        }
    }
    return LinearExtension(std::move(order));
}

LinearExtension greedy_linear_extension(const Poset& p) {
    LinearExtensionStream s(p);
    s.next();
    auto cur = s.current();
    return LinearExtension(std::vector<Element>(cur.begin(), cur.end()));
}

} // namespace qnposet
