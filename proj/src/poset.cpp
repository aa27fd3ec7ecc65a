#include "qnposet/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

namespace qnposet {

namespace {

std::string cycle_message(const std::vector<Element>& cycle) {
    std::string msg = "relations contain a cycle:";
    for (Element e : cycle) {
        msg += ' ' + std::to_string(e);
    }
    return msg;
}

template <class F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
    for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t bits = row[w];
        while (bits != 0) {
            int b = std::countr_zero(bits);
            f(static_cast<int>(w * 64) + b);
            bits &= bits - 1;
        }
    }
}

} // namespace

int BitMatrix::row_count(int i) const {
    int c = 0;
    for (auto w : row(i)) {
        c += std::popcount(w);
    }
    return c;
}

bool BitMatrix::rows_intersect(int i, const BitMatrix& other, int j) const {
    auto a = row(i);
    auto b = other.row(j);
    for (std::size_t w = 0; w < a.size(); ++w) {
        if ((a[w] & b[w]) != 0) {
            return true;
        }
    }
    return false;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(n_);
    for (int i = 0; i < n_; ++i) {
        for_each_bit(row(i), [&](int j) { t.set(j, i); });
    }
    return t;
}

CycleError::CycleError(std::vector<Element> cycle)
    : std::invalid_argument(cycle_message(cycle)), cycle_(std::move(cycle)) {}

Poset::Poset(int n) : n_(n), up_(n), down_(n) {
    if (n < 0) {
        throw std::invalid_argument("negative element count");
    }
}

Poset Poset::from_relations(int n, std::span<const Pair> pairs, std::vector<std::string> labels) {
    Poset p(n);
    std::vector<std::vector<Element>> succ(n);
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw std::out_of_range("relation (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of range for n=" + std::to_string(n));
        }
        if (i == j) {
            throw CycleError({i});
        }
        succ[i].push_back(j);
    }

    // Iterative DFS; post-order gives a reverse topological order.
    enum class Mark : std::uint8_t { none, active, done };
    std::vector<Mark> mark(n, Mark::none);
    std::vector<Element> post;
    post.reserve(n);
    std::vector<std::pair<Element, std::size_t>> stack;
    for (Element root = 0; root < n; ++root) {
        if (mark[root] != Mark::none) {
            continue;
        }
        stack.push_back({root, 0});
        mark[root] = Mark::active;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < succ[v].size()) {
                Element s = succ[v][next++];
                if (mark[s] == Mark::active) {
                    std::vector<Element> cycle;
                    auto it = std::find_if(stack.begin(), stack.end(),
                                           [s](const auto& fr) { return fr.first == s; });
                    for (; it != stack.end(); ++it) {
                        cycle.push_back(it->first);
                    }
                    throw CycleError(std::move(cycle));
                }
                if (mark[s] == Mark::none) {
                    mark[s] = Mark::active;
                    stack.push_back({s, 0});
                }
            } else {
                mark[v] = Mark::done;
                post.push_back(v);
                stack.pop_back();
            }
        }
    }

    for (Element v : post) {
        auto row = p.up_.row(v);
        for (Element s : succ[v]) {
            auto srow = p.up_.row(s);
            for (std::size_t w = 0; w < row.size(); ++w) {
                row[w] |= srow[w];
            }
            p.up_.set(v, s);
        }
    }
    p.down_ = p.up_.transposed();
    if (!labels.empty()) {
        p = p.with_labels(std::move(labels));
    }
    return p;
}

std::vector<Pair> Poset::relations() const {
    std::vector<Pair> out;
    for (Element i = 0; i < n_; ++i) {
        for_each_bit(up_.row(i), [&](int j) { out.emplace_back(i, j); });
    }
    return out;
}

std::string Poset::label(Element i) const {
    if (static_cast<std::size_t>(i) < labels_.size() && !labels_[i].empty()) {
        return labels_[i];
    }
    return std::to_string(i);
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
        throw std::invalid_argument("label count does not match element count");
    }
    Poset p = *this;
    p.labels_ = std::move(labels);
    return p;
}

CoverGraph cover_edges(const Poset& p) {
    CoverGraph edges;
    const int n = p.size();
    for (Element u = 0; u < n; ++u) {
        auto up = p.upset(u);
        for_each_bit(up, [&](int v) {
            auto down = p.downset(v);
            for (std::size_t w = 0; w < up.size(); ++w) {
                if ((up[w] & down[w]) != 0) {
                    return;
                }
            }
            edges.push_back({u, v});
        });
    }
    return edges;
}

Poset dual(const Poset& p) {
    auto rel = p.relations();
    for (auto& [i, j] : rel) {
        std::swap(i, j);
    }
    return Poset::from_relations(p.size(), rel, p.labels());
}

namespace {

Poset combine(const Poset& p, const Poset& q, bool series) {
    const int np = p.size();
    std::vector<Pair> rel = p.relations();
    for (auto [i, j] : q.relations()) {
        rel.emplace_back(i + np, j + np);
    }
    if (series) {
        for (Element i = 0; i < np; ++i) {
            for (Element j = 0; j < q.size(); ++j) {
                rel.emplace_back(i, j + np);
            }
        }
    }
    std::vector<std::string> labels;
    if (!p.labels().empty() || !q.labels().empty()) {
        for (Element i = 0; i < np; ++i) labels.push_back(p.label(i));
        for (Element j = 0; j < q.size(); ++j) labels.push_back(q.label(j));
    }
    return Poset::from_relations(np + q.size(), rel, std::move(labels));
}

} // namespace

Poset compose_series(const Poset& p, const Poset& q) { return combine(p, q, true); }
Poset compose_parallel(const Poset& p, const Poset& q) { return combine(p, q, false); }

Poset restrict_to(const Poset& p, std::span<const Element> elements) {
    const int m = static_cast<int>(elements.size());
    std::vector<Pair> rel;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (p.less(elements[a], elements[b])) {
                rel.emplace_back(a, b);
            }
        }
    }
    return Poset::from_relations(m, rel);
}

std::vector<std::vector<Element>> ChainPartition::chains() const {
    std::vector<std::vector<Element>> out(k);
    for (Element e = 0; e < static_cast<int>(chain_of.size()); ++e) {
        out[chain_of[e]].push_back(e);
    }
    return out;
}

bool is_chain_partition(const Poset& p, const ChainPartition& c) {
    if (static_cast<int>(c.chain_of.size()) != p.size()) {
        return false;
    }
    for (int id : c.chain_of) {
        if (id < 0 || id >= c.k) {
            return false;
        }
    }
    for (Element i = 0; i < p.size(); ++i) {
        for (Element j = i + 1; j < p.size(); ++j) {
            if (c.chain_of[i] == c.chain_of[j] && !p.comparable(i, j)) {
                return false;
            }
        }
    }
    return true;
}

bool is_antichain(const Poset& p, std::span<const Element> elements) {
    for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = a + 1; b < elements.size(); ++b) {
            if (elements[a] == elements[b] || p.comparable(elements[a], elements[b])) {
                return false;
            }
        }
    }
    return true;
}

WidthResult width(const Poset& p) {
    const int n = p.size();
    // Left copy i is joined to right copy j whenever i < j.
    std::vector<int> match_right(n, -1); // right j -> left i
    std::vector<int> match_left(n, -1);  // left i -> right j
    std::vector<int> seen(n, -1);

    std::vector<std::pair<int, std::size_t>> stack;
    auto augment = [&](int root, int stamp) {
        // Iterative Kuhn search over bit rows.
        std::vector<int> path_right;
        stack.assign(1, {root, 0});
        path_right.clear();
        while (!stack.empty()) {
            auto& [u, pos] = stack.back();
            auto row = p.upset(u);
            int found = -1;
            while (pos < row.size() * 64) {
                std::size_t w = pos >> 6;
                std::uint64_t bits = row[w] >> (pos & 63);
                if (bits == 0) {
                    pos = (w + 1) * 64;
                    continue;
                }
                int v = static_cast<int>(pos) + std::countr_zero(bits);
                pos = static_cast<std::size_t>(v) + 1;
                if (seen[v] != stamp) {
                    seen[v] = stamp;
                    found = v;
                    break;
                }
            }
            if (found < 0) {
                stack.pop_back();
                if (!path_right.empty()) {
                    path_right.pop_back();
                }
                continue;
            }
            if (match_right[found] < 0) {
                path_right.push_back(found);
                for (std::size_t d = 0; d < path_right.size(); ++d) {
                    int left = stack[d].first;
                    match_left[left] = path_right[d];
                    match_right[path_right[d]] = left;
                }
                stack.clear();
                return true;
            }
            path_right.push_back(found);
            stack.push_back({match_right[found], 0});
        }
        return false;
    };

    int matched = 0;
    for (int u = 0; u < n; ++u) {
        if (augment(u, u)) {
            ++matched;
        }
    }

    WidthResult result;
    result.width = n - matched;
    result.chains.k = result.width;
    result.chains.chain_of.assign(n, -1);
    int next_chain = 0;
    for (int start = 0; start < n; ++start) {
        if (match_right[start] >= 0) {
            continue;
        }
        for (int e = start; e >= 0; e = match_left[e]) {
            result.chains.chain_of[e] = next_chain;
        }
        ++next_chain;
    }

    // Koenig: alternate from unmatched left vertices.
    std::vector<char> z_left(n, 0), z_right(n, 0);
    std::vector<int> queue;
    for (int u = 0; u < n; ++u) {
        if (match_left[u] < 0) {
            z_left[u] = 1;
            queue.push_back(u);
        }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for_each_bit(p.upset(u), [&](int v) {
            if (z_right[v]) {
                return;
            }
            z_right[v] = 1;
            int w = match_right[v];
            if (w >= 0 && !z_left[w]) {
                z_left[w] = 1;
                queue.push_back(w);
            }
        });
    }
    for (int e = 0; e < n; ++e) {
        if (z_left[e] && !z_right[e]) {
            result.antichain.push_back(e);
        }
    }
    return result;
}

int height(const Poset& p) {
    std::vector<Element> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Element a, Element b) { return p.downset_size(a) < p.downset_size(b); });
    std::vector<int> longest(p.size(), 1);
    int best = 0;
    for (Element v : order) {
        for_each_bit(p.downset(v), [&](int u) { longest[v] = std::max(longest[v], longest[u] + 1); });
        best = std::max(best, longest[v]);
    }
    return best;
}

bool is_isomorphism(const Poset& p, const Poset& q, std::span<const Element> map) {
    const int n = p.size();
    if (q.size() != n || static_cast<int>(map.size()) != n) {
        return false;
    }
    std::vector<char> hit(n, 0);
    for (Element m : map) {
        if (m < 0 || m >= n || hit[m]) {
            return false;
        }
        hit[m] = 1;
    }
    for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
            if (p.less(i, j) != q.less(map[i], map[j])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

using Signature = std::tuple<int, int, int, int>;

std::vector<Signature> signatures(const Poset& p) {
    std::vector<int> cover_in(p.size(), 0), cover_out(p.size(), 0);
    for (auto e : cover_edges(p)) {
        ++cover_out[e.lower];
        ++cover_in[e.upper];
    }
    std::vector<Signature> sig(p.size());
    for (Element i = 0; i < p.size(); ++i) {
        sig[i] = {p.downset_size(i), p.upset_size(i), cover_in[i], cover_out[i]};
    }
    return sig;
}

} // namespace

std::optional<std::vector<Element>> find_isomorphism(const Poset& p, const Poset& q) {
    const int n = p.size();
    if (q.size() != n) {
        return std::nullopt;
    }
    auto sig_p = signatures(p);
    auto sig_q = signatures(q);
    {
        auto a = sig_p, b = sig_q;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            return std::nullopt;
        }
    }

    // Assign in a linear-extension order of p so relations to earlier
    // elements constrain each step.
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Element a, Element b) { return p.downset_size(a) < p.downset_size(b); });

    std::vector<Element> map(n, -1);
    std::vector<char> used(n, 0);
    std::vector<Element> choice(n, -1);
    int depth = 0;
    while (depth >= 0) {
        if (depth == n) {
            return map;
        }
        Element x = order[depth];
        if (choice[depth] >= 0) {
            used[choice[depth]] = 0;
            map[x] = -1;
        }
        Element next = -1;
        for (Element y = choice[depth] + 1; y < n; ++y) {
            if (used[y] || sig_q[y] != sig_p[x]) {
                continue;
            }
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                Element xp = order[d];
                Element yp = map[xp];
                ok = p.less(xp, x) == q.less(yp, y) && p.less(x, xp) == q.less(y, yp);
            }
            if (ok) {
                next = y;
                break;
            }
        }
        if (next < 0) {
            choice[depth] = -1;
            --depth;
            continue;
        }
        choice[depth] = next;
        used[next] = 1;
        map[x] = next;
        ++depth;
    }
    return std::nullopt;
}

} // namespace qnposet
