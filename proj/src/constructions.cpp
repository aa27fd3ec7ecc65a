#include "qnposet/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace qnposet {

const std::vector<Element>& ConstructionRecord::part(const std::string& name) const {
    auto it = parts.find(name);
    if (it == parts.end()) {
        throw std::out_of_range(family + " has no part named " + name);
    }
    return it->second;
}

Element ConstructionRecord::element(const std::string& name) const {
    const auto& p = part(name);
    if (p.size() != 1) {
        throw std::logic_error("part " + name + " is not a single element");
    }
    return p.front();
}

std::int64_t reinforcement_size(int u) {
    if (u < 1) {
        throw std::invalid_argument("reinforcement poset needs u >= 1");
    }
    return 3 * (std::int64_t{1} << (u - 1)) - 2;
}

std::int64_t lifted_size(int w, std::int64_t base_odd, std::int64_t base_even) {
    if (w < 1) {
        throw std::invalid_argument("lifted poset needs w >= 1");
    }
    if (w == 1) return base_odd;
    if (w == 2) return base_even;
    return 2 * lifted_size(w - 2, base_odd, base_even) + 6 * reinforcement_size(w - 2) + 2;
}

namespace {

std::vector<Element> range(int begin, int count) {
    std::vector<Element> v(count);
    std::iota(v.begin(), v.end(), begin);
    return v;
}

void add_shifted_covers(std::vector<Pair>& rel, const Poset& p, int shift) {
    for (auto e : cover_edges(p)) {
        rel.emplace_back(e.lower + shift, e.upper + shift);
    }
}

} // namespace

ConstructionRecord build_R(int u) {
    if (u < 1) {
        throw std::invalid_argument("build_R needs u >= 1, got " + std::to_string(u));
    }
    ConstructionRecord rec;
    rec.family = "ru";
    rec.parameter = u;
    if (u == 1) {
        rec.poset = Poset(1).with_labels({"r"});
        rec.parts["root"] = {0};
        rec.realizer = Realizer{LinearExtension::identity(1), LinearExtension::identity(1)};
        rec.dual_map = std::vector<Element>{0};
        return rec;
    }

    ConstructionRecord inner = build_R(u - 1);
    const int q = inner.poset.size();
    const int q1 = 0;
    const int a = q;
    const int q2 = q + 1;
    const int b = 2 * q + 1;
    const int n = 2 * q + 2;

    std::vector<Pair> rel;
    add_shifted_covers(rel, inner.poset, q1);
    add_shifted_covers(rel, inner.poset, q2);
    for (int i = 0; i < q; ++i) {
        rel.emplace_back(q1 + i, a);
        rel.emplace_back(a, q2 + i);
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < q; ++i) {
        labels[q1 + i] = "1." + inner.poset.label(i);
        labels[q2 + i] = "2." + inner.poset.label(i);
    }
    labels[a] = "a";
    labels[b] = "b";
    rec.poset = Poset::from_relations(n, rel, std::move(labels));

    std::vector<Element> lx{b}, ly;
    for (Element e : inner.realizer->lx.order()) lx.push_back(q1 + e);
    lx.push_back(a);
    for (Element e : inner.realizer->lx.order()) lx.push_back(q2 + e);
    for (Element e : inner.realizer->ly.order()) ly.push_back(q1 + e);
    ly.push_back(a);
    for (Element e : inner.realizer->ly.order()) ly.push_back(q2 + e);
    ly.push_back(b);
    rec.realizer = Realizer{LinearExtension(std::move(lx)), LinearExtension(std::move(ly))};

    // Q1 and Q2 swap through the inner dual map.
    std::vector<Element> dmap(n);
    for (int i = 0; i < q; ++i) {
        dmap[q1 + i] = q2 + (*inner.dual_map)[i];
        dmap[q2 + i] = q1 + (*inner.dual_map)[i];
    }
    dmap[a] = a;
    dmap[b] = b;
    rec.dual_map = std::move(dmap);

    rec.parts["Q1"] = range(q1, q);
    rec.parts["a"] = {a};
    rec.parts["Q2"] = range(q2, q);
    rec.parts["b"] = {b};
    return rec;
}

ConstructionRecord build_P(int w, std::optional<Poset> base, LiftOptions options) {
    if (w < 1) {
        throw std::invalid_argument("build_P needs w >= 1, got " + std::to_string(w));
    }
    const int seed_width = (w % 2 == 1) ? 1 : 2;
    if (w <= 2) {
        Poset seed = base ? *base : Poset(seed_width);
        if (width(seed).width != seed_width) {
            throw std::invalid_argument("base poset must have width " + std::to_string(seed_width));
        }
        ConstructionRecord rec;
        rec.family = "pw";
        rec.parameter = w;
        rec.parts["base"] = range(0, seed.size());
        rec.dual_map = find_isomorphism(seed, dual(seed));
        if (seed.labels().empty()) {
            std::vector<std::string> labels;
            for (int i = 0; i < seed.size(); ++i) labels.push_back("s" + std::to_string(i));
            seed = seed.with_labels(std::move(labels));
        }
        rec.poset = std::move(seed);
        return rec;
    }

    ConstructionRecord inner = build_P(w - 2, std::move(base), options);
    ConstructionRecord reinf = build_R(w - 2);
    const Poset& pin = inner.poset;
    const int r = reinf.poset.size();
    const int p = pin.size();
    const int h = 3 * r + p;
    const int r0 = 0, x0 = r, y0 = 2 * r, p0 = 3 * r;
    const int a = options.with_a ? h : -1;
    const int span = options.with_a ? 2 * h : 2 * h - 1; // mirror(i) = span - i
    const int b = span + 1;
    const int n = b + 1;
    auto mirror = [&](Element i) { return i == b ? b : span - i; };

    std::vector<Pair> half;
    add_shifted_covers(half, reinf.poset, r0);
    add_shifted_covers(half, pin, p0);
    for (int i = 0; i + 1 < r; ++i) {
        half.emplace_back(x0 + i, x0 + i + 1);
        half.emplace_back(y0 + i, y0 + i + 1);
    }
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < p; ++j) {
            half.emplace_back(r0 + i, p0 + j);
        }
    }
    for (int j = 0; j < p; ++j) {
        if (options.with_a) {
            half.emplace_back(p0 + j, a);
        } else {
            for (int k = 0; k < p; ++k) {
                half.emplace_back(p0 + j, mirror(p0 + k));
            }
        }
    }
    half.emplace_back(b, x0);
    half.emplace_back(b, y0);
    for (int i = 0; i < r; ++i) {
        half.emplace_back(r0 + reinf.realizer->lx.at(i), x0 + i);
        half.emplace_back(r0 + reinf.realizer->ly.at(i), y0 + i);
    }

    std::vector<Pair> rel = half;
    for (auto [s, t] : half) {
        rel.emplace_back(mirror(t), mirror(s));
    }

    std::vector<std::string> labels(n);
    for (int i = 0; i < r; ++i) {
        labels[r0 + i] = "R." + reinf.poset.label(i);
        labels[x0 + i] = "x" + std::to_string(i + 1);
        labels[y0 + i] = "y" + std::to_string(i + 1);
    }
    for (int j = 0; j < p; ++j) {
        labels[p0 + j] = "P." + pin.label(j);
    }
    for (int i = 0; i < h; ++i) {
        labels[mirror(i)] = "~" + labels[i];
    }
    if (options.with_a) {
        labels[a] = "a";
    }
    labels[b] = "b";

    ConstructionRecord rec;
    rec.family = "pw";
    rec.parameter = w;
    rec.poset = Poset::from_relations(n, rel, std::move(labels));
    auto mirrored = [&](int begin, int count) {
        std::vector<Element> v;
        for (int i = 0; i < count; ++i) v.push_back(mirror(begin + i));
        return v;
    };
    rec.parts["R"] = range(r0, r);
    rec.parts["X"] = range(x0, r);
    rec.parts["Y"] = range(y0, r);
    rec.parts["P_inner"] = range(p0, p);
    if (options.with_a) {
        rec.parts["a"] = {a};
    }
    rec.parts["P_inner_dual"] = mirrored(p0, p);
    rec.parts["Y_dual"] = mirrored(y0, r);
    rec.parts["X_dual"] = mirrored(x0, r);
    rec.parts["R_dual"] = mirrored(r0, r);
    rec.parts["b"] = {b};
    std::vector<Element> dmap(n);
    for (Element i = 0; i < n; ++i) dmap[i] = mirror(i);
    rec.dual_map = std::move(dmap);
    return rec;
}

ConstructionRecord build_antichain_es(int u) {
    if (u < 1) {
        throw std::invalid_argument("antichain needs u >= 1");
    }
    ConstructionRecord rec;
    rec.family = "antichain-es";
    rec.parameter = u;
    rec.poset = Poset(u);
    rec.parts["R"] = range(0, u);
    rec.realizer = Realizer{LinearExtension::identity(u), LinearExtension::identity(u).reversed()};
    rec.dual_map = range(0, u);
    return rec;
}

ConstructionRecord build_kww(int w) {
    if (w < 1) {
        throw std::invalid_argument("kww needs w >= 1");
    }
    std::vector<Pair> rel;
    for (int i = 0; i < w; ++i) {
        for (int j = 0; j < w; ++j) {
            rel.emplace_back(i, w + j);
        }
    }
    ConstructionRecord rec;
    rec.family = "kww";
    rec.parameter = w;
    rec.poset = Poset::from_relations(2 * w, rel);
    rec.parts["bottom"] = range(0, w);
    rec.parts["top"] = range(w, w);
    std::vector<Element> dmap(2 * w);
    for (int i = 0; i < w; ++i) {
        dmap[i] = w + i;
        dmap[w + i] = i;
    }
    rec.dual_map = std::move(dmap);
    return rec;
}

ConstructionRecord build_planar_hp(int r) {
    if (r < 1) {
        throw std::invalid_argument("planar-hp needs r >= 1");
    }
    const int x0 = r, y0 = 2 * r;
    std::vector<Pair> rel;
    std::vector<std::string> labels(3 * r);
    for (int i = 0; i < r; ++i) {
        if (i + 1 < r) {
            rel.emplace_back(x0 + i, x0 + i + 1);
            rel.emplace_back(y0 + i, y0 + i + 1);
        }
        rel.emplace_back(i, x0 + i);              // identity order of R
        rel.emplace_back(y0 + i, r - 1 - i);      // reversed order of R
        labels[i] = "m" + std::to_string(i + 1);
        labels[x0 + i] = "x" + std::to_string(i + 1);
        labels[y0 + i] = "y" + std::to_string(i + 1);
    }
    ConstructionRecord rec;
    rec.family = "planar-hp";
    rec.parameter = r;
    rec.poset = Poset::from_relations(3 * r, rel, std::move(labels));
    rec.parts["R"] = range(0, r);
    rec.parts["X"] = range(x0, r);
    rec.parts["Y"] = range(y0, r);
    return rec;
}

ConstructionRecord lift_simple(const Poset& p) {
    const int n = p.size();
    if (n == 0) {
        throw std::invalid_argument("lift_simple needs a nonempty poset");
    }
    const int bottom = 0, c1 = 1, c2 = 1 + n, top = 1 + 2 * n, b = 2 + 2 * n;
    std::vector<Pair> rel;
    add_shifted_covers(rel, p, c1);
    add_shifted_covers(rel, p, c2);
    for (int i = 0; i < n; ++i) {
        rel.emplace_back(bottom, c1 + i);
        rel.emplace_back(c2 + i, top);
        for (int j = 0; j < n; ++j) {
            rel.emplace_back(c1 + i, c2 + j);
        }
    }
    rel.emplace_back(bottom, b);
    rel.emplace_back(b, top);
    ConstructionRecord rec;
    rec.family = "lift-simple";
    rec.parameter = n;
    rec.poset = Poset::from_relations(2 * n + 3, rel);
    rec.parts["bottom"] = {bottom};
    rec.parts["copy1"] = range(c1, n);
    rec.parts["copy2"] = range(c2, n);
    rec.parts["top"] = {top};
    rec.parts["b"] = {b};
    return rec;
}

ConstructionRecord lift_diagonal(const Poset& p) {
    const int n = p.size();
    if (n == 0) {
        throw std::invalid_argument("lift_diagonal needs a nonempty poset");
    }
    const int c = 0, e = 1, c1 = 2, c2 = 2 + n, f = 2 + 2 * n, d = 3 + 2 * n;
    std::vector<Pair> rel;
    add_shifted_covers(rel, p, c1);
    add_shifted_covers(rel, p, c2);
    for (int i = 0; i < n; ++i) {
        rel.emplace_back(c, c1 + i);
        rel.emplace_back(c2 + i, d);
        for (int j = 0; j < n; ++j) {
            rel.emplace_back(c1 + i, c2 + j);
        }
    }
    rel.emplace_back(e, f);
    rel.emplace_back(c, f);
    rel.emplace_back(e, d);
    ConstructionRecord rec;
    rec.family = "lift-diagonal";
    rec.parameter = n;
    rec.poset = Poset::from_relations(2 * n + 4, rel);
    rec.parts["c"] = {c};
    rec.parts["e"] = {e};
    rec.parts["copy1"] = range(c1, n);
    rec.parts["copy2"] = range(c2, n);
    rec.parts["f"] = {f};
    rec.parts["d"] = {d};
    return rec;
}

bool is_consistent(const ConstructionRecord& rec) {
    const int n = rec.poset.size();
    std::vector<int> hits(n, 0);
    for (const auto& [name, elems] : rec.parts) {
        for (Element e : elems) {
            if (e < 0 || e >= n) return false;
            ++hits[e];
        }
    }
    for (int h : hits) {
        if (h != 1) return false;
    }
    if (rec.realizer && !is_realizer(rec.poset, *rec.realizer)) {
        return false;
    }
    if (rec.dual_map) {
        if (!is_isomorphism(rec.poset, dual(rec.poset), *rec.dual_map)) return false;
        for (const char* fixed : {"a", "b"}) {
            auto it = rec.parts.find(fixed);
            if (it == rec.parts.end()) continue;
            for (Element x : it->second) {
                if ((*rec.dual_map)[x] != x) return false;
            }
        }
    }
    return true;
}

ConstructionRecord build_family(const std::string& family, int parameter) {
    if (family == "ru") return build_R(parameter);
    if (family == "pw") return build_P(parameter);
    if (family == "antichain-es") return build_antichain_es(parameter);
    if (family == "kww") return build_kww(parameter);
    if (family == "planar-hp") return build_planar_hp(parameter);
    if (family == "lift-simple" || family == "lift-diagonal") {
        if (parameter < 1) {
            throw std::invalid_argument(family + " needs a parameter >= 1");
        }
        auto inner = build_kww(parameter).poset;
        auto rec = family == "lift-simple" ? lift_simple(inner) : lift_diagonal(inner);
        rec.parameter = parameter;
        return rec;
    }
    throw std::invalid_argument("unknown family: " + family);
}

} // namespace qnposet
