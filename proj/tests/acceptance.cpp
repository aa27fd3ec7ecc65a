// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "qnposet/constructions.hpp"
#include "qnposet/layout.hpp"
#include "qnposet/verify.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace qnposet;
using namespace qnposet::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void run(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("%s %s %s:%s (%.2fs)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.str().c_str(), secs);
    std::fflush(stdout);
}

Poset chain(int n) {
    std::vector<Pair> rel;
    for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return Poset::from_relations(n, rel);
}

int ceil_sqrt(int u) {
    int q = 0;
    while (q * q < u) ++q;
    return q;
}

std::int64_t r_closed(int u) { return 3 * (std::int64_t{1} << u) / 2 - 2; }

std::int64_t p_recursive(int w) {
    if (w == 1) return 1;
    if (w == 2) return 2;
    return 2 * p_recursive(w - 2) + 6 * r_closed(w - 2) + 2;
}

// Longest nested chain of edges by quadratic DP over edges ordered by span.
int dp_rainbow(const std::vector<int>& pos, const CoverGraph& edges) {
    std::vector<int> idx(edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto span = [&](int e) { return pos[edges[e].upper] - pos[edges[e].lower]; };
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return span(a) < span(b); });
    std::vector<int> best(edges.size(), 1);
    int overall = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (brute_nests(pos, edges[idx[i]], edges[idx[j]])) best[i] = std::max(best[i], best[j] + 1);
        }
        overall = std::max(overall, best[i]);
    }
    return overall;
}

int brute_qn(const Poset& p) {
    auto edges = cover_edges(p);
    int best = INT32_MAX;
    for (const auto& l : brute_extensions(p)) best = std::min(best, dp_rainbow(positions(l), edges));
    return best;
}

std::vector<Poset> small_corpus() {
    std::vector<Poset> corpus;
    for (int n = 1; n <= 9; ++n) {
        for (std::uint64_t s = 0; s < 4; ++s) corpus.push_back(random_poset(n, n <= 6 ? 0.3 : 0.4, 500 * n + s));
    }
    corpus.push_back(chain(9));
    corpus.push_back(Poset(7));
    corpus.push_back(build_kww(2).poset);
    corpus.push_back(build_kww(3).poset);
    corpus.push_back(build_kww(4).poset);
    corpus.push_back(build_planar_hp(3).poset);
    corpus.push_back(lift_simple(chain(2)).poset);
    corpus.push_back(lift_diagonal(chain(2)).poset);
    return corpus;
}

} // namespace

int main() {
    run("AC1", "R_u min dx+dy over all extensions >= u+1", [](Outcome& o) {
        for (int u = 1; u <= 4; ++u) {
            auto r = check_lemma_goodR(u, CheckMode{});
            o.detail << " u=" << u << ":min=" << r.observed << ",ext=" << r.trials;
            o.require(r.exhaustive, "exhaustive u=" + std::to_string(u));
            o.require(r.observed >= u + 1, "bound u=" + std::to_string(u));
            if (u == 1) o.require(r.observed == 2, "u=1 equals 2");
        }
        // e(R_u) = e(R_{u-1})^2 (2 r(u-1) + 2)
        std::uint64_t e = 1;
        for (int u = 2; u <= 4; ++u) e = e * e * static_cast<std::uint64_t>(2 * r_closed(u - 1) + 2);
        o.require(e == 563'200, "recursion gives 563200");
        o.require(count_linear_extensions(build_R(4).poset).count == e, "stream count e(R_4)");
        // independent dx+dy for u <= 3 by subset enumeration
        for (int u = 2; u <= 3; ++u) {
            auto rec = build_R(u);
            int min_sum = INT32_MAX;
            for_each_linear_extension(rec.poset, [&](std::span<const Element> l) {
                min_sum = std::min(min_sum, brute_opposite_run(l, rec.realizer->lx) +
                                                brute_opposite_run(l, rec.realizer->ly));
            });
            o.require(min_sum == check_lemma_goodR(u, CheckMode{}).observed, "oracle u=" + std::to_string(u));
        }
    });

    run("AC2", "size formulas r(u), u<=10 and p(w), w<=9", [](Outcome& o) {
        for (int u = 1; u <= 10; ++u) {
            o.require(build_R(u).poset.size() == r_closed(u), "r(" + std::to_string(u) + ")");
        }
        for (int w = 1; w <= 9; ++w) {
            o.require(build_P(w).poset.size() == p_recursive(w), "p(" + std::to_string(w) + ")");
        }
        o.detail << " r(10)=" << r_closed(10) << " p(9)=" << p_recursive(9);
    });

    run("AC3", "width certificates R_u (u<=8), P_w (w<=7)", [](Outcome& o) {
        auto certify = [&](const Poset& p, int expected, const std::string& name) {
            auto w = width(p);
            o.require(w.width == expected, name + " width");
            o.require(static_cast<int>(w.antichain.size()) == expected && is_antichain(p, w.antichain),
                      name + " antichain");
            o.require(w.chains.k == expected && is_chain_partition(p, w.chains), name + " chains");
        };
        for (int u = 1; u <= 8; ++u) certify(build_R(u).poset, u, "R_" + std::to_string(u));
        for (int w = 1; w <= 7; ++w) certify(build_P(w).poset, w, "P_" + std::to_string(w));
    });

    run("AC4", "self-duality R_u (u<=6), P_w (w<=6) fixing a and b", [](Outcome& o) {
        auto check = [&](const ConstructionRecord& rec, const std::string& name) {
            o.require(check_self_dual(rec).pass, name + " report");
            o.require(rec.dual_map.has_value(), name + " map present");
            if (!rec.dual_map) return;
            const auto& map = *rec.dual_map;
            o.require(is_isomorphism(rec.poset, dual(rec.poset), map), name + " map");
            for (const char* fixed : {"a", "b"}) {
                if (rec.parts.count(fixed)) {
                    Element e = rec.element(fixed);
                    o.require(map[e] == e, name + " fixes " + fixed);
                }
            }
            if (rec.poset.size() <= 30) {
                o.require(find_isomorphism(rec.poset, dual(rec.poset)).has_value(), name + " search");
            }
        };
        for (int u = 1; u <= 6; ++u) check(build_R(u), "R_" + std::to_string(u));
        for (int w = 1; w <= 6; ++w) check(build_P(w), "P_" + std::to_string(w));
    });

    run("AC5", "antichain guaranteed q = ceil(sqrt(u)), u<=9", [](Outcome& o) {
        for (int u = 1; u <= 9; ++u) {
            auto g = guaranteed_q(build_antichain_es(u), CheckMode{});
            o.require(g.exhaustive, "exhaustive u=" + std::to_string(u));
            o.require(g.q == ceil_sqrt(u), "q u=" + std::to_string(u));
            o.detail << " " << g.q;
        }
    });

    run("AC6", "guaranteed q(R_u) >= ceil((u+1)/2), u<=4", [](Outcome& o) {
        for (int u = 1; u <= 4; ++u) {
            auto g = guaranteed_q(build_R(u), CheckMode{});
            o.require(g.exhaustive, "exhaustive u=" + std::to_string(u));
            o.require(g.q >= (u + 2) / 2, "bound u=" + std::to_string(u));
            o.detail << " u=" << u << ":q=" << g.q;
        }
    });

    run("AC7", "chain-pair queues nesting-free under every extension", [](Outcome& o) {
        std::uint64_t visited = 0;
        for (const auto& p : small_corpus()) {
            auto r = check_hp_universal(p, CheckMode{});
            o.require(r.pass && r.exhaustive && r.observed == 0, "corpus n=" + std::to_string(p.size()));
            // independent sweep over the permutation filter
            auto edges = cover_edges(p);
            auto q = hp_queue_assignment(p, edges, width(p).chains);
            for (const auto& l : brute_extensions(p)) {
                auto pos = positions(l);
                for (std::size_t a = 0; a < edges.size(); ++a) {
                    for (std::size_t b = 0; b < edges.size(); ++b) {
                        if (q.queue_of[a] == q.queue_of[b] && brute_nests(pos, edges[a], edges[b])) {
                            o.require(false, "oracle violation");
                        }
                    }
                }
                ++visited;
            }
        }
        o.detail << " corpus extensions=" << visited;
        for (auto [name, p] : std::vector<std::pair<std::string, Poset>>{
                 {"R_4", build_R(4).poset}, {"P_3", build_P(3).poset}, {"P_4", build_P(4).poset}}) {
            auto r = check_hp_universal(p, CheckMode::sampled(1000, 2024));
            o.require(r.pass && r.observed == 0 && r.trials == 1000, name + " sampled");
            o.detail << " " << name << ":" << r.trials;
        }
    });

    run("AC8", "Mirsky queues = max rainbow = brute partition, 200 pairs", [](Outcome& o) {
        int checked = 0;
        for (std::uint64_t s = 0; checked < 200 && s < 2000; ++s) {
            auto p = random_poset(4 + static_cast<int>(s % 6), 0.35, 880000 + s);
            auto edges = cover_edges(p);
            if (edges.size() > 10) continue;
            auto l = sample_linear_extension(p, s);
            auto q = min_queue_partition(l, edges);
            auto r = max_rainbow(l, edges);
            o.require(q.k == r.size(), "k vs rainbow seed " + std::to_string(s));
            o.require(q.k == brute_min_queues(l.order(), edges), "k vs brute seed " + std::to_string(s));
            o.require(r.size() == brute_max_rainbow(l.order(), edges), "rainbow vs brute seed " + std::to_string(s));
            o.require(nesting_violations(l, edges, q) == 0, "valid partition seed " + std::to_string(s));
            ++checked;
        }
        o.require(checked == 200, "200 pairs");
        o.detail << " pairs=" << checked;
    });

    run("AC9", "exact solver = brute force; qn(K_ww)=w; width-2 qn<=2", [](Outcome& o) {
        int corpus = 0;
        for (const auto& p : small_corpus()) {
            auto r = exact_queue_number(p);
            o.require(r.exact, "exact n=" + std::to_string(p.size()));
            o.require(r.qn == brute_qn(p), "oracle n=" + std::to_string(p.size()));
            ++corpus;
        }
        o.detail << " corpus=" << corpus;
        for (int w = 2; w <= 3; ++w) {
            auto r = exact_queue_number(build_kww(w).poset);
            o.require(r.exact && r.qn == w, "K_" + std::to_string(w));
            o.detail << " qn(K" << w << w << ")=" << r.qn;
        }
        int worst = 0;
        for (std::uint64_t s = 0; s < 50; ++s) {
            auto p = random_width2_poset(10, 31000 + s);
            o.require(width(p).width <= 2, "generator width");
            auto r = exact_queue_number(p);
            o.require(r.exact && r.qn <= 2, "width-2 seed " + std::to_string(s));
            worst = std::max(worst, r.qn);
        }
        o.detail << " width2 max qn=" << worst;
    });

    run("AC10", "qn(P_3) >= 1 and qn(lift_simple(K_22)) >= 3", [](Outcome& o) {
        auto p3 = exact_queue_number(build_P(3).poset);
        o.require(p3.exact && p3.qn >= 1, "P_3");
        auto lifted = lift_simple(build_kww(2).poset).poset;
        auto l = exact_queue_number(lifted);
        o.require(l.exact && l.qn >= 3, "lift");
        o.detail << " qn(P_3)=" << p3.qn << " qn(lift K22)=" << l.qn << " (n=" << lifted.size() << ")";
    });

    run("AC11", "closed-form sum >= w^2/8 for 4<=w<=100", [](Outcome& o) {
        std::vector<int> short_w;
        for (int w = 4; w <= 100; ++w) {
            std::int64_t sum = 0;
            for (int u = w - 2; u >= 1; u -= 2) sum += (u + 2) / 2;
            o.require(theorem_sum(w) == sum, "closed form w=" + std::to_string(w));
            bool holds = 8 * sum >= static_cast<std::int64_t>(w) * w;
            o.require(check_theorem_sums(w).pass == holds, "report agrees w=" + std::to_string(w));
            if (!holds) short_w.push_back(w);
        }
        if (!short_w.empty()) {
            o.pass = false;
            o.detail << " bound misses " << short_w.size() << " widths, first w=" << short_w.front()
                     << " sum=" << theorem_sum(short_w.front()) << " < " << short_w.front() * short_w.front()
                     << "/8";
        }
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
