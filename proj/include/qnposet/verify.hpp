#pragma once

#include "qnposet/constructions.hpp"
#include "qnposet/layout.hpp"
#include "qnposet/linear_extension.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qnposet {

/// How a check visits linear extensions. In exhaustive mode the stream is
/// walked completely unless it exceeds `exhaustive_limit`, in which case the
/// check falls back to `trials` sampled extensions (or fails when strict).
struct CheckMode {
    bool exhaustive = true;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t exhaustive_limit = 1'000'000;
    bool strict = false;

    static CheckMode sampled(std::uint64_t trials, std::uint64_t seed) {
        return {false, trials, seed};
    }
};

struct VerificationReport {
    std::string claim;
    std::string parameters;
    bool exhaustive = true;      // observed value is exact over all extensions
    std::uint64_t trials = 0;    // extensions visited
    std::uint64_t seed = 0;
    std::int64_t observed = 0;
    std::int64_t required_num = 0; // bound is required_num / required_den
    std::int64_t required_den = 1;
    bool pass = false;
    bool skipped = false;
    std::vector<Element> witness;  // extremal extension, when there is one
    std::vector<std::string> notes;
};

struct OppositeRuns {
    int dx = 0;
    int dy = 0;
};

/// dx (dy): longest sequence increasing in l and decreasing in r.lx (r.ly).
/// Throws std::invalid_argument if the three orders differ in size.
OppositeRuns dx_dy(const LinearExtension& l, const Realizer& r);
OppositeRuns dx_dy(std::span<const Element> l, const Realizer& r);

/// Minimum over visited extensions of R_u of dx + dy; requires >= u + 1.
VerificationReport check_lemma_goodR(int u, const CheckMode& mode);

struct GuaranteedQ {
    int q = 0;
    LinearExtension worst;
    bool exhaustive = true;
    std::uint64_t visited = 0;
};

/// Minimum over visited extensions of max(dx, dy). Throws if the record has
/// no realizer.
GuaranteedQ guaranteed_q(const ConstructionRecord& rec, const CheckMode& mode);

/// Same check as a report against a required value.
VerificationReport check_guaranteed_q(const ConstructionRecord& rec, int required, const CheckMode& mode);

/// The recursion step qn(P_w) >= qn(P_{w-2}) + q_{w-2}.
///
/// w = 3 is solved exactly. For w >= 5, each sampled extension of P_w (after
/// reflecting it through the dual map when b precedes a) must carry a rainbow
/// at least the inner rainbow plus max(dx, dy) of the R block, and
/// max(dx, dy) must reach ceil((w-1)/2).
VerificationReport check_recursion_bound(int w, const CheckMode& mode);

/// Closed-form value of sum over u < w, u = w (mod 2), u >= 1 of ceil((u+1)/2).
std::int64_t theorem_sum(int w);
/// Same sum, added term by term.
std::int64_t theorem_sum_direct(int w);

/// Pure arithmetic: theorem_sum(w) >= w^2 / 8, with the closed form checked
/// against the termwise sum.
VerificationReport check_theorem_sums(int w);

/// Chain-pair queues from a minimum chain partition are nesting-free in
/// every visited extension of p.
VerificationReport check_hp_universal(const Poset& p, const CheckMode& mode);

/// The record's dual map is an isomorphism onto the dual fixing a and b.
VerificationReport check_self_dual(const ConstructionRecord& rec);

} // namespace qnposet
