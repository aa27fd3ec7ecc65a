#pragma once

#include "qnposet/linear_extension.hpp"
#include "qnposet/poset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qnposet {

/// A generated poset together with the location of its named pieces.
///
/// `parts` partitions the ground set. `dual_map`, when present, is an
/// isomorphism from the poset onto its dual fixing the parts "a" and "b".
struct ConstructionRecord {
    std::string family;
    int parameter = 0;
    Poset poset;
    std::map<std::string, std::vector<Element>> parts;
    std::optional<Realizer> realizer;
    std::optional<std::vector<Element>> dual_map;

    const std::vector<Element>& part(const std::string& name) const;
    /// The single element of a one-element part.
    Element element(const std::string& name) const;
};

/// Element count of the reinforcement poset: 3 * 2^(u-1) - 2.
std::int64_t reinforcement_size(int u);
/// Element count of the lifted poset for bases of sizes p(1) and p(2).
std::int64_t lifted_size(int w, std::int64_t base_odd = 1, std::int64_t base_even = 2);

/// Reinforcement poset of width u with its realizer (lx, ly).
///
/// u = 1 is a single element. For u >= 2 the layout is
///   [Q1 (r(u-1))] [a] [Q2 (r(u-1))] [b]
/// with Q1 < a < Q2 and b incomparable to everything, and
///   lx = b, lx(Q1), a, lx(Q2)      ly = ly(Q1), a, ly(Q2), b.
/// Throws std::invalid_argument for u < 1.
ConstructionRecord build_R(int u);

struct LiftOptions {
    /// Include the middle element a; without it P_inner sits directly below
    /// its dual copy.
    bool with_a = true;
};

/// Lifted poset of width w.
///
/// For w >= 3, with r = r(w-2) and p = |P_{w-2}|, elements are laid out as
///   R (r), X (r), Y (r), P_inner (p), a, P_inner_dual (p), Y_dual (r),
///   X_dual (r), R_dual (r), b
/// where the second half mirrors the first: the dual partner of index i < H
/// is 2H - i (H = 3r + p), and a and b are fixed. Generating relations:
///   R < P_inner < a < P_inner_dual < R_dual,
///   x_1 < ... < x_r, y_1 < ... < y_r, and b < x_1, b < y_1,
///   lx(R)[i] < x_i and ly(R)[i] < y_i, plus the mirror image of all of it.
/// `base` seeds the recursion at width 1 or 2 (defaults: one element, and a
/// 2-antichain). Throws std::invalid_argument if the base width does not
/// match the parity of w.
ConstructionRecord build_P(int w, std::optional<Poset> base = std::nullopt, LiftOptions options = {});

/// u-antichain with realizer (identity, reverse).
ConstructionRecord build_antichain_es(int u);

/// Height-2 poset whose cover graph is K_{w,w}: bottoms 0..w-1, tops w..2w-1.
ConstructionRecord build_kww(int w);

/// Planar poset on 3r elements: an r-antichain R (indices 0..r-1), a chain
/// X = x_1 < ... < x_r (r..2r-1) with x_i above the i-th element of the
/// identity order of R, and a chain Y = y_1 < ... < y_r (2r..3r-1) with y_i
/// below the i-th element of the reversed order of R.
ConstructionRecord build_planar_hp(int r);

/// Layout: bottom, copy1 (n), copy2 (n), top, b. copy1 < copy2, bottom below
/// both copies and b, top above both copies and b, b incomparable to the copies.
ConstructionRecord lift_simple(const Poset& p);

/// Layout: c, e, copy1 (n), copy2 (n), f, d. c < copy1 < copy2 < d,
/// e < f, and the two crossing diagonals c < f and e < d.
ConstructionRecord lift_diagonal(const Poset& p);

/// Every part list and dual map is consistent (parts partition the ground
/// set; realizer and dual map are valid when present).
bool is_consistent(const ConstructionRecord& rec);

/// Dispatch by CLI family name (ru, pw, antichain-es, kww, planar-hp,
/// lift-simple, lift-diagonal). The lift families lift a chain of `parameter`
/// elements. Throws std::invalid_argument on an unknown family.
ConstructionRecord build_family(const std::string& family, int parameter);

} // namespace qnposet
