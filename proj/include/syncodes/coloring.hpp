#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "syncodes/channels.hpp"
#include "syncodes/coverfree.hpp"

namespace syncodes {

// ceil(log2 range); a range of 1 needs no bits.
unsigned bits_for_range(std::uint64_t range);

struct Syndrome {
    std::uint64_t value = 0;
    std::uint64_t range = 1;

    unsigned bit_length() const { return bits_for_range(range); }
    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

// 1 + x read in base q, first symbol most significant.
Index identity_color(const QaryString& x);

using OldColoring = std::function<Index(const QaryString&)>;

// New color of x: the family witness for old(x) against the old colors of its neighbors.
template <typename Family>
Syndrome recolor(const GraphView& view, const OldColoring& old_color, const Family& fam, const QaryString& x) {
    std::vector<Index> rivals;
    for (const auto& v : view.neighbors(x)) rivals.push_back(old_color(v));
    return Syndrome{fam.witness(old_color(x), rivals), fam.ground_size()};
}

inline Syndrome sc_recolor(const GraphView& view, const OldColoring& old_color, const DivisorFamily& fam,
                           const QaryString& x) {
    return recolor(view, old_color, fam, x);
}

// Parameters of the two-round pipeline; they depend only on the view, never on a vertex.
class ColoringSpec {
public:
    explicit ColoringSpec(GraphView view);

    const GraphView& view() const { return view_; }
    const PolyFamily& round1() const { return round1_; }
    const PolyFamily& round2() const { return round2_; }
    std::uint64_t range() const { return round2_.ground_size(); }
    // Width of the serialized (alpha, beta) pair: 2 * ceil(log2 Q2).
    unsigned pair_bits() const;

private:
    GraphView view_;
    PolyFamily round1_;
    PolyFamily round2_;
};

// Memoizing evaluator of the two-round coloring. Safe to share between threads.
class TwoRoundColorer {
public:
    explicit TwoRoundColorer(ColoringSpec spec) : spec_(std::move(spec)) {}

    const ColoringSpec& spec() const { return spec_; }
    // Round-1 color as a ground element of the round-1 family.
    Ground round1(const QaryString& x) const;
    Syndrome color(const QaryString& x) const;
    // Equivalent to color(x) == s, but rejects most strings after round 1 alone.
    bool matches(const QaryString& x, const Syndrome& s) const;

private:
    ColoringSpec spec_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, Ground> round1_cache_;
    mutable std::unordered_map<std::string, Ground> final_cache_;
};

inline Syndrome two_round_color(const ColoringSpec& spec, const QaryString& x) {
    return TwoRoundColorer(spec).color(x);
}

// One-round coloring of the associated graph followed by an (r, v, ell) witness.
class LabelingSpec {
public:
    LabelingSpec(HypergraphView hypergraph, std::uint64_t ell, std::uint64_t seed);

    const HypergraphView& hypergraph() const { return hypergraph_; }
    const GraphView& graph() const { return graph_; }
    const PolyFamily& round1() const { return round1_; }
    const RvlFamily& family() const { return family_; }
    std::uint64_t range() const { return family_.ground_size(); }

private:
    HypergraphView hypergraph_;
    GraphView graph_;
    PolyFamily round1_;
    RvlFamily family_;
};

class Labeler {
public:
    explicit Labeler(LabelingSpec spec) : spec_(std::move(spec)) {}

    const LabelingSpec& spec() const { return spec_; }
    Ground round1(const QaryString& x) const;
    // Throws FamilyFailure when the seeded family has no witness for x.
    Syndrome label(const QaryString& x) const;
    // Vertices of the edge whose round-1 color admits the label; empty when more than ell do.
    std::vector<QaryString> decode(const Syndrome& label, const QaryString& edge) const;

private:
    LabelingSpec spec_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, Ground> round1_cache_;
};

}  // namespace syncodes
