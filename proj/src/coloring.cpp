#include "syncodes/coloring.hpp"

#include <algorithm>
#include <bit>

#include "syncodes/errors.hpp"

namespace syncodes {
namespace {

std::uint64_t vertex_count(std::size_t n, unsigned q) {
    u128 count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        count *= q;
        if (count > (std::uint64_t{1} << 62)) throw SizeError("q^n exceeds 2^62");
    }
    return static_cast<std::uint64_t>(count);
}

PolyFamily first_round(const GraphView& view, std::uint64_t cover) {
    const std::uint64_t vertices = std::max<std::uint64_t>(2, vertex_count(view.n(), view.model().q));
    return poly_family_params(vertices, std::max<std::uint64_t>(1, cover));
}

}  // namespace

unsigned bits_for_range(std::uint64_t range) {
    return range <= 1 ? 0 : static_cast<unsigned>(std::bit_width(range - 1));
}

Index identity_color(const QaryString& x) {
    u128 value = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        value = value * x.q() + x[i];
        if (value > (std::uint64_t{1} << 62)) throw SizeError("identity color exceeds 2^62");
    }
    return static_cast<Index>(value) + 1;
}

ColoringSpec::ColoringSpec(GraphView view)
    : view_(std::move(view)),
      round1_(first_round(view_, view_.degree_bound())),
      round2_(poly_family_params(round1_.ground_size(), std::max<std::uint64_t>(1, view_.degree_bound()))) {}

unsigned ColoringSpec::pair_bits() const { return 2 * bits_for_range(round2_.Q()); }

Ground TwoRoundColorer::round1(const QaryString& x) const {
    {
        std::lock_guard lock(mu_);
        if (auto it = round1_cache_.find(x.raw()); it != round1_cache_.end()) return it->second;
    }
    const Syndrome s = recolor(spec_.view(), identity_color, spec_.round1(), x);
    std::lock_guard lock(mu_);
    round1_cache_.emplace(x.raw(), s.value);
    return s.value;
}

Syndrome TwoRoundColorer::color(const QaryString& x) const {
    {
        std::lock_guard lock(mu_);
        if (auto it = final_cache_.find(x.raw()); it != final_cache_.end()) return Syndrome{it->second, spec_.range()};
    }
    const OldColoring previous = [this](const QaryString& v) { return round1(v) + 1; };
    const Syndrome s = recolor(spec_.view(), previous, spec_.round2(), x);
    std::lock_guard lock(mu_);
    final_cache_.emplace(x.raw(), s.value);
    return s;
}

bool TwoRoundColorer::matches(const QaryString& x, const Syndrome& s) const {
    if (s.range != spec_.range()) return false;
    const auto& fam = spec_.round2();
    // The final color is (alpha, g_{c1(x)}(alpha)); a wrong round-1 color cannot produce beta.
    if (fam.eval(round1(x) + 1, s.value / fam.Q()) != s.value % fam.Q()) return false;
    return color(x) == s;
}

LabelingSpec::LabelingSpec(HypergraphView hypergraph, std::uint64_t ell, std::uint64_t seed)
    : hypergraph_(std::move(hypergraph)),
      graph_(hypergraph_.associated_graph()),
      round1_(first_round(graph_, graph_.degree_bound())),
      family_(round1_.ground_size(), hypergraph_.r_bound(), hypergraph_.v_bound(), ell, seed) {}

Ground Labeler::round1(const QaryString& x) const {
    {
        std::lock_guard lock(mu_);
        if (auto it = round1_cache_.find(x.raw()); it != round1_cache_.end()) return it->second;
    }
    const Syndrome s = recolor(spec_.graph(), identity_color, spec_.round1(), x);
    std::lock_guard lock(mu_);
    round1_cache_.emplace(x.raw(), s.value);
    return s.value;
}

Syndrome Labeler::label(const QaryString& x) const {
    std::vector<std::vector<Index>> groups;
    for (const auto& edge : spec_.hypergraph().edges_containing(x)) {
        std::vector<Index> group;
        for (const auto& v : spec_.hypergraph().edge_vertices(edge)) group.push_back(round1(v) + 1);
        groups.push_back(std::move(group));
    }
    const Ground e = spec_.family().witness(round1(x) + 1, groups);
    return Syndrome{e - 1, spec_.range()};
}

std::vector<QaryString> Labeler::decode(const Syndrome& label, const QaryString& edge) const {
    if (label.range != spec_.range() || label.value >= label.range) throw InvalidInput("label does not belong to this labeling");
    std::vector<QaryString> admitted;
    for (const auto& v : spec_.hypergraph().edge_vertices(edge)) {
        if (spec_.family().contains(round1(v) + 1, label.value + 1)) admitted.push_back(v);
    }
    if (admitted.size() > spec_.family().ell()) return {};
    return admitted;
}

}  // namespace syncodes
