#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace syncodes {

// A string over {0..q-1}; symbols are stored as raw bytes, so q <= 256.
class QaryString {
public:
    QaryString() = default;
    QaryString(std::string symbols, unsigned q);

    // Digits when q <= 10, comma-separated decimal symbols otherwise.
    static QaryString parse(std::string_view text, unsigned q);
    std::string to_text() const;

    unsigned q() const { return q_; }
    std::size_t size() const { return sym_.size(); }
    bool empty() const { return sym_.empty(); }
    unsigned operator[](std::size_t i) const { return static_cast<unsigned char>(sym_[i]); }
    const std::string& raw() const { return sym_; }

    QaryString substr(std::size_t pos, std::size_t len = std::string::npos) const;

    friend bool operator==(const QaryString&, const QaryString&) = default;
    friend std::strong_ordering operator<=>(const QaryString& a, const QaryString& b);
    friend QaryString make_string_unchecked(std::string symbols, unsigned q);

private:
    std::string sym_;
    unsigned q_ = 2;
};

struct QaryStringHash {
    std::size_t operator()(const QaryString& s) const noexcept { return std::hash<std::string>{}(s.raw()); }
};

// Unchecked constructor for hot loops whose symbols are already valid.
QaryString make_string_unchecked(std::string symbols, unsigned q);

enum class Repertoire { InsDelSub, InsDel };

enum class ChannelKind {
    Edits,           // at most k edits from the repertoire
    Deletions,       // exactly k deletions
    BurstDeletion,   // one run of 0..l consecutive deletions
    SubstringEdits,  // k replacements of a substring of length <= l by a string of length <= l
};

struct ChannelModel {
    ChannelKind kind = ChannelKind::Edits;
    unsigned k = 1;
    unsigned l = 0;
    unsigned q = 2;
    Repertoire repertoire = Repertoire::InsDelSub;

    static ChannelModel edits(unsigned k, unsigned q, Repertoire rep = Repertoire::InsDelSub);
    static ChannelModel deletions(unsigned k, unsigned q);
    static ChannelModel burst_deletion(unsigned l, unsigned q = 2);
    static ChannelModel substring_edits(unsigned k, unsigned l, unsigned q = 2);

    friend bool operator==(const ChannelModel&, const ChannelModel&) = default;
};

std::string describe(const ChannelModel& model);

// One scripted edit; positions are 1-indexed into the current string.
struct EditOp {
    enum class Kind { Delete, Insert, Substitute } kind;
    std::size_t pos;
    unsigned symbol = 0;
};

// Script syntax: "d5;i3:1;s7:0".
std::vector<EditOp> parse_edit_script(std::string_view script);
QaryString apply_edits(const QaryString& x, const std::vector<EditOp>& ops);

std::size_t edit_distance(const QaryString& x, const QaryString& y, Repertoire rep = Repertoire::InsDelSub);
// Banded check, cheaper than edit_distance when t is small.
bool within_distance(const QaryString& x, const QaryString& y, std::size_t t, Repertoire rep = Repertoire::InsDelSub);

// All strings of any length within distance t of x, sorted.
std::vector<QaryString> ball(const QaryString& x, unsigned t, Repertoire rep = Repertoire::InsDelSub);
// Members of ball(x, t) having the given length, sorted.
std::vector<QaryString> ball_of_length(const QaryString& x, unsigned t, std::size_t length,
                                       Repertoire rep = Repertoire::InsDelSub);

std::vector<QaryString> channel_outputs(const ChannelModel& model, const QaryString& x);
std::vector<QaryString> channel_preimage(const ChannelModel& model, const QaryString& y, std::size_t n);

// ((n+t+1)(q+1)+1)^t; throws SizeError past 2^63.
std::uint64_t ball_bound(std::uint64_t n, std::uint64_t t, std::uint64_t q);

// Uniform degree bound of the unrestricted confusion graph.
std::uint64_t confusion_degree_bound(const ChannelModel& model, std::size_t n);

class GraphView {
public:
    using Enumerator = std::function<std::vector<QaryString>(const QaryString&)>;
    using ClassKey = std::function<std::uint64_t(const QaryString&)>;

    // Adjacency: distinct strings sharing a channel output.
    static GraphView confusion(std::size_t n, ChannelModel model);

    // Keep only neighbors v with key(v) == key(x); the bound replaces the default.
    GraphView restricted(ClassKey key, std::uint64_t degree_bound) const;
    // Substitute a specialized enumerator that must list exactly the same neighbors.
    GraphView with_enumerator(Enumerator enumerate, std::uint64_t degree_bound) const;
    GraphView with_degree_bound(std::uint64_t degree_bound) const;

    std::size_t n() const { return n_; }
    const ChannelModel& model() const { return model_; }
    std::uint64_t degree_bound() const { return degree_bound_; }
    bool is_restricted() const { return static_cast<bool>(key_); }

    // Sorted lexicographically, without x itself.
    std::vector<QaryString> neighbors(const QaryString& x) const;

private:
    GraphView(std::size_t n, ChannelModel model, std::uint64_t bound) : n_(n), model_(model), degree_bound_(bound) {}

    std::size_t n_;
    ChannelModel model_;
    std::uint64_t degree_bound_;
    ClassKey key_;
    Enumerator enumerate_;
};

inline std::vector<QaryString> graph_neighbors(const GraphView& view, const QaryString& x) { return view.neighbors(x); }
inline std::uint64_t degree_bound(const GraphView& view) { return view.degree_bound(); }

// Edges are identified by the channel output that defines them.
class HypergraphView {
public:
    HypergraphView(std::size_t n, ChannelModel model);

    std::size_t n() const { return n_; }
    const ChannelModel& model() const { return model_; }
    std::uint64_t r_bound() const { return r_bound_; }
    std::uint64_t v_bound() const { return v_bound_; }

    std::vector<QaryString> edges_containing(const QaryString& x) const;
    // Throws InvalidInput for an output no length-n input produces.
    std::vector<QaryString> edge_vertices(const QaryString& edge) const;
    // The graph whose edges join vertices sharing a hyperedge.
    GraphView associated_graph() const;

private:
    std::size_t n_;
    ChannelModel model_;
    std::uint64_t r_bound_;
    std::uint64_t v_bound_;
};

inline std::vector<QaryString> hyperedges_containing(const HypergraphView& h, const QaryString& x) {
    return h.edges_containing(x);
}
inline std::vector<QaryString> edge_vertices(const HypergraphView& h, const QaryString& edge) {
    return h.edge_vertices(edge);
}

// Every string of length n over {0..q-1} in lexicographic order.
std::vector<QaryString> all_strings(std::size_t n, unsigned q);

}  // namespace syncodes
