#include "syncodes/channels.hpp"
#include "syncodes/field_arith.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <unordered_set>

#include "syncodes/errors.hpp"

namespace syncodes {
namespace {

using RawSet = std::unordered_set<std::string>;

constexpr std::uint64_t kBoundLimit = std::uint64_t{1} << 63;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    const u128 p = static_cast<u128>(a) * b;
    if (p > kBoundLimit) throw SizeError("degree bound exceeds 2^63");
    return static_cast<std::uint64_t>(p);
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

std::size_t distance_gap(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

// Feeds every single-edit neighbor of s to emit.
template <typename Emit>
void single_edits(const std::string& s, unsigned q, Repertoire rep, Emit&& emit) {
    std::string work;
    for (std::size_t i = 0; i < s.size(); ++i) {
        work = s;
        work.erase(i, 1);
        emit(work);
    }
    for (std::size_t i = 0; i <= s.size(); ++i) {
        for (unsigned c = 0; c < q; ++c) {
            work = s;
            work.insert(work.begin() + static_cast<std::ptrdiff_t>(i), static_cast<char>(c));
            emit(work);
        }
    }
    if (rep == Repertoire::InsDelSub) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (unsigned c = 0; c < q; ++c) {
                if (static_cast<unsigned char>(s[i]) == c) continue;
                work = s;
                work[i] = static_cast<char>(c);
                emit(work);
            }
        }
    }
}

// Breadth-first ball; with a target length, strings that cannot reach it are pruned.
RawSet raw_ball(const std::string& x, unsigned t, unsigned q, Repertoire rep, std::size_t target = std::string::npos) {
    RawSet seen{x};
    std::vector<std::string> frontier{x};
    for (unsigned step = 1; step <= t; ++step) {
        const std::size_t remaining = t - step;
        std::vector<std::string> next;
        for (const auto& s : frontier) {
            single_edits(s, q, rep, [&](const std::string& c) {
                if (target != std::string::npos && distance_gap(c.size(), target) > remaining) return;
                if (seen.insert(c).second) next.push_back(c);
            });
        }
        frontier = std::move(next);
    }
    return seen;
}

std::vector<QaryString> to_sorted(const RawSet& raw, unsigned q, std::size_t length = std::string::npos) {
    std::vector<QaryString> out;
    out.reserve(raw.size());
    for (const auto& s : raw) {
        if (length == std::string::npos || s.size() == length) out.push_back(make_string_unchecked(s, q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// One round of "replace a substring of length <= l by a word of length <= l".
template <typename Emit>
void substring_replacements(const std::string& s, unsigned l, unsigned q, Emit&& emit) {
    std::vector<std::string> words{std::string{}};
    for (unsigned len = 1; len <= l; ++len) {
        const std::size_t start = words.size();
        for (std::size_t w = 0; w < start; ++w) {
            if (words[w].size() != len - 1) continue;
            for (unsigned c = 0; c < q; ++c) words.push_back(words[w] + static_cast<char>(c));
        }
    }
    for (std::size_t i = 0; i <= s.size(); ++i) {
        for (std::size_t d = 0; d <= l && i + d <= s.size(); ++d) {
            for (const auto& w : words) {
                std::string out;
                out.reserve(s.size() - d + w.size());
                out.append(s, 0, i).append(w).append(s, i + d, std::string::npos);
                emit(out);
            }
        }
    }
}

RawSet iterate_rounds(const std::string& x, unsigned rounds, auto&& one_round) {
    RawSet seen{x};
    std::vector<std::string> frontier{x};
    for (unsigned r = 0; r < rounds; ++r) {
        std::vector<std::string> next;
        for (const auto& s : frontier) {
            one_round(s, [&](const std::string& c) {
                if (seen.insert(c).second) next.push_back(c);
            });
        }
        frontier = std::move(next);
    }
    return seen;
}

void require_symbols(const std::string& s, unsigned q) {
    for (char c : s) {
        if (static_cast<unsigned char>(c) >= q) throw InvalidInput("symbol out of range for alphabet size " + std::to_string(q));
    }
}

}  // namespace

QaryString::QaryString(std::string symbols, unsigned q) : sym_(std::move(symbols)), q_(q) {
    if (q < 2 || q > 256) throw InvalidInput("alphabet size must be in [2, 256]");
    require_symbols(sym_, q);
}

QaryString make_string_unchecked(std::string symbols, unsigned q) {
    QaryString s;
    s.sym_ = std::move(symbols);
    s.q_ = q;
    return s;
}

QaryString QaryString::parse(std::string_view text, unsigned q) {
    std::string sym;
    if (q <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9') throw InvalidInput("expected a digit string, got '" + std::string(text) + "'");
            sym.push_back(static_cast<char>(c - '0'));
        }
    } else if (!text.empty()) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t comma = std::min(text.find(',', start), text.size());
            unsigned value = 0;
            const auto* first = text.data() + start;
            const auto* last = text.data() + comma;
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc{} || ptr != last) throw InvalidInput("bad symbol list '" + std::string(text) + "'");
            sym.push_back(static_cast<char>(value));
            start = comma + 1;
        }
    }
    return QaryString(std::move(sym), q);
}

std::string QaryString::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < sym_.size(); ++i) {
        if (q_ <= 10) {
            out.push_back(static_cast<char>('0' + (*this)[i]));
        } else {
            if (i > 0) out.push_back(',');
            out += std::to_string((*this)[i]);
        }
    }
    return out;
}

QaryString QaryString::substr(std::size_t pos, std::size_t len) const {
    return make_string_unchecked(sym_.substr(pos, len), q_);
}

std::strong_ordering operator<=>(const QaryString& a, const QaryString& b) {
    const int c = a.sym_.compare(b.sym_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.q_ <=> b.q_;
}

ChannelModel ChannelModel::edits(unsigned k, unsigned q, Repertoire rep) {
    return ChannelModel{ChannelKind::Edits, k, 0, q, rep};
}

ChannelModel ChannelModel::deletions(unsigned k, unsigned q) {
    if (k < 1) throw InvalidInput("deletion channel needs k >= 1");
    return ChannelModel{ChannelKind::Deletions, k, 0, q, Repertoire::InsDel};
}

ChannelModel ChannelModel::burst_deletion(unsigned l, unsigned q) {
    if (l < 1) throw InvalidInput("burst length must be >= 1");
    return ChannelModel{ChannelKind::BurstDeletion, 1, l, q, Repertoire::InsDel};
}

ChannelModel ChannelModel::substring_edits(unsigned k, unsigned l, unsigned q) {
    if (k < 1 || l < 1) throw InvalidInput("substring edits need k >= 1 and l >= 1");
    return ChannelModel{ChannelKind::SubstringEdits, k, l, q, Repertoire::InsDelSub};
}

std::string describe(const ChannelModel& m) {
    switch (m.kind) {
        case ChannelKind::Edits:
            return "edits(k=" + std::to_string(m.k) + (m.repertoire == Repertoire::InsDel ? ",insdel)" : ",insdelsub)");
        case ChannelKind::Deletions: return "deletions(k=" + std::to_string(m.k) + ")";
        case ChannelKind::BurstDeletion: return "burst(l=" + std::to_string(m.l) + ")";
        case ChannelKind::SubstringEdits: return "substring(k=" + std::to_string(m.k) + ",l=" + std::to_string(m.l) + ")";
    }
    return "unknown";
}

std::vector<EditOp> parse_edit_script(std::string_view script) {
    std::vector<EditOp> ops;
    std::size_t start = 0;
    while (start < script.size()) {
        const std::size_t end = std::min(script.find(';', start), script.size());
        const std::string_view tok = script.substr(start, end - start);
        start = end + 1;
        if (tok.empty()) continue;
        EditOp op{};
        switch (tok[0]) {
            case 'd': op.kind = EditOp::Kind::Delete; break;
            case 'i': op.kind = EditOp::Kind::Insert; break;
            case 's': op.kind = EditOp::Kind::Substitute; break;
            default: throw InvalidInput("unknown edit '" + std::string(tok) + "'");
        }
        const std::size_t colon = tok.find(':');
        const std::string_view pos_text = tok.substr(1, colon == std::string_view::npos ? std::string_view::npos : colon - 1);
        auto [p, ec] = std::from_chars(pos_text.data(), pos_text.data() + pos_text.size(), op.pos);
        if (ec != std::errc{} || p != pos_text.data() + pos_text.size() || op.pos == 0) {
            throw InvalidInput("bad position in edit '" + std::string(tok) + "'");
        }
        if (op.kind != EditOp::Kind::Delete) {
            if (colon == std::string_view::npos) throw InvalidInput("edit '" + std::string(tok) + "' needs ':symbol'");
            const std::string_view sym = tok.substr(colon + 1);
            auto [p2, ec2] = std::from_chars(sym.data(), sym.data() + sym.size(), op.symbol);
            if (ec2 != std::errc{} || p2 != sym.data() + sym.size()) throw InvalidInput("bad symbol in edit '" + std::string(tok) + "'");
        } else if (colon != std::string_view::npos) {
            throw InvalidInput("deletion '" + std::string(tok) + "' takes no symbol");
        }
        ops.push_back(op);
    }
    return ops;
}

QaryString apply_edits(const QaryString& x, const std::vector<EditOp>& ops) {
    std::string s = x.raw();
    for (const auto& op : ops) {
        if (op.kind != EditOp::Kind::Delete && op.symbol >= x.q()) throw InvalidInput("edit symbol out of range");
        switch (op.kind) {
            case EditOp::Kind::Delete:
                if (op.pos > s.size()) throw InvalidInput("deletion position past end");
                s.erase(op.pos - 1, 1);
                break;
            case EditOp::Kind::Insert:
                if (op.pos > s.size() + 1) throw InvalidInput("insertion position past end");
                s.insert(s.begin() + static_cast<std::ptrdiff_t>(op.pos - 1), static_cast<char>(op.symbol));
                break;
            case EditOp::Kind::Substitute:
                if (op.pos > s.size()) throw InvalidInput("substitution position past end");
                s[op.pos - 1] = static_cast<char>(op.symbol);
                break;
        }
    }
    return make_string_unchecked(std::move(s), x.q());
}

std::size_t edit_distance(const QaryString& x, const QaryString& y, Repertoire rep) {
    const std::size_t n = x.size(), m = y.size();
    const std::size_t sub_cost = rep == Repertoire::InsDelSub ? 1 : 2;
    std::vector<std::size_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t diag = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : sub_cost);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, diag});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

bool within_distance(const QaryString& x, const QaryString& y, std::size_t t, Repertoire rep) {
    const std::size_t n = x.size(), m = y.size();
    if (distance_gap(n, m) > t) return false;
    const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
    const std::size_t sub_cost = rep == Repertoire::InsDelSub ? 1 : 2;
    std::vector<std::size_t> prev(m + 1, inf), cur(m + 1, inf);
    for (std::size_t j = 0; j <= std::min(m, t); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t lo = i > t ? i - t : 0;
        const std::size_t hi = std::min(m, i + t);
        std::fill(cur.begin(), cur.end(), inf);
        if (lo == 0) cur[0] = i;
        std::size_t row_min = lo == 0 ? cur[0] : inf;
        for (std::size_t j = std::max<std::size_t>(lo, 1); j <= hi; ++j) {
            const std::size_t diag = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : sub_cost);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, diag});
            row_min = std::min(row_min, cur[j]);
        }
        if (row_min > t) return false;
        std::swap(prev, cur);
    }
    return prev[m] <= t;
}

std::vector<QaryString> ball(const QaryString& x, unsigned t, Repertoire rep) {
    return to_sorted(raw_ball(x.raw(), t, x.q(), rep), x.q());
}

std::vector<QaryString> ball_of_length(const QaryString& x, unsigned t, std::size_t length, Repertoire rep) {
    return to_sorted(raw_ball(x.raw(), t, x.q(), rep, length), x.q(), length);
}

std::vector<QaryString> channel_outputs(const ChannelModel& model, const QaryString& x) {
    const unsigned q = x.q();
    switch (model.kind) {
        case ChannelKind::Edits: return ball(x, model.k, model.repertoire);
        case ChannelKind::Deletions: {
            if (model.k > x.size()) return {};
            RawSet layer{x.raw()};
            for (unsigned r = 0; r < model.k; ++r) {
                RawSet next;
                for (const auto& s : layer) {
                    for (std::size_t i = 0; i < s.size(); ++i) next.insert(std::string(s).erase(i, 1));
                }
                layer = std::move(next);
            }
            return to_sorted(layer, q);
        }
        case ChannelKind::BurstDeletion: {
            RawSet out{x.raw()};
            for (std::size_t len = 1; len <= model.l && len <= x.size(); ++len) {
                for (std::size_t i = 0; i + len <= x.size(); ++i) out.insert(std::string(x.raw()).erase(i, len));
            }
            return to_sorted(out, q);
        }
        case ChannelKind::SubstringEdits: {
            auto round = [&](const std::string& s, auto&& emit) { substring_replacements(s, model.l, q, emit); };
            return to_sorted(iterate_rounds(x.raw(), model.k, round), q);
        }
    }
    return {};
}

std::vector<QaryString> channel_preimage(const ChannelModel& model, const QaryString& y, std::size_t n) {
    const unsigned q = y.q();
    switch (model.kind) {
        case ChannelKind::Edits: return ball_of_length(y, model.k, n, model.repertoire);
        case ChannelKind::Deletions: {
            if (y.size() + model.k != n) return {};
            RawSet layer{y.raw()};
            for (unsigned r = 0; r < model.k; ++r) {
                RawSet next;
                for (const auto& s : layer) {
                    for (std::size_t i = 0; i <= s.size(); ++i) {
                        for (unsigned c = 0; c < q; ++c) {
                            std::string w = s;
                            w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), static_cast<char>(c));
                            next.insert(std::move(w));
                        }
                    }
                }
                layer = std::move(next);
            }
            return to_sorted(layer, q);
        }
        case ChannelKind::BurstDeletion: {
            if (y.size() > n || n - y.size() > model.l) return {};
            const std::size_t d = n - y.size();
            std::uint64_t words = 1;
            for (std::size_t i = 0; i < d; ++i) words *= q;
            RawSet out;
            std::string run(d, '\0');
            for (std::uint64_t w = 0; w < words; ++w) {
                std::uint64_t v = w;
                for (std::size_t i = d; i-- > 0;) {
                    run[i] = static_cast<char>(v % q);
                    v /= q;
                }
                for (std::size_t i = 0; i <= y.size(); ++i) out.insert(std::string(y.raw()).insert(i, run));
            }
            return to_sorted(out, q);
        }
        case ChannelKind::SubstringEdits: {
            // Replacements are invertible, so preimages are the length-n outputs of y.
            const std::size_t shrink = static_cast<std::size_t>(model.k) * model.l;
            auto round = [&](const std::string& s, auto&& emit) { substring_replacements(s, model.l, q, emit); };
            if (distance_gap(y.size(), n) > shrink) return {};
            return to_sorted(iterate_rounds(y.raw(), model.k, round), q, n);
        }
    }
    return {};
}

std::uint64_t ball_bound(std::uint64_t n, std::uint64_t t, std::uint64_t q) {
    const std::uint64_t per_edit = checked_mul(n + t + 1, q + 1) + 1;
    return checked_pow(per_edit, t);
}

std::uint64_t confusion_degree_bound(const ChannelModel& model, std::size_t n) {
    switch (model.kind) {
        case ChannelKind::Edits:
        case ChannelKind::Deletions: return ball_bound(n, 2ull * model.k, model.q) - 1;
        case ChannelKind::BurstDeletion:
            return checked_mul(checked_mul(model.l + 1ull, n + 1ull), n + model.l + 1ull);
        case ChannelKind::SubstringEdits: {
            const std::uint64_t per = checked_mul(n + 1ull, (model.l + 1ull) * (model.l + 1ull));
            return checked_pow(per, 2ull * model.k);
        }
    }
    return 0;
}

GraphView GraphView::confusion(std::size_t n, ChannelModel model) {
    return GraphView(n, model, confusion_degree_bound(model, n));
}

GraphView GraphView::restricted(ClassKey key, std::uint64_t bound) const {
    GraphView out = *this;
    out.key_ = std::move(key);
    out.degree_bound_ = bound;
    return out;
}

GraphView GraphView::with_degree_bound(std::uint64_t bound) const {
    GraphView out = *this;
    out.degree_bound_ = bound;
    return out;
}

GraphView GraphView::with_enumerator(Enumerator enumerate, std::uint64_t bound) const {
    GraphView out = *this;
    out.enumerate_ = std::move(enumerate);
    out.degree_bound_ = bound;
    return out;
}

std::vector<QaryString> GraphView::neighbors(const QaryString& x) const {
    if (x.size() != n_) throw InvalidInput("vertex length does not match the graph");
    std::vector<QaryString> out;
    if (enumerate_) {
        out = enumerate_(x);
    } else if (model_.kind == ChannelKind::Edits) {
        out = ball_of_length(x, 2 * model_.k, n_, model_.repertoire);
    } else {
        RawSet acc;
        for (const auto& y : channel_outputs(model_, x)) {
            for (const auto& v : channel_preimage(model_, y, n_)) acc.insert(v.raw());
        }
        out = to_sorted(acc, x.q());
    }
    std::erase(out, x);
    if (key_) {
        const std::uint64_t own = key_(x);
        std::erase_if(out, [&](const QaryString& v) { return key_(v) != own; });
    }
    return out;
}

HypergraphView::HypergraphView(std::size_t n, ChannelModel model) : n_(n), model_(model) {
    switch (model.kind) {
        case ChannelKind::Edits:
        case ChannelKind::Deletions:
            r_bound_ = v_bound_ = ball_bound(n, model.k, model.q);
            break;
        case ChannelKind::BurstDeletion:
            r_bound_ = checked_mul(model.l, n) + 1;
            v_bound_ = checked_mul(n + 1, checked_pow(model.q, model.l));
            break;
        case ChannelKind::SubstringEdits: {
            std::uint64_t words = 0;
            for (unsigned j = 0; j <= model.l; ++j) words += checked_pow(model.q, j);
            const std::uint64_t per = checked_mul(checked_mul(n + std::uint64_t{model.k} * model.l + 1, model.l + 1ull), words);
            r_bound_ = v_bound_ = checked_pow(per, model.k);
            break;
        }
    }
}

std::vector<QaryString> HypergraphView::edges_containing(const QaryString& x) const {
    if (x.size() != n_) throw InvalidInput("vertex length does not match the hypergraph");
    return channel_outputs(model_, x);
}

std::vector<QaryString> HypergraphView::edge_vertices(const QaryString& edge) const {
    auto vertices = channel_preimage(model_, edge, n_);
    if (vertices.empty()) throw InvalidInput("no edge is labeled '" + edge.to_text() + "'");
    return vertices;
}

GraphView HypergraphView::associated_graph() const {
    const std::uint64_t bound = checked_mul(r_bound_, v_bound_);
    return GraphView::confusion(n_, model_).with_degree_bound(bound);
}

std::vector<QaryString> all_strings(std::size_t n, unsigned q) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        count *= q;
        if (count > (std::uint64_t{1} << 26)) throw SizeError("refusing to enumerate more than 2^26 strings");
    }
    std::vector<QaryString> out;
    out.reserve(count);
    std::string s(n, '\0');
    for (std::uint64_t v = 0; v < count; ++v) {
        std::uint64_t rest = v;
        for (std::size_t i = n; i-- > 0;) {
            s[i] = static_cast<char>(rest % q);
            rest /= q;
        }
        out.push_back(make_string_unchecked(s, q));
    }
    return out;
}

}  // namespace syncodes
