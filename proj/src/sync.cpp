#include "syncodes/sync.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "syncodes/errors.hpp"

namespace syncodes {
namespace {

unsigned half_up(unsigned a, unsigned b) { return (a + b + 1) / 2; }

QaryString random_string(std::size_t n, unsigned q, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> sym(0, q - 1);
    std::string s(n, '\0');
    for (auto& c : s) c = static_cast<char>(sym(rng));
    return make_string_unchecked(std::move(s), q);
}

QaryString random_at_distance(const QaryString& x, unsigned target, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> sym(0, x.q() - 1);
    for (unsigned attempt = 0; attempt < 10000; ++attempt) {
        std::string s = x.raw();
        for (unsigned e = 0; e < target; ++e) {
            const unsigned kind = std::uniform_int_distribution<unsigned>(0, s.empty() ? 0 : 2)(rng);
            if (kind == 0) {
                const auto pos = std::uniform_int_distribution<std::size_t>(0, s.size())(rng);
                s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<char>(sym(rng)));
            } else {
                const auto pos = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
                if (kind == 1) {
                    s.erase(pos, 1);
                } else {
                    s[pos] = static_cast<char>(sym(rng));
                }
            }
        }
        auto y = make_string_unchecked(std::move(s), x.q());
        if (edit_distance(x, y) == target) return y;
    }
    throw InvariantViolation("could not draw a string at the requested edit distance");
}

}  // namespace

RestrictedGraph::RestrictedGraph(std::shared_ptr<const EditCode> anchor_code, unsigned hi, Syndrome anchor)
    : anchor_code_(std::move(anchor_code)), hi_(hi), anchor_(anchor) {
    if (hi_ <= lo()) throw InvalidInput("restricted graph needs b > a");
}

std::uint64_t RestrictedGraph::degree_bound() const {
    return ball_bound(n(), 2ull * hi_ - lo(), anchor_code_->params().q);
}

bool RestrictedGraph::admits(const QaryString& z) const { return anchor_code_->syndrome(z) == anchor_; }

std::vector<QaryString> RestrictedGraph::neighbors(const QaryString& u) const {
    if (!admits(u)) throw InvalidInput("vertex is outside the restricted class");
    auto out = ball_of_length(u, 2 * hi_, n());
    std::erase_if(out, [&](const QaryString& z) { return z == u || !admits(z); });
    return out;
}

SyncCodebook::SyncCodebook(std::size_t n, unsigned q) : n_(n), q_(q) {}

std::shared_ptr<const EditCode> SyncCodebook::plain_shared(unsigned k) const {
    std::lock_guard lock(mu_);
    auto& slot = plain_[k];
    if (!slot) {
        CodeParams p;
        p.n = n_;
        p.q = q_;
        p.k = k;
        slot = std::make_shared<EditCode>(p);
    }
    return slot;
}

const EditCode& SyncCodebook::plain(unsigned k) const { return *plain_shared(k); }

const TwoRoundColorer& SyncCodebook::conditional_colorer(unsigned hi, unsigned lo) const {
    if (hi <= lo || lo < 1) throw InvalidInput("conditional syndrome needs b > a >= 1");
    auto anchor = plain_shared(lo);
    std::lock_guard lock(mu_);
    auto& slot = conditional_[{hi, lo}];
    if (!slot) {
        auto key = [anchor](const QaryString& z) { return anchor->syndrome(z).value; };
        const auto view = GraphView::confusion(n_, ChannelModel::edits(hi, q_))
                              .restricted(key, ball_bound(n_, 2ull * hi - lo, q_));
        slot = std::make_shared<TwoRoundColorer>(ColoringSpec(view));
    }
    return *slot;
}

std::uint64_t SyncCodebook::conditional_range(unsigned hi, unsigned lo) const {
    return conditional_colorer(hi, lo).spec().range();
}

unsigned SyncCodebook::conditional_bits(unsigned hi, unsigned lo) const {
    return bits_for_range(conditional_range(hi, lo));
}

Syndrome syndrome_incremental(const SyncCodebook& book, unsigned lo, unsigned hi, const Syndrome& anchor,
                              const QaryString& x) {
    if (hi <= lo) throw InvalidInput("conditional syndrome needs b > a");
    if (book.plain(lo).syndrome(x) != anchor) throw InvalidInput("x does not carry the anchor syndrome");
    return book.conditional_colorer(hi, lo).color(x);
}

bool verify_ball_lemma(const std::vector<QaryString>& code, const QaryString& c, unsigned D, unsigned d) {
    const unsigned shrink = d == 0 ? 0 : (d - 1) / 2;
    if (D < shrink) throw InvalidInput("ball lemma needs D >= floor((d-1)/2)");
    const auto lhs = std::count_if(code.begin(), code.end(), [&](const QaryString& z) { return within_distance(c, z, D); });
    const auto rhs = ball(c, D - shrink).size();
    return static_cast<std::size_t>(lhs) <= rhs;
}

std::vector<QaryString> greedy_code(std::size_t n, unsigned q, unsigned d) {
    std::vector<QaryString> code;
    for (const auto& z : all_strings(n, q)) {
        const bool far = d == 0 || std::none_of(code.begin(), code.end(),
                                                [&](const QaryString& c) { return within_distance(c, z, d - 1); });
        if (far) code.push_back(z);
    }
    return code;
}

std::string to_string(SyncMode mode) {
    switch (mode) {
        case SyncMode::Naive: return "naive";
        case SyncMode::Fallback: return "fallback";
        case SyncMode::Incremental: return "incremental";
    }
    return "?";
}

SyncMode parse_sync_mode(const std::string& text) {
    if (text == "naive") return SyncMode::Naive;
    if (text == "fallback") return SyncMode::Fallback;
    if (text == "incremental") return SyncMode::Incremental;
    throw InvalidInput("unknown sync mode '" + text + "'");
}

std::string to_string(SyncMessage::Sender s) { return s == SyncMessage::Sender::Alice ? "alice" : "bob"; }

std::string to_string(SyncMessage::Kind k) {
    switch (k) {
        case SyncMessage::Kind::SyndromeFull: return "syndrome_full";
        case SyncMessage::Kind::SyndromeHalf: return "syndrome_half";
        case SyncMessage::Kind::Ack: return "ack";
        case SyncMessage::Kind::Nack: return "nack";
        case SyncMessage::Kind::SyndromeIncremental: return "syndrome_incremental";
    }
    return "?";
}

unsigned SyncTranscript::alice_bits() const {
    unsigned total = 0;
    for (const auto& m : messages) {
        if (m.sender == SyncMessage::Sender::Alice) total += m.bits;
    }
    return total;
}

SyncTranscript run_protocol(const SyncCodebook& book, const QaryString& x, const QaryString& y, unsigned a, unsigned b,
                            SyncMode mode) {
    using Sender = SyncMessage::Sender;
    using Kind = SyncMessage::Kind;
    if (a < 1 || b <= a) throw InvalidInput("protocol needs 1 <= a < b");
    if (x.size() != book.n()) throw InvalidInput("x has the wrong length");
    if (!within_distance(x, y, b)) throw InvalidInput("d_E(x, y) exceeds b");
    const std::size_t n = book.n();
    SyncTranscript t{mode, {}, std::nullopt};

    auto unique_match = [&](const std::vector<QaryString>& pool, auto&& accept) -> std::optional<QaryString> {
        std::optional<QaryString> found;
        for (const auto& z : pool) {
            if (!accept(z)) continue;
            if (found) throw InvariantViolation("two candidates match the transmitted syndromes");
            found = z;
        }
        return found;
    };

    if (mode == SyncMode::Naive) {
        const auto& full = book.plain(b);
        const Syndrome s = full.syndrome(x);
        t.messages.push_back({Sender::Alice, Kind::SyndromeFull, s.bit_length()});
        t.outcome = full.decode(y, s).value;
    } else {
        const unsigned c = half_up(a, b);
        const auto& half = book.plain(c);
        const Syndrome sc = half.syndrome(x);
        t.messages.push_back({Sender::Alice, Kind::SyndromeHalf, sc.bit_length()});
        // Any z near y with x's half syndrome must be x, since d(x, z) <= a + b <= 2c.
        auto near = unique_match(ball_of_length(y, a, n), [&](const QaryString& z) { return half.colorer().matches(z, sc); });
        if (near) {
            t.messages.push_back({Sender::Bob, Kind::Ack, 1});
            t.outcome = near;
        } else {
            t.messages.push_back({Sender::Bob, Kind::Nack, 1});
            if (mode == SyncMode::Fallback) {
                const auto& full = book.plain(b);
                const Syndrome s = full.syndrome(x);
                t.messages.push_back({Sender::Alice, Kind::SyndromeFull, s.bit_length()});
                t.outcome = full.decode(y, s).value;
            } else if (c >= b) {
                // Phi_c already separates B_b(y); the conditional syndrome is empty.
                t.messages.push_back({Sender::Alice, Kind::SyndromeIncremental, 0});
                t.outcome = unique_match(ball_of_length(y, b, n), [&](const QaryString& z) { return half.colorer().matches(z, sc); });
            } else {
                const Syndrome s = syndrome_incremental(book, c, b, sc, x);
                t.messages.push_back({Sender::Alice, Kind::SyndromeIncremental, s.bit_length()});
                const auto& cond = book.conditional_colorer(b, c);
                t.outcome = unique_match(ball_of_length(y, b, n), [&](const QaryString& z) {
                    return half.colorer().matches(z, sc) && cond.matches(z, s);
                });
            }
        }
    }
    if (!t.outcome || *t.outcome != x) throw InvariantViolation("protocol " + to_string(mode) + " did not recover x");
    return t;
}

SyncCosts expected_cost(unsigned a, unsigned b, double p) {
    if (a < 1 || b <= a) throw InvalidInput("expected_cost needs b > a >= 1");
    if (p < 0.0 || p > 1.0) throw InvalidInput("p must lie in [0, 1]");
    const double c = half_up(a, b);
    return SyncCosts{
        4.0 * b,
        4.0 * c + 4.0 * p * b,
        4.0 * c + p * (4.0 * b - 2.0 * c),
        4.0 * (a + p * (b - a)),
    };
}

CostCrossings cost_crossings(unsigned a, unsigned b) {
    if (a < 1 || b <= a) throw InvalidInput("cost_crossings needs b > a >= 1");
    const double c = half_up(a, b);
    return CostCrossings{(b - c) / b, (4.0 * b - 4.0 * c) / (4.0 * b - 2.0 * c)};
}

SimulationSummary simulate_sync(const SyncCodebook& book, unsigned a, unsigned b, double p, unsigned trials,
                                std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw InvalidInput("p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution far(p);
    SimulationSummary out{p, trials, 0, 0, 0, 0, 0, {}};
    double sums[3] = {0, 0, 0};
    for (unsigned trial = 0; trial < trials; ++trial) {
        const QaryString x = random_string(book.n(), book.q(), rng);
        const QaryString y = random_at_distance(x, far(rng) ? b : a, rng);
        bool ok = true;
        for (auto mode : {SyncMode::Naive, SyncMode::Fallback, SyncMode::Incremental}) {
            try {
                auto t = run_protocol(book, x, y, a, b, mode);
                sums[static_cast<int>(mode)] += t.alice_bits();
                if (trial == 0) out.sample.push_back(std::move(t));
            } catch (const InvariantViolation&) {
                ok = false;
            }
        }
        out.recovered += ok ? 1 : 0;
    }
    if (trials > 0) {
        out.mean_naive = sums[0] / trials;
        out.mean_fallback = sums[1] / trials;
        out.mean_incremental = sums[2] / trials;
    }
    out.oracle_reference = expected_cost(a, b, p).oracle * std::log2(static_cast<double>(book.n()));
    return out;
}

}  // namespace syncodes
