#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "syncodes/codes.hpp"

namespace syncodes {

// Strings whose Phi_lo equals an anchor, joined when within edit distance 2*hi.
class RestrictedGraph {
public:
    RestrictedGraph(std::shared_ptr<const EditCode> anchor_code, unsigned hi, Syndrome anchor);

    std::size_t n() const { return anchor_code_->params().n; }
    unsigned lo() const { return anchor_code_->params().k; }
    unsigned hi() const { return hi_; }
    const Syndrome& anchor() const { return anchor_; }
    // ball_bound(n, 2*hi - lo, q).
    std::uint64_t degree_bound() const;
    bool admits(const QaryString& z) const;
    // Throws InvalidInput when u is not admitted.
    std::vector<QaryString> neighbors(const QaryString& u) const;

private:
    std::shared_ptr<const EditCode> anchor_code_;
    unsigned hi_;
    Syndrome anchor_;
};

inline std::vector<QaryString> restricted_neighbors(const RestrictedGraph& g, const QaryString& u) {
    return g.neighbors(u);
}

// Plain syndromes Phi_k and conditional syndromes Phi_{hi|lo} for one (n, q).
class SyncCodebook {
public:
    SyncCodebook(std::size_t n, unsigned q);

    std::size_t n() const { return n_; }
    unsigned q() const { return q_; }

    const EditCode& plain(unsigned k) const;
    std::shared_ptr<const EditCode> plain_shared(unsigned k) const;
    // Colorer of the restricted graph; one instance serves every anchor class.
    const TwoRoundColorer& conditional_colorer(unsigned hi, unsigned lo) const;
    unsigned conditional_bits(unsigned hi, unsigned lo) const;
    std::uint64_t conditional_range(unsigned hi, unsigned lo) const;

private:
    std::size_t n_;
    unsigned q_;
    mutable std::mutex mu_;
    mutable std::map<unsigned, std::shared_ptr<const EditCode>> plain_;
    mutable std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const TwoRoundColorer>> conditional_;
};

// Phi_{hi|lo}(x); requires hi > lo and Phi_lo(x) == anchor.
Syndrome syndrome_incremental(const SyncCodebook& book, unsigned lo, unsigned hi, const Syndrome& anchor,
                              const QaryString& x);

// |B_D(c) intersect C| <= |B_{D - floor((d-1)/2)}(c)| for a code C of minimum distance d.
bool verify_ball_lemma(const std::vector<QaryString>& code, const QaryString& c, unsigned D, unsigned d);

// Lexicographic greedy code over all length-n strings with pairwise edit distance >= d.
std::vector<QaryString> greedy_code(std::size_t n, unsigned q, unsigned d);

enum class SyncMode { Naive, Fallback, Incremental };
std::string to_string(SyncMode mode);
SyncMode parse_sync_mode(const std::string& text);

struct SyncMessage {
    enum class Sender { Alice, Bob } sender;
    enum class Kind { SyndromeFull, SyndromeHalf, Ack, Nack, SyndromeIncremental } kind;
    unsigned bits;
};
std::string to_string(SyncMessage::Sender s);
std::string to_string(SyncMessage::Kind k);

struct SyncTranscript {
    SyncMode mode;
    std::vector<SyncMessage> messages;
    std::optional<QaryString> outcome;

    // Alice-to-Bob syndrome bits; the 1-bit ack/nack is excluded.
    unsigned alice_bits() const;
};

// Requires 1 <= a < b and d_E(x, y) <= b; throws InvariantViolation if Bob ends with anything but x.
SyncTranscript run_protocol(const SyncCodebook& book, const QaryString& x, const QaryString& y, unsigned a, unsigned b,
                            SyncMode mode);

// Leading-order coefficients of log n.
struct SyncCosts {
    double naive;
    double fallback;
    double incremental;
    double oracle;
};
SyncCosts expected_cost(unsigned a, unsigned b, double p);

// Probabilities where fallback (p0) and incremental (p1) stop beating naive.
struct CostCrossings {
    double fallback_vs_naive;
    double incremental_vs_naive;
};
CostCrossings cost_crossings(unsigned a, unsigned b);

struct SimulationSummary {
    double p;
    unsigned trials;
    unsigned recovered;
    double mean_naive;
    double mean_fallback;
    double mean_incremental;
    double oracle_reference;  // 4(a + p(b-a)) log2 n, no optimality claim
    std::vector<SyncTranscript> sample;  // transcripts of the first trial
};

// d_E(x, y) is a with probability 1-p and b with probability p.
SimulationSummary simulate_sync(const SyncCodebook& book, unsigned a, unsigned b, double p, unsigned trials,
                                std::uint64_t seed);

}  // namespace syncodes
