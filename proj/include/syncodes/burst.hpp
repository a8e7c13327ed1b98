#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "syncodes/coloring.hpp"
#include "syncodes/field_arith.hpp"

namespace syncodes {

struct RedundancyBounds {
    double hamming;
    double gv;
};

// hamming = max(log2 C(n,k), k*l); gv = log2((n (l+1)^2 2^l)^(2k) + 1).
RedundancyBounds bounds_sse(std::size_t n, unsigned k, unsigned l);

// Parity bit c (0-based) is the XOR of x_i over 1-indexed positions i with (i-1) mod l == c.
std::vector<std::uint8_t> phi1_burst(const QaryString& x, unsigned l);
std::uint64_t pack_bits(const std::vector<std::uint8_t>& bits);

struct BurstParams {
    std::size_t n;
    unsigned l;
};

// Binary code against one burst of at most l consecutive deletions.
class BurstCode {
public:
    explicit BurstCode(BurstParams params);

    const BurstParams& params() const { return params_; }
    const GraphView& view() const { return colorer_->spec().view(); }
    const TwoRoundColorer& colorer() const { return *colorer_; }
    unsigned redundancy_bits() const { return params_.l + colorer_->spec().pair_bits(); }

    std::vector<std::uint8_t> phi1(const QaryString& x) const { return phi1_burst(x, params_.l); }
    Syndrome phi2(const QaryString& x) const;
    // Length-n strings z with y a burst-deletion output of z and phi1(z) == parity.
    std::vector<QaryString> candidates(const QaryString& y, const std::vector<std::uint8_t>& parity) const;
    QaryString decode(const QaryString& y, const std::vector<std::uint8_t>& parity, const Syndrome& phi2) const;

private:
    BurstParams params_;
    std::shared_ptr<const TwoRoundColorer> colorer_;
};

// Systematic Reed-Solomon code over GF(2^l) at locations 0, 1, g, g^2, ...
class RsCode {
public:
    RsCode(unsigned l, std::size_t data, std::size_t parity);

    const BinaryField& field() const { return field_; }
    std::size_t data_length() const { return m_; }
    std::size_t parity_length() const { return kappa_; }
    std::size_t length() const { return m_ + kappa_; }
    const std::vector<Elem>& locations() const { return locations_; }

    std::vector<Elem> parity(std::span<const Elem> data) const;
    // Fills erased coordinates of a length m+kappa word; nullopt if too many erasures
    // or the surviving coordinates are not consistent with one codeword.
    std::optional<std::vector<Elem>> erasure_decode(std::span<const Elem> word, std::uint64_t erased_mask) const;

private:
    struct Plan {
        std::vector<std::size_t> basis;                  // surviving coordinates used for interpolation
        std::vector<std::size_t> targets;                // every other coordinate
        std::vector<std::vector<Elem>> weights;          // weights[t][j] for targets[t], basis[j]
    };
    const Plan& plan_for(std::uint64_t erased_mask) const;
    Elem mul(Elem a, Elem b) const { return table_.empty() ? field_.mul(a, b) : table_[(a << field_.degree()) | b]; }

    BinaryField field_;
    std::size_t m_;
    std::size_t kappa_;
    std::vector<Elem> locations_;
    std::vector<std::uint8_t> table_;
    mutable std::mutex mu_;
    mutable std::map<std::uint64_t, std::shared_ptr<const Plan>> plans_;
};

struct SseParams {
    std::size_t n;
    unsigned l;
    unsigned k;

    std::size_t blocks() const { return n / l; }
    // l | n, 2^l >= n/l + 4k, and the parity fits a 64-bit class key.
    void validate() const;
};

// Code against k substring edits of length <= l: RS parity phi1 plus a coloring phi2.
class SseCode {
public:
    explicit SseCode(SseParams params);

    const SseParams& params() const { return params_; }
    const RsCode& rs() const { return *rs_; }
    const TwoRoundColorer& colorer() const { return *colorer_; }
    unsigned phi1_bits() const { return 4 * params_.k * params_.l; }
    unsigned redundancy_bits() const { return phi1_bits() + colorer_->spec().pair_bits(); }

    std::vector<Elem> phi1(const QaryString& x) const;
    std::uint64_t phi1_key(const QaryString& x) const;
    Syndrome phi2(const QaryString& x) const;
    std::vector<QaryString> candidates(const QaryString& y, const std::vector<Elem>& parity) const;
    QaryString decode(const QaryString& y, const std::vector<Elem>& parity, const Syndrome& phi2) const;

private:
    SseParams params_;
    std::shared_ptr<const RsCode> rs_;
    std::shared_ptr<const TwoRoundColorer> colorer_;
};

// Length-n strings z with y reachable from z by k substring edits and matching RS parity.
std::vector<QaryString> sse_candidates(const RsCode& rs, const SseParams& params, const QaryString& y,
                                       const std::vector<Elem>& parity);
std::vector<QaryString> burst_candidates(std::size_t n, unsigned l, const QaryString& y,
                                         const std::vector<std::uint8_t>& parity);

inline std::vector<Elem> phi1_rs(const SseCode& code, const QaryString& x) { return code.phi1(x); }

}  // namespace syncodes
