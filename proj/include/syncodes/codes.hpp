#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "syncodes/coloring.hpp"

namespace syncodes {

struct CodeParams {
    std::size_t n = 8;
    unsigned q = 2;
    unsigned k = 1;
    unsigned l = 0;  // nonzero selects k substring edits of length <= l
    Repertoire repertoire = Repertoire::InsDelSub;
    std::uint64_t ell = 0;  // list size for list decoding
    std::uint64_t seed = 0;

    ChannelModel model() const;
};

struct DecodeResult {
    QaryString value;
    std::size_t candidates_examined = 0;
};

// Systematic code {(x, Phi(x))} for k edits (or k short substring edits).
class EditCode {
public:
    explicit EditCode(CodeParams params);

    const CodeParams& params() const { return params_; }
    std::uint64_t range() const;
    unsigned bit_length() const { return bits_for_range(range()); }
    const TwoRoundColorer& colorer() const;

    Syndrome syndrome(const QaryString& x) const;
    // Throws Undecodable when no preimage matches and InvariantViolation when several do.
    DecodeResult decode(const QaryString& y, const Syndrome& s) const;

private:
    CodeParams params_;
    std::shared_ptr<const TwoRoundColorer> colorer_;
};

inline Syndrome syndrome_k_edit(const EditCode& code, const QaryString& x) { return code.syndrome(x); }
inline QaryString decode_k_edit(const EditCode& code, const QaryString& y, const Syndrome& s) {
    return code.decode(y, s).value;
}

struct ListSyndrome {
    Syndrome label;
    std::uint64_t seed = 0;  // seed of the family that produced the label
};

// List-decodable code from an ell-labeling of the confusion hypergraph.
class ListCode {
public:
    static constexpr unsigned kSeedAttempts = 16;

    explicit ListCode(CodeParams params);

    const CodeParams& params() const { return params_; }
    std::uint64_t range() const;
    const Labeler& labeler(std::uint64_t seed) const;

    // Tries seeds params.seed, params.seed+1, ... until the family yields a witness.
    ListSyndrome syndrome(const QaryString& x) const;
    std::vector<QaryString> decode(const QaryString& y, const ListSyndrome& s) const;

private:
    CodeParams params_;
    mutable std::mutex mu_;
    mutable std::map<std::uint64_t, std::shared_ptr<const Labeler>> labelers_;
};

// Self-contained codeword x || digits(Phi(x)) || Rep_{2k+1}(digits(Phi1(digits(Phi(x))))).
class ProtectedCode {
public:
    explicit ProtectedCode(CodeParams params);

    const CodeParams& params() const { return params_; }
    std::size_t syndrome_digits() const { return m_; }
    std::size_t repetition_digits() const { return r_; }
    std::size_t length() const { return params_.n + m_ + (2 * params_.k + 1) * r_; }
    const EditCode& inner() const { return *inner_; }
    const EditCode& outer() const { return *outer_; }

    QaryString encode(const QaryString& x) const;
    QaryString decode(const QaryString& y) const;

private:
    CodeParams params_;
    std::unique_ptr<EditCode> inner_;
    std::unique_ptr<EditCode> outer_;
    std::size_t m_ = 0;
    std::size_t r_ = 0;
};

// Fixed-width base-q digits, most significant first.
QaryString to_digits(std::uint64_t value, std::size_t width, unsigned q);
std::uint64_t from_digits(const QaryString& digits);
// Smallest width whose q-ary digits can hold every value below range.
std::size_t digits_for_range(std::uint64_t range, unsigned q);

QaryString repeat_symbols(const QaryString& w, std::size_t times);
// Unique w of the given width with d(Rep_{2k+1}(w), segment) <= k.
QaryString decode_repetition(const QaryString& segment, std::size_t width, unsigned k,
                             Repertoire rep = Repertoire::InsDelSub);

}  // namespace syncodes
