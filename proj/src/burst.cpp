#include "syncodes/burst.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "syncodes/errors.hpp"

namespace syncodes {
namespace {

std::vector<QaryString> sorted_unique(std::vector<QaryString> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void require_binary(const QaryString& s) {
    if (s.q() != 2) throw InvalidInput("burst and substring codes are binary");
}

std::vector<Elem> blocks_of(const QaryString& x, unsigned l) {
    std::vector<Elem> out(x.size() / l, 0);
    for (std::size_t b = 0; b < out.size(); ++b) {
        Elem v = 0;
        for (unsigned j = 0; j < l; ++j) v = (v << 1) | x[b * l + j];
        out[b] = v;
    }
    return out;
}

}  // namespace

RedundancyBounds bounds_sse(std::size_t n, unsigned k, unsigned l) {
    if (k == 0) return {0.0, 0.0};
    if (l < 1 || static_cast<std::size_t>(k) * l > n) throw InvalidInput("bounds need k, l >= 1 and k*l <= n");
    const long double log_binom = (std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
                                   std::lgamma(static_cast<long double>(n - k) + 1)) /
                                  std::log(2.0L);
    const double hamming = std::max<double>(static_cast<double>(std::round(log_binom * 1e9L) / 1e9L), static_cast<double>(k) * l);
    const long double base = std::log2(static_cast<long double>(n)) + 2 * std::log2(static_cast<long double>(l) + 1) + l;
    const long double exponent = 2.0L * k * base;
    // log2(2^exponent + 1) without overflow.
    const long double gv = exponent + std::log2(1.0L + std::exp2(-exponent));
    return {hamming, static_cast<double>(gv)};
}

std::vector<std::uint8_t> phi1_burst(const QaryString& x, unsigned l) {
    if (l < 1) throw InvalidInput("parity period l must be >= 1");
    std::vector<std::uint8_t> bits(l, 0);
    for (std::size_t p = 0; p < x.size(); ++p) bits[p % l] ^= static_cast<std::uint8_t>(x[p] & 1);
    return bits;
}

std::uint64_t pack_bits(const std::vector<std::uint8_t>& bits) {
    if (bits.size() > 64) throw InvalidInput("more than 64 parity bits");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) v |= static_cast<std::uint64_t>(bits[i] & 1) << i;
    return v;
}

std::vector<QaryString> burst_candidates(std::size_t n, unsigned l, const QaryString& y,
                                         const std::vector<std::uint8_t>& parity) {
    require_binary(y);
    if (parity.size() != l) throw InvalidInput("parity has the wrong number of bits");
    if (y.size() > n || n - y.size() > l) return {};
    const std::size_t d = n - y.size();
    std::vector<QaryString> out;
    std::string z(n, '\0');
    for (std::size_t i = 0; i <= y.size(); ++i) {
        // Unknowns sit at positions i..i+d-1, one per residue class.
        std::vector<std::uint8_t> known(l, 0);
        std::vector<long> unknown_at(l, -1);
        for (std::size_t p = 0; p < n; ++p) {
            if (p >= i && p < i + d) {
                unknown_at[p % l] = static_cast<long>(p);
            } else {
                const std::size_t src = p < i ? p : p - d;
                z[p] = y.raw()[src];
                known[p % l] ^= static_cast<std::uint8_t>(z[p]);
            }
        }
        bool consistent = true;
        for (unsigned c = 0; c < l; ++c) {
            const std::uint8_t need = parity[c] ^ known[c];
            if (unknown_at[c] >= 0) {
                z[static_cast<std::size_t>(unknown_at[c])] = static_cast<char>(need);
            } else if (need != 0) {
                consistent = false;
                break;
            }
        }
        if (consistent) out.push_back(make_string_unchecked(z, 2));
    }
    return sorted_unique(std::move(out));
}

BurstCode::BurstCode(BurstParams params) : params_(params) {
    if (params_.l < 1 || params_.l > params_.n) throw InvalidInput("burst code needs 1 <= l <= n");
    const std::size_t n = params_.n;
    const unsigned l = params_.l;
    const ChannelModel model = ChannelModel::burst_deletion(l, 2);
    auto enumerate = [n, l, model](const QaryString& x) {
        const auto parity = phi1_burst(x, l);
        std::vector<QaryString> acc;
        for (const auto& y : channel_outputs(model, x)) {
            for (auto& z : burst_candidates(n, l, y, parity)) {
                if (z != x) acc.push_back(std::move(z));
            }
        }
        return sorted_unique(std::move(acc));
    };
    const auto view = GraphView::confusion(n, model).with_enumerator(enumerate, confusion_degree_bound(model, n));
    colorer_ = std::make_shared<TwoRoundColorer>(ColoringSpec(view));
}

Syndrome BurstCode::phi2(const QaryString& x) const {
    require_binary(x);
    if (x.size() != params_.n) throw InvalidInput("input length differs from n");
    return colorer_->color(x);
}

std::vector<QaryString> BurstCode::candidates(const QaryString& y, const std::vector<std::uint8_t>& parity) const {
    return burst_candidates(params_.n, params_.l, y, parity);
}

QaryString BurstCode::decode(const QaryString& y, const std::vector<std::uint8_t>& parity, const Syndrome& phi2) const {
    if (phi2.range != colorer_->spec().range()) throw InvalidInput("phi2 range does not match the code");
    std::vector<QaryString> hits;
    for (const auto& z : candidates(y, parity)) {
        if (colorer_->matches(z, phi2)) hits.push_back(z);
    }
    if (hits.empty()) throw Undecodable("no burst reconstruction matches both syndromes");
    if (hits.size() > 1) throw InvariantViolation("two burst reconstructions share phi2");
    return hits.front();
}

RsCode::RsCode(unsigned l, std::size_t data, std::size_t parity) : field_(l), m_(data), kappa_(parity) {
    if (m_ < 1) throw InvalidInput("RS code needs at least one data symbol");
    if (m_ + kappa_ > field_.order()) throw InvalidInput("RS length exceeds the field size");
    if (m_ + kappa_ > 64) throw InvalidInput("RS length above 64 is outside the supported envelope");
    locations_.push_back(0);
    Elem power = 1;
    while (locations_.size() < m_ + kappa_) {
        locations_.push_back(power);
        power = field_.mul(power, field_.generator());
    }
    if (l <= 8) {
        table_.resize(std::size_t{1} << (2 * l));
        for (Elem a = 0; a < field_.order(); ++a) {
            for (Elem b = 0; b < field_.order(); ++b) table_[(a << l) | b] = static_cast<std::uint8_t>(field_.mul(a, b));
        }
    }
}

const RsCode::Plan& RsCode::plan_for(std::uint64_t erased_mask) const {
    {
        std::lock_guard lock(mu_);
        if (auto it = plans_.find(erased_mask); it != plans_.end()) return *it->second;
    }
    auto plan = std::make_shared<Plan>();
    for (std::size_t c = 0; c < length() && plan->basis.size() < m_; ++c) {
        if (!((erased_mask >> c) & 1)) plan->basis.push_back(c);
    }
    for (std::size_t c = 0; c < length(); ++c) {
        if (std::find(plan->basis.begin(), plan->basis.end(), c) == plan->basis.end()) plan->targets.push_back(c);
    }
    if (plan->basis.size() == m_) {
        for (auto t : plan->targets) {
            const Elem at = locations_[t];
            std::vector<Elem> w;
            for (auto j : plan->basis) {
                Elem num = 1, den = 1;
                for (auto u : plan->basis) {
                    if (u == j) continue;
                    num = field_.mul(num, at ^ locations_[u]);
                    den = field_.mul(den, locations_[j] ^ locations_[u]);
                }
                w.push_back(field_.mul(num, field_.inv(den)));
            }
            plan->weights.push_back(std::move(w));
        }
    }
    std::lock_guard lock(mu_);
    return *plans_.emplace(erased_mask, std::move(plan)).first->second;
}

std::vector<Elem> RsCode::parity(std::span<const Elem> data) const {
    if (data.size() != m_) throw InvalidInput("RS data has the wrong length");
    std::vector<Elem> word(data.begin(), data.end());
    word.resize(length(), 0);
    const std::uint64_t mask = ((kappa_ == 64 ? 0 : (std::uint64_t{1} << kappa_)) - 1) << m_;
    auto full = erasure_decode(word, mask);
    return std::vector<Elem>(full->begin() + static_cast<std::ptrdiff_t>(m_), full->end());
}

std::optional<std::vector<Elem>> RsCode::erasure_decode(std::span<const Elem> word, std::uint64_t erased_mask) const {
    if (word.size() != length()) throw InvalidInput("RS word has the wrong length");
    const Plan& plan = plan_for(erased_mask);
    if (plan.basis.size() < m_) return std::nullopt;
    std::vector<Elem> out(word.begin(), word.end());
    for (std::size_t t = 0; t < plan.targets.size(); ++t) {
        Elem v = 0;
        const auto& w = plan.weights[t];
        for (std::size_t j = 0; j < plan.basis.size(); ++j) v ^= mul(w[j], word[plan.basis[j]]);
        const std::size_t coord = plan.targets[t];
        if ((erased_mask >> coord) & 1) {
            out[coord] = v;
        } else if (v != word[coord]) {
            return std::nullopt;
        }
    }
    return out;
}

void SseParams::validate() const {
    if (l < 1 || l > BinaryField::kMaxDegree) throw InvalidInput("substring length l must be in [1, 32]");
    if (k < 1) throw InvalidInput("substring-edit code needs k >= 1");
    if (n % l != 0) throw InvalidInput("l must divide n (no padding is applied)");
    const std::uint64_t points = n / l + 4ull * k;
    if ((std::uint64_t{1} << l) < points) throw InvalidInput("field too small: need 2^l >= n/l + 4k");
    if (4ull * k * l > 64) throw InvalidInput("RS parity above 64 bits is outside the supported envelope");
}

std::vector<QaryString> sse_candidates(const RsCode& rs, const SseParams& params, const QaryString& y,
                                       const std::vector<Elem>& parity) {
    require_binary(y);
    const std::size_t n = params.n;
    const unsigned l = params.l;
    const std::size_t m = params.blocks();
    if (parity.size() != rs.parity_length()) throw InvalidInput("parity has the wrong number of symbols");
    const std::size_t max_shift = static_cast<std::size_t>(params.k) * l;
    if (y.size() + max_shift < n || y.size() > n + max_shift) return {};

    struct Window {
        std::size_t at, removed, unknown;  // in y: [at, at+removed) becomes `unknown` free symbols
    };
    std::vector<Window> windows;
    std::vector<QaryString> out;
    std::vector<int> cells(n);
    std::vector<Elem> word(rs.length());

    auto evaluate = [&]() {
        // Lay out y with each window replaced by unknown cells.
        std::size_t src = 0, dst = 0;
        for (const auto& w : windows) {
            while (src < w.at) cells[dst++] = static_cast<unsigned char>(y.raw()[src++]);
            for (std::size_t u = 0; u < w.unknown; ++u) cells[dst++] = -1;
            src += w.removed;
        }
        while (src < y.size()) cells[dst++] = static_cast<unsigned char>(y.raw()[src++]);
        std::uint64_t mask = 0;
        for (std::size_t b = 0; b < m; ++b) {
            Elem v = 0;
            bool erased = false;
            for (unsigned j = 0; j < l; ++j) {
                const int c = cells[b * l + j];
                erased |= c < 0;
                v = (v << 1) | static_cast<Elem>(c < 0 ? 0 : c);
            }
            word[b] = erased ? 0 : v;
            if (erased) mask |= std::uint64_t{1} << b;
        }
        std::copy(parity.begin(), parity.end(), word.begin() + static_cast<std::ptrdiff_t>(m));
        auto full = rs.erasure_decode(word, mask);
        if (!full) return;
        std::string z(n, '\0');
        for (std::size_t b = 0; b < m; ++b) {
            const Elem v = (*full)[b];
            for (unsigned j = 0; j < l; ++j) {
                const int bit = static_cast<int>((v >> (l - 1 - j)) & 1);
                const int c = cells[b * l + j];
                if (c >= 0 && c != bit) return;
                z[b * l + j] = static_cast<char>(bit);
            }
        }
        out.push_back(make_string_unchecked(std::move(z), 2));
    };

    // Windows are sorted and disjoint in y; each removes <= l symbols and opens <= l unknowns.
    auto place = [&](auto&& self, std::size_t from, long length_now) -> void {
        if (length_now == static_cast<long>(n)) evaluate();
        if (windows.size() == params.k) return;
        for (std::size_t at = from; at <= y.size(); ++at) {
            for (std::size_t removed = 0; removed <= l && at + removed <= y.size(); ++removed) {
                for (std::size_t unknown = 0; unknown <= l; ++unknown) {
                    if (removed == 0 && unknown == 0) continue;
                    const long next = length_now - static_cast<long>(removed) + static_cast<long>(unknown);
                    const std::size_t left = params.k - windows.size() - 1;
                    if (std::labs(next - static_cast<long>(n)) > static_cast<long>(left * l)) continue;
                    windows.push_back({at, removed, unknown});
                    self(self, at + removed, next);
                    windows.pop_back();
                }
            }
        }
    };
    place(place, 0, static_cast<long>(y.size()));
    return sorted_unique(std::move(out));
}

SseCode::SseCode(SseParams params) : params_(params) {
    params_.validate();
    rs_ = std::make_shared<RsCode>(params_.l, params_.blocks(), 4 * static_cast<std::size_t>(params_.k));
    const ChannelModel model = ChannelModel::substring_edits(params_.k, params_.l, 2);
    auto rs = rs_;
    const SseParams p = params_;
    auto enumerate = [rs, p, model](const QaryString& x) {
        const auto data = blocks_of(x, p.l);
        const auto parity = rs->parity(data);
        std::vector<QaryString> acc;
        for (const auto& y : channel_outputs(model, x)) {
            for (auto& z : sse_candidates(*rs, p, y, parity)) {
                if (z != x) acc.push_back(std::move(z));
            }
        }
        return sorted_unique(std::move(acc));
    };
    const auto view = GraphView::confusion(params_.n, model).with_enumerator(enumerate, confusion_degree_bound(model, params_.n));
    colorer_ = std::make_shared<TwoRoundColorer>(ColoringSpec(view));
}

std::vector<Elem> SseCode::phi1(const QaryString& x) const {
    require_binary(x);
    if (x.size() != params_.n) throw InvalidInput("input length differs from n");
    return rs_->parity(blocks_of(x, params_.l));
}

std::uint64_t SseCode::phi1_key(const QaryString& x) const {
    std::uint64_t key = 0;
    for (Elem e : phi1(x)) key = (key << params_.l) | e;
    return key;
}

Syndrome SseCode::phi2(const QaryString& x) const {
    require_binary(x);
    if (x.size() != params_.n) throw InvalidInput("input length differs from n");
    return colorer_->color(x);
}

std::vector<QaryString> SseCode::candidates(const QaryString& y, const std::vector<Elem>& parity) const {
    return sse_candidates(*rs_, params_, y, parity);
}

QaryString SseCode::decode(const QaryString& y, const std::vector<Elem>& parity, const Syndrome& phi2) const {
    if (phi2.range != colorer_->spec().range()) throw InvalidInput("phi2 range does not match the code");
    std::vector<QaryString> hits;
    for (const auto& z : candidates(y, parity)) {
        if (colorer_->matches(z, phi2)) hits.push_back(z);
    }
    if (hits.empty()) throw Undecodable("no substring-edit reconstruction matches both syndromes");
    if (hits.size() > 1) throw InvariantViolation("two reconstructions share phi2");
    return hits.front();
}

}  // namespace syncodes
