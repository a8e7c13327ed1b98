#include "syncodes/codes.hpp"

#include <bit>
#include <string>

#include "syncodes/errors.hpp"

namespace syncodes {
namespace {

void check_envelope(const CodeParams& p) {
    if (p.n < 1) throw InvalidInput("block length n must be >= 1");
    if (p.q < 2 || p.q > 256) throw InvalidInput("alphabet size q must be in [2, 256]");
    if (p.l > 0) {
        if (p.k < 1) throw InvalidInput("substring-edit mode needs k >= 1");
        const unsigned short_cap = static_cast<unsigned>(std::bit_width(p.n)) + 1;
        if (p.l > short_cap) {
            throw InvalidInput("substring length l=" + std::to_string(p.l) + " exceeds the short-substring cap " +
                               std::to_string(short_cap));
        }
    }
}

}  // namespace

ChannelModel CodeParams::model() const {
    if (l > 0) return ChannelModel::substring_edits(k, l, q);
    return ChannelModel::edits(k, q, repertoire);
}

EditCode::EditCode(CodeParams params) : params_(params) {
    check_envelope(params_);
    if (params_.k > 0) {
        colorer_ = std::make_shared<TwoRoundColorer>(ColoringSpec(GraphView::confusion(params_.n, params_.model())));
    }
}

std::uint64_t EditCode::range() const { return colorer_ ? colorer_->spec().range() : 1; }

const TwoRoundColorer& EditCode::colorer() const {
    if (!colorer_) throw InvalidInput("a code for zero edits has no coloring");
    return *colorer_;
}

Syndrome EditCode::syndrome(const QaryString& x) const {
    if (x.size() != params_.n || x.q() != params_.q) throw InvalidInput("input does not match the code's n and q");
    if (!colorer_) return Syndrome{0, 1};
    return colorer_->color(x);
}

DecodeResult EditCode::decode(const QaryString& y, const Syndrome& s) const {
    if (y.q() != params_.q) throw InvalidInput("received word uses a different alphabet");
    if (s.range != range() || s.value >= s.range) throw InvalidInput("syndrome range does not match the code");
    if (!colorer_) {
        if (y.size() != params_.n) throw Undecodable("zero-edit code received a word of the wrong length");
        return {y, 1};
    }
    const auto candidates = channel_preimage(params_.model(), y, params_.n);
    std::vector<QaryString> hits;
    for (const auto& z : candidates) {
        if (colorer_->matches(z, s)) hits.push_back(z);
    }
    if (hits.empty()) throw Undecodable("no preimage of the received word carries this syndrome");
    if (hits.size() > 1) throw InvariantViolation("two preimages share a syndrome: " + hits[0].to_text() + ", " + hits[1].to_text());
    return {hits.front(), candidates.size()};
}

ListCode::ListCode(CodeParams params) : params_(params) {
    check_envelope(params_);
    if (params_.ell < 1) throw InvalidInput("list decoding needs ell >= 1");
    if (params_.k < 1) throw InvalidInput("list decoding needs k >= 1");
}

const Labeler& ListCode::labeler(std::uint64_t seed) const {
    std::lock_guard lock(mu_);
    auto& slot = labelers_[seed];
    if (!slot) {
        slot = std::make_shared<Labeler>(LabelingSpec(HypergraphView(params_.n, params_.model()), params_.ell, seed));
    }
    return *slot;
}

std::uint64_t ListCode::range() const { return labeler(params_.seed).spec().range(); }

ListSyndrome ListCode::syndrome(const QaryString& x) const {
    if (x.size() != params_.n || x.q() != params_.q) throw InvalidInput("input does not match the code's n and q");
    for (unsigned attempt = 0; attempt < kSeedAttempts; ++attempt) {
        const std::uint64_t seed = params_.seed + attempt;
        try {
            return ListSyndrome{labeler(seed).label(x), seed};
        } catch (const FamilyFailure&) {
        }
    }
    throw FamilyFailure("no seed in " + std::to_string(kSeedAttempts) + " attempts produced a witness");
}

std::vector<QaryString> ListCode::decode(const QaryString& y, const ListSyndrome& s) const {
    if (y.q() != params_.q) throw InvalidInput("received word uses a different alphabet");
    const auto& lab = labeler(s.seed);
    return lab.decode(s.label, y);
}

QaryString to_digits(std::uint64_t value, std::size_t width, unsigned q) {
    std::string sym(width, '\0');
    for (std::size_t i = width; i-- > 0;) {
        sym[i] = static_cast<char>(value % q);
        value /= q;
    }
    if (value != 0) throw InvalidInput("value does not fit in the requested number of digits");
    return QaryString(std::move(sym), q);
}

std::uint64_t from_digits(const QaryString& digits) {
    u128 value = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        value = value * digits.q() + digits[i];
        if (value > ~std::uint64_t{0}) throw Undecodable("digit string overflows 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

std::size_t digits_for_range(std::uint64_t range, unsigned q) {
    std::size_t width = 0;
    u128 capacity = 1;
    while (capacity < range) {
        capacity *= q;
        ++width;
    }
    return width;
}

QaryString repeat_symbols(const QaryString& w, std::size_t times) {
    std::string out;
    out.reserve(w.size() * times);
    for (char c : w.raw()) out.append(times, c);
    return make_string_unchecked(std::move(out), w.q());
}

QaryString decode_repetition(const QaryString& segment, std::size_t width, unsigned k, Repertoire rep) {
    const std::size_t times = 2 * static_cast<std::size_t>(k) + 1;
    // Scanning the ball of the segment visits exactly the repetitions within distance k.
    std::vector<QaryString> found;
    for (const auto& c : ball_of_length(segment, k, width * times, rep)) {
        bool repeated = true;
        for (std::size_t i = 0; i < c.size() && repeated; ++i) repeated = c[i] == c[i - i % times];
        if (repeated) {
            std::string w;
            for (std::size_t i = 0; i < width; ++i) w.push_back(static_cast<char>(c[i * times]));
            found.push_back(make_string_unchecked(std::move(w), segment.q()));
        }
    }
    if (found.empty()) throw Undecodable("repetition segment is farther than k edits from every repetition");
    if (found.size() > 1) throw InvariantViolation("repetition segment is within k edits of two repetitions");
    return found.front();
}

ProtectedCode::ProtectedCode(CodeParams params) : params_(params) {
    inner_ = std::make_unique<EditCode>(params_);
    if (params_.k == 0) return;
    m_ = digits_for_range(inner_->range(), params_.q);
    CodeParams outer = params_;
    outer.n = m_;
    outer_ = std::make_unique<EditCode>(outer);
    r_ = digits_for_range(outer_->range(), params_.q);
}

QaryString ProtectedCode::encode(const QaryString& x) const {
    const Syndrome s = inner_->syndrome(x);
    if (params_.k == 0) return x;
    const QaryString s_digits = to_digits(s.value, m_, params_.q);
    const QaryString w = to_digits(outer_->syndrome(s_digits).value, r_, params_.q);
    return make_string_unchecked(x.raw() + s_digits.raw() + repeat_symbols(w, 2 * params_.k + 1).raw(), params_.q);
}

QaryString ProtectedCode::decode(const QaryString& y) const {
    if (y.q() != params_.q) throw InvalidInput("received word uses a different alphabet");
    if (params_.k == 0) {
        if (y.size() != params_.n) throw Undecodable("zero-edit codeword has the wrong length");
        return y;
    }
    const auto delta = static_cast<long long>(y.size()) - static_cast<long long>(length());
    const auto n = static_cast<long long>(params_.n);
    const auto m = static_cast<long long>(m_);
    if (delta < -static_cast<long long>(params_.k) || delta > static_cast<long long>(params_.k)) {
        throw Undecodable("length change exceeds k");
    }
    const auto total = static_cast<long long>(y.size());
    if (n + delta < 0 || n + m + delta < n || n + m > total) throw Undecodable("codeword too short to slice");
    const QaryString payload = y.substr(0, static_cast<std::size_t>(n + delta));
    const QaryString middle = y.substr(static_cast<std::size_t>(n), static_cast<std::size_t>(m + delta));
    const QaryString tail = y.substr(static_cast<std::size_t>(n + m));

    const QaryString w = decode_repetition(tail, r_, params_.k, params_.repertoire);
    const Syndrome outer_syndrome{from_digits(w), outer_->range()};
    if (outer_syndrome.value >= outer_syndrome.range) throw Undecodable("repetition segment decodes outside the syndrome range");
    const QaryString s_digits = outer_->decode(middle, outer_syndrome).value;
    const Syndrome inner_syndrome{from_digits(s_digits), inner_->range()};
    if (inner_syndrome.value >= inner_syndrome.range) throw Undecodable("syndrome segment decodes outside the syndrome range");
    return inner_->decode(payload, inner_syndrome).value;
}

}  // namespace syncodes
