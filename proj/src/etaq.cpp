#include "qseries/etaq.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace qseries {

namespace {

class SpecParser
{
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    std::vector<EtaFactor> parse()
    {
        std::vector<EtaFactor> factors;
        skip_ws();
        if (pos_ == text_.size()) {
            throw SpecError("empty eta-quotient spec", pos_);
        }
        factors.push_back(term());
        skip_ws();
        while (pos_ < text_.size()) {
            expect('*');
            factors.push_back(term());
            skip_ws();
        }
        return factors;
    }

private:
    EtaFactor term()
    {
        skip_ws();
        const std::size_t at = pos_;
        const std::uint64_t d = digits();
        if (d == 0) {
            throw SpecError("divisor must be positive at position " + std::to_string(at), at);
        }
        expect('^');
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        const std::size_t exp_at = pos_;
        const std::uint64_t magnitude = digits();
        if (magnitude > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) {
            throw SpecError("exponent out of range at position " + std::to_string(exp_at), exp_at);
        }
        const auto e = static_cast<std::int64_t>(magnitude);
        return EtaFactor{d, negative ? -e : e};
    }

    std::uint64_t digits()
    {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
                throw SpecError("integer out of range at position " + std::to_string(start), start);
            }
            v = v * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) {
            throw SpecError("expected integer at position " + std::to_string(start), start);
        }
        return v;
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw SpecError(std::string("expected '") + c + "' at position " + std::to_string(pos_), pos_);
        }
        ++pos_;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

TruncatedSeries euler_factor(std::uint64_t d, std::size_t order)
{
    const std::size_t base_order = (order + d - 1) / d;
    return rescale(euler_series(base_order), d, order);
}

} // namespace

EtaQuotientSpec EtaQuotientSpec::from_factors(std::vector<EtaFactor> factors)
{
    std::map<std::uint64_t, std::int64_t> merged;
    for (const auto &f : factors) {
        if (f.d == 0) {
            throw SpecError("divisor must be positive");
        }
        merged[f.d] += f.e;
    }
    EtaQuotientSpec spec;
    __int128 weighted = 0;
    for (const auto &[d, e] : merged) {
        if (e != 0) {
            spec.factors_.push_back({d, e});
            weighted += static_cast<__int128>(d) * e;
        }
    }
    if (spec.factors_.empty()) {
        throw SpecError("eta-quotient spec is empty after merging exponents");
    }
    if (weighted % 24 != 0) {
        throw SpecError("sum of d*e is " + std::to_string(static_cast<long long>(weighted))
                        + ", not divisible by 24; the q-expansion would have a fractional offset");
    }
    spec.offset_ = static_cast<std::int64_t>(weighted / 24);
    return spec;
}

EtaQuotientSpec parse_spec(std::string_view text)
{
    return EtaQuotientSpec::from_factors(SpecParser(text).parse());
}

std::string render(const EtaQuotientSpec &spec)
{
    std::string out;
    for (const auto &f : spec.factors()) {
        if (!out.empty()) {
            out += '*';
        }
        out += std::to_string(f.d) + '^' + std::to_string(f.e);
    }
    return out;
}

TruncatedSeries expand(const EtaQuotientSpec &spec, std::size_t order)
{
    if (spec.offset() < 0) {
        throw std::domain_error("expand: negative leading exponent " + std::to_string(spec.offset())
                                + " needs a Laurent series");
    }
    const auto offset = static_cast<std::size_t>(spec.offset());
    if (order <= offset) {
        return TruncatedSeries(order);
    }
    const std::size_t work = order - offset;

    // Positive powers first: they are sparse, so the accumulated product stays
    // cheap until the dense inverse factors arrive.
    TruncatedSeries product = TruncatedSeries::constant(1, work);
    for (const auto &f : spec.factors()) {
        if (f.e > 0) {
            product = mul(product, pow(euler_factor(f.d, work), static_cast<std::uint64_t>(f.e)));
        }
    }
    for (const auto &f : spec.factors()) {
        if (f.e < 0) {
            const auto inv = inverse(euler_factor(f.d, work));
            product = mul(product, pow(inv, static_cast<std::uint64_t>(-f.e)));
        }
    }
    return shift(product, offset);
}

const NamedForm &named_form(FormId id)
{
    static const NamedForm a{FormId::A, parse_spec("3^8"), 4, 9, 1};
    // Weight 1 is bookkeeping only: B's coefficients come from the divisor sum.
    static const NamedForm b{FormId::B, parse_spec("9^3*3^-1"), 1, 27, 1};
    static const NamedForm c{FormId::C, parse_spec("3^2*9^2"), 2, 27, 1};
    switch (id) {
    case FormId::A:
        return a;
    case FormId::B:
        return b;
    case FormId::C:
        return c;
    }
    throw std::invalid_argument("unknown form id");
}

FormId parse_form_id(std::string_view text)
{
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'A':
            return FormId::A;
        case 'B':
            return FormId::B;
        case 'C':
            return FormId::C;
        default:
            break;
        }
    }
    throw std::invalid_argument("unknown form '" + std::string(text) + "' (expected A, B or C)");
}

char form_letter(FormId id)
{
    switch (id) {
    case FormId::A:
        return 'A';
    case FormId::B:
        return 'B';
    case FormId::C:
        return 'C';
    }
    return '?';
}

} // namespace qseries
