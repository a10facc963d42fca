#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// One factor eta(d z)^e.
struct EtaFactor {
    std::uint64_t d = 1;
    std::int64_t e = 0;

    friend bool operator==(const EtaFactor &, const EtaFactor &) = default;
};

/// Raised for malformed spec text. position() is the 0-based byte offset of
/// the offending token, or npos for whole-spec problems (empty, mod 24).
class SpecError : public std::invalid_argument
{
public:
    SpecError(const std::string &what, std::size_t position = std::string::npos)
        : std::invalid_argument(what), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Normalized eta-quotient prod eta(d z)^e: divisors distinct and ascending,
/// no zero exponents, sum d*e divisible by 24.
class EtaQuotientSpec
{
public:
    /// Merges duplicate divisors, drops zero exponents, sorts, and checks the
    /// mod-24 rule. Throws SpecError.
    static EtaQuotientSpec from_factors(std::vector<EtaFactor> factors);

    const std::vector<EtaFactor> &factors() const noexcept { return factors_; }

    /// Leading exponent of the q-expansion, sum d*e / 24.
    std::int64_t offset() const noexcept { return offset_; }

    friend bool operator==(const EtaQuotientSpec &, const EtaQuotientSpec &) = default;

private:
    EtaQuotientSpec() = default;
    std::vector<EtaFactor> factors_;
    std::int64_t offset_ = 0;
};

/// Grammar: spec := term ("*" term)* ; term := INT "^" SIGNED_INT, with
/// optional whitespace between tokens.
EtaQuotientSpec parse_spec(std::string_view text);

/// Canonical text, e.g. "3^-1*9^3". parse_spec(render(s)) == s.
std::string render(const EtaQuotientSpec &spec);

/// q-expansion of the quotient including the q^offset factor, truncated at
/// `order`. A negative offset is rejected; order <= offset gives all zeros.
TruncatedSeries expand(const EtaQuotientSpec &spec, std::size_t order);

enum class FormId { A, B, C };

struct NamedForm {
    FormId id;
    EtaQuotientSpec spec;
    unsigned weight;
    unsigned level;
    unsigned offset;
};

/// A = eta(3z)^8 (weight 4, level 9), B = eta(9z)^3/eta(3z) (level 27),
/// C = eta(3z)^2 eta(9z)^2 (weight 2, level 27).
const NamedForm &named_form(FormId id);

/// Accepts "A", "B" or "C" (case-insensitive); throws std::invalid_argument.
FormId parse_form_id(std::string_view text);

char form_letter(FormId id);

inline constexpr FormId kAllForms[] = {FormId::A, FormId::B, FormId::C};

} // namespace qseries
