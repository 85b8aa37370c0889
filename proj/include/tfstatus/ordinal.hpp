// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tfstatus {

/// Arbitrary-precision natural number used for ordinal coefficients.
using Natural = boost::multiprecision::cpp_int;

/// One Cantor-normal-form term w^exponent * coefficient.
struct OrdinalTerm {
    std::uint64_t exponent = 0;
    Natural coefficient;

    friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

/**
 * Ordinal below w^w in Cantor normal form.
 *
 * The term list is kept canonical: exponents strictly decreasing and every
 * coefficient at least one. The empty list is zero. Since the form is unique,
 * value equality is term-list equality.
 */
class Ordinal {
  public:
    Ordinal() = default;

    /// The finite ordinal n.
    explicit Ordinal(Natural n);

    /// Builds from terms that must already be canonical; throws Error(syntax)
    /// otherwise.
    static Ordinal from_terms(std::vector<OrdinalTerm> terms);

    [[nodiscard]] const std::vector<OrdinalTerm>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_finite() const noexcept;
    /// Exponent of the leading term; zero for the ordinal zero.
    [[nodiscard]] std::uint64_t leading_exponent() const noexcept;

    friend bool operator==(const Ordinal&, const Ordinal&) = default;
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  private:
    std::vector<OrdinalTerm> terms_;
};

/// w^mu * n.
Ordinal omega_term(std::uint64_t mu, const Natural& n);

/// Ordinal sum a + b (not commutative).
Ordinal add(const Ordinal& a, const Ordinal& b);

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Right multiplication a * k by a natural number.
Ordinal scale_by_natural(const Ordinal& a, const Natural& k);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Natural& k) { return scale_by_natural(a, k); }

/// Text form: `0`, or terms `w^E*C`, `w*C`, `w`, `C` joined by " + ".
std::string format(const Ordinal& a);

/// Inverse of format. Also accepts `w^E` and `w*1`; rejects zero
/// coefficients, leading zeros and terms out of decreasing exponent order.
Ordinal parse_ordinal(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

} // namespace tfstatus
