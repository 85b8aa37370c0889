// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tfstatus/ordinal.hpp"

#include <charconv>
#include <ostream>
#include <utility>

#include "tfstatus/error.hpp"

namespace tfstatus {

Ordinal::Ordinal(Natural n) {
    if (n < 0) {
        throw Error(ErrorKind::out_of_range, "ordinal coefficient must be non-negative");
    }
    if (n != 0) {
        terms_.push_back({0, std::move(n)});
    }
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient < 1) {
            throw Error(ErrorKind::syntax, "ordinal term with zero coefficient");
        }
        if (i > 0 && terms[i].exponent >= terms[i - 1].exponent) {
            throw Error(ErrorKind::syntax, "ordinal terms not in strictly decreasing exponent order");
        }
    }
    Ordinal out;
    out.terms_ = std::move(terms);
    return out;
}

bool Ordinal::is_finite() const noexcept {
    return terms_.empty() || terms_.front().exponent == 0;
}

std::uint64_t Ordinal::leading_exponent() const noexcept {
    return terms_.empty() ? 0 : terms_.front().exponent;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i].exponent != y[i].exponent) {
            return x[i].exponent <=> y[i].exponent;
        }
        if (x[i].coefficient != y[i].coefficient) {
            return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
        }
    }
    return x.size() <=> y.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal omega_term(std::uint64_t mu, const Natural& n) {
    if (n == 0) {
        return {};
    }
    return Ordinal::from_terms({{mu, n}});
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) {
        return a;
    }
    const auto& lhs = a.terms();
    const auto& rhs = b.terms();
    const std::uint64_t lead = rhs.front().exponent;

    // Terms of a below b's leading exponent are absorbed.
    std::vector<OrdinalTerm> out;
    out.reserve(lhs.size() + rhs.size());
    Natural carried = 0;
    for (const auto& t : lhs) {
        if (t.exponent > lead) {
            out.push_back(t);
        } else {
            if (t.exponent == lead) {
                carried = t.coefficient;
            }
            break;
        }
    }
    out.push_back({lead, carried + rhs.front().coefficient});
    out.insert(out.end(), rhs.begin() + 1, rhs.end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal scale_by_natural(const Ordinal& a, const Natural& k) {
    if (k < 0) {
        throw Error(ErrorKind::out_of_range, "ordinal scale factor must be non-negative");
    }
    if (k == 0 || a.is_zero()) {
        return {};
    }
    auto terms = a.terms();
    terms.front().coefficient *= k;
    return Ordinal::from_terms(std::move(terms));
}

std::string format(const Ordinal& a) {
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        const std::string c = t.coefficient.str();
        if (t.exponent == 0) {
            out += c;
        } else if (t.exponent == 1) {
            out += t.coefficient == 1 ? std::string("w") : "w*" + c;
        } else {
            out += "w^" + std::to_string(t.exponent) + "*" + c;
        }
    }
    return out;
}

namespace {

[[noreturn]] void bad_ordinal(std::string_view text, std::string_view why) {
    throw Error(ErrorKind::syntax,
                "malformed ordinal '" + std::string(text) + "': " + std::string(why));
}

// Positive decimal integer without leading zeros.
std::string_view take_int(std::string_view& rest, std::string_view text) {
    std::size_t n = 0;
    while (n < rest.size() && rest[n] >= '0' && rest[n] <= '9') {
        ++n;
    }
    if (n == 0) {
        bad_ordinal(text, "expected an integer");
    }
    if (rest[0] == '0') {
        bad_ordinal(text, "integers must be positive without leading zeros");
    }
    auto digits = rest.substr(0, n);
    rest.remove_prefix(n);
    return digits;
}

OrdinalTerm parse_term(std::string_view term, std::string_view text) {
    OrdinalTerm out;
    std::string_view rest = term;
    if (rest.empty()) {
        bad_ordinal(text, "empty term");
    }
    if (rest[0] != 'w') {
        out.exponent = 0;
        out.coefficient = Natural(std::string(take_int(rest, text)));
    } else {
        rest.remove_prefix(1);
        out.exponent = 1;
        out.coefficient = 1;
        if (!rest.empty() && rest[0] == '^') {
            rest.remove_prefix(1);
            const auto digits = take_int(rest, text);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                             out.exponent);
            if (ec != std::errc{}) {
                bad_ordinal(text, "exponent too large");
            }
        }
        if (!rest.empty() && rest[0] == '*') {
            rest.remove_prefix(1);
            out.coefficient = Natural(std::string(take_int(rest, text)));
        }
    }
    if (!rest.empty()) {
        bad_ordinal(text, "unexpected trailing characters in term");
    }
    return out;
}

} // namespace

Ordinal parse_ordinal(std::string_view text) {
    if (text == "0") {
        return {};
    }
    constexpr std::string_view separator = " + ";
    std::vector<OrdinalTerm> terms;
    std::string_view rest = text;
    while (true) {
        const auto pos = rest.find(separator);
        terms.push_back(parse_term(rest.substr(0, pos), text));
        if (pos == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(pos + separator.size());
    }
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].exponent >= terms[i - 1].exponent) {
            bad_ordinal(text, "terms must have strictly decreasing exponents");
        }
    }
    return Ordinal::from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << format(a); }

} // namespace tfstatus
