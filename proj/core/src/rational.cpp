#include "minrank/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "minrank/error.hpp"

namespace minrank {

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos;
}

[[noreturn]] void malformed(std::string_view text, std::size_t pos, const char* why) {
    throw ParseError("bad rational '" + std::string(text) + "': " + why, pos);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    const std::size_t num_begin = pos;
    pos = scan_digits(text, pos);
    if (pos == num_begin) malformed(text, pos, "expected digits");
    const std::size_t num_end = pos;

    std::string_view den_digits = "1";
    if (pos < text.size() && text[pos] == '/') {
        const std::size_t den_begin = ++pos;
        pos = scan_digits(text, pos);
        if (pos == den_begin) malformed(text, pos, "expected denominator digits");
        den_digits = text.substr(den_begin, pos - den_begin);
    }
    if (pos != text.size()) malformed(text, pos, "unexpected character");

    mpz_class num(std::string(text.substr(num_begin, num_end - num_begin)));
    if (text.front() == '-') num = -num;
    const mpz_class den{std::string(den_digits)};
    if (den == 0) malformed(text, text.find('/') + 1, "zero denominator");
    return Rational(num, den);
}

}  // namespace minrank
