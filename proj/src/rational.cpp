#include "sapp/scalar.hpp"

#include <cctype>

#include "sapp/errors.hpp"

namespace sapp {

Rational::Rational(long p, long q) {
    if (q == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(p, q);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_literal(p) || !is_integer_literal(q) || q[0] == '-' || q[0] == '+')
        throw ParseError("bad rational literal: \"" + s + "\"");
    if (p[0] == '+') p = p.substr(1);
    mpz_class num(p, 10), den(q, 10);
    if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
    mpq_class v(num, den);
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace sapp
