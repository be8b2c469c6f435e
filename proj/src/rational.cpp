#include <jetmoduli/rational.hpp>

#include <ostream>

namespace jetmoduli {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty())
        throw std::invalid_argument("Rational::parse: malformed fraction '" + s + "'");
    return Rational(Int(num), Int(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace jetmoduli
