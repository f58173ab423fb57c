#include "rcw/rational.hpp"

#include <cstdlib>

namespace rcw {

Rational Rational::parse(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        std::int64_t num = std::stoll(s.substr(0, slash));
        std::int64_t den = std::stoll(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational from \"" + s + "\"");
    }
}

}  // namespace rcw
