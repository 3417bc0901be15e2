#include "arbor/rational.hpp"

namespace arbor {

Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text), 1);
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw FormatError("malformed rational: " + text);
    }
}

}  // namespace arbor
