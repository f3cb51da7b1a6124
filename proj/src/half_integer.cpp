#include "ringkepler/half_integer.hpp"

#include <stdexcept>

namespace ringkepler {

HalfInt HalfInt::parse(std::string_view text) {
    const std::string s(text);
    auto parse_int = [&](const std::string& part) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a half-integer: '" + s + "'");
        }
        if (used != part.size()) throw std::invalid_argument("not a half-integer: '" + s + "'");
        return v;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return HalfInt::from_int(parse_int(s));
    const int num = parse_int(s.substr(0, slash));
    const int den = parse_int(s.substr(slash + 1));
    if (den == 2) return HalfInt::from_twice(num);
    if (den == 1) return HalfInt::from_int(num);
    throw std::invalid_argument("denominator must be 1 or 2: '" + s + "'");
}

}  // namespace ringkepler
