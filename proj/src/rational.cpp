#include "legsurg/rational.hpp"

namespace legsurg {

std::string rat_str(const Rational& r) {
    std::string s = rat_num(r).str();
    if (!is_integer(r)) {
        s += "/";
        s += rat_den(r).str();
    }
    return s;
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("bad rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part) -> Integer {
        if (part.empty()) bad();
        bool negative = part[0] == '-';
        size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) bad();
        for (size_t k = i; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9') bad();
        Integer v(std::string(part.substr(i)));
        return negative ? Integer(-v) : v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) bad();
    return make_rational(num, den);
}

}  // namespace legsurg
