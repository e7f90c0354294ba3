#include "lcnf/numeric.hpp"

#include <stdexcept>

namespace lcnf {

big_int floor(const rational& r)
{
    const big_int num = numerator(r);
    const big_int den = denominator(r); // positive
    big_int q = num / den;              // truncates toward zero
    if (num < 0 && q * den != num)
        --q;
    return q;
}

big_int ceil(const rational& r)
{
    return -floor(-r);
}

std::string to_string(const rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

rational parse_rational(const std::string& text)
{
    auto fail = [&] { throw std::invalid_argument("not a rational number: '" + text + "'"); };
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            fail();
        return big_int{s};
    };
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    rational value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        const auto den = parse_int(body.substr(slash + 1));
        if (den == 0)
            fail();
        value = rational{parse_int(body.substr(0, slash)), den};
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty())
            fail();
        big_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        value = rational{whole.empty() ? big_int{0} : parse_int(whole)} +
                (frac.empty() ? rational{0} : rational{parse_int(frac), scale});
    } else {
        value = rational{parse_int(body)};
    }
    return negative ? rational{-value} : value;
}

rational pow2(long long e)
{
    big_int p = 1;
    p <<= static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? rational{big_int{1}, p} : rational{p};
}

} // namespace lcnf
