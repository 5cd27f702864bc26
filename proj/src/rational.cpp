#include "wrz/rational.hpp"

#include <cctype>

#include "wrz/errors.hpp"

namespace wrz {

Integer rat_floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rational rat_from_string(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t");
    size_t end = s.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw parameter_error("empty rational literal");
    std::string body = s.substr(begin, end - begin + 1);

    auto check_digits = [&](const std::string& part) {
        if (part.empty())
            throw parameter_error("bad rational literal: '" + s + "'");
        size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size())
            throw parameter_error("bad rational literal: '" + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw parameter_error("bad rational literal: '" + s + "'");
    };

    size_t slash = body.find('/');
    if (slash == std::string::npos) {
        check_digits(body);
        return Rational(Integer(body));
    }
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    check_digits(num);
    check_digits(den);
    Integer d(den);
    if (d == 0)
        throw parameter_error("zero denominator in '" + s + "'");
    return rat(Integer(num), d);
}

std::string rat_to_string(const Rational& r) {
    if (is_integer(r))
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace wrz
