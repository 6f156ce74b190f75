#include "todakdv/diffpoly/rational.hpp"

#include <stdexcept>

namespace todakdv::diffpoly {

Rational::Rational(long n, long d)
{
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q)
{
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + s + "'"); };
    if (s.empty())
        throw bad();
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw bad();
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    return Rational(mpq_class(n, d));
}

long double Rational::to_long_double() const
{
    const mpz_class& n = q_.get_num();
    const mpz_class& d = q_.get_den();
    if (n.fits_slong_p() && d.fits_slong_p())
        return static_cast<long double>(n.get_si()) / static_cast<long double>(d.get_si());
    return q_.get_d();
}

std::string Rational::str() const
{
    return q_.get_str(10);
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

}  // namespace todakdv::diffpoly
