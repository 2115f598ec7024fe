#include <uivd/error.hpp>
#include <uivd/rational.hpp>

#include <charconv>
#include <numeric>

namespace uivd {

namespace
{
    std::int64_t narrow(__int128 v)
    {
        if (v > INT64_MAX || v < INT64_MIN)
            throw DomainError("rational overflow");
        return static_cast<std::int64_t>(v);
    }

    Rational make(__int128 num, __int128 den)
    {
        if (den < 0)
            num = -num, den = -den;
        __int128 a = num < 0 ? -num : num, b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1)
            num /= a, den /= a;
        return Rational(narrow(num), narrow(den));
    }
}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    if (den < 0)
        num = -num, den = -den;
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::to_string() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text)
{
    std::int64_t p = 0, q = 1;
    auto slash = text.find('/');
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    const char* mid = slash == std::string::npos ? end : text.data() + slash;
    auto r = std::from_chars(begin, mid, p);
    if (r.ec != std::errc() || r.ptr != mid)
        throw DomainError("malformed rational '" + text + "'");
    if (slash != std::string::npos) {
        auto r2 = std::from_chars(mid + 1, end, q);
        if (r2.ec != std::errc() || r2.ptr != end)
            throw DomainError("malformed rational '" + text + "'");
    }
    return Rational(p, q);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b)
{
    return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept
{
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

} // namespace uivd
