#include "rooks/rational.hpp"

#include <stdexcept>

namespace rooks {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (start >= part.size()) throw std::invalid_argument("malformed rational: " + s);
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + s);
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    BigInt p(num), q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational ratio(std::int64_t p, std::int64_t q) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    Rational r{BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q))};
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

std::int64_t floor_int(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!r.fits_slong_p()) throw std::overflow_error("floor out of range");
    return r.get_si();
}

std::int64_t ceil_int(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!r.fits_slong_p()) throw std::overflow_error("ceil out of range");
    return r.get_si();
}

BigInt binomial(std::int64_t a, std::int64_t b) {
    if (b < 0) return 0;
    BigInt num = 1;
    for (std::int64_t i = 0; i < b; ++i) num *= BigInt(static_cast<long>(a - i));
    return num / factorial(b);
}

BigInt factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt catalan(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("catalan of negative index");
    return binomial(2 * n, n) / (n + 1);
}

}  // namespace rooks
