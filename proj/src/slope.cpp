#include "mcg/slope.hpp"

#include "mcg/errors.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mcg {

std::string to_string(SurfaceKind kind) {
    return kind == SurfaceKind::OneHoledTorus ? "torus" : "s04";
}

Slope::Slope(mpz_class p, mpz_class q) : num_(std::move(p)), den_(std::move(q)) {
    if (num_ == 0 && den_ == 0)
        throw std::domain_error("slope 0/0 is undefined");
    if (den_ == 0) {
        num_ = 1; // canonical infinity
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

} // namespace

Slope Slope::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw parse_error("slope must be written p/q: '" + std::string(text) + "'");
    std::string_view ns = text.substr(0, slash);
    std::string_view ds = text.substr(slash + 1);
    bool neg = false;
    if (!ns.empty() && ns.front() == '-') {
        neg = true;
        ns.remove_prefix(1);
    }
    if (!all_digits(ns) || !all_digits(ds))
        throw parse_error("slope must be written p/q: '" + std::string(text) + "'");
    mpz_class p(std::string(ns), 10);
    mpz_class q(std::string(ds), 10);
    if (neg)
        p = -p;
    if (p == 0 && q == 0)
        throw parse_error("slope 0/0 is undefined");
    return Slope(p, q);
}

mpz_class Slope::height() const {
    mpz_class an = abs(num_);
    return an >= den_ ? an : den_;
}

std::string Slope::str() const {
    return num_.get_str() + "/" + den_.get_str();
}

bool operator<(const Slope& x, const Slope& y) {
    int c = cmp(x.den_, y.den_);
    if (c != 0)
        return c < 0;
    return cmp(x.num_, y.num_) < 0;
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
    return os << s.str();
}

mpz_class det(const Slope& alpha, const Slope& beta) {
    return alpha.num() * beta.den() - beta.num() * alpha.den();
}

bool is_neighbor(const Slope& alpha, const Slope& beta) {
    mpz_class l = det(alpha, beta);
    return l == 1 || l == -1;
}

mpz_class intersection_number(const Slope& alpha, const Slope& beta, SurfaceKind kind) {
    mpz_class n = abs(det(alpha, beta));
    return kind == SurfaceKind::OneHoledTorus ? n : mpz_class(2 * n);
}

Slope resolve(const Slope& alpha, const Slope& beta) {
    mpz_class l = det(alpha, beta);
    if (l != 1 && l != -1)
        throw std::domain_error("resolution is defined for Farey neighbors only (|det| = " +
                                mpz_class(abs(l)).get_str() + ")");
    return Slope(alpha.num() + l * beta.num(), alpha.den() + l * beta.den());
}

mpz_class IntMat2::det() const {
    return a * d - b * c;
}

IntMat2 IntMat2::inverse() const {
    mpz_class dt = det();
    if (dt == 1)
        return IntMat2{d, -b, -c, a};
    if (dt == -1)
        return IntMat2{-d, b, c, -a};
    throw std::domain_error("matrix is not invertible over the integers");
}

IntMat2 IntMat2::pow(long long n) const {
    IntMat2 base = *this;
    unsigned long long e;
    if (n < 0) {
        base = inverse();
        e = static_cast<unsigned long long>(-(n + 1)) + 1ULL;
    } else {
        e = static_cast<unsigned long long>(n);
    }
    IntMat2 acc = identity();
    while (e != 0) {
        if (e & 1ULL)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

IntMat2 IntMat2::negated() const {
    return IntMat2{-a, -b, -c, -d};
}

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
    return IntMat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

IntMat2 twist_matrix(const Slope& alpha, SurfaceKind kind) {
    const mpz_class& p = alpha.num();
    const mpz_class& q = alpha.den();
    int k = kind == SurfaceKind::OneHoledTorus ? 1 : 2;
    return IntMat2{1 - k * p * q, k * p * p, -k * q * q, 1 + k * p * q};
}

Slope apply_matrix(const IntMat2& m, const Slope& beta) {
    mpz_class dt = m.det();
    if (dt != 1 && dt != -1)
        throw std::domain_error("slope action requires |det| = 1");
    return Slope(m.a * beta.num() + m.b * beta.den(), m.c * beta.num() + m.d * beta.den());
}

Slope twist(const Slope& alpha, const Slope& beta, long long n, SurfaceKind kind) {
    return apply_matrix(twist_matrix(alpha, kind).pow(n), beta);
}

std::vector<Slope> slopes_up_to_height(long h) {
    std::vector<Slope> out;
    if (h < 1)
        return out;
    out.push_back(Slope::infinity());
    for (long q = 1; q <= h; ++q)
        for (long p = -h; p <= h; ++p)
            if (std::gcd(p < 0 ? -p : p, q) == 1)
                out.emplace_back(p, q);
    return out;
}

std::vector<Slope> farey_neighbors(const Slope& alpha, long h) {
    if (h < 1)
        throw std::domain_error("height bound must be at least 1");
    std::vector<Slope> out;
    for (const Slope& s : slopes_up_to_height(h))
        if (is_neighbor(alpha, s))
            out.push_back(s);
    return out;
}

} // namespace mcg
