#pragma once

/**
 * Exact slope arithmetic for isotopy classes of essential simple loops on the
 * one-holed torus and the four-holed sphere.
 *
 * A slope is a reduced extended rational p/q (1/0 is infinity).  Two slopes
 * are Farey neighbors when |pq' - p'q| = 1; those are exactly the curve pairs
 * of minimal positive intersection (one crossing on the torus, two on the
 * sphere).  The resolution of a neighbor pair is (p + lp')/(q + lq') with
 * l = pq' - p'q, and the Dehn twist along a curve acts on slopes through an
 * integer transvection whose local action on neighbors agrees with the
 * resolution.
 *
 * Everything is an immutable value over arbitrary-precision integers; all
 * functions are pure.
 */

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

enum class SurfaceKind { OneHoledTorus, FourHoledSphere };

std::string to_string(SurfaceKind kind);

// Canonical reduced fraction: gcd(|num|, |den|) = 1, den >= 0, and 1/0 is the
// unique representation of infinity.  Canonical form makes equality structural.
class Slope {
public:
    // Normalizes (p, q); throws std::domain_error on (0, 0).
    Slope(mpz_class p, mpz_class q);

    static Slope zero() { return Slope(0, 1); }
    static Slope infinity() { return Slope(1, 0); }

    // "p/q" with optional leading minus on p; unreduced input is accepted and
    // normalized.  Throws parse_error on anything else.
    static Slope parse(std::string_view text);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    mpz_class height() const; // max(|num|, |den|)
    std::string str() const;

    friend bool operator==(const Slope& x, const Slope& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Slope& x, const Slope& y) { return !(x == y); }

    // Ordered by (den, num); fixes the enumeration order everywhere.
    friend bool operator<(const Slope& x, const Slope& y);

private:
    mpz_class num_;
    mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// l = pq' - p'q.  Antisymmetric; +-1 exactly for Farey neighbors.
mpz_class det(const Slope& alpha, const Slope& beta);

bool is_neighbor(const Slope& alpha, const Slope& beta);

// Geometric intersection number in the slope model: |l| on the one-holed
// torus, 2|l| on the four-holed sphere.
mpz_class intersection_number(const Slope& alpha, const Slope& beta, SurfaceKind kind);

// Resolution (p + lp')/(q + lq'); defined for neighbor pairs only, throws
// std::domain_error otherwise.
Slope resolve(const Slope& alpha, const Slope& beta);

// Row-major 2x2 integer matrix.  Twist matrices have determinant +1.
struct IntMat2 {
    mpz_class a{1}, b{0};
    mpz_class c{0}, d{1};

    static IntMat2 identity() { return IntMat2{}; }

    mpz_class det() const;
    IntMat2 inverse() const; // |det| must be 1
    IntMat2 pow(long long n) const;
    IntMat2 negated() const;

    friend bool operator==(const IntMat2& x, const IntMat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const IntMat2& x, const IntMat2& y) { return !(x == y); }
};

IntMat2 operator*(const IntMat2& x, const IntMat2& y);
std::ostream& operator<<(std::ostream& os, const IntMat2& m);

// Transvection x -> x + det(alpha, x) * v_alpha on integer pairs (doubled on
// the four-holed sphere).  Determinant +1.  Acting on a neighbor slope it
// agrees with resolve(alpha, .) on the torus and with the double resolution
// alpha(alpha beta) on the sphere.
IntMat2 twist_matrix(const Slope& alpha, SurfaceKind kind);

// Projective action on slopes: M and -M act identically.  |det M| must be 1.
Slope apply_matrix(const IntMat2& m, const Slope& beta);

// n-fold Dehn twist of beta along alpha; twist(a, a, n) == a for all n.
Slope twist(const Slope& alpha, const Slope& beta, long long n, SurfaceKind kind);

// All canonical slopes with height <= h, ascending; empty for h < 1.
std::vector<Slope> slopes_up_to_height(long h);

// All Farey neighbors of alpha with height <= h, ascending.  Requires h >= 1.
std::vector<Slope> farey_neighbors(const Slope& alpha, long h);

} // namespace mcg
