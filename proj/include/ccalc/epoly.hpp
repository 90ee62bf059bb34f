#pragma once

#include <map>
#include <string>
#include <utility>

#include "ccalc/ring.hpp"

namespace ccalc {

/// Lower bound on y-exponents a computation may produce before the library
/// assumes runaway Laurent descent and throws LaurentGuardError. Every
/// expression in scope is a finite sum, so hitting the guard signals a bug
/// (or a deliberately tightened floor).
int laurent_guard_floor();
void set_laurent_guard_floor(int floor);

/// Sparse polynomial in the equivariant generators x and y with BaseClass
/// coefficients. x-exponents are >= 0; y-exponents may be negative (Laurent).
/// Both generators have cohomological degree 2, so the total degree of a term
/// x^i y^j m is 2i + 2j + deg(m). Values are canonical: zero coefficients are
/// never stored.
class EquivPoly {
public:
    struct Key {
        int x = 0;
        int y = 0;
        bool operator<(const Key& o) const { return x != o.x ? x < o.x : y < o.y; }
        bool operator==(const Key& o) const { return x == o.x && y == o.y; }
    };
    using Terms = std::map<Key, BaseClass>;

    explicit EquivPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static EquivPoly from_base(const BaseClass& b) { return monomial(b, 0, 0); }
    static EquivPoly monomial(const BaseClass& b, int x_exp, int y_exp);
    static EquivPoly unit(const RingPtr& ring) { return from_base(BaseClass::unit(ring)); }
    static EquivPoly x(const RingPtr& ring) { return monomial(BaseClass::unit(ring), 1, 0); }
    static EquivPoly y(const RingPtr& ring) { return monomial(BaseClass::unit(ring), 0, 1); }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True when no negative y-power is present.
    bool polynomial_in_y() const;
    /// Smallest supported y-exponent (0 when zero).
    int y_floor() const;
    /// Largest supported x-exponent (-1 when zero).
    int x_degree() const;

    BaseClass coefficient(int x_exp, int y_exp) const;
    /// All terms with the given x-exponent, re-keyed at x-exponent 0.
    EquivPoly x_coefficient(int x_exp) const;

    EquivPoly operator-() const;
    EquivPoly operator+(const EquivPoly& o) const;
    EquivPoly operator-(const EquivPoly& o) const;
    EquivPoly operator*(const EquivPoly& o) const;
    EquivPoly operator*(const BaseClass& b) const;
    EquivPoly operator*(const Int& c) const;
    EquivPoly& operator+=(const EquivPoly& o) { return *this = *this + o; }
    EquivPoly& operator-=(const EquivPoly& o) { return *this = *this - o; }
    EquivPoly& operator*=(const EquivPoly& o) { return *this = *this * o; }
    bool operator==(const EquivPoly& o) const;
    bool operator!=(const EquivPoly& o) const { return !(*this == o); }

    EquivPoly pow(int n) const;  // n >= 0
    /// Multiplies by x^dx y^dy (dy may be negative).
    EquivPoly shifted(int dx, int dy) const;
    /// Substitutes t for x; y and base coefficients pass through.
    EquivPoly substitute_x(const EquivPoly& t) const;

    /// The y^0 slice together with a flag reporting whether any negative
    /// y-power had a nonzero coefficient (evaluation at y = 0 is then not a
    /// polynomial operation; callers decide how to react).
    std::pair<EquivPoly, bool> eval_y_zero() const;

    /// True when all terms share one total degree (zero passes; the degree is
    /// reported through `degree` when non-null and the value is nonzero).
    bool is_homogeneous(int* degree = nullptr) const;

private:
    void insert_term(int x_exp, int y_exp, const BaseClass& b);
    void require_same_ring(const EquivPoly& o) const;

    RingPtr ring_;
    Terms terms_;
};

std::string to_string(const EquivPoly& p);

}  // namespace ccalc
