#ifndef DYNATOMIC_FIELD_HPP
#define DYNATOMIC_FIELD_HPP

// The coefficient fields the library computes over: Q, F_{p^k}, and Q(t).
// FieldElement is the tagged exact scalar used by the sparse Poly layer;
// the dense engines (QPoly, GFPoly) are reached through it.

#include "dynatomic/finite_field.hpp"
#include "dynatomic/rational.hpp"
#include "dynatomic/rational_function.hpp"

#include <variant>

namespace dynatomic {

enum class FieldKind { Rationals, Finite, RationalFunctions };

class Field {
public:
    static Field Q();
    static Field GF(zp::u64 p, int k = 1);
    static Field GF(GFPtr ctx);
    static Field Qt(); // rational functions in the parameter t

    FieldKind kind() const { return kind_; }
    const GFPtr& gf() const { return gf_; }
    zp::u64 characteristic() const; // 0 for Q and Q(t)
    std::string name() const;

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Field(FieldKind k, GFPtr g) : kind_(k), gf_(std::move(g)) {}
    FieldKind kind_ = FieldKind::Rationals;
    GFPtr gf_;
};

class FieldElement {
public:
    FieldElement() : field_(Field::Q()), v_(Rational(0)) {}

    static FieldElement zero(const Field& f);
    static FieldElement one(const Field& f);
    // Embeds a rational constant; throws on denominator ≡ 0 in char p.
    static FieldElement from_rational(const Field& f, const Rational& q);
    static FieldElement of(Rational q);
    static FieldElement of(const Field& f, GFContext::Elem e);
    static FieldElement of(RatFunc r);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long e) const; // e may be negative

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    const Rational& rational() const;          // throws unless over Q
    const GFContext::Elem& gf_elem() const;    // throws unless finite
    const RatFunc& rat_func() const;           // throws unless over Q(t)

    std::string to_string() const;

private:
    FieldElement(Field f, std::variant<Rational, GFContext::Elem, RatFunc> v)
        : field_(std::move(f)), v_(std::move(v)) {}
    void require_same(const FieldElement& o) const;
    Field field_;
    std::variant<Rational, GFContext::Elem, RatFunc> v_;
};

} // namespace dynatomic

#endif
