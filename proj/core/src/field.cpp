#include "dynatomic/field.hpp"

#include <stdexcept>

namespace dynatomic {

Field Field::Q() { return Field(FieldKind::Rationals, nullptr); }
Field Field::GF(zp::u64 p, int k) { return Field(FieldKind::Finite, GFContext::make(p, k)); }
Field Field::GF(GFPtr ctx) { return Field(FieldKind::Finite, std::move(ctx)); }
Field Field::Qt() { return Field(FieldKind::RationalFunctions, nullptr); }

zp::u64 Field::characteristic() const { return kind_ == FieldKind::Finite ? gf_->p() : 0; }

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Finite: return gf_->name();
        case FieldKind::RationalFunctions: return "Q(t)";
    }
    return "?";
}

bool Field::operator==(const Field& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ != FieldKind::Finite) return true;
    return gf_->same(*o.gf_);
}

FieldElement FieldElement::zero(const Field& f) {
    switch (f.kind()) {
        case FieldKind::Rationals: return FieldElement(f, Rational(0));
        case FieldKind::Finite: return FieldElement(f, f.gf()->zero());
        case FieldKind::RationalFunctions: return FieldElement(f, RatFunc{});
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::one(const Field& f) {
    switch (f.kind()) {
        case FieldKind::Rationals: return FieldElement(f, Rational(1));
        case FieldKind::Finite: return FieldElement(f, f.gf()->one());
        case FieldKind::RationalFunctions: return FieldElement(f, rf::from_rational(Rational(1)));
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::from_rational(const Field& f, const Rational& q) {
    switch (f.kind()) {
        case FieldKind::Rationals: return FieldElement(f, q);
        case FieldKind::Finite: return FieldElement(f, f.gf()->from_rational(q));
        case FieldKind::RationalFunctions: return FieldElement(f, rf::from_rational(q));
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::of(Rational q) { return FieldElement(Field::Q(), std::move(q)); }

FieldElement FieldElement::of(const Field& f, GFContext::Elem e) {
    if (f.kind() != FieldKind::Finite) throw std::invalid_argument("of: field is not finite");
    return FieldElement(f, std::move(e));
}

FieldElement FieldElement::of(RatFunc r) { return FieldElement(Field::Qt(), std::move(r)); }

void FieldElement::require_same(const FieldElement& o) const {
    if (field_ != o.field_) {
        throw std::invalid_argument("FieldElement: mixed fields " + field_.name() + " and " + o.field_.name());
    }
}

bool FieldElement::is_zero() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: return std::get<Rational>(v_) == 0;
        case FieldKind::Finite: return field_.gf()->is_zero(std::get<GFContext::Elem>(v_));
        case FieldKind::RationalFunctions: return std::get<RatFunc>(v_).is_zero();
    }
    return false;
}

bool FieldElement::is_one() const { return *this == one(field_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    switch (field_.kind()) {
        case FieldKind::Rationals:
            return FieldElement(field_, std::get<Rational>(v_) + std::get<Rational>(o.v_));
        case FieldKind::Finite:
            return FieldElement(field_, field_.gf()->add(std::get<GFContext::Elem>(v_),
                                                         std::get<GFContext::Elem>(o.v_)));
        case FieldKind::RationalFunctions:
            return FieldElement(field_, rf::add(std::get<RatFunc>(v_), std::get<RatFunc>(o.v_)));
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    switch (field_.kind()) {
        case FieldKind::Rationals:
            return FieldElement(field_, std::get<Rational>(v_) - std::get<Rational>(o.v_));
        case FieldKind::Finite:
            return FieldElement(field_, field_.gf()->sub(std::get<GFContext::Elem>(v_),
                                                         std::get<GFContext::Elem>(o.v_)));
        case FieldKind::RationalFunctions:
            return FieldElement(field_, rf::sub(std::get<RatFunc>(v_), std::get<RatFunc>(o.v_)));
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    switch (field_.kind()) {
        case FieldKind::Rationals:
            return FieldElement(field_, std::get<Rational>(v_) * std::get<Rational>(o.v_));
        case FieldKind::Finite:
            return FieldElement(field_, field_.gf()->mul(std::get<GFContext::Elem>(v_),
                                                         std::get<GFContext::Elem>(o.v_)));
        case FieldKind::RationalFunctions:
            return FieldElement(field_, rf::mul(std::get<RatFunc>(v_), std::get<RatFunc>(o.v_)));
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator-() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: return FieldElement(field_, -std::get<Rational>(v_));
        case FieldKind::Finite:
            return FieldElement(field_, field_.gf()->neg(std::get<GFContext::Elem>(v_)));
        case FieldKind::RationalFunctions:
            return FieldElement(field_, rf::neg(std::get<RatFunc>(v_)));
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
    switch (field_.kind()) {
        case FieldKind::Rationals:
            return FieldElement(field_, Rational(1) / std::get<Rational>(v_));
        case FieldKind::Finite:
            return FieldElement(field_, field_.gf()->inv(std::get<GFContext::Elem>(v_)));
        case FieldKind::RationalFunctions:
            return FieldElement(field_, rf::inv(std::get<RatFunc>(v_)));
    }
    throw std::logic_error("unreachable");
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = one(field_);
    FieldElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_) return false;
    return v_ == o.v_;
}

const Rational& FieldElement::rational() const {
    if (field_.kind() != FieldKind::Rationals) throw std::logic_error("not a rational");
    return std::get<Rational>(v_);
}

const GFContext::Elem& FieldElement::gf_elem() const {
    if (field_.kind() != FieldKind::Finite) throw std::logic_error("not a finite-field element");
    return std::get<GFContext::Elem>(v_);
}

const RatFunc& FieldElement::rat_func() const {
    if (field_.kind() != FieldKind::RationalFunctions) throw std::logic_error("not a rational function");
    return std::get<RatFunc>(v_);
}

std::string FieldElement::to_string() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: return dynatomic::to_string(std::get<Rational>(v_));
        case FieldKind::Finite: return field_.gf()->to_string(std::get<GFContext::Elem>(v_));
        case FieldKind::RationalFunctions: return rf::to_string(std::get<RatFunc>(v_));
    }
    return "?";
}

} // namespace dynatomic
