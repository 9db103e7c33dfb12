#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glq/errors.hpp"

namespace glq {

class Scalar;

// A finite field F_q, q = p^l, presented as Z_p[x]/(modulus) with a monic
// irreducible modulus of degree l. Instances are interned: make() returns a
// reference to a unique immutable object per (p, l, modulus), so field
// identity is pointer identity. Elements are indexed 0..q-1 by packing the
// coefficient vector c_0 + c_1 p + ... + c_{l-1} p^{l-1}; index 0 is the zero
// element and index 1 the unit, and enumeration order is index order.
class FieldSpec {
  public:
    // If modulus is omitted, picks the smallest monic irreducible of degree l
    // over Z_p, coefficient vectors compared lexicographically from the
    // constant term up. The choice is deterministic across runs and machines.
    static const FieldSpec& make(int p, int l,
                                 std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return p_; }
    int l() const { return l_; }
    int q() const { return q_; }
    // Coefficients of the modulus, constant term first, length l+1, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    // Arithmetic on packed element indices.
    uint16_t add(uint16_t a, uint16_t b) const { return add_[a * q_ + b]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add_[a * q_ + neg_[b]]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * q_ + b]; }
    uint16_t neg(uint16_t a) const { return neg_[a]; }
    uint16_t inv(uint16_t a) const;

    Scalar zero() const;
    Scalar one() const;
    Scalar element(uint16_t index) const;
    std::vector<Scalar> elements() const;

    // Coefficients of element `index`, constant term first, length l.
    std::vector<int> coeffs(uint16_t index) const;

    std::string to_text(uint16_t index) const;
    uint16_t parse(const std::string& text) const;

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

  private:
    FieldSpec(int p, int l, std::vector<int> modulus);

    int p_, l_, q_;
    std::vector<int> modulus_;
    std::vector<uint16_t> add_, mul_;
    std::vector<uint16_t> neg_, inv_;
};

// An element of an interned FieldSpec. Plain value type: two words, freely
// copyable, arithmetic via the field's tables. Operations on elements of
// different fields throw FieldMismatch.
class Scalar {
  public:
    Scalar() : f_(nullptr), v_(0) {}
    Scalar(const FieldSpec& f, uint16_t v) : f_(&f), v_(v) {}

    const FieldSpec& field() const { return *f_; }
    uint16_t index() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(Scalar o) const { return Scalar(*check(o), f_->add(v_, o.v_)); }
    Scalar operator-(Scalar o) const { return Scalar(*check(o), f_->sub(v_, o.v_)); }
    Scalar operator*(Scalar o) const { return Scalar(*check(o), f_->mul(v_, o.v_)); }
    Scalar operator-() const { return Scalar(*f_, f_->neg(v_)); }
    Scalar inv() const { return Scalar(*f_, f_->inv(v_)); }

    bool operator==(Scalar o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(Scalar o) const { return !(*this == o); }

    std::string to_text() const { return f_->to_text(v_); }

  private:
    const FieldSpec* check(Scalar o) const {
        if (f_ != o.f_) throw FieldMismatch("scalar operands belong to different fields");
        return f_;
    }
    const FieldSpec* f_;
    uint16_t v_;
};

inline Scalar FieldSpec::zero() const { return Scalar(*this, 0); }
inline Scalar FieldSpec::one() const { return Scalar(*this, 1); }

bool is_prime(long n);

}  // namespace glq
