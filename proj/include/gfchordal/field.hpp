#pragma once

#include <cstdint>
#include <vector>

namespace gfc {

/// Table-driven arithmetic in GF(q) for q in {2,3,4,5,7,8,9}.
///
/// Element e in [0, q) encodes the polynomial whose base-p digits are its
/// coefficients (lowest degree first), so 0 and 1 are the identities and the
/// prime subfield is {0, ..., p-1}. Non-prime fields use fixed moduli:
/// GF(4) x^2+x+1, GF(8) x^3+x+1, GF(9) x^2+1.
class Field {
 public:
  using Elem = std::uint8_t;

  explicit Field(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return d_; }
  /// Modulus coefficients over GF(p), constant term first, monic.
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  /// Multiplicative inverse; inv(0) is defined as 0.
  Elem inv(Elem a) const { return inv_[a]; }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a -> a^(p^power); the automorphism group of GF(q) is generated by power 1.
  Elem frobenius(Elem a, int power = 1) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.q_ == b.q_ && a.add_ == b.add_ && a.mul_ == b.mul_ && a.inv_ == b.inv_;
  }

 private:
  int q_;
  int p_;
  int d_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

bool is_supported_order(int q);

/// Builds a fresh field; throws Errc::unsupported_order.
Field make_field(int q);

/// Shared immutable instance for q; matroids hold pointers to these.
const Field& field_of(int q);

}  // namespace gfc
