#include "gfchordal/field.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

#include "gfchordal/error.hpp"

namespace gfc {

namespace {

struct OrderInfo {
  int p;
  int d;
  std::vector<int> modulus;
};

OrderInfo order_info(int q) {
  switch (q) {
    case 2: return {2, 1, {0, 1}};
    case 3: return {3, 1, {0, 1}};
    case 5: return {5, 1, {0, 1}};
    case 7: return {7, 1, {0, 1}};
    case 4: return {2, 2, {1, 1, 1}};
    case 8: return {2, 3, {1, 1, 0, 1}};
    case 9: return {3, 2, {1, 0, 1}};
    default:
      throw Error(Errc::unsupported_order, "unsupported field order " + std::to_string(q));
  }
}

std::vector<int> digits(int e, int p, int d) {
  std::vector<int> c(d);
  for (int i = 0; i < d; ++i) {
    c[i] = e % p;
    e /= p;
  }
  return c;
}

int encode(const std::vector<int>& c, int p) {
  int e = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) e = e * p + c[i];
  return e;
}

}  // namespace

bool is_supported_order(int q) {
  return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9;
}

Field::Field(int q) : q_(q) {
  OrderInfo info = order_info(q);
  p_ = info.p;
  d_ = info.d;
  modulus_ = std::move(info.modulus);

  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    const auto ca = digits(a, p_, d_);
    for (int b = 0; b < q; ++b) {
      const auto cb = digits(b, p_, d_);
      std::vector<int> sum(d_);
      for (int i = 0; i < d_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
      add_[a * q + b] = static_cast<Elem>(encode(sum, p_));

      // schoolbook product, then reduce by the monic modulus from the top
      std::vector<int> prod(2 * d_ - 1, 0);
      for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      for (int k = 2 * d_ - 2; k >= d_; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        for (int i = 0; i <= d_; ++i) {
          prod[k - d_ + i] = ((prod[k - d_ + i] - c * modulus_[i]) % p_ + p_) % p_;
        }
      }
      prod.resize(d_);
      mul_[a * q + b] = static_cast<Elem>(encode(prod, p_));
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<Elem>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
}

Field::Elem Field::frobenius(Elem a, int power) const {
  Elem result = a;
  for (int k = 0; k < power; ++k) {
    Elem x = 1;
    for (int i = 0; i < p_; ++i) x = mul(x, result);
    result = x;
  }
  return result;
}

Field make_field(int q) { return Field(q); }

const Field& field_of(int q) {
  static std::array<std::unique_ptr<Field>, 10> cache;
  static std::mutex mu;
  if (!is_supported_order(q)) {
    throw Error(Errc::unsupported_order, "unsupported field order " + std::to_string(q));
  }
  std::lock_guard lock(mu);
  if (!cache[q]) cache[q] = std::make_unique<Field>(q);
  return *cache[q];
}

}  // namespace gfc
