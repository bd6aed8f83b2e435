#include "benz/gf.hpp"

#include <algorithm>

namespace benz {
namespace {

// ==== polynomial helpers over GF(p), coefficient vectors low-to-high ====

void poly_trim(std::vector<int>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
  poly_trim(f);
  int dg = (int)g.size() - 1;
  while ((int)f.size() - 1 >= dg && !f.empty()) {
    int df = (int)f.size() - 1;
    int c = f.back();
    for (int i = 0; i <= dg; ++i) {
      int& t = f[df - dg + i];
      t = (t - c * g[i]) % p;
      if (t < 0) t += p;
    }
    poly_trim(f);
  }
  return f;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& mod, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(prod), mod, p);
}

bool is_irreducible(const std::vector<int>& f, int p) {
  int e = (int)f.size() - 1;
  // trial division by every monic polynomial of degree 1..e/2
  std::vector<int> g;
  for (int d = 1; 2 * d <= e; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      g.assign(d + 1, 0);
      long long v = idx;
      for (int i = 0; i < d; ++i) { g[i] = (int)(v % p); v /= p; }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::create(long long q) {
  if (q < 2 || q > (1 << 16)) fail(Errc::not_a_prime_power, std::to_string(q) + " is out of range");
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  if (p == 0) p = q;  // q itself prime
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(Errc::not_a_prime_power, std::to_string(q) + " is not a prime power");
  int e = 0;
  long long t = q;
  while (t > 1) {
    if (t % p != 0) fail(Errc::not_a_prime_power, std::to_string(q) + " is not a prime power");
    t /= p;
    ++e;
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->q_ = q;
  f->p_ = (int)p;
  f->e_ = e;

  if (e == 1) {
    f->modulus_ = {0, 1};  // x
  } else {
    // smallest irreducible monic of degree e, ordered by the p-adic index
    // of the constant..sub-leading coefficients
    for (long long idx = 0;; ++idx) {
      std::vector<int> cand(e + 1, 0);
      long long v = idx;
      for (int i = 0; i < e; ++i) { cand[i] = (int)(v % p); v /= p; }
      cand[e] = 1;
      if (is_irreducible(cand, (int)p)) { f->modulus_ = cand; break; }
    }
  }

  // element index <-> coefficient vector is p-adic; bootstrap mul on vectors
  auto decode = [&](long long a) {
    std::vector<int> c(e, 0);
    for (int i = 0; i < e; ++i) { c[i] = (int)(a % p); a /= p; }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    long long v = 0;
    for (int i = (int)c.size() - 1; i >= 0; --i) v = v * p + c[i];
    return (int)v;
  };
  auto mul_slow = [&](int a, int b) {
    auto prod = poly_mul_mod(decode(a), decode(b), f->modulus_, (int)p);
    prod.resize(e, 0);
    return encode(prod);
  };

  // primitive element: smallest index of multiplicative order q-1
  int gen = 1;
  if (q > 2) {
    for (int cand = 2; cand < q; ++cand) {
      int x = cand;
      long long ord = 1;
      while (x != 1) { x = mul_slow(x, cand); ++ord; }
      if (ord == q - 1) { gen = cand; break; }
    }
  }

  f->exp_.resize(q - 1);
  f->log_.assign(q, -1);
  int x = 1;
  for (long long i = 0; i < q - 1; ++i) {
    f->exp_[i] = x;
    f->log_[x] = (int)i;
    x = mul_slow(x, gen);
  }
  if (x != 1) fail(Errc::internal, "exp table does not close");

  f->neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    auto c = decode(a);
    for (int& ci : c) ci = (p - ci) % (int)p;
    f->neg_[a] = encode(c);
  }

  if (q <= 1024) {
    f->add_table_.resize((size_t)q * q);
    for (int a = 0; a < q; ++a) {
      auto ca = decode(a);
      for (int b = 0; b < q; ++b) {
        auto cb = decode(b);
        std::vector<int> c(e);
        for (int i = 0; i < e; ++i) c[i] = (ca[i] + cb[i]) % (int)p;
        f->add_table_[(size_t)a * q + b] = encode(c);
      }
    }
  }
  return f;
}

int Field::add_slow(int a, int b) const {
  auto ca = coeffs(a), cb = coeffs(b);
  std::vector<int> c(e_);
  for (int i = 0; i < e_; ++i) c[i] = (ca[i] + cb[i]) % p_;
  return from_coeffs(c);
}

int Field::pow(int a, long long n) const {
  if (a == 0) return n == 0 ? 1 : 0;
  long long r = log_[a] % (q_ - 1);
  long long k = ((n % (q_ - 1)) * r) % (q_ - 1);
  if (k < 0) k += q_ - 1;
  return exp_[k];
}

int Field::trace_to_prime(int a) const {
  int acc = 0;
  int x = a;
  for (int i = 0; i < e_; ++i) {
    acc = add(acc, x);
    x = pow(x, p_);
  }
  return acc;
}

std::vector<int> Field::coeffs(int a) const {
  std::vector<int> c(e_, 0);
  long long v = a;
  for (int i = 0; i < e_; ++i) { c[i] = (int)(v % p_); v /= p_; }
  return c;
}

int Field::from_coeffs(const std::vector<int>& c) const {
  long long v = 0;
  for (int i = (int)c.size() - 1; i >= 0; --i) v = v * p_ + c[i];
  return (int)v;
}

int Field::smallest_nonsquare() const {
  if (p_ == 2) fail(Errc::wrong_parity, "no nonsquares in even characteristic");
  for (int a = 2; a < q_; ++a)
    if (quadratic_character(a) == QChar::nonsquare) return a;
  fail(Errc::internal, "no nonsquare found");
}

int Field::smallest_trace_one() const {
  if (p_ != 2) fail(Errc::wrong_parity, "trace-one pick is for even q");
  for (int a = 1; a < q_; ++a)
    if (trace_to_prime(a) == 1) return a;
  fail(Errc::internal, "no trace-one element");
}

}  // namespace benz
