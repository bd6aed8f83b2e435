#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "benz/gf.hpp"

using namespace benz;

TEST_CASE("rejects non prime powers") {
  CHECK_THROWS_AS(Field::create(12), Error);
  CHECK_THROWS_AS(Field::create(1), Error);
  CHECK_THROWS_AS(Field::create(0), Error);
  CHECK_THROWS_AS(Field::create(6), Error);
  try {
    Field::create(12);
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_a_prime_power);
  }
}

TEST_CASE("gf4 canonical tables") {
  auto f = Field::create(4);
  // modulus x^2 + x + 1
  CHECK(f->modulus() == std::vector<int>{1, 1, 1});
  // elements 0,1,w,w+1 with w = x (index 2): w^2 = w + 1
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->mul(2, 3) == 1);
  CHECK(f->add(2, 3) == 1);
  CHECK(f->add(1, 1) == 0);
  CHECK(f->inv(2) == 3);
}

TEST_CASE("gf5 squares") {
  auto f = Field::create(5);
  std::set<int> squares;
  for (int a = 1; a < 5; ++a) squares.insert(f->mul(a, a));
  CHECK(squares == std::set<int>{1, 4});
  CHECK(f->quadratic_character(1) == QChar::square);
  CHECK(f->quadratic_character(4) == QChar::square);
  CHECK(f->quadratic_character(2) == QChar::nonsquare);
  CHECK(f->quadratic_character(3) == QChar::nonsquare);
  CHECK(f->quadratic_character(0) == QChar::zero);
  CHECK(f->smallest_nonsquare() == 2);
}

TEST_CASE("multiplicative group order and character counts") {
  for (long long q : {2LL, 3LL, 4LL, 5LL, 7LL, 8LL, 9LL, 16LL, 25LL, 27LL, 32LL,
                      49LL, 64LL, 81LL, 121LL, 128LL, 243LL, 256LL, 512LL, 1024LL}) {
    CAPTURE(q);
    auto f = Field::create(q);
    // a^(q-1) = 1 for every nonzero a
    for (int a = 1; a < q; ++a) CHECK(f->pow(a, q - 1) == 1);
    // exp/log mutually inverse on nonzero elements
    for (int a = 1; a < q; ++a) CHECK(f->exp_at(f->log_at(a)) == a);
    int squares = 0, nonsquares = 0;
    for (int a = 1; a < q; ++a) {
      auto ch = f->quadratic_character(a);
      if (ch == QChar::square) ++squares;
      else ++nonsquares;
    }
    if (q % 2 == 0) {
      CHECK(squares == q - 1);
      CHECK(nonsquares == 0);
    } else {
      CHECK(squares == (q - 1) / 2);
      CHECK(nonsquares == (q - 1) / 2);
    }
  }
}

TEST_CASE("field laws hold exhaustively on small fields") {
  for (long long q : {4LL, 5LL, 8LL, 9LL, 27LL}) {
    CAPTURE(q);
    auto f = Field::create(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        if (b != 0) CHECK(f->mul(f->div(a, b), b) == a);
        for (int c = 0; c < q; ++c) {
          if (q > 8 && c > 10) break;  // keep the distributivity pass cheap on q=27
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("nonsquare times nonsquare is square") {
  for (long long q : {3LL, 5LL, 7LL, 9LL, 25LL, 27LL}) {
    CAPTURE(q);
    auto f = Field::create(q);
    std::vector<int> ns;
    for (int a = 1; a < q; ++a)
      if (f->quadratic_character(a) == QChar::nonsquare) ns.push_back(a);
    for (int a : ns)
      for (int b : ns)
        CHECK(f->quadratic_character(f->mul(a, b)) == QChar::square);
  }
}

TEST_CASE("deterministic construction") {
  auto a = Field::create(81);
  auto b = Field::create(81);
  CHECK(a->modulus() == b->modulus());
  for (int i = 0; i < 80; ++i) CHECK(a->exp_at(i) == b->exp_at(i));
}

TEST_CASE("checked elements refuse cross-field arithmetic") {
  auto f = Field::create(7);
  auto g = Field::create(7);  // same order, distinct instance
  auto x = element(f, 3), y = element(g, 4);
  CHECK_THROWS_AS((void)(x + y), Error);
  try {
    (void)(x * y);
  } catch (const Error& e) {
    CHECK(e.code == Errc::field_mismatch);
  }
  auto z = element(f, 4);
  CHECK((x + z).idx == 0);
  CHECK((x * z).idx == 5);
  CHECK_THROWS_AS((void)(x / element(f, 0)), Error);
}

TEST_CASE("trace to prime field") {
  auto f = Field::create(8);
  int ones = 0;
  for (int a = 0; a < 8; ++a) {
    int t = f->trace_to_prime(a);
    CHECK((t == 0 || t == 1));
    if (t == 1) ++ones;
  }
  CHECK(ones == 4);  // trace is a balanced GF(2)-linear map
  CHECK(f->smallest_trace_one() >= 1);
}
