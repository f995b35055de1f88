#include <random>
#include <string>

#include "doctest.h"
#include "fractops/address.hpp"
#include "fractops/error.hpp"
#include "oracles.hpp"

using namespace fractops;

namespace {

AddressPrefix P(const char* s) { return AddressPrefix::parse(s); }

std::string random_word(std::mt19937_64& rng, int max_len, int n) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> sym(1, n);
  std::string out;
  for (int k = len(rng); k > 0; --k) out.push_back(static_cast<char>('0' + sym(rng)));
  return out;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

}  // namespace

TEST_CASE("tops_compare examples") {
  CHECK(tops_compare(P("2"), P("1")) == std::strong_ordering::less);
  CHECK(tops_compare(P("13"), P("13")) == std::strong_ordering::equal);
  CHECK(tops_compare(P("1"), P("12")) == std::strong_ordering::greater);
  CHECK(tops_compare(P(""), P("1111")) == std::strong_ordering::equal);
}

TEST_CASE("code_metric examples") {
  CHECK(code_metric(P("3142"), P("3142")) == 0.0);
  CHECK(code_metric(P("1"), P("2")) == 0.5);
  CHECK(code_metric(P("112"), P("111")) == 0.125);
  CHECK(code_metric(P("2"), P("21111")) == 0.0);
}

TEST_CASE("shift, concat and accumulators") {
  CHECK(shift(P("2413")) == P("413"));
  CHECK(shift(P("")) == P(""));
  CHECK(shift(P("7")) == P(""));
  CHECK(concat(P("3"), P("12")) == P("312"));
  CHECK(concat(P(""), P("12")) == P("12"));
  CHECK(concat(P("12"), P("")) == P("12"));

  const BoundedConcat cut = concat_bounded(P("123"), P("456"), 4);
  CHECK(cut.prefix == P("1234"));
  CHECK(cut.truncated);
  CHECK_FALSE(concat_bounded(P("12"), P("3"), 4).truncated);

  ReverseAccumulator acc(4);
  CHECK(acc_push(acc, 3).read() == P("3"));
  acc = acc_push(acc_push(acc, 2), 1);
  CHECK(acc.read() == P("12"));
  CHECK(acc.padded().size() == 4);
  for (Symbol s : {4, 4, 4}) acc.push(s);
  CHECK(acc.read() == P("4441"));
  CHECK(acc.size() == 4);
}

TEST_CASE("parse and print") {
  CHECK(P("3122").to_string() == "3122");
  CHECK(AddressPrefix::repeated(2, 3) == P("222"));
  CHECK(P("3122").truncated(2) == P("31"));
  CHECK_THROWS_AS(P("12a"), ValidationError);
  CHECK_THROWS_AS(P("102"), ValidationError);
}

TEST_CASE("tops order and code metric match the string oracles on random prefixes") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20000; ++t) {
    const std::string p = random_word(rng, 8, 4);
    const std::string q = random_word(rng, 8, 4);
    const AddressPrefix a = AddressPrefix::parse(p);
    const AddressPrefix b = AddressPrefix::parse(q);
    REQUIRE(sign(tops_compare(a, b)) == oracle::tops_compare(p, q));
    REQUIRE(code_metric(a, b) == oracle::code_metric(p, q));
    // Padding invariance: appended 1s never change the address.
    REQUIRE(tops_compare(concat(a, P("11")), a) == std::strong_ordering::equal);
  }
}

TEST_CASE("shift is 2-Lipschitz on the code metric") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5000; ++t) {
    const AddressPrefix a = AddressPrefix::parse(random_word(rng, 7, 3));
    const AddressPrefix b = AddressPrefix::parse(random_word(rng, 7, 3));
    REQUIRE(code_metric(shift(a), shift(b)) <= 2.0 * code_metric(a, b));
  }
}

TEST_CASE("concatenation preserves tops order of the tail") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 5000; ++t) {
    const AddressPrefix w = AddressPrefix::parse(random_word(rng, 3, 4));
    const AddressPrefix a = AddressPrefix::parse(random_word(rng, 5, 4));
    const AddressPrefix b = AddressPrefix::parse(random_word(rng, 5, 4));
    REQUIRE(tops_compare(concat(w, a), concat(w, b)) == tops_compare(a, b));
  }
}
