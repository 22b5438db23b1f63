#include <doctest.h>

#include "necklace/frobenius.hpp"

using namespace necklace;

TEST_CASE("S2 loads with two generators and validates") {
  Frobenius F = builtin("S2");
  CHECK(F.dim() == 2);
  CHECK(F.m == 2);
  CHECK(F.degree[F.basis_index("e2")] == 2);
  Report r = validate_frobenius(F);
  INFO(r.text());
  CHECK(r.all_pass());
  CHECK(F.pairing(F.basis_index("e2"), F.basis_index("e0")) == Rat(1));
  CHECK(F.pairing(F.basis_index("e2"), F.basis_index("e2")) == Rat(0));
}

TEST_CASE("document missing counit is a missing-field error") {
  const char* doc = R"(
name broken
frobenius_degree 2
basis
e0 0
unit e0
coproduct
e0 -> 1 (e0 (x) e0)
)";
  try {
    load_frobenius(doc);
    FAIL("expected LoadError");
  } catch (const LoadError& e) {
    CHECK(e.kind == LoadError::Kind::MissingField);
  }
}

TEST_CASE("malformed line is a parse error") {
  CHECK_THROWS_AS(load_frobenius("name x\nfrobenius_degree 2\nbasis\ne0 zero\n"), LoadError);
}

TEST_CASE("degree-violating structure constant is a degree error") {
  const char* doc = R"(
name broken
frobenius_degree 2
basis
e0 0
e2 2
unit e0
counit
e0 -> 1
product
e2 e2 -> 1 e0
coproduct
e0 -> 1 (e0 (x) e0)
)";
  try {
    load_frobenius(doc);
    FAIL("expected LoadError");
  } catch (const LoadError& e) {
    CHECK(e.kind == LoadError::Kind::Degree);
  }
}

TEST_CASE("every builtin validates") {
  for (const auto& name : builtin_names()) {
    Frobenius F = builtin(name);
    Report r = validate_frobenius(F);
    INFO(name, ":\n", r.text());
    CHECK(r.all_pass());
  }
}

TEST_CASE("S2xS2 coideal and pairing") {
  Frobenius F = builtin("S2xS2");
  Coideal C = coideal(F);
  CHECK(C.letters.size() == 3);
  int a = *C.letter_by_name("a");
  int b = *C.letter_by_name("b");
  int t = *C.letter_by_name("t");
  // reduced coproduct of t: a(x)b + b(x)a, nothing else
  REQUIRE(C.dbar[t].size() == 2);
  CHECK(C.pair(a, b) == Rat(1));
  CHECK(C.pair(b, a) == Rat(1));
  CHECK(C.pair(t, t) == Rat(0));
  CHECK(C.pair(a, a) == Rat(0));
  CHECK(C.dbar[a].empty());
  CHECK(C.dbar[b].empty());
}

TEST_CASE("S2 coideal has vanishing reduced coproduct") {
  Frobenius F = builtin("S2");
  Coideal C = coideal(F);
  CHECK(C.letters.size() == 1);
  CHECK(C.dbar[0].empty());
}

TEST_CASE("point coideal is empty") {
  Coideal C = coideal(builtin("point"));
  CHECK(C.letters.empty());
}

TEST_CASE("pairing graded symmetry across all builtins") {
  for (const auto& name : builtin_names()) {
    Frobenius F = builtin(name);
    const int n = static_cast<int>(F.dim());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Rat p = F.pairing(x, y), q = F.pairing(y, x);
        bool odd = (F.degree[x] & 1) && (F.degree[y] & 1);
        CHECK(p == (odd ? -q : q));
        if (!p.is_zero()) CHECK(F.degree[x] + F.degree[y] == F.m);
      }
  }
}

TEST_CASE("single-constant mutations break validation") {
  // Rescale one product constant while the coproduct stays put: module
  // compatibility must flag it with a witness.
  Frobenius F = builtin("S2xS2");
  int a = F.basis_index("a"), b = F.basis_index("b");
  F.product[a][b][0].second = Rat(2);
  Report r = validate_frobenius(F);
  CHECK(!r.all_pass());
  bool witnessed = false;
  for (const auto& l : r.lines)
    if (!l.pass && !l.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("dropping a coproduct term breaks coassociativity or compatibility") {
  Frobenius F = builtin("S2xS2");
  int t = F.basis_index("t");
  // remove the a(x)b term of Delta(t)
  auto& cop = F.coproduct[t];
  for (size_t i = 0; i < cop.size(); ++i) {
    auto [u, v, c] = cop[i];
    if (u == F.basis_index("a") && v == F.basis_index("b")) {
      cop.erase(cop.begin() + i);
      break;
    }
  }
  Report r = validate_frobenius(F);
  CHECK(!r.all_pass());
}
