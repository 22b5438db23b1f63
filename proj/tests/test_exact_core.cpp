#include <doctest.h>

#include <random>

#include "necklace/hpoly.hpp"
#include "necklace/matrix.hpp"
#include "necklace/rational.hpp"
#include "oracles.hpp"

using namespace necklace;

namespace {

Rat rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rat(2, 6) == Rat(1, 3));
  CHECK(Rat(-2, -6) == Rat(1, 3));
  CHECK(Rat(2, -6) == Rat(-1, 3));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat::parse("7/21") == Rat(1, 3));
  CHECK(Rat::parse("-4") == Rat(-4));
  CHECK(Rat(1, 3).str() == "1/3");
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("rational ring axioms on random values") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("hpoly basics") {
  HPoly one(1);
  HPoly h = HPoly::h();
  CHECK(one * h == h);
  CHECK((one + h) * (one - h) == one - h * h);
  CHECK((HPoly(Rat(3)) + HPoly::h() * HPoly(Rat(2))).mod_h() == Rat(3));
  CHECK((h * h).mod_h() == Rat(0));
  CHECK((h * h).div_h() == h);
  CHECK_THROWS(one.div_h());
  CHECK(HPoly().is_zero());
  CHECK(HPoly::h_weight(1, 4) == 4);
  CHECK(HPoly::h_weight(2, 2) == 0);
}

TEST_CASE("hpoly product matches convolution oracle") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    std::vector<Rat> p, q;
    std::uniform_int_distribution<int> deg(0, 3);
    int dp = deg(rng), dq = deg(rng);
    for (int i = 0; i <= dp; ++i) p.push_back(rand_rat(rng));
    for (int i = 0; i <= dq; ++i) q.push_back(rand_rat(rng));
    HPoly a, b;
    for (size_t i = 0; i < p.size(); ++i) a += HPoly::h(static_cast<int>(i)) * HPoly(p[i]);
    for (size_t i = 0; i < q.size(); ++i) b += HPoly::h(static_cast<int>(i)) * HPoly(q[i]);
    auto conv = oracle::convolve(p, q);
    HPoly expect;
    for (size_t i = 0; i < conv.size(); ++i)
      expect += HPoly::h(static_cast<int>(i)) * HPoly(conv[i]);
    CHECK(a * b == expect);
  }
}

TEST_CASE("rank of zero and identity matrices") {
  SparseMat z(3, 4);
  auto rz = z.rank_and_kernel();
  CHECK(rz.rank == 0);
  CHECK(rz.kernel_dim == 4);

  SparseMat id(3, 3);
  for (int i = 0; i < 3; ++i) id.add(i, i, Rat(1));
  auto ri = id.rank_and_kernel();
  CHECK(ri.rank == 3);
  CHECK(ri.kernel_dim == 0);
}

TEST_CASE("sparse rank agrees with dense oracle on random matrices") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> zero(0, 2);
  for (int it = 0; it < 60; ++it) {
    size_t n = 6;
    SparseMat m(n, n);
    std::vector<std::vector<Rat>> dense(n, std::vector<Rat>(n));
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        if (zero(rng) == 0) continue;
        Rat v = rand_rat(rng);
        m.add(r, c, v);
        dense[r][c] = v;
      }
    auto res = m.rank_and_kernel();
    CHECK(res.rank == oracle::dense_rank(dense));
    CHECK(res.rank + res.kernel_dim == n);
  }
}

TEST_CASE("rank invariant under row permutation and scaling") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 30; ++it) {
    size_t n = 5;
    std::vector<std::vector<Rat>> dense(n, std::vector<Rat>(n));
    SparseMat m(n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        Rat v = rand_rat(rng);
        m.add(r, c, v);
        dense[r][c] = v;
      }
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    SparseMat p(n, n);
    for (size_t r = 0; r < n; ++r) {
      Rat scale;
      while (scale.is_zero()) scale = rand_rat(rng);
      for (size_t c = 0; c < n; ++c) p.add(perm[r], c, scale * dense[r][c]);
    }
    CHECK(p.rank_and_kernel().rank == m.rank_and_kernel().rank);
  }
}
