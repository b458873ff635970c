#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dfsl/kernels.hpp"
#include "dfsl/prng.hpp"
#include "dfsl/special.hpp"

#include <cmath>
#include <random>

using namespace dfsl;

namespace {

Rational rat(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

FracOrder order(std::int64_t num, std::int64_t den,
                Backend backend = Backend::ExactRational) {
  return FracOrder(num, den, backend);
}

}  // namespace

TEST_CASE("rational arithmetic and normalization") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK((rat(1, 3) + rat(1, 6)) == rat(1, 2));
  CHECK((rat(1, 2) * rat(2, 3)) == rat(1, 3));
  CHECK((rat(1, 2) - rat(3, 4)) == rat(-1, 4));
  CHECK((rat(1, 2) / rat(1, 4)) == rat(2));
  CHECK(rat(1, 3) < rat(1, 2));
  CHECK(abs(rat(-5, 7)) == rat(5, 7));
  CHECK(rat(7, 2).str() == "7/2");
  CHECK(rat(-6, 3).str() == "-2");
  CHECK_THROWS_AS(rat(1, 2) / rat(0), std::domain_error);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/10") == rat(3, 10));
  CHECK(Rational::parse("-5/15") == rat(-1, 3));
  CHECK(Rational::parse("42") == rat(42));
  CHECK(Rational::parse("0.25") == rat(1, 4));
  CHECK(Rational::parse("-0.3") == rat(-3, 10));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("rational to_double survives huge denominators") {
  CHECK(rat(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(rat(-7, 2).to_double() == -3.5);
  Rational tiny = rat(1);
  for (int i = 1; i <= 400; ++i) tiny /= rat(i);  // 1/400! underflows any double ratio
  CHECK(tiny.to_double() == 0.0);
  Rational x = rat(3, 7);
  for (int i = 1; i <= 300; ++i) x *= rat(10, 9);  // denominator alone overflows a double
  CHECK(x.to_double() == doctest::Approx(3.0 / 7.0 * std::pow(10.0 / 9.0, 300)).epsilon(1e-13));
}

TEST_CASE("fractional order validation") {
  CHECK(order(2, 4).num() == 1);
  CHECK(order(2, 4).den() == 2);
  CHECK(order(1, 1).is_one());
  CHECK(order(-3, -9, Backend::Float64).num() == 1);  // sign normalized away, then reduced
  CHECK(order(-3, -9, Backend::Float64).den() == 3);
  CHECK_THROWS_AS(order(0, 5), std::domain_error);
  CHECK_THROWS_AS(order(-1, 2), std::domain_error);
  CHECK_THROWS_AS(order(3, 2), std::domain_error);
  CHECK_THROWS_AS(order(1, 0), std::domain_error);
  CHECK(FracOrder::parse("0.3", Backend::Float64).den() == 10);
  CHECK_THROWS_AS(FracOrder::parse("7/5", Backend::Float64), std::domain_error);
}

TEST_CASE("log_gamma matches the high-precision table") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
  // Reference values computed with a 40-digit arbitrary-precision evaluator.
  CHECK(log_gamma(0.5) == doctest::Approx(0.57236494292470009).epsilon(1e-13));
  CHECK(log_gamma(2.5) == doctest::Approx(0.28468287047291916).epsilon(1e-13));
  CHECK(log_gamma(7.25) == doctest::Approx(7.0521854507385394).epsilon(1e-13));
  CHECK(log_gamma(100.5) == doctest::Approx(361.43554046777762).epsilon(1e-13));
  CHECK(std::exp(log_gamma(2.5)) == doctest::Approx(1.329340388179137).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-3.0), std::domain_error);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5.0, 2.0) == doctest::Approx(20.0).epsilon(1e-14));
  CHECK(falling_factorial(7.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(falling_factorial(2.5, 0.5) == doctest::Approx(1.6616754852239213).epsilon(1e-13));
  CHECK(falling_factorial(4.0, 1.5) == doctest::Approx(7.2216266694112805).epsilon(1e-13));
  CHECK_THROWS_AS(falling_factorial(-1.0, 0.5), std::domain_error);
  CHECK(falling_factorial(rat(5), rat(2)) == rat(20));
  CHECK(falling_factorial(rat(7), rat(0)) == rat(1));
  CHECK(falling_factorial(rat(40), rat(40)) ==
        Rational::parse("815915283247897734345611269596115894272000000000"));
  CHECK_THROWS_AS(falling_factorial(rat(5, 2), rat(1)), std::domain_error);
  CHECK_THROWS_AS(falling_factorial(rat(2), rat(3)), std::domain_error);
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(3.0, 2.0) == doctest::Approx(12.0).epsilon(1e-14));
  CHECK(rising_factorial(9.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rising_factorial(2.0, 0.5) == doctest::Approx(1.329340388179137).epsilon(1e-13));
  CHECK(rising_factorial(3.5, 1.25) == doctest::Approx(4.9908079786682426).epsilon(1e-13));
  CHECK_THROWS_AS(rising_factorial(0.0, 2.0), std::domain_error);
  CHECK(rising_factorial(rat(3), rat(2)) == rat(12));
  CHECK(rising_factorial(rat(9), rat(0)) == rat(1));
  CHECK_THROWS_AS(rising_factorial(rat(0), rat(2)), std::domain_error);
  CHECK_THROWS_AS(rising_factorial(rat(1, 2), rat(1)), std::domain_error);
}

TEST_CASE("rising factorial recurrence is exact") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational t = rat(int_in_range(rng, 1, 30));
    const Rational a = rat(int_in_range(rng, 0, 20));
    CHECK(rising_factorial(t, a + rat(1)) == rising_factorial(t, a) * (t + a));
  }
}

TEST_CASE("rl_sum_kernel") {
  const auto ones = rl_sum_kernel<Rational>(order(1, 1), 4);
  CHECK(ones.coeffs == std::vector<Rational>{rat(1), rat(1), rat(1), rat(1)});
  const auto half = rl_sum_kernel<Rational>(order(1, 2), 4);
  CHECK(half.coeffs == std::vector<Rational>{rat(1), rat(1, 2), rat(3, 8), rat(5, 16)});
  CHECK(rl_sum_kernel<Rational>(order(2, 3), 1).coeffs == std::vector<Rational>{rat(1)});
  CHECK(rl_sum_kernel<Rational>(order(1, 3), 6).coeffs[5] == rat(91, 729));
  CHECK(rl_sum_kernel<double>(order(1, 3), 6).coeffs[5] ==
        doctest::Approx(0.12482853223593964).epsilon(1e-15));
  CHECK(half.kind == KernelKind::RLSum);
  CHECK_THROWS_AS(rl_sum_kernel<Rational>(order(1, 2), 0), std::invalid_argument);
}

TEST_CASE("gl_kernel") {
  const auto half = gl_kernel<Rational>(order(1, 2), 4);
  CHECK(half.coeffs == std::vector<Rational>{rat(1), rat(-1, 2), rat(-1, 8), rat(-1, 16)});
  const auto one = gl_kernel<Rational>(order(1, 1), 4);
  CHECK(one.coeffs == std::vector<Rational>{rat(1), rat(-1), rat(0), rat(0)});
  CHECK(gl_kernel<Rational>(order(3, 4), 1).coeffs == std::vector<Rational>{rat(1)});
  CHECK(gl_kernel<Rational>(order(1, 2), 5).coeffs[4] == rat(-5, 128));
  CHECK(half.kind == KernelKind::GL);
}

TEST_CASE("rl_diff_kernel") {
  const auto half = rl_diff_kernel<Rational>(order(1, 2), 4);
  CHECK(half.coeffs == std::vector<Rational>{rat(1), rat(-1, 2), rat(-1, 8), rat(-1, 16)});
  const auto one = rl_diff_kernel<Rational>(order(1, 1), 4);
  CHECK(one.coeffs == std::vector<Rational>{rat(1), rat(-1), rat(0), rat(0)});
  CHECK(rl_diff_kernel<Rational>(order(2, 3), 1).coeffs == std::vector<Rational>{rat(1)});
  CHECK(half.kind == KernelKind::RLDiff);
}

TEST_CASE("kernel sequence shape invariants") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t den = int_in_range(rng, 2, 24);
    const std::int64_t num = int_in_range(rng, 1, den - 1);
    const FracOrder mu = order(num, den);
    const auto gl = gl_kernel<Rational>(mu, 32);
    const auto sum = rl_sum_kernel<Rational>(mu, 32);
    CHECK(gl.coeffs[0] == rat(1));
    CHECK(sum.coeffs[0] == rat(1));
    CHECK(gl.coeffs[1] == -mu.as_rational());
    CHECK(sum.coeffs[1] == mu.as_rational());
    for (std::size_t j = 1; j < 32; ++j) {
      CHECK(gl.coeffs[j] < rat(0));
      CHECK(sum.coeffs[j] > rat(0));
    }
  }
}

TEST_CASE("rl_diff_kernel coincides with gl_kernel exactly") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const std::int64_t den = int_in_range(rng, 2, 64);
    const std::int64_t num = int_in_range(rng, 1, den - 1);
    const FracOrder mu = order(num, den);
    CHECK(rl_diff_kernel<Rational>(mu, 64).coeffs == gl_kernel<Rational>(mu, 64).coeffs);
  }
}

TEST_CASE("gl partial sums telescope to a binomial and stay positive") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t den = int_in_range(rng, 2, 16);
    const std::int64_t num = int_in_range(rng, 1, den - 1);
    const FracOrder mu = order(num, den);
    const auto gl = gl_kernel<Rational>(mu, 24);
    Rational partial(0);
    const Rational m = mu.as_rational();
    for (std::size_t bound = 0; bound < 24; ++bound) {
      partial += gl.coeffs[bound];
      // (-1)^J binom(mu-1, J) by the direct product formula.
      Rational binom(1);
      for (std::size_t i = 0; i < bound; ++i)
        binom *= (m - rat(1) - rat(static_cast<long long>(i))) / rat(static_cast<long long>(i + 1));
      if (bound % 2 == 1) binom = -binom;
      CHECK(partial == binom);
      CHECK(partial > rat(0));
    }
  }
}

TEST_CASE("float kernels agree with rational kernels") {
  for (const auto& mu : {order(1, 4), order(1, 3), order(999, 1000)}) {
    const auto exact = gl_kernel<Rational>(mu, 256);
    const auto approx = gl_kernel<double>(FracOrder(mu.num(), mu.den(), Backend::Float64), 256);
    for (std::size_t j = 0; j < 256; ++j) {
      const double want = exact.coeffs[j].to_double();
      CHECK(approx.coeffs[j] == doctest::Approx(want).epsilon(1e-13));
    }
    const auto exact_sum = rl_sum_kernel<Rational>(mu, 256);
    const auto approx_sum =
        rl_sum_kernel<double>(FracOrder(mu.num(), mu.den(), Backend::Float64), 256);
    for (std::size_t j = 0; j < 256; ++j)
      CHECK(approx_sum.coeffs[j] ==
            doctest::Approx(exact_sum.coeffs[j].to_double()).epsilon(1e-13));
  }
}

TEST_CASE("gl_kernel at mu = 1 vanishes from the second lag on") {
  const auto one = gl_kernel<Rational>(order(1, 1), 64);
  for (std::size_t s = 2; s < 64; ++s) CHECK(one.coeffs[s] == rat(0));
}
