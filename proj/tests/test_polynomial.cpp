#include <gtest/gtest.h>

#include <random>

#include "juggle/polynomial.hpp"
#include "juggle/transfer.hpp"
#include "test_support.hpp"

using namespace juggle;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST(IntPolynomial, TrimsAndFormats) {
  const IntPolynomial p{1, -10, 27, -20, 0, 0};
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.to_string(), "1 - 10x + 27x^2 - 20x^3");
  EXPECT_EQ(p.to_string_descending(), "-20x^3 + 27x^2 - 10x + 1");
  EXPECT_EQ((IntPolynomial{0, 1, -6, 7}).to_string(), "x - 6x^2 + 7x^3");
  EXPECT_EQ((IntPolynomial{-20, 27, -10, 1}).to_string_descending(), "x^3 - 10x^2 + 27x - 20");
  EXPECT_EQ((IntPolynomial{0, -1}).to_string(), "-x");
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
  EXPECT_EQ(IntPolynomial{0}.degree(), -1);
}

TEST(IntPolynomial, Arithmetic) {
  const IntPolynomial a{1, -5, 5};
  const IntPolynomial b{0, 1, -2};
  EXPECT_EQ(a + b, (IntPolynomial{1, -4, 3}));
  EXPECT_EQ(a - a, IntPolynomial{});
  EXPECT_EQ(a * b, (IntPolynomial{0, 1, -7, 15, -10}));
  EXPECT_EQ(a.evaluate(2), 11);
  EXPECT_EQ((IntPolynomial{-20, 27, -10, 1}).reversed(), (IntPolynomial{1, -10, 27, -20}));
  EXPECT_EQ((a * b).truncated(2), (IntPolynomial{0, 1, -7}));
}

TEST(CharPoly, ThreeBallsThreeHands) {
  EXPECT_EQ(char_poly(build_transfer_matrix(3, 3).entries), (IntPolynomial{-20, 27, -10, 1}));
}

TEST(CharPoly, OneByOne) { EXPECT_EQ(char_poly(Matrix<BigInt>{{1}}), (IntPolynomial{-1, 1})); }

TEST(CharPoly, TwoBallsTwoHands) {
  const auto p = char_poly(build_transfer_matrix(2, 2).entries);
  EXPECT_EQ(p, (IntPolynomial{5, -5, 1}));
  EXPECT_EQ(p.reversed(), (IntPolynomial{1, -5, 5}));
}

TEST(CharPoly, MatchesCofactorDeterminantAtIntegerPoints) {
  for (int m = 1; m <= 4; ++m) {
    for (int b = 0; b <= 5; ++b) {
      const auto a = build_transfer_matrix(b, m).entries;
      const auto p = char_poly(a);
      const std::size_t r = a.rows();
      EXPECT_EQ(p.degree(), static_cast<int>(r));
      for (long long x = -3; x <= static_cast<long long>(r) + 2; ++x) {
        std::vector<std::vector<BigInt>> shifted(r, std::vector<BigInt>(r));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) shifted[i][j] = (i == j ? BigInt(x) : BigInt(0)) - a(i, j);
        EXPECT_EQ(p.evaluate(x), oracle::cofactor_det(shifted)) << "b=" << b << " m=" << m << " x=" << x;
      }
    }
  }
}

TEST(CharPoly, RandomIntegerMatricesSatisfyCayleyHamilton) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix<BigInt> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long long>(rng() % 11) - 5;
    const auto p = char_poly(a);
    Matrix<BigInt> sum(n, n);
    Matrix<BigInt> power_of_a = Matrix<BigInt>::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sum(i, j) += p[k] * power_of_a(i, j);
      power_of_a = power_of_a * a;
    }
    EXPECT_EQ(sum, Matrix<BigInt>(n, n));
  }
}

TEST(Recurrence, FromCharPoly) {
  const auto rec = recurrence_from_charpoly(IntPolynomial{-20, 27, -10, 1});
  EXPECT_EQ(rec.q, big({-10, 27, -20}));
  EXPECT_EQ(rec.to_string(), "a(n+3) = 10a(n+2) - 27a(n+1) + 20a(n)");
  EXPECT_EQ(rec.next(big({1, 4, 20})), 112);
}

TEST(Recurrence, Constant) {
  const auto rec = recurrence_from_charpoly(IntPolynomial{-1, 1});
  EXPECT_EQ(rec.to_string(), "a(n+1) = a(n)");
  std::vector<BigInt> terms{7};
  rec.extend(terms, 4);
  EXPECT_EQ(terms, big({7, 7, 7, 7}));
}

TEST(Recurrence, TwoBallsTwoHands) {
  const auto rec = recurrence_from_charpoly(IntPolynomial{5, -5, 1});
  EXPECT_EQ(rec.to_string(), "a(n+2) = 5a(n+1) - 5a(n)");
  EXPECT_EQ(rec.next(big({3, 10})), 35);
}

TEST(Recurrence, RejectsNonMonic) {
  EXPECT_THROW(recurrence_from_charpoly(IntPolynomial{1, 2}), ParameterError);
  EXPECT_THROW(recurrence_from_charpoly(IntPolynomial{}), ParameterError);
  EXPECT_THROW(LinearRecurrence{big({1, 2})}.next(big({1})), ParameterError);
}

TEST(Expand, TableRows) {
  EXPECT_EQ(expand(RationalGF({0, 1, -2}, {1, -4, 3}), 8), big({1, 2, 5, 14, 41, 122, 365, 1094}));
  EXPECT_EQ(expand(RationalGF({0, 1, -5, 7, -3}, {1, -9, 22, -13, -3}), 7),
            big({1, 4, 21, 111, 592, 3171, 17021}));
  EXPECT_EQ(expand(RationalGF({0, 1}, {1, -1}), 5), big({1, 1, 1, 1, 1}));
  EXPECT_TRUE(expand(RationalGF({0, 1}, {1, -1}), 0).empty());
}

TEST(RationalGF, DenominatorMustStartWithOne) {
  EXPECT_THROW(RationalGF({0, 1}, {2, 1}), ParameterError);
  EXPECT_THROW(RationalGF({0, 1}, {}), ParameterError);
}

TEST(PrimitiveTransform, TableRows) {
  EXPECT_EQ(primitive_transform(RationalGF({0, 1, -2}, {1, -5, 5})), RationalGF({0, 1, -2}, {1, -4, 3}));
  EXPECT_EQ(primitive_transform(RationalGF({0, 1, -6, 7}, {1, -10, 27, -20})),
            RationalGF({0, 1, -6, 7}, {1, -9, 21, -13}));
}

TEST(PrimitiveTransform, ZeroAndErrors) {
  const RationalGF zero({}, {1});
  EXPECT_EQ(primitive_transform(zero), zero);
  EXPECT_THROW(primitive_transform(RationalGF({1, 1}, {1, -1})), ParameterError);
}

TEST(PrimitiveTransform, SeriesIdentity) {
  // b = a - (a * b) convolution, i.e. F = B (1 + F).
  const RationalGF f({0, 1, -5, 7}, {1, -8, 13});
  const auto a = expand(f, 10);
  const auto b = expand(primitive_transform(f), 10);
  for (std::size_t n = 1; n <= 10; ++n) {
    BigInt conv = 0;
    for (std::size_t k = 1; k < n; ++k) conv += b[k - 1] * a[n - k - 1];
    EXPECT_EQ(a[n - 1], b[n - 1] + conv);
  }
}

TEST(Gcd, CommonFactor) {
  const IntPolynomial g{1, -3};
  // Normalized to a positive leading coefficient.
  EXPECT_EQ(gcd(g * IntPolynomial{0, 1, 2}, g * IntPolynomial{1, 1}), (IntPolynomial{-1, 3}));
  EXPECT_EQ(gcd(IntPolynomial{1, 1}, IntPolynomial{1, -1}), IntPolynomial{1});
  EXPECT_EQ(gcd(IntPolynomial{}, IntPolynomial{2, 4}), (IntPolynomial{1, 2}));
}

TEST(Reduced, CancelsCommonFactor) {
  const IntPolynomial g{1, -3};
  const RationalGF f(g * IntPolynomial{0, 1, 2}, g * IntPolynomial{1, -2, 5});
  const RationalGF r = reduced(f);
  EXPECT_EQ(r, RationalGF({0, 1, 2}, {1, -2, 5}));
  EXPECT_EQ(expand(r, 12), expand(f, 12));
  EXPECT_EQ(reduced(RationalGF({0, 1, -6, 7}, {1, -10, 27, -20})), RationalGF({0, 1, -6, 7}, {1, -10, 27, -20}));
}

TEST(ExactDivide, Errors) {
  EXPECT_EQ(exact_divide(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 1}), (IntPolynomial{-1, 1}));
  EXPECT_THROW(exact_divide(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), ParameterError);
  EXPECT_THROW(exact_divide(IntPolynomial{1}, IntPolynomial{}), ParameterError);
}
