#include "quadval/closed_form.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "quadval/oracle.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"

namespace quadval {
namespace {

QuadraticPoly poly(long a, long b, long c) { return QuadraticPoly(a, b, c); }

const QuadraticPoly kF3 = poly(15, 1142, 25559);
const QuadraticPoly kF4 = poly(5, 106, 1125);

std::vector<Valuation> vals(std::initializer_list<std::uint64_t> xs) {
  std::vector<Valuation> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

TEST(ClosedFormValuation, Examples) {
  EXPECT_EQ(closed_form_valuation(kF4, Int(15)), Valuation(8));
  EXPECT_EQ(closed_form_valuation(kF4, Int(7)), Valuation(6));
  EXPECT_EQ(closed_form_valuation(kF3, Int(3)), Valuation(6));
  EXPECT_EQ(closed_form_valuation(kF3, Int(11)), Valuation(10));
  EXPECT_EQ(closed_form_valuation(poly(1, 2, -4), Int(0)), Valuation(2));
  EXPECT_EQ(closed_form_valuation(poly(1, 2, -4), Int(1)), Valuation(0));
}

TEST(ClosedFormValuation, RejectsUnbounded) {
  EXPECT_THROW(closed_form_valuation(poly(4, 13, -25), Int(0)),
               std::domain_error);
  EXPECT_THROW(closed_form_valuation(poly(1, 1, 1), Int(0)),
               std::domain_error);
  EXPECT_THROW(closed_form_valuation(kF4, Int(-1)), std::invalid_argument);
}

TEST(ClosedFormValuation, MatchesGoldenRows) {
  for (const auto* fig : {&golden::kF3, &golden::kF4}) {
    const QuadraticPoly f(fig->a, fig->b, fig->c);
    for (const auto& row : fig->rows) {
      EXPECT_EQ(closed_form_valuation(f, Int(row.n)), Valuation(row.valuation))
          << fig->name << " n=" << row.n;
    }
  }
}

TEST(ClosedFormValuation, LargeArgumentsAndOffsets) {
  const Int huge("987654321987654321987654321");
  EXPECT_EQ(closed_form_valuation(kF4, huge), nu2(kF4(huge)));
  const QuadraticPoly scaled = poly(40, 848, 9000);  // 8 * f4
  for (long n = 0; n < 64; ++n) {
    EXPECT_EQ(closed_form_valuation(scaled, Int(n)), nu2(scaled(Int(n))));
  }
}

TEST(PeriodTable, Examples) {
  auto t = period_table(kF4);
  ASSERT_EQ(t.size(), 32u);
  EXPECT_EQ(t.ell, 5u);
  EXPECT_EQ(t.period, 32);
  const auto prefix =
      vals({0, 2, 0, 4, 0, 2, 0, 6, 0, 2, 0, 4, 0, 2, 0, 8, 0, 2, 0, 4});
  EXPECT_TRUE(std::equal(prefix.begin(), prefix.end(), t.entries.begin()));

  t = period_table(kF3);
  ASSERT_EQ(t.size(), 128u);
  const auto f3prefix =
      vals({0, 2, 0, 6, 0, 2, 0, 4, 0, 2, 0, 10, 0, 2, 0, 4});
  EXPECT_TRUE(std::equal(f3prefix.begin(), f3prefix.end(), t.entries.begin()));

  EXPECT_EQ(period_table(poly(1, 2, 5)).entries, vals({0, 3, 0, 2}));
}

TEST(PeriodTable, RejectsUnbounded) {
  EXPECT_THROW(period_table(poly(13, 12, -28)), std::domain_error);
}

TEST(MaxValuation, Examples) {
  EXPECT_EQ(max_valuation(kF4), Valuation(10));
  EXPECT_EQ(max_valuation(kF3), Valuation(13));
  EXPECT_EQ(max_valuation(poly(1, 2, 5)), Valuation(3));
  EXPECT_THROW(max_valuation(poly(1, 1, 2)), std::domain_error);
}

// Every (m, b mod 4) combination of the single-level case against the oracle.
TEST(ClosedFormValuation, LevelOneTableAllCombinations) {
  testing::PolyGenerator gen(31, 2000);
  std::set<std::pair<unsigned, unsigned>> seen;
  auto ell_one = [](const Classification& c) {
    return c.is_case3c() && c.ell() == 1;
  };
  for (const auto& f : gen.many(400, [&] { return gen.odd_even(); }, ell_one)) {
    const auto cls = classify(f);
    seen.insert({cls.disc->m,
                 static_cast<unsigned>(mpz_fdiv_ui(f.b().get_mpz_t(), 4))});
    const auto seq = oracle::valuation_sequence(f, 0, 64);
    for (unsigned n = 0; n < 64; ++n) {
      ASSERT_EQ(closed_form_valuation(cls, Int(n)), seq.values[n])
          << f << " n=" << n;
    }
  }
  EXPECT_EQ(seen.size(), 10u);
}

TEST(PeriodTableProperty, InvariantsOnRandomBounded) {
  testing::PolyGenerator gen(32);
  for (const auto& f : gen.case3c(150)) {
    const auto cls = classify(f);
    const auto ell = cls.ell();
    if (ell > 14) continue;
    const auto table = period_table(cls);
    const auto top = max_valuation(cls);
    const auto biggest = *std::max_element(table.entries.begin(),
                                           table.entries.end());
    EXPECT_EQ(biggest, top) << f;
    EXPECT_EQ(std::count(table.entries.begin(), table.entries.end(), top), 1)
        << f;
    EXPECT_LE(top.value(), 2 * ell + cls.even_offset);

    // No period 2^{ell-1}.
    const std::size_t half = table.size() / 2;
    bool differs = false;
    for (std::size_t r = 0; r < half && !differs; ++r) {
      differs = table[r] != table[r + half];
    }
    EXPECT_TRUE(differs) << f;

    // Each level i < ell contributes 2^{ell-i} residues of value 2(i-1).
    if (ell >= 2) {
      for (unsigned long i = 2; i < ell; ++i) {
        const Valuation v = Valuation(2 * (i - 1)) + cls.even_offset;
        // Level ell may also produce 2(ell-1) only, never 2(i-1) for i<ell.
        EXPECT_EQ(std::count(table.entries.begin(), table.entries.end(), v),
                  static_cast<long>(1ul << (ell - i)))
            << f << " level " << i;
      }
    }

    const auto seq = oracle::valuation_sequence(f, 0, 2 * table.size());
    for (std::size_t n = 0; n < seq.values.size(); ++n) {
      ASSERT_EQ(table[n % table.size()], seq.values[n]) << f << " n=" << n;
    }
  }
}

TEST(PeriodTableProperty, EveryEllUpToFourteen) {
  testing::PolyGenerator gen(33);
  for (unsigned long ell = 2; ell <= 14; ++ell) {
    for (int k = 0; k < 3; ++k) {
      const QuadraticPoly f = gen.case3c_with_ell(ell);
      const auto cls = classify(f);
      ASSERT_TRUE(cls.is_case3c()) << f;
      ASSERT_EQ(cls.ell(), ell) << f;
      const auto table = period_table(cls);
      const auto seq = oracle::valuation_sequence(f, 0, 2 * table.size());
      for (std::size_t n = 0; n < seq.values.size(); ++n) {
        ASSERT_EQ(table[n % table.size()], seq.values[n]) << f << " n=" << n;
      }
      EXPECT_EQ(oracle::empirical_period(seq.values), table.size()) << f;
    }
  }
}

}  // namespace
}  // namespace quadval
