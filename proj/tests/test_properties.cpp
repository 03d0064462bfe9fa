#include <gtest/gtest.h>

#include <random>

#include "pmass/counts.hpp"
#include "pmass/galois_filter.hpp"
#include "pmass/mass.hpp"
#include "pmass/model.hpp"
#include "pmass/oracle.hpp"
#include "pmass/series.hpp"
#include "pmass/tame.hpp"

using namespace pmass;

namespace {

// Fixed seed: failures reproduce exactly.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Rational rational() {
        const std::int64_t den = between(1, 50);
        return Rational(Integer(static_cast<long>(between(-50, 50))), Integer(static_cast<long>(den)));
    }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (!r.is_zero()) return r;
        }
    }

    int prime(std::initializer_list<int> choices) {
        const auto k = static_cast<std::size_t>(between(0, static_cast<std::int64_t>(choices.size()) - 1));
        return *(choices.begin() + k);
    }

private:
    std::mt19937_64 rng_;
};

bool lowest_terms(const Rational& r) { return gcd(r.numerator(), r.denominator()) == 1 && r.denominator() > 0; }

std::vector<LocalField> grid() {
    std::vector<LocalField> out;
    for (int p : {2, 3, 5, 7}) {
        for (int f : {1, 2}) {
            for (int e : {1, 2, 3}) out.push_back(LocalField::mixed(p, f, e));
            out.push_back(LocalField::equal_char(p, f));
        }
    }
    return out;
}

}  // namespace

TEST(Property, ArithmeticChainsStayNormalized) {
    Gen g(1);
    for (int trial = 0; trial < 50; ++trial) {
        Rational acc = g.rational();
        for (int step = 0; step < 100; ++step) {
            const auto op = static_cast<ArithOp>(g.between(0, 3));
            const Rational x = op == ArithOp::Div ? g.nonzero_rational() : g.rational();
            acc = rat_arith(acc, x, op);
            ASSERT_TRUE(lowest_terms(acc)) << acc;
            ASSERT_EQ(Rational::parse(acc.str()), acc);
        }
    }
}

TEST(Property, FieldAxioms) {
    Gen g(2);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = g.rational();
        const Rational b = g.rational();
        const Rational c = g.nonzero_rational();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a / c) * c, a);
        EXPECT_EQ(a - a, Rational(0));
    }
}

TEST(Property, GeometricIdentity) {
    Gen g(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational x = g.rational();
        const auto n = static_cast<std::uint64_t>(g.between(0, 30));
        // (1 - x) * sum_{m<n} x^m = 1 - x^n
        EXPECT_EQ((Rational(1) - x) * geom_finite(x, n), Rational(1) - rat_pow(x, static_cast<std::int64_t>(n)));
        if (x.abs() < Rational(1)) EXPECT_EQ(geom_infinite(x) * (Rational(1) - x), Rational(1));
    }
}

TEST(Property, PowerLaw) {
    Gen g(4);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational x = g.nonzero_rational();
        const std::int64_t m = g.between(-12, 12);
        const std::int64_t n = g.between(-12, 12);
        EXPECT_EQ(rat_pow(x, m) * rat_pow(x, n), rat_pow(x, m + n));
        EXPECT_EQ(rat_pow(rat_pow(x, m), n), rat_pow(x, m * n));
    }
}

TEST(Property, BSeqSkipsMultiplesOfP) {
    for (int p : {2, 3, 5, 7, 11}) {
        std::int64_t prev = 0;
        for (std::int64_t n = 1; n <= 2000; ++n) {
            const std::int64_t b = b_seq(p, n);
            EXPECT_GT(b, prev);
            // Exactly the integers prime to p appear, in order.
            EXPECT_NE(b % p, 0);
            EXPECT_EQ(b - prev, prev % p == p - 1 ? 2 : 1);
            prev = b;
        }
    }
}

TEST(Property, OmegaLevelsFollowBSeq) {
    for (int p : {3, 5, 7}) {
        for (std::optional<int> e : {std::optional<int>{}, std::optional<int>{1001}, std::optional<int>{1002}}) {
            const LocalField field = e ? LocalField::mixed(p, 1, *e) : LocalField::equal_char(p, 1);
            const int omega_class = vbar_omega(field);
            for (std::int64_t i = 0; i <= 1000; ++i) {
                EXPECT_EQ(p * i + j_index(field, omega_class, i), (p - 1) * b_seq(p, i + 1));
            }
        }
    }
}

TEST(Property, LevelsArePrimeToP) {
    for (const LocalField& field : grid()) {
        const std::int64_t strata = field.char_zero() ? field.finite_e() : 40;
        for (const CharClass& chi : enumerate_chars(field)) {
            for (std::int64_t i = 0; i < strata; ++i) {
                const std::int64_t level = level_of(field, chi, i);
                const int j = j_index(field, chi, i);
                EXPECT_GE(j, 1);
                EXPECT_LE(j, field.p() - 1);
                EXPECT_NE(level % field.p(), 0);
                EXPECT_EQ(field.residue(vbar_omega(field) - chi.vbar - i - j), 0);
            }
        }
    }
}

TEST(Property, TwoPathsAgree) {
    for (const LocalField& field : grid()) {
        for (const CharClass& chi : enumerate_chars(field)) {
            EXPECT_EQ(char_contribution_closed(field, chi), char_contribution(field, chi))
                << field.describe() << " vbar " << chi.vbar;
        }
    }
}

TEST(Property, TotalsAreP) {
    for (const LocalField& field : grid()) {
        const MassReport r = total_mass(field);
        EXPECT_EQ(r.total, Rational(field.p()));
        EXPECT_EQ(r.grand_total, Rational(field.p() + 1));
        if (field.char_zero()) {
            EXPECT_EQ(r.split->peu + r.split->tres, Rational(field.p()));
        }
    }
}

TEST(Property, CountsRebuildMassForEveryOmega) {
    for (int p : {2, 3, 5, 7}) {
        for (int e : {1, 2, 3, 4, 6}) {
            for (int b = 0; b < p - 1 || b == 0; ++b) {
                const LocalField field = LocalField::mixed(p, 1, e, CharCoords{e, b});
                EXPECT_EQ(mass_from_counts(field, count_table(field)), Rational(p)) << field.describe();
                if (p == 2) break;
            }
        }
    }
}

TEST(Property, FilterPartition) {
    for (int p : {3, 5, 7}) {
        for (int f : {1, 2}) {
            const LocalField field = LocalField::equal_char(p, f);
            Rational sum;
            std::size_t chars = 0;
            for (int n : closure_orders(field)) {
                chars += qualifying_chars(field, filter::GroupOrder{n}).size();
                sum += galois_closure_contribution(field, filter::GroupOrder{n});
            }
            EXPECT_EQ(chars, static_cast<std::size_t>((p - 1) * (p - 1)));
            EXPECT_EQ(sum, Rational(p));
        }
    }
}

TEST(Property, TameMassIsDegree) {
    for (int pprime : {2, 3, 5, 7, 11, 13}) {
        for (auto [p, f] : std::vector<std::pair<int, unsigned>>{{2, 1}, {3, 1}, {3, 3}, {5, 2}, {7, 1}, {13, 2}}) {
            if (p == pprime) continue;
            const Integer q = int_pow(Integer(p), f);
            const TameReport r = tame_mass(pprime, p, q);
            EXPECT_EQ(r.mass, Rational(pprime));
            EXPECT_EQ(r.omega_trivial, (q - 1) % pprime == 0);
        }
    }
}

TEST(Property, ChecksumIdentity) {
    for (int p : {3, 5, 7, 11}) {
        for (unsigned f : {1U, 2U, 3U}) {
            const ChecksumResult r = checksum_identity(p, int_pow(Integer(p), f));
            EXPECT_EQ(r.lhs, r.rhs);
        }
    }
}

TEST(Property, OracleEqualsFormula) {
    for (int p : {2, 3, 5}) {
        for (int f : {1, 2}) {
            for (int e : {1, 2}) {
                const LocalField field = LocalField::mixed(p, f, e);
                for (const oracle::OracleComparison& row : oracle::oracle_check(field, p * e)) {
                    EXPECT_TRUE(row.agrees()) << field.describe() << " vbar " << row.chi.vbar;
                }
            }
        }
    }
}

TEST(Property, OracleTruncationMonotone) {
    for (int p : {2, 3, 5}) {
        const LocalField field = LocalField::equal_char(p, 1);
        for (int w = 0; w < field.modulus(); ++w) {
            const CharClass chi = w == 0 ? CharClass::trivial_char(field) : CharClass::generic(field, w);
            const Rational full = char_contribution(field, chi);
            Rational prev;
            for (std::int64_t bound = 0; bound <= (p == 5 ? 14 : 11); ++bound) {
                const Rational m = oracle::oracle_mass(field, chi, bound);
                EXPECT_GE(m, prev);
                EXPECT_LE(m, full);
                EXPECT_EQ(m, char_contribution_partial(field, chi, bound));
                prev = m;
            }
        }
    }
}

TEST(Property, OracleLineAccounting) {
    for (int p : {2, 3, 5}) {
        for (int e : {1, 2}) {
            const LocalField field = LocalField::mixed(p, 1, e);
            for (const CharClass& chi : enumerate_chars(field)) {
                const oracle::LineCensus census = oracle::enumerate_lines(field, chi, p * e);
                Integer lines_total;
                for (const auto& [level, lines] : census.lines) lines_total += lines;
                EXPECT_EQ(lines_total * (p - 1) + 1, int_pow(Integer(p), static_cast<std::uint64_t>(census.dim)));
            }
        }
    }
}

TEST(Property, DiscriminantIdentity) {
    Gen g(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = g.prime({2, 3, 5, 7, 11, 13});
        std::vector<std::int64_t> divisors;
        for (std::int64_t t = 1; t <= p - 1; ++t) {
            if ((p - 1) % t == 0) divisors.push_back(t);
        }
        const std::int64_t t = divisors[static_cast<std::size_t>(g.between(0, static_cast<std::int64_t>(divisors.size()) - 1))];
        std::int64_t b = g.between(1, 60);
        while (std::gcd(b, t) != 1) ++b;
        const std::int64_t r = g.between(1, 5);
        const std::int64_t v = disc_valuation(p, {b, t, r});
        EXPECT_EQ((p - 1) * (1 + b) * r + (t - 1) * r * p, (t - 1) * r + v * t * r);
    }
}
