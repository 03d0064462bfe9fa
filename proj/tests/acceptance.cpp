// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pmass/galois_filter.hpp"
#include "pmass/group_verify.hpp"
#include "pmass/mass.hpp"
#include "pmass/model.hpp"
#include "pmass/oracle.hpp"
#include "pmass/tame.hpp"

using namespace pmass;

namespace {

struct Failure {
    std::string what;
};

void check(bool condition, const std::string& what) {
    if (!condition) throw Failure{what};
}

Rational qp(const Integer& q, std::int64_t n) { return rat_pow(Rational(q), n); }

Rational sum_qpow(const Integer& q, std::initializer_list<std::int64_t> exponents) {
    Rational out;
    for (std::int64_t n : exponents) out += qp(q, n);
    return out;
}

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

void example_equal_char_three() {
    const LocalField f = LocalField::equal_char(3, 1);
    check(char_contribution(f, CharClass::generic(f, 0)) == rat(9, 20), "vbar 0 is not 9/20");
    check(char_contribution(f, CharClass::generic(f, 1)) == rat(21, 20), "vbar 1 is not 21/20");
    check(total_mass(f).total == Rational(3), "total is not 3");
}

void example_three_adics() {
    const LocalField f = LocalField::mixed(3, 1, 1);
    const std::vector<Rational> expected{rat(4, 3), Rational(1), rat(1, 3), rat(1, 3)};
    const std::vector<CharClass> chars = enumerate_chars(f);
    for (std::size_t k = 0; k < chars.size(); ++k) {
        const Rational got = char_contribution(f, chars[k]);
        check(got == expected[k], "class " + std::to_string(k) + " gives " + got.str());
    }
    check(total_mass(f).total == Rational(3), "total is not 3");
}

void example_five_char_p() {
    for (int f : {1, 2}) {
        const LocalField field = LocalField::equal_char(5, f);
        const Integer& q = field.q();
        const Rational C(int_pow(q, 16), int_pow(q, 16) - 1);
        const Rational scale = Rational(5) * (Rational(q) - Rational(1)) * C / Rational(4);
        const std::vector<Rational> A{sum_qpow(q, {-4, -7, -10, -13}), sum_qpow(q, {-3, -6, -9, -16}),
                                      sum_qpow(q, {-2, -5, -12, -15}), sum_qpow(q, {-1, -8, -11, -14})};
        for (int w = 0; w < 4; ++w) {
            check(char_contribution(field, CharClass::generic(field, w)) == scale * A[static_cast<std::size_t>(w)],
                  "class " + std::to_string(w) + " at q=" + q.get_str());
        }
    }
}

void example_five_e_five() {
    for (int f : {1, 2}) {
        const LocalField field = LocalField::mixed(5, f, 5);
        const Integer& q = field.q();
        const Rational scale = Rational(5) * (Rational(q) - Rational(1)) / Rational(4);
        check(char_contribution(field, CharClass::generic(field, 0)) == scale * sum_qpow(q, {-1, -8, -11, -14, -17}),
              "generic vbar 0 at q=" + q.get_str());
        check(char_contribution(field, CharClass::omega_char(field)) == scale * sum_qpow(q, {-4, -7, -10, -13, -20}),
              "omega at q=" + q.get_str());
    }
}

void grid_totals() {
    for (const LocalField& field : grid()) {
        const MassReport r = total_mass(field);
        check(r.total == Rational(field.p()), field.describe() + " total " + r.total.str());
        check(r.grand_total == Rational(field.p() + 1), field.describe() + " grand total " + r.grand_total.str());
    }
}

void closed_forms() {
    for (const LocalField& field : grid()) {
        for (const CharClass& chi : enumerate_chars(field)) {
            const Rational closed = char_contribution_closed(field, chi);
            const Rational direct = char_contribution(field, chi);
            check(closed == direct, "closed form " + closed.str() + " != direct sum " + direct.str() + " at " +
                                        field.describe() + " vbar " + std::to_string(chi.vbar));
        }
    }
}

void checksum() {
    for (int p : {3, 5, 7}) {
        for (unsigned f : {1U, 2U}) {
            const ChecksumResult r = checksum_identity(p, int_pow(Integer(p), f));
            check(r.lhs == r.rhs && r.total == Rational(p), "p=" + std::to_string(p) + " f=" + std::to_string(f));
        }
    }
}

void omega_levels() {
    for (int p : {3, 5, 7}) {
        for (const LocalField& field : {LocalField::mixed(p, 1, 1001), LocalField::equal_char(p, 1)}) {
            const int w = vbar_omega(field);
            for (std::int64_t i = 0; i <= 1000; ++i) {
                check(p * i + j_index(field, w, i) == (p - 1) * b_seq(p, i + 1),
                      field.describe() + " i=" + std::to_string(i));
            }
        }
    }
}

void peu_tres() {
    for (const LocalField& field : grid()) {
        if (field.char_p()) continue;
        const PeuTresSplit s = peu_tres_split(field);
        const Rational decay = qp(field.q(), static_cast<std::int64_t>(1 - field.p()) * field.finite_e());
        check(s.peu == Rational(field.p()) * (Rational(1) - decay) && s.tres == Rational(field.p()) * decay,
              field.describe());
        check(s.peu + s.tres == Rational(field.p()), field.describe() + " sum");
    }
    const PeuTresSplit q3 = peu_tres_split(LocalField::mixed(3, 1, 1));
    check(q3.peu == rat(8, 3) && q3.tres == rat(1, 3), "Q_3 split");
}

void oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<LocalField> fields{LocalField::mixed(3, 1, 1), LocalField::mixed(3, 2, 1), LocalField::mixed(5, 1, 1),
                                   LocalField::mixed(3, 1, 2, CharCoords{0, 0}),
                                   LocalField::mixed(3, 1, 2, CharCoords{0, 1})};
    for (const LocalField& field : fields) {
        for (const oracle::OracleComparison& row : oracle::oracle_check(field, field.p() * field.finite_e())) {
            check(row.full && row.agrees(), field.describe() + " vbar " + std::to_string(row.chi.vbar));
        }
    }
    const LocalField f3 = LocalField::equal_char(3, 1);
    for (const oracle::OracleComparison& row : oracle::oracle_check(f3, 9)) {
        check(row.agrees(), "truncated vbar " + std::to_string(row.chi.vbar));
    }
    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check(seconds < 10.0, "took " + std::to_string(seconds) + " s");
}

void tame() {
    for (int pprime : {2, 3, 5, 7, 11}) {
        for (auto [p, f] : std::vector<std::pair<int, unsigned>>{{3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 3}}) {
            if (p == pprime) continue;
            const Integer q = int_pow(Integer(p), f);
            const TameReport r = tame_mass(pprime, p, q);
            const bool split = (q - 1) % pprime == 0;
            const std::string at = "p'=" + std::to_string(pprime) + " q=" + q.get_str();
            check(r.mass == Rational(pprime), at + " mass " + r.mass.str());
            check(r.omega_trivial == split, at + " branch");
            if (split) {
                check(r.lines == pprime && r.ramified_count == pprime, at + " split counts");
            } else {
                check(r.lines == 1 && r.ramified_count == pprime && r.conjugacy_classes == 1, at + " counts");
            }
        }
    }
}

void group_theory() {
    for (int p : {3, 5, 7}) {
        check(perm::verify_normalizer(p).normalizer_order == p * (p - 1), "normalizer order at p=" + std::to_string(p));
    }
    for (int p : {2, 3, 5, 7}) {
        const perm::GaloisCriterionResult r = perm::verify_galois_criterion(p);
        check(r.exhaustive == (p <= 5), "enumeration scope at p=" + std::to_string(p));
        check(!r.transitive.empty(), "no transitive subgroups at p=" + std::to_string(p));
        for (const perm::SubgroupRecord& rec : r.transitive) {
            check(rec.solvable == (rec.sylow_p_count == 1), "criterion at order " + std::to_string(rec.order));
        }
        for (const perm::IndexPEntry& e : perm::verify_index_p_subgroups(p).entries) {
            check(e.skipped_commutative || (e.index_p_subgroups == p && e.pairwise_trivial && e.pairwise_generate),
                  "index-p subgroups at order " + std::to_string(e.order));
        }
    }
}

void filter_partition() {
    for (int p : {3, 5}) {
        for (int f : {1, 2}) {
            const LocalField field = LocalField::equal_char(p, f);
            Rational sum;
            for (int n : closure_orders(field)) sum += galois_closure_contribution(field, filter::GroupOrder{n});
            check(sum == Rational(p), field.describe() + " sums to " + sum.str());
        }
    }
    const Rational slice = galois_closure_contribution(LocalField::equal_char(3, 1), filter::GroupOrder{2});
    check(slice == rat(51, 20), "dihedral slice " + slice.str());
}

void discriminant() {
    std::mt19937_64 rng(20261016);
    const std::vector<int> primes{2, 3, 5, 7, 11, 13, 17, 19};
    for (int trial = 0; trial < 200; ++trial) {
        const int p = primes[rng() % primes.size()];
        std::vector<std::int64_t> divisors;
        for (std::int64_t t = 1; t <= p - 1; ++t) {
            if ((p - 1) % t == 0) divisors.push_back(t);
        }
        const std::int64_t t = divisors[rng() % divisors.size()];
        std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 100);
        while (std::gcd(b, t) != 1) ++b;
        const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 6);
        const std::int64_t v = disc_valuation(p, {b, t, r});
        std::ostringstream at;
        at << "(p, b, t, r) = (" << p << ", " << b << ", " << t << ", " << r << ")";
        check((p - 1) * (1 + b) * r + (t - 1) * r * p == (t - 1) * r + v * t * r, at.str());
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"per-character masses, p=3, e=inf", example_equal_char_three},
        {"per-character masses over Q_3", example_three_adics},
        {"per-class masses, p=5, e=inf, q in {5, 25}", example_five_char_p},
        {"masses at p=5, e=5, q in {5, 25}", example_five_e_five},
        {"total mass p and 1+p on the grid", grid_totals},
        {"closed forms equal direct sums on the grid", closed_forms},
        {"checksum identity, p in {3,5,7}, q in {p, p^2}", checksum},
        {"omega levels follow b_seq up to i=1000", omega_levels},
        {"peu/tres split", peu_tres},
        {"oracle equals formula", oracle_equivalence},
        {"tame masses", tame},
        {"permutation group verification", group_theory},
        {"closure-order partition and dihedral slice", filter_partition},
        {"discriminant valuation identity", discriminant},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& [name, body] = criteria[k];
        std::string detail;
        try {
            body();
        } catch (const Failure& f) {
            detail = f.what;
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (detail.empty() ? "PASS" : "FAIL") << "  " << (k + 1) << "  " << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << '\n';
        failures += detail.empty() ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " passed\n";
    return failures == 0 ? 0 : 1;
}
