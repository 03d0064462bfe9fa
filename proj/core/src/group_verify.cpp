#include "pmass/group_verify.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "pmass/errors.hpp"
#include "pmass/local_field.hpp"

namespace pmass::perm {

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw IdentityViolation(what);
}

void check_prime_degree(int p) {
    if (!is_prime(p)) throw InvalidParameter("p must be prime");
    if (p > kMaxDegree) throw ScaleExceeded("verification scale exceeded");
}

int mult_order(int k, int p) {
    int out = 1;
    for (int x = k % p; x != 1; x = (x * k) % p) ++out;
    return out;
}

/// k with sigma c sigma^{-1} = c^k, or 0 when sigma does not normalize <c>.
int conjugation_exponent(const Perm& sigma, const Perm& c) {
    const Perm conj = sigma * c * sigma.inverse();
    Perm power = c;
    for (int k = 1; k < c.degree(); ++k, power = power * c) {
        if (power == conj) return k;
    }
    return c.degree() == 1 ? 1 : 0;
}

/// Groups <c, n> for n in N: every group between P and N, since N/P is cyclic.
std::vector<Subgroup> groups_between_p_and_n(int p) {
    const Perm c = Perm::cycle(p);
    const Subgroup n = normalizer_of_cycle(p);
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    for (const Perm& x : n.elements()) {
        const std::array<Perm, 2> gens{c, x};
        Subgroup h = Subgroup::generate(p, gens);
        if (seen.insert(h.ranks()).second) out.push_back(std::move(h));
    }
    return out;
}

}  // namespace

Subgroup normalizer_of_cycle(int p) {
    check_prime_degree(p);
    const Perm c = Perm::cycle(p);
    std::vector<Perm> members;
    for (int r = 0; r < factorial(p); ++r) {
        const Perm s = Perm::unrank(p, r);
        if (conjugation_exponent(s, c) != 0) members.push_back(s);
    }
    return Subgroup::generate(p, members);
}

NormalizerResult verify_normalizer(int p) {
    check_prime_degree(p);
    const Perm c = Perm::cycle(p);
    const std::array<Perm, 1> cgen{c};
    const Subgroup P = Subgroup::generate(p, cgen);
    const Subgroup N = normalizer_of_cycle(p);

    NormalizerResult r;
    r.p = p;
    r.normalizer_order = N.order();
    require(r.normalizer_order == p * (p - 1), "normalizer order is not p(p-1)");

    std::set<int> image;
    std::vector<Perm> kernel;
    std::vector<Perm> complement;
    for (const Perm& s : N.elements()) {
        const int k = conjugation_exponent(s, c);
        image.insert(k);
        if (k == 1) kernel.push_back(s);
        if (s(0) == 0) complement.push_back(s);
    }
    r.kernel_order = static_cast<int>(kernel.size());
    r.character_image = static_cast<int>(image.size());
    require(r.kernel_order == p, "kernel of the conjugation character is not of order p");
    require(Subgroup::generate(p, kernel) == P, "kernel of the conjugation character is not P");
    require(r.character_image == p - 1, "conjugation character is not onto F_p^x");
    for (int k : image) {
        if (mult_order(k, p) == p - 1) {
            r.image_generator = k;
            break;
        }
    }
    require(r.image_generator != 0, "image of the conjugation character is not cyclic");

    const Subgroup comp = Subgroup::generate(p, complement);
    r.complement_order = comp.order();
    require(r.complement_order == p - 1, "complement does not have order p-1");
    require(comp.intersect(P).order() == 1, "complement meets P");
    std::set<int> comp_image;
    for (const Perm& s : comp.elements()) comp_image.insert(conjugation_exponent(s, c));
    require(static_cast<int>(comp_image.size()) == p - 1, "complement does not map onto F_p^x");
    return r;
}

GaloisCriterionResult verify_galois_criterion(int p) {
    check_prime_degree(p);
    GaloisCriterionResult result;
    result.p = p;
    const Perm c = Perm::cycle(p);
    const std::array<Perm, 1> cgen{c};
    const Subgroup P = Subgroup::generate(p, cgen);
    const Subgroup N = normalizer_of_cycle(p);

    std::vector<Subgroup> candidates;
    if (p <= 5) {
        result.exhaustive = true;
        result.scope = "all subgroups of S_" + std::to_string(p);
        const std::array<Perm, 2> sym_gens{c, Perm::transposition(p, 0, 1)};
        const Subgroup sym = Subgroup::generate(p, sym_gens);
        candidates = two_generated_subgroups(sym);
        std::set<std::vector<int>> seen;
        for (const Subgroup& h : candidates) seen.insert(h.ranks());
        for (bool grew = true; grew;) {
            grew = false;
            const std::size_t count = candidates.size();
            for (std::size_t i = 0; i < count; ++i) {
                for (std::size_t j = i + 1; j < count; ++j) {
                    Subgroup h = candidates[i].join(candidates[j]);
                    if (seen.insert(h.ranks()).second) {
                        candidates.push_back(std::move(h));
                        grew = true;
                    }
                }
            }
        }
    } else {
        result.scope = "subgroups <c, x> of S_" + std::to_string(p) + " for the fixed p-cycle c";
        std::vector<char> done(static_cast<std::size_t>(factorial(p)), 0);
        std::set<std::vector<int>> seen;
        std::vector<Perm> cpowers;
        for (const Perm& g : P.elements()) cpowers.push_back(g);
        for (int r = 0; r < factorial(p); ++r) {
            if (done[static_cast<std::size_t>(r)]) continue;
            const Perm x = Perm::unrank(p, r);
            // <c, x> = <c, c^a x c^b>: the whole double coset gives one group.
            for (const Perm& a : cpowers) {
                for (const Perm& b : cpowers) done[static_cast<std::size_t>((a * x * b).rank())] = 1;
            }
            const std::array<Perm, 2> gens{c, x};
            Subgroup h = Subgroup::generate(p, gens);
            if (seen.insert(h.ranks()).second) candidates.push_back(std::move(h));
        }
    }

    for (const Subgroup& g : candidates) {
        if (!g.transitive()) continue;
        SubgroupRecord rec = describe(g);
        require(rec.order % p == 0, "transitive subgroup of order prime to p");
        require(rec.order % (p * p) != 0, "p^2 divides a transitive subgroup order");
        require(rec.solvable == (rec.sylow_p_count == 1),
                "solvability criterion fails for a subgroup of order " + std::to_string(rec.order));
        if (rec.solvable && g.contains(P)) {
            require(N.contains(g), "solvable transitive group containing P is not inside N");
        }
        result.transitive.push_back(std::move(rec));
    }
    std::sort(result.transitive.begin(), result.transitive.end(),
              [](const SubgroupRecord& a, const SubgroupRecord& b) {
                  return std::pair(a.order, a.element_ranks) < std::pair(b.order, b.element_ranks);
              });
    return result;
}

IndexPResult verify_index_p_subgroups(int p) {
    check_prime_degree(p);
    IndexPResult result;
    result.p = p;
    std::vector<Subgroup> groups = groups_between_p_and_n(p);
    std::sort(groups.begin(), groups.end(), [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
    for (const Subgroup& g : groups) {
        IndexPEntry entry;
        entry.order = g.order();
        require(g.solvable(), "group between P and N is not solvable");
        if (g.abelian()) {
            entry.skipped_commutative = true;
            result.entries.push_back(entry);
            continue;
        }
        const std::vector<Subgroup> index_p = two_generated_subgroups(g, g.order() / p);
        entry.index_p_subgroups = static_cast<int>(index_p.size());
        require(entry.index_p_subgroups == p, "expected exactly p subgroups of index p");
        entry.pairwise_trivial = true;
        entry.pairwise_generate = true;
        for (std::size_t i = 0; i < index_p.size(); ++i) {
            for (std::size_t j = i + 1; j < index_p.size(); ++j) {
                entry.pairwise_trivial &= index_p[i].intersect(index_p[j]).order() == 1;
                entry.pairwise_generate &= index_p[i].join(index_p[j]) == g;
            }
        }
        require(entry.pairwise_trivial, "two index-p subgroups intersect non-trivially");
        require(entry.pairwise_generate, "two index-p subgroups do not generate the group");
        result.entries.push_back(entry);
    }
    return result;
}

}  // namespace pmass::perm
