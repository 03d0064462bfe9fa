#include "pmass/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "pmass/errors.hpp"

namespace pmass::perm {

namespace {

void check_degree(int n) {
    if (n < 1 || n > kMaxDegree) throw ScaleExceeded("verification scale exceeded");
}

Perm commutator(const Perm& a, const Perm& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace

int factorial(int n) {
    int out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

Perm::Perm(std::span<const int> images) {
    const auto n = static_cast<int>(images.size());
    check_degree(n);
    std::array<bool, kMaxDegree> hit{};
    for (int k = 0; k < n; ++k) {
        const int v = images[static_cast<std::size_t>(k)];
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) {
            throw InvalidParameter("not a permutation");
        }
        hit[static_cast<std::size_t>(v)] = true;
        img_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v);
    }
    n_ = static_cast<std::uint8_t>(n);
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Perm(v);
}

Perm Perm::cycle(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = (k + 1) % n;
    return Perm(v);
}

Perm Perm::affine(int p, int mul, int add) {
    std::vector<int> v(static_cast<std::size_t>(p));
    for (int x = 0; x < p; ++x) v[static_cast<std::size_t>(x)] = (((mul * x + add) % p) + p) % p;
    return Perm(v);
}

Perm Perm::transposition(int n, int i, int j) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::swap(v.at(static_cast<std::size_t>(i)), v.at(static_cast<std::size_t>(j)));
    return Perm(v);
}

Perm Perm::unrank(int n, int rank) {
    check_degree(n);
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> v;
    for (int k = n - 1; k >= 0; --k) {
        const int f = factorial(k);
        const int idx = rank / f;
        rank %= f;
        v.push_back(pool[static_cast<std::size_t>(idx)]);
        pool.erase(pool.begin() + idx);
    }
    return Perm(v);
}

std::vector<int> Perm::images() const { return {img_.begin(), img_.begin() + n_}; }

Perm operator*(const Perm& a, const Perm& b) {
    Perm out;
    out.n_ = a.n_;
    for (int x = 0; x < a.n_; ++x) out.img_[static_cast<std::size_t>(x)] = a.img_[b.img_[static_cast<std::size_t>(x)]];
    return out;
}

Perm Perm::inverse() const {
    Perm out;
    out.n_ = n_;
    for (int x = 0; x < n_; ++x) out.img_.at(img_[static_cast<std::size_t>(x)]) = static_cast<std::uint8_t>(x);
    return out;
}

bool Perm::is_identity() const {
    for (int x = 0; x < n_; ++x) {
        if (img_[static_cast<std::size_t>(x)] != x) return false;
    }
    return true;
}

int Perm::order() const {
    int k = 1;
    for (Perm x = *this; !x.is_identity(); x = x * *this) ++k;
    return k;
}

int Perm::rank() const {
    int out = 0;
    for (int i = 0; i < n_; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n_; ++j) {
            if (img_[static_cast<std::size_t>(j)] < img_[static_cast<std::size_t>(i)]) ++smaller;
        }
        out += smaller * factorial(n_ - 1 - i);
    }
    return out;
}

std::string Perm::str() const {
    std::ostringstream os;
    std::array<bool, kMaxDegree> done{};
    for (int start = 0; start < n_; ++start) {
        if (done[static_cast<std::size_t>(start)] || img_[static_cast<std::size_t>(start)] == start) continue;
        os << '(';
        int x = start;
        do {
            if (x != start) os << ' ';
            os << x;
            done[static_cast<std::size_t>(x)] = true;
            x = img_[static_cast<std::size_t>(x)];
        } while (x != start);
        os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

Subgroup Subgroup::generate(int n, std::span<const Perm> generators) {
    check_degree(n);
    std::vector<Perm> gens;
    for (const Perm& g : generators) {
        if (g.degree() != n) throw InvalidParameter("generator degree mismatch");
        if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    std::vector<char> seen(static_cast<std::size_t>(factorial(n)), 0);
    std::vector<Perm> frontier{Perm::identity(n)};
    std::vector<int> ranks{frontier.front().rank()};
    seen[static_cast<std::size_t>(ranks.front())] = 1;
    while (!frontier.empty()) {
        const Perm x = frontier.back();
        frontier.pop_back();
        for (const Perm& g : gens) {
            const Perm y = g * x;
            const int r = y.rank();
            if (!seen[static_cast<std::size_t>(r)]) {
                seen[static_cast<std::size_t>(r)] = 1;
                ranks.push_back(r);
                frontier.push_back(y);
            }
        }
    }
    std::sort(ranks.begin(), ranks.end());
    return Subgroup(n, std::move(gens), std::move(ranks));
}

std::vector<Perm> Subgroup::elements() const {
    std::vector<Perm> out;
    out.reserve(ranks_.size());
    for (int r : ranks_) out.push_back(Perm::unrank(n_, r));
    return out;
}

bool Subgroup::contains(const Perm& g) const { return std::binary_search(ranks_.begin(), ranks_.end(), g.rank()); }

bool Subgroup::contains(const Subgroup& h) const {
    return std::includes(ranks_.begin(), ranks_.end(), h.ranks_.begin(), h.ranks_.end());
}

bool Subgroup::transitive() const {
    std::vector<bool> reached(static_cast<std::size_t>(n_), false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const Perm& g : gens_) {
            const int y = g(x);
            if (!reached[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

bool Subgroup::abelian() const {
    for (const Perm& a : gens_) {
        for (const Perm& b : gens_) {
            if (!(a * b == b * a)) return false;
        }
    }
    return true;
}

Subgroup Subgroup::derived() const {
    std::vector<Perm> gens;
    for (const Perm& a : gens_) {
        for (const Perm& b : gens_) gens.push_back(commutator(a, b));
    }
    Subgroup h = generate(n_, gens);
    // Close under conjugation by the generators of this group.
    for (bool changed = true; changed;) {
        changed = false;
        const std::vector<Perm> current = h.gens_;
        for (const Perm& x : current) {
            for (const Perm& g : gens_) {
                const Perm c = g * x * g.inverse();
                if (!h.contains(c)) {
                    gens.push_back(c);
                    h = generate(n_, gens);
                    changed = true;
                }
            }
        }
    }
    return h;
}

bool Subgroup::solvable() const {
    Subgroup g = *this;
    while (g.order() > 1) {
        Subgroup next = g.derived();
        if (next.order() == g.order()) return false;
        g = std::move(next);
    }
    return true;
}

int Subgroup::subgroups_of_prime_order(int p) const {
    int elements_of_order_p = 0;
    for (const Perm& g : elements()) {
        if (g.order() == p) ++elements_of_order_p;
    }
    if (order() % (p * p) == 0) throw InvalidParameter("p^2 divides the group order");
    return elements_of_order_p / (p - 1);
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
    std::vector<int> common;
    std::set_intersection(ranks_.begin(), ranks_.end(), other.ranks_.begin(), other.ranks_.end(),
                          std::back_inserter(common));
    std::vector<Perm> gens;
    for (int r : common) gens.push_back(Perm::unrank(n_, r));
    return generate(n_, gens);
}

Subgroup Subgroup::join(const Subgroup& other) const {
    std::vector<Perm> gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return generate(n_, gens);
}

std::vector<Subgroup> two_generated_subgroups(const Subgroup& group, std::optional<int> order) {
    const std::vector<Perm> elems = group.elements();
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (order && *order % elems[i].order() != 0) continue;
        for (std::size_t j = i; j < elems.size(); ++j) {
            if (order && *order % elems[j].order() != 0) continue;
            const std::array<Perm, 2> gens{elems[i], elems[j]};
            Subgroup h = Subgroup::generate(group.degree(), gens);
            if (order && h.order() != *order) continue;
            if (seen.insert(h.ranks()).second) out.push_back(std::move(h));
        }
    }
    return out;
}

SubgroupRecord describe(const Subgroup& group) {
    const int p = group.degree();
    SubgroupRecord r;
    r.degree = p;
    r.generators = group.generators();
    r.element_ranks = group.ranks();
    r.order = group.order();
    r.transitive = group.transitive();
    r.solvable = group.solvable();
    r.abelian = group.abelian();
    r.sylow_p_count = group.subgroups_of_prime_order(p);
    if (r.order % p == 0 && (r.order <= kIndexEnumerationLimit || p <= 5)) {
        r.index_p_subgroup_count = static_cast<int>(two_generated_subgroups(group, r.order / p).size());
    }
    return r;
}

SubgroupRecord subgroup_closure(int p, std::span<const Perm> generators) {
    return describe(Subgroup::generate(p, generators));
}

}  // namespace pmass::perm
