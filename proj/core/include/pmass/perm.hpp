#pragma once

/**
 * @file perm.hpp
 * @brief Permutations of {0, ..., n-1} for n <= 7 and generated subgroups.
 *
 * Elements are addressed by their Lehmer rank in [0, n!), so a subgroup is a
 * sorted list of ranks and membership tests are bitmap lookups.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pmass::perm {

inline constexpr int kMaxDegree = 7;

class Perm {
public:
    /// Throws InvalidParameter unless `images` is a bijection of {0..n-1}, n <= 7.
    explicit Perm(std::span<const int> images);

    static Perm identity(int n);
    /// x -> x + 1 mod n.
    static Perm cycle(int n);
    /// x -> mul * x + add mod p.
    static Perm affine(int p, int mul, int add);
    static Perm transposition(int n, int i, int j);
    static Perm unrank(int n, int rank);

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    [[nodiscard]] std::vector<int> images() const;

    /// Composition: (a * b)(x) = a(b(x)).
    friend Perm operator*(const Perm& a, const Perm& b);
    [[nodiscard]] Perm inverse() const;
    [[nodiscard]] int order() const;
    [[nodiscard]] bool is_identity() const;

    /// Lehmer rank in [0, n!).
    [[nodiscard]] int rank() const;

    /// Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Perm& a, const Perm& b) { return a.n_ == b.n_ && a.img_ == b.img_; }

private:
    Perm() = default;

    std::array<std::uint8_t, kMaxDegree> img_{};
    std::uint8_t n_ = 0;
};

int factorial(int n);

/// A subgroup of S_n as the sorted ranks of its elements.
class Subgroup {
public:
    /// Closure of the generators under composition. Throws
    /// ScaleExceeded("verification scale exceeded") for n > 7.
    static Subgroup generate(int n, std::span<const Perm> generators);

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] int order() const { return static_cast<int>(ranks_.size()); }
    [[nodiscard]] const std::vector<int>& ranks() const { return ranks_; }
    [[nodiscard]] const std::vector<Perm>& generators() const { return gens_; }
    [[nodiscard]] std::vector<Perm> elements() const;
    [[nodiscard]] bool contains(const Perm& g) const;
    [[nodiscard]] bool contains(const Subgroup& h) const;

    [[nodiscard]] bool transitive() const;
    [[nodiscard]] bool abelian() const;
    /// Commutator subgroup: normal closure of the generators' commutators.
    [[nodiscard]] Subgroup derived() const;
    /// Derived series reaches the trivial group.
    [[nodiscard]] bool solvable() const;
    /// Number of subgroups of order p, p prime with p^2 not dividing |G|.
    [[nodiscard]] int subgroups_of_prime_order(int p) const;

    /// Intersection as a subgroup (generated by the common elements).
    [[nodiscard]] Subgroup intersect(const Subgroup& other) const;
    /// Subgroup generated by both.
    [[nodiscard]] Subgroup join(const Subgroup& other) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.n_ == b.n_ && a.ranks_ == b.ranks_; }

private:
    Subgroup(int n, std::vector<Perm> gens, std::vector<int> ranks)
        : n_(n), gens_(std::move(gens)), ranks_(std::move(ranks)) {}

    int n_ = 0;
    std::vector<Perm> gens_;
    std::vector<int> ranks_;
};

/// Distinct subgroups <x, y> for x, y ranging over `group`, optionally only
/// those of the given order.
std::vector<Subgroup> two_generated_subgroups(const Subgroup& group, std::optional<int> order = std::nullopt);

struct SubgroupRecord {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<int> element_ranks;
    int order = 0;
    bool transitive = false;
    bool solvable = false;
    bool abelian = false;
    int sylow_p_count = 0;
    /// Subgroups of index p; computed when |G| <= kIndexEnumerationLimit.
    std::optional<int> index_p_subgroup_count;
};

inline constexpr int kIndexEnumerationLimit = 168;

/// The generated subgroup of S_p with all derived flags.
SubgroupRecord subgroup_closure(int p, std::span<const Perm> generators);
SubgroupRecord describe(const Subgroup& group);

}  // namespace pmass::perm
