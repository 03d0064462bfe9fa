#include "pmass/galois_filter.hpp"

#include <algorithm>
#include <set>

#include "pmass/errors.hpp"
#include "pmass/mass.hpp"
#include "pmass/model.hpp"

namespace pmass {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

CharCoords omega_required(const LocalField& field) {
    auto w = field.omega_coords();
    if (!w) throw InvalidParameter("omega class required");
    return *w;
}

/// Coordinates of omega * chi^{-1}.
CharCoords twist(const LocalField& field, CharCoords omega, CharCoords chi) {
    return {field.residue(omega.a - chi.a), field.residue(omega.b - chi.b)};
}

bool less(const CharCoords& x, const CharCoords& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); }

}  // namespace

std::vector<CharCoords> generated_subgroup(const LocalField& field, const std::vector<CharCoords>& generators) {
    std::set<std::pair<int, int>> seen{{0, 0}};
    std::vector<CharCoords> frontier{{0, 0}};
    while (!frontier.empty()) {
        const CharCoords x = frontier.back();
        frontier.pop_back();
        for (const CharCoords& g : generators) {
            const CharCoords y{field.residue(x.a + g.a), field.residue(x.b + g.b)};
            if (seen.insert({y.a, y.b}).second) frontier.push_back(y);
        }
    }
    std::vector<CharCoords> out;
    for (const auto& [a, b] : seen) out.push_back({a, b});
    return out;
}

std::vector<int> closure_orders(const LocalField& field) {
    std::vector<int> out;
    for (int n = 1; n <= field.modulus(); ++n) {
        if (field.modulus() % n == 0) out.push_back(n);
    }
    return out;
}

std::vector<CharClass> qualifying_chars(const LocalField& field, const ClosureFilter& filter) {
    const std::vector<CharClass> all = enumerate_chars(field);
    std::vector<CharClass> out;
    std::visit(
        overloaded{
            [&](const filter::Cyclic&) { out.push_back(CharClass::omega_char(field)); },
            [&](const filter::UnramifiedClosure&) {
                const int w = vbar_omega(field);
                std::copy_if(all.begin(), all.end(), std::back_inserter(out),
                             [&](const CharClass& chi) { return chi.vbar == w; });
            },
            [&](const filter::GroupOrder& g) {
                if (g.order < 1 || field.modulus() % g.order != 0) {
                    throw InvalidParameter("group order must divide p-1");
                }
                const CharCoords omega = omega_required(field);
                std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&](const CharClass& chi) {
                    return char_order(field, twist(field, omega, *chi.coords)) == g.order;
                });
            },
            [&](const filter::Subfield& s) {
                const CharCoords omega = omega_required(field);
                const std::vector<CharCoords> target = generated_subgroup(field, s.generators);
                std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&](const CharClass& chi) {
                    const CharCoords t = twist(field, omega, *chi.coords);
                    if (s.exact) return generated_subgroup(field, {t}) == target;
                    return std::binary_search(target.begin(), target.end(), t, less);
                });
            },
        },
        filter);
    return out;
}

Rational galois_closure_contribution(const LocalField& field, const ClosureFilter& filter) {
    Rational out;
    for (const CharClass& chi : qualifying_chars(field, filter)) out += char_contribution(field, chi);
    return out;
}

}  // namespace pmass
