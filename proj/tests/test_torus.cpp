#include "g2calib/torus.hpp"

#include "g2calib/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace g2calib;

namespace {

AffineTorusMap map_of(std::initializer_list<int> signs, std::initializer_list<const char*> shifts) {
    AffineTorusMap m;
    int i = 0;
    for (int s : signs) m.signs[static_cast<std::size_t>(i++)] = s;
    i = 0;
    for (const char* c : shifts) m.shift[static_cast<std::size_t>(i++)] = parse_rational(c);
    return m;
}

std::uint8_t mask_of(std::initializer_list<int> coords) {
    std::uint8_t m = 0;
    for (int c : coords) m |= static_cast<std::uint8_t>(1u << (c - 1));
    return m;
}

} // namespace

TEST_CASE("composition matches function application and stays exact") {
    std::mt19937_64 rng(5);
    auto random_map = [&]() {
        AffineTorusMap m;
        for (int i = 0; i < 7; ++i) {
            m.signs[static_cast<std::size_t>(i)] = (rng() & 1) ? 1 : -1;
            m.shift[static_cast<std::size_t>(i)] =
                mod1(Rational(static_cast<long long>(rng() % 8), 4));
        }
        return m;
    };
    auto random_point = [&]() {
        std::array<Rational, 7> p;
        for (auto& x : p) x = mod1(Rational(static_cast<long long>(rng() % 24), 12));
        return p;
    };
    for (int t = 0; t < 200; ++t) {
        auto m1 = random_map(), m2 = random_map();
        auto p = random_point();
        CHECK(m1.compose(m2).apply(p) == m1.apply(m2.apply(p)));
    }
}

TEST_CASE("involution predicate") {
    CHECK(flat_involution_preserving().is_involution());
    CHECK(flat_involution_reversing().is_involution());
    CHECK(joyce_warmup_preserving().is_involution());
    auto shifted = map_of({1, 1, 1, 1, 1, 1, 1}, {"1/4", "0", "0", "0", "0", "0", "0"});
    CHECK_FALSE(shifted.is_involution());
    auto half_shift = map_of({1, -1, 1, 1, 1, 1, 1}, {"1/2", "0", "0", "0", "0", "0", "0"});
    CHECK(half_shift.is_involution());
}

TEST_CASE("fixed locus of the flat involutions") {
    auto sigma = fixed_locus(flat_involution_preserving());
    REQUIRE(sigma.size() == 16);
    for (const auto& t : sigma) {
        CHECK(t.free_mask == mask_of({1, 2, 3}));
        CHECK(classify_subtorus(t) == SubtorusClass::associative);
    }
    auto tau = fixed_locus(flat_involution_reversing());
    REQUIRE(tau.size() == 8);
    for (const auto& t : tau) {
        CHECK(t.free_mask == mask_of({2, 3, 4, 5}));
        CHECK(classify_subtorus(t) == SubtorusClass::coassociative);
    }
    // a pure shift in a non-negated coordinate empties the locus
    auto impossible = map_of({1, -1, -1, -1, -1, -1, -1}, {"1/2", "0", "0", "0", "0", "0", "0"});
    CHECK(fixed_locus(impossible).empty());
}

TEST_CASE("classification rejects other dimensions and spots neither") {
    CoordSubtorus t;
    t.free_mask = mask_of({1, 2, 4});
    CHECK(classify_subtorus(t) == SubtorusClass::neither);
    CoordSubtorus small;
    small.free_mask = mask_of({1, 2});
    CHECK_THROWS_AS(classify_subtorus(small), PreconditionError);
}

TEST_CASE("random involutions: counts and exact fixedness") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        AffineTorusMap m;
        int negated = 0;
        for (int i = 0; i < 7; ++i) {
            bool neg = rng() & 1;
            m.signs[static_cast<std::size_t>(i)] = neg ? -1 : 1;
            negated += neg ? 1 : 0;
            // involution: negated coordinates may carry any shift, the rest 0 or 1/2
            long den = 4;
            long num = static_cast<long>(rng() % 8);
            m.shift[static_cast<std::size_t>(i)] =
                neg ? mod1(Rational(num, den)) : (rng() & 1 ? Rational(1, 2) : Rational(0));
        }
        REQUIRE(m.is_involution());
        auto locus = fixed_locus(m);
        if (locus.empty()) continue;
        CHECK(locus.size() == (1u << negated));
        // a random point on a random component is exactly fixed
        const auto& comp = locus[static_cast<std::size_t>(rng() % locus.size())];
        std::array<Rational, 7> p;
        for (int i = 0; i < 7; ++i)
            p[static_cast<std::size_t>(i)] = comp.is_free(i)
                                                 ? mod1(Rational(static_cast<long long>(rng() % 16), 16))
                                                 : comp.fixed[static_cast<std::size_t>(i)];
        CHECK(m.apply(p) == p);
    }
}

TEST_CASE("128 fixed points when every coordinate is negated") {
    AffineTorusMap m;
    for (auto& s : m.signs) s = -1;
    auto locus = fixed_locus(m);
    CHECK(locus.size() == 128);
    for (const auto& t : locus) CHECK(t.dim() == 0);
}

TEST_CASE("apply_map moves fixed tori the way the group acts") {
    const auto gens = joyce_group_generators();
    const auto& beta = gens[1];
    CoordSubtorus t;
    t.free_mask = mask_of({1, 2, 3}); // alpha-type torus, fixed values all 0
    auto image = apply_map(beta, t);
    CHECK(image.free_mask == t.free_mask);
    CHECK(image.fixed[5] == Rational(1, 2)); // coordinate 6 picks up the half shift
    CHECK(image.fixed[3] == Rational(0));
    CHECK(image.fixed[4] == Rational(0));
    CHECK(image.fixed[6] == Rational(0));
    // identity and self-fixedness
    CHECK(apply_map(AffineTorusMap::identity(), t) == t);
    CHECK(apply_map(gens[0], t) == t); // alpha fixes its own tori
}

TEST_CASE("subtorus intersection") {
    CoordSubtorus a;
    a.free_mask = mask_of({2, 3, 4, 5});
    CHECK(subtorus_intersect(a, a));
    CoordSubtorus slab_boundary;
    slab_boundary.free_mask = mask_of({2, 3});
    CHECK(subtorus_intersect(slab_boundary, a)); // all shared fixed coords agree at 0
    CoordSubtorus other = a;
    other.fixed[0] = Rational(1, 2);
    CHECK_FALSE(subtorus_intersect(slab_boundary, other));
}

TEST_CASE("group closure and the order bound") {
    auto group = group_closure(joyce_group_generators(), joyce_generator_names());
    CHECK(group.size() == 8);
    bool has_id = false;
    for (const auto& g : group) has_id = has_id || g.map == AffineTorusMap::identity();
    CHECK(has_id);
    // generators of a large group trip the bound
    std::vector<AffineTorusMap> big;
    for (int i = 0; i < 7; ++i) {
        AffineTorusMap m;
        m.shift[static_cast<std::size_t>(i)] = Rational(1, 5);
        big.push_back(m);
    }
    CHECK_THROWS_AS(group_closure(big, {}, 1024), PreconditionError);
}

TEST_CASE("orbit census of the singular tori") {
    const auto gens = joyce_group_generators();
    std::vector<CoordSubtorus> all;
    for (const auto& g : gens) {
        auto fl = fixed_locus(g);
        CHECK(fl.size() == 16);
        for (const auto& t : fl) CHECK(classify_subtorus(t) == SubtorusClass::associative);
        all.insert(all.end(), fl.begin(), fl.end());
    }
    auto census = orbit_census(gens, all);
    CHECK(census.orbit_count() == 12);
    CHECK(census.group_order == 8);
    for (const auto& o : census.orbits) {
        CHECK(o.elements.size() == 4);
        CHECK(o.stabilizer_order == 2); // each generator fixes its own tori setwise
    }

    // the other two generators act freely on the sixteen alpha-tori
    auto bg = orbit_census({gens[1], gens[2]}, fixed_locus(gens[0]));
    CHECK(bg.orbit_count() == 4);
    CHECK(bg.free_action);

    // trivial group: one orbit per item
    auto trivial = orbit_census({}, all);
    CHECK(trivial.orbit_count() == all.size());
}

TEST_CASE("warm-up pair: quotient censuses") {
    const auto gens = joyce_group_generators();
    const auto& names = joyce_generator_names();
    CHECK(phi0_character(joyce_warmup_preserving()) == 1);
    CHECK(phi0_character(joyce_warmup_reversing()) == -1);

    auto sigma = composed_fixed_census(joyce_warmup_preserving(), gens, names);
    int nonempty = 0;
    for (const auto& e : sigma.per_element)
        if (e.component_count > 0) {
            ++nonempty;
            CHECK(e.word == "id");
            CHECK(e.component_count == 16);
            CHECK(e.dimension == 3);
        }
    CHECK(nonempty == 1);
    CHECK(sigma.orbits_by_dimension.at(3).orbit_count() == 2);

    auto tau = composed_fixed_census(joyce_warmup_reversing(), gens, names);
    int tori = 0, points = 0, other = 0;
    for (const auto& e : tau.per_element) {
        if (e.component_count == 0) continue;
        if (e.dimension == 4 && e.component_count == 8)
            ++tori;
        else if (e.dimension == 0 && e.component_count == 128)
            ++points;
        else
            ++other;
    }
    CHECK(tori == 1);
    CHECK(points == 1);
    CHECK(other == 0);
    CHECK(tau.orbits_by_dimension.at(4).orbit_count() == 1);

    // exact isolated-point classes: 16 orbits of size 8, all free.  The
    // published count is eight; the enumeration is authoritative here and
    // the acceptance suite reports the discrepancy loudly.
    const auto& points_census = tau.orbits_by_dimension.at(0);
    CHECK(points_census.orbit_count() == 16);
    CHECK(points_census.free_action);
    std::size_t total = 0;
    for (const auto& o : points_census.orbits) {
        CHECK(o.elements.size() == 8);
        CHECK(o.stabilizer_order == 1);
        total += o.elements.size();
    }
    CHECK(total == 128);
}

TEST_CASE("second pair: quotient censuses") {
    const auto gens = joyce_group_generators();
    const auto& names = joyce_generator_names();
    CHECK(phi0_character(joyce_second_preserving()) == 1);
    CHECK(phi0_character(joyce_second_reversing()) == -1);

    auto sigma = composed_fixed_census(joyce_second_preserving(), gens, names);
    std::vector<std::string> nonempty;
    for (const auto& e : sigma.per_element)
        if (e.component_count > 0) {
            nonempty.push_back(e.word);
            CHECK(e.component_count == 16);
            CHECK(e.dimension == 3);
        }
    std::sort(nonempty.begin(), nonempty.end());
    CHECK(nonempty == std::vector<std::string>{"alpha", "id"});

    auto tau = composed_fixed_census(joyce_second_reversing(), gens, names);
    int tori = 0, points = 0;
    for (const auto& e : tau.per_element) {
        if (e.component_count == 0) continue;
        if (e.dimension == 4) {
            ++tori;
            CHECK(e.component_count == 8);
        }
        if (e.dimension == 0) {
            ++points;
            CHECK(e.component_count == 128);
        }
    }
    CHECK(tori == 2);
    CHECK(points == 1);
}

TEST_CASE("joyce generators pairwise-disjoint fixed tori") {
    const auto gens = joyce_group_generators();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            for (const auto& s : fixed_locus(gens[a]))
                for (const auto& t : fixed_locus(gens[b])) CHECK_FALSE(subtorus_intersect(s, t));
}

TEST_CASE("flat example report") {
    auto rep = flat_example_report();
    CHECK(rep.associative_fixed_tori == 16);
    CHECK(rep.coassociative_fixed_tori == 8);
    CHECK(rep.y_interior_associative);
    CHECK(rep.boundary_component_count == 2);
    CHECK(rep.boundary_genus == 1);
    CHECK(rep.x_components_coassociative);
    CHECK(rep.boundary_tori_meet_x);
    CHECK(rep.nuX_chern == 0);
    CHECK(rep.index == 0);
}

TEST_CASE("flat involution characters") {
    CHECK(phi0_character(flat_involution_preserving()) == 1);
    CHECK(phi0_character(flat_involution_reversing()) == -1);
    CHECK(phi0_character(AffineTorusMap::identity()) == 1);
    AffineTorusMap mixed;
    mixed.signs = {-1, 1, 1, 1, 1, 1, 1};
    CHECK(phi0_character(mixed) == 0);
}
