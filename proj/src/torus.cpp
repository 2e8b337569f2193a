#include "g2calib/torus.hpp"

#include "g2calib/bundle.hpp"
#include "g2calib/errors.hpp"
#include "g2calib/kform.hpp"
#include "g2calib/symbol.hpp"

#include <algorithm>
#include <set>

namespace g2calib {

AffineTorusMap AffineTorusMap::compose(const AffineTorusMap& other) const {
    AffineTorusMap r;
    for (int i = 0; i < 7; ++i) {
        r.signs[static_cast<std::size_t>(i)] =
            signs[static_cast<std::size_t>(i)] * other.signs[static_cast<std::size_t>(i)];
        r.shift[static_cast<std::size_t>(i)] =
            mod1(Rational(signs[static_cast<std::size_t>(i)]) * other.shift[static_cast<std::size_t>(i)] +
                 shift[static_cast<std::size_t>(i)]);
    }
    return r;
}

std::array<Rational, 7> AffineTorusMap::apply(const std::array<Rational, 7>& p) const {
    std::array<Rational, 7> r;
    for (int i = 0; i < 7; ++i)
        r[static_cast<std::size_t>(i)] =
            mod1(Rational(signs[static_cast<std::size_t>(i)]) * p[static_cast<std::size_t>(i)] +
                 shift[static_cast<std::size_t>(i)]);
    return r;
}

bool AffineTorusMap::is_involution() const {
    // m o m = id <=> per coordinate: eps = -1, or 2c = 0 mod 1
    for (int i = 0; i < 7; ++i) {
        if (signs[static_cast<std::size_t>(i)] == -1) continue;
        if (mod1(Rational(2) * shift[static_cast<std::size_t>(i)]) != Rational(0)) return false;
    }
    return true;
}

bool AffineTorusMap::operator<(const AffineTorusMap& o) const {
    if (signs != o.signs) return signs < o.signs;
    for (int i = 0; i < 7; ++i) {
        const auto& a = shift[static_cast<std::size_t>(i)];
        const auto& b = o.shift[static_cast<std::size_t>(i)];
        if (a != b) return a < b;
    }
    return false;
}

int CoordSubtorus::dim() const {
    int d = 0;
    for (int i = 0; i < 7; ++i) d += is_free(i) ? 1 : 0;
    return d;
}

bool CoordSubtorus::operator==(const CoordSubtorus& o) const {
    if (free_mask != o.free_mask) return false;
    for (int i = 0; i < 7; ++i)
        if (!is_free(i) && fixed[static_cast<std::size_t>(i)] != o.fixed[static_cast<std::size_t>(i)])
            return false;
    return true;
}

bool CoordSubtorus::operator<(const CoordSubtorus& o) const {
    if (free_mask != o.free_mask) return free_mask < o.free_mask;
    for (int i = 0; i < 7; ++i) {
        if (is_free(i)) continue;
        const auto& a = fixed[static_cast<std::size_t>(i)];
        const auto& b = o.fixed[static_cast<std::size_t>(i)];
        if (a != b) return a < b;
    }
    return false;
}

std::vector<CoordSubtorus> fixed_locus(const AffineTorusMap& m) {
    CoordSubtorus base;
    std::vector<int> negated;
    for (int i = 0; i < 7; ++i) {
        if (m.signs[static_cast<std::size_t>(i)] == 1) {
            if (mod1(m.shift[static_cast<std::size_t>(i)]) != Rational(0)) return {}; // x = x + c unsolvable
            base.free_mask |= static_cast<std::uint8_t>(1u << i);
        } else {
            negated.push_back(i);
        }
    }
    std::vector<CoordSubtorus> out;
    out.push_back(base);
    for (int i : negated) {
        Rational half = mod1(m.shift[static_cast<std::size_t>(i)] / 2);
        std::vector<CoordSubtorus> next;
        next.reserve(out.size() * 2);
        for (const auto& t : out)
            for (const Rational& val : {half, mod1(half + Rational(1, 2))}) {
                CoordSubtorus u = t;
                u.fixed[static_cast<std::size_t>(i)] = val;
                next.push_back(u);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SubtorusClass classify_subtorus(const CoordSubtorus& t) {
    int d = t.dim();
    if (d != 3 && d != 4) throw PreconditionError("classification needs a 3- or 4-subtorus");
    unsigned mask = t.free_mask;
    Rational c = d == 3 ? phi0_form<Rational>().at_mask(mask) : psi0_form<Rational>().at_mask(mask);
    if (c == Rational(1) || c == Rational(-1))
        return d == 3 ? SubtorusClass::associative : SubtorusClass::coassociative;
    return SubtorusClass::neither;
}

std::string to_string(SubtorusClass c) {
    switch (c) {
    case SubtorusClass::associative: return "associative";
    case SubtorusClass::coassociative: return "coassociative";
    default: return "neither";
    }
}

CoordSubtorus apply_map(const AffineTorusMap& m, const CoordSubtorus& t) {
    CoordSubtorus r;
    r.free_mask = t.free_mask; // diagonal maps preserve the free set
    for (int i = 0; i < 7; ++i)
        if (!t.is_free(i))
            r.fixed[static_cast<std::size_t>(i)] =
                mod1(Rational(m.signs[static_cast<std::size_t>(i)]) * t.fixed[static_cast<std::size_t>(i)] +
                     m.shift[static_cast<std::size_t>(i)]);
    return r;
}

bool subtorus_intersect(const CoordSubtorus& s, const CoordSubtorus& t) {
    for (int i = 0; i < 7; ++i)
        if (!s.is_free(i) && !t.is_free(i) &&
            s.fixed[static_cast<std::size_t>(i)] != t.fixed[static_cast<std::size_t>(i)])
            return false;
    return true;
}

int phi0_character(const AffineTorusMap& m) {
    const auto phi = phi0_form<Rational>();
    const auto& masks = detail::comb().masks[3];
    int character = 0;
    for (unsigned mask : masks) {
        if (phi.at_mask(mask) == Rational(0)) continue;
        int s = 1;
        for (unsigned b = mask; b; b &= b - 1)
            s *= m.signs[static_cast<std::size_t>(std::countr_zero(b))];
        if (character == 0)
            character = s;
        else if (character != s)
            return 0;
    }
    return character;
}

std::vector<GroupElement> group_closure(const std::vector<AffineTorusMap>& generators,
                                        const std::vector<std::string>& names,
                                        std::size_t max_order) {
    if (!names.empty() && names.size() != generators.size())
        throw PreconditionError("generator name list does not match the generators");
    std::vector<GroupElement> elems{{AffineTorusMap::identity(), "id"}};
    std::set<AffineTorusMap> seen{elems[0].map};
    std::size_t head = 0;
    while (head < elems.size()) {
        GroupElement cur = elems[head++];
        for (std::size_t g = 0; g < generators.size(); ++g) {
            AffineTorusMap next = generators[g].compose(cur.map);
            if (seen.count(next)) continue;
            std::string gname = names.empty() ? ("g" + std::to_string(g)) : names[g];
            std::string word = cur.word == "id" ? gname : gname + "*" + cur.word;
            if (elems.size() >= max_order)
                throw PreconditionError("group closure exceeded the order bound");
            seen.insert(next);
            elems.push_back({next, word});
        }
    }
    return elems;
}

OrbitCensus orbit_census(const std::vector<AffineTorusMap>& generators,
                         const std::vector<CoordSubtorus>& items) {
    auto group = group_closure(generators, {});
    OrbitCensus census;
    census.group_order = group.size();
    std::set<CoordSubtorus> remaining(items.begin(), items.end());
    while (!remaining.empty()) {
        CoordSubtorus seed = *remaining.begin();
        std::set<CoordSubtorus> orbit;
        int stab = 0;
        for (const auto& g : group) {
            CoordSubtorus img = apply_map(g.map, seed);
            if (img == seed) ++stab;
            orbit.insert(img);
        }
        for (const auto& x : orbit) remaining.erase(x);
        Orbit o;
        o.elements.assign(orbit.begin(), orbit.end());
        o.stabilizer_order = stab;
        if (stab != 1) census.free_action = false;
        census.orbits.push_back(std::move(o));
    }
    return census;
}

ComposedFixedCensus composed_fixed_census(const AffineTorusMap& base,
                                          const std::vector<AffineTorusMap>& generators,
                                          const std::vector<std::string>& names) {
    auto group = group_closure(generators, names);
    ComposedFixedCensus census;
    std::map<int, std::vector<CoordSubtorus>> by_dim;
    for (const auto& g : group) {
        auto fl = fixed_locus(base.compose(g.map));
        ComposedFixedCensus::Entry e;
        e.word = g.word;
        e.component_count = fl.size();
        e.dimension = fl.empty() ? -1 : fl.front().dim();
        census.per_element.push_back(e);
        for (auto& t : fl) by_dim[t.dim()].push_back(t);
    }
    for (auto& [dim, items] : by_dim) {
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
        census.orbits_by_dimension[dim] = orbit_census(generators, items);
    }
    return census;
}

namespace {

AffineTorusMap make_map(std::initializer_list<int> signs, std::initializer_list<Rational> shifts) {
    AffineTorusMap m;
    int i = 0;
    for (int s : signs) m.signs[static_cast<std::size_t>(i++)] = s;
    i = 0;
    for (const Rational& c : shifts) m.shift[static_cast<std::size_t>(i++)] = c;
    return m;
}

const Rational kHalf{1, 2};

} // namespace

AffineTorusMap flat_involution_preserving() {
    return make_map({1, 1, 1, -1, -1, -1, -1}, {0, 0, 0, 0, 0, 0, 0});
}

AffineTorusMap flat_involution_reversing() {
    return make_map({-1, 1, 1, 1, 1, -1, -1}, {0, 0, 0, 0, 0, 0, 0});
}

std::vector<AffineTorusMap> joyce_group_generators() {
    return {
        make_map({1, 1, 1, -1, -1, -1, -1}, {0, 0, 0, 0, 0, 0, 0}),
        make_map({1, -1, -1, 1, 1, -1, -1}, {0, 0, 0, 0, 0, kHalf, 0}),
        make_map({-1, 1, -1, 1, -1, 1, -1}, {0, 0, 0, 0, kHalf, 0, kHalf}),
    };
}

const std::vector<std::string>& joyce_generator_names() {
    static const std::vector<std::string> names{"alpha", "beta", "gamma"};
    return names;
}

AffineTorusMap joyce_warmup_preserving() {
    return make_map({1, -1, -1, 1, 1, -1, -1}, {0, kHalf, kHalf, 0, 0, 0, kHalf});
}

AffineTorusMap joyce_warmup_reversing() {
    return make_map({1, 1, -1, -1, 1, 1, -1}, {0, 0, kHalf, kHalf, 0, 0, kHalf});
}

AffineTorusMap joyce_second_preserving() {
    return make_map({1, -1, -1, 1, 1, -1, -1}, {0, kHalf, kHalf, 0, 0, 0, 0});
}

AffineTorusMap joyce_second_reversing() {
    return make_map({-1, 1, 1, 1, 1, -1, -1}, {kHalf, 0, 0, 0, 0, 0, 0});
}

FlatExampleReport flat_example_report() {
    FlatExampleReport rep;

    auto sigma = flat_involution_preserving();
    auto tau = flat_involution_reversing();
    auto associatives = fixed_locus(sigma);
    auto coassociatives = fixed_locus(tau);
    rep.associative_fixed_tori = associatives.size();
    rep.coassociative_fixed_tori = coassociatives.size();

    // interior tangent plane of the slab [0,1/2] x T^2_{23}: free {1,2,3}
    CoordSubtorus interior;
    interior.free_mask = 0b0000111;
    rep.y_interior_associative = classify_subtorus(interior) == SubtorusClass::associative;

    rep.x_components_coassociative =
        !coassociatives.empty() &&
        std::all_of(coassociatives.begin(), coassociatives.end(), [](const CoordSubtorus& t) {
            return classify_subtorus(t) == SubtorusClass::coassociative;
        });

    // boundary tori of the slab at x1 = 0 and x1 = 1/2: free {2,3}
    std::array<CoordSubtorus, 2> boundary{};
    for (int k = 0; k < 2; ++k) {
        boundary[static_cast<std::size_t>(k)].free_mask = 0b0000110;
        boundary[static_cast<std::size_t>(k)].fixed[0] = k == 0 ? Rational(0) : kHalf;
        // remaining coordinates pinned at 0
    }
    rep.boundary_component_count = 2;
    rep.boundary_genus = 1;

    // each boundary torus must lie inside one of the fixed coassociative tori
    int matches = 0;
    for (const auto& bt : boundary)
        for (const auto& xt : coassociatives)
            if ((bt.free_mask & ~xt.free_mask) == 0 && subtorus_intersect(bt, xt)) {
                ++matches;
                break;
            }
    rep.boundary_tori_meet_x = matches == 2;

    // nu_X along each boundary torus is the constant coordinate frame
    // spanned by x4, x5: a constant line sample on a torus grid
    SampledLineBundle grid = torus_grid(8);
    attach_constant_lines(grid, {std::complex<double>(1, 0), std::complex<double>(0, 1)});
    rep.nuX_chern = chern_number(grid);

    std::array<BoundaryComponent, 2> comps{{{1, rep.nuX_chern}, {1, rep.nuX_chern}}};
    rep.index = index_formula(comps);
    return rep;
}

} // namespace g2calib
