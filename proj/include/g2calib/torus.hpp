#pragma once

#include "g2calib/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g2calib {

/// Diagonal affine map x -> eps * x + c on the 7-torus R^7/Z^7, with signs
/// eps in {+-1}^7 and exact rational shifts mod 1.
struct AffineTorusMap {
    std::array<int, 7> signs{1, 1, 1, 1, 1, 1, 1};
    std::array<Rational, 7> shift{};

    static AffineTorusMap identity() { return {}; }

    /// this o other (apply other first).
    AffineTorusMap compose(const AffineTorusMap& other) const;

    std::array<Rational, 7> apply(const std::array<Rational, 7>& p) const;

    bool is_involution() const;

    bool operator==(const AffineTorusMap& o) const { return signs == o.signs && shift == o.shift; }
    bool operator<(const AffineTorusMap& o) const;
};

/// Coordinate subtorus: some coordinates free, the rest pinned to exact
/// rationals mod 1.
struct CoordSubtorus {
    std::uint8_t free_mask = 0;       // bit i set <=> coordinate i free
    std::array<Rational, 7> fixed{};  // meaningful where the bit is clear

    int dim() const;
    bool is_free(int i) const { return (free_mask >> i) & 1; }

    bool operator==(const CoordSubtorus& o) const;
    bool operator<(const CoordSubtorus& o) const;
};

/// Fixed locus of a diagonal affine map: per coordinate, free if eps=+1 and
/// the shift vanishes, empty if eps=+1 with nonzero shift, and a two-point
/// choice {c/2, c/2 + 1/2} if eps=-1.  Returns the cartesian product:
/// 2^(#negated) components, or none.
std::vector<CoordSubtorus> fixed_locus(const AffineTorusMap& m);

enum class SubtorusClass { associative, coassociative, neither };

/// Exact classification of a coordinate 3- or 4-subtorus by the +-1
/// coefficient of the calibration form on its free coordinate plane.
SubtorusClass classify_subtorus(const CoordSubtorus& t);

std::string to_string(SubtorusClass c);

/// Image subtorus under a diagonal affine map (free coordinates persist,
/// fixed values map by eps*val + c mod 1).
CoordSubtorus apply_map(const AffineTorusMap& m, const CoordSubtorus& t);

/// True when the two subtori share a point: every coordinate fixed in both
/// must agree mod 1.
bool subtorus_intersect(const CoordSubtorus& s, const CoordSubtorus& t);

/// Character of the pullback action on the standard 3-form: +1 preserving,
/// -1 reversing, 0 neither (shift parts act trivially on constant forms).
int phi0_character(const AffineTorusMap& m);

/// Group element together with a readable generator word.
struct GroupElement {
    AffineTorusMap map;
    std::string word; // "id" or e.g. "beta*gamma"
};

/// Closure of the generators under composition; throws above max_order.
std::vector<GroupElement> group_closure(const std::vector<AffineTorusMap>& generators,
                                        const std::vector<std::string>& names,
                                        std::size_t max_order = 1024);

struct Orbit {
    std::vector<CoordSubtorus> elements; // sorted representatives
    int stabilizer_order = 1;
};

struct OrbitCensus {
    std::vector<Orbit> orbits;
    std::size_t group_order = 1;
    bool free_action = true;

    std::size_t orbit_count() const { return orbits.size(); }
};

/// Partitions items into orbits of the group generated by the given maps.
OrbitCensus orbit_census(const std::vector<AffineTorusMap>& generators,
                         const std::vector<CoordSubtorus>& items);

/// Fixed-locus table of base o delta over all delta in the generated group,
/// with the orbit structure of the union under that group (the fixed locus
/// of the induced map on the quotient).  Orbits are grouped by dimension.
struct ComposedFixedCensus {
    struct Entry {
        std::string word;
        std::size_t component_count = 0;
        int dimension = -1; // -1 when empty
    };
    std::vector<Entry> per_element;
    std::map<int, OrbitCensus> orbits_by_dimension;
};

ComposedFixedCensus composed_fixed_census(const AffineTorusMap& base,
                                          const std::vector<AffineTorusMap>& generators,
                                          const std::vector<std::string>& names);

// --- the concrete example data ---

/// Flat 7-torus pair: the form-preserving involution negating x4..x7 (16
/// associative 3-tori) and the form-reversing one negating x1, x6, x7
/// (8 coassociative 4-tori).
AffineTorusMap flat_involution_preserving();
AffineTorusMap flat_involution_reversing();

/// Order-8 orbifold group with 12 singular 3-torus classes.
std::vector<AffineTorusMap> joyce_group_generators();
const std::vector<std::string>& joyce_generator_names();

/// First (warm-up) equivariant pair on the orbifold quotient.
AffineTorusMap joyce_warmup_preserving();
AffineTorusMap joyce_warmup_reversing();

/// Second equivariant pair (the nontrivial-index example).
AffineTorusMap joyce_second_preserving();
AffineTorusMap joyce_second_reversing();

/// End-to-end reproduction of the flat-torus boundary example.
struct FlatExampleReport {
    std::size_t associative_fixed_tori = 0;   // 16 expected
    std::size_t coassociative_fixed_tori = 0; // 8 expected
    bool y_interior_associative = false;
    int boundary_component_count = 0;
    int boundary_genus = 0;
    bool x_components_coassociative = false;
    bool boundary_tori_meet_x = false;
    int nuX_chern = 0; // computed on a torus grid with the constant normal frame
    long index = 0;
};

FlatExampleReport flat_example_report();

} // namespace g2calib
