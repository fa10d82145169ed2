#pragma once

#include <cstdint>
#include <string>

#include "girth6/plane_graph.hpp"

namespace girth6 {

// Hexagonal-lattice patch of rows x cols cells (brick-wall embedding), with
// the patch boundary as the outer face.  gen_honeycomb(1,1) is the hexagon.
PlaneGraph gen_honeycomb(int rows, int cols);

// Random simple 2-connected plane graph grown face-locally from a triangle,
// then every edge subdivided once, doubling the girth to >= 6.  Deterministic
// per seed.  `n` is the base vertex count before subdivision.
PlaneGraph gen_subdivided(std::uint64_t seed, int n);

// Pinned fixtures: HONEY1, HONEY2, SUBK4, THETA-X, CUBE-SUB, STAR4,
// TRIJUNCTION.  Throws UnknownFixture.
PlaneGraph named_fixture(const std::string& name);

// The fixture names, in the order the docs list them.
const std::vector<std::string>& fixture_names();

// Declarative description of one corpus graph; identical specs generate
// byte-identical files.
struct CorpusSpec {
    enum class Family { HoneycombPatch, SubdividedPlanar, NamedFixture };
    Family family = Family::HoneycombPatch;
    int rows = 1, cols = 1;        // honeycomb
    std::uint64_t seed = 1;        // subdivided
    int base_size = 8;             // subdivided
    std::string fixture;           // named fixture

    PlaneGraph generate() const;
};

}  // namespace girth6
