#pragma once

#include <cstdint>
#include <string>

#include "coralg/covering.hpp"

namespace coralg {

/// A covering fixture: an algebra plus ideal generators, serialized as
/// schema-versioned JSON ("cover-fixture/1") with exact scalars as strings.
struct FixtureDocument {
    std::string name;
    Field field = Field::rationals();
    Algebra algebra = Algebra::ground_field(Field::rationals());
    std::vector<std::vector<Vec>> ideal_generators;
    /// Optional expected-verdict metadata, kept verbatim as canonical JSON.
    /// Never consulted by the library itself.
    std::string expected;

    /// Ideals obtained by closing the generator lists.
    std::vector<Subspace> ideals() const;
    Covering covering() const;
};

FixtureDocument load_fixture(const std::string& path);
FixtureDocument parse_fixture(const std::string& text);
void save_fixture(const FixtureDocument& doc, const std::string& path);
/// Canonical serialization; save(load(f)) is byte-identical for canonical f.
std::string serialize_fixture(const FixtureDocument& doc);

/// FNV-1a over the canonical serialization.
std::string fixture_hash(const FixtureDocument& doc);

/// Function algebra on point_count points covered by the given subsets
/// (0-based point indices); ideals are the vanishing ideals of the subsets.
FixtureDocument build_open_cover_fixture(std::size_t point_count,
                                         const std::vector<std::vector<std::size_t>>& covers,
                                         Field field = Field::rationals());

/// B = k{1,x,y} with xx = xy = yx = yy = 0 and ideals span{x}, span{y},
/// span{x+y}: a valid covering whose completion is strictly larger than B.
FixtureDocument build_nil3_fixture(Field field = Field::rationals());

enum class GeneratorProfile { two_ideal, semisimple, mixed };
GeneratorProfile parse_profile(const std::string& name);
std::string profile_name(GeneratorProfile p);

/// Deterministic-in-seed random covering fixture; only valid coverings are
/// emitted, with bounded retries.
FixtureDocument random_covering(std::uint64_t seed, GeneratorProfile profile);

} // namespace coralg
