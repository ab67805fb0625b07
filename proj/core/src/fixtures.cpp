#include "coralg/fixtures.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace coralg {

using ordered_json = nlohmann::ordered_json;

std::vector<Subspace> FixtureDocument::ideals() const {
    std::vector<Subspace> out;
    for (const auto& gens : ideal_generators) out.push_back(ideal_closure(algebra, gens));
    return out;
}

Covering FixtureDocument::covering() const { return validate_covering(algebra, ideals()); }

namespace {

Field parse_field(const ordered_json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Field::rationals();
    if (kind == "prime") return Field::prime(j.at("p").get<long>());
    throw error("fixture: unknown field kind '" + kind + "'");
}

ordered_json field_json(const Field& f) {
    ordered_json j;
    if (f.is_prime_field()) {
        j["kind"] = "prime";
        j["p"] = f.p();
    } else {
        j["kind"] = "rational";
    }
    return j;
}

Vec parse_vec(const Field& f, const ordered_json& j, std::size_t dim, const char* what) {
    if (!j.is_array() || j.size() != dim)
        throw error(std::string("fixture: ") + what + " must be an array of length " +
                    std::to_string(dim));
    Vec v;
    for (const auto& x : j) v.push_back(f.parse(x.get<std::string>()));
    return v;
}

ordered_json vec_json(const Field& f, const Vec& v) {
    ordered_json j = ordered_json::array();
    for (const auto& x : v) j.push_back(f.str(x));
    return j;
}

} // namespace

FixtureDocument parse_fixture(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw error(std::string("fixture: JSON parse error: ") + e.what());
    }
    if (j.value("schema", "") != "cover-fixture/1")
        throw error("fixture: missing or unsupported schema (want cover-fixture/1)");

    FixtureDocument doc;
    doc.name = j.value("name", "");
    doc.field = parse_field(j.at("field"));
    const auto& alg = j.at("algebra");
    std::size_t dim = alg.at("dim").get<std::size_t>();
    Matrix table(doc.field, dim * dim, dim);
    for (const auto& q : alg.at("structure_constants")) {
        if (!q.is_array() || q.size() != 4)
            throw error("fixture: structure constant entries must be [i,j,k,value]");
        std::size_t i = q[0].get<std::size_t>(), jj = q[1].get<std::size_t>(),
                    k = q[2].get<std::size_t>();
        if (i >= dim || jj >= dim || k >= dim)
            throw error("fixture: structure constant index out of range in [" +
                        std::to_string(i) + "," + std::to_string(jj) + "," + std::to_string(k) +
                        ",...]");
        table.set(i * dim + jj, k, doc.field.parse(q[3].get<std::string>()));
    }
    Vec unit = parse_vec(doc.field, alg.at("unit"), dim, "unit");
    std::vector<std::string> labels;
    if (alg.contains("labels"))
        for (const auto& l : alg.at("labels")) labels.push_back(l.get<std::string>());
    doc.algebra = Algebra(doc.field, dim, std::move(table), std::move(unit), std::move(labels));
    Verdict v = doc.algebra.validate();
    if (!v) throw error("fixture: algebra invalid: " + v.what);

    for (const auto& ideal : j.at("ideals")) {
        std::vector<Vec> gens;
        for (const auto& g : ideal) gens.push_back(parse_vec(doc.field, g, dim, "ideal generator"));
        doc.ideal_generators.push_back(std::move(gens));
    }
    if (j.contains("expected")) doc.expected = j.at("expected").dump();
    return doc;
}

FixtureDocument load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open fixture file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

std::string serialize_fixture(const FixtureDocument& doc) {
    const Field& f = doc.field;
    ordered_json j;
    j["schema"] = "cover-fixture/1";
    j["name"] = doc.name;
    j["field"] = field_json(f);
    ordered_json alg;
    std::size_t dim = doc.algebra.dim();
    alg["dim"] = dim;
    if (!doc.algebra.labels().empty()) alg["labels"] = doc.algebra.labels();
    alg["unit"] = vec_json(f, doc.algebra.unit());
    ordered_json sc = ordered_json::array();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t jj = 0; jj < dim; ++jj)
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& v = doc.algebra.table().at(i * dim + jj, k);
                if (v != 0) sc.push_back(ordered_json::array({i, jj, k, f.str(v)}));
            }
    alg["structure_constants"] = std::move(sc);
    j["algebra"] = std::move(alg);
    ordered_json ideals = ordered_json::array();
    for (const auto& gens : doc.ideal_generators) {
        ordered_json gj = ordered_json::array();
        for (const auto& g : gens) gj.push_back(vec_json(f, g));
        ideals.push_back(std::move(gj));
    }
    j["ideals"] = std::move(ideals);
    if (!doc.expected.empty()) j["expected"] = ordered_json::parse(doc.expected);
    return j.dump(2) + "\n";
}

void save_fixture(const FixtureDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write fixture file: " + path);
    out << serialize_fixture(doc);
}

std::string fixture_hash(const FixtureDocument& doc) {
    std::string s = serialize_fixture(doc);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

FixtureDocument build_open_cover_fixture(std::size_t point_count,
                                         const std::vector<std::vector<std::size_t>>& covers,
                                         Field field) {
    if (covers.empty()) throw error("open cover: at least one subset required");
    std::vector<bool> covered(point_count, false);
    for (const auto& u : covers) {
        if (u.empty()) throw error("open cover: empty subset");
        for (std::size_t x : u) {
            if (x >= point_count) throw error("open cover: point index out of range");
            covered[x] = true;
        }
    }
    for (std::size_t x = 0; x < point_count; ++x)
        if (!covered[x]) throw error("open cover: union of subsets misses point " +
                                     std::to_string(x));
    FixtureDocument doc;
    doc.field = field;
    doc.algebra = Algebra::functions(field, point_count);
    std::ostringstream name;
    name << "open-cover-" << point_count;
    for (const auto& u : covers) {
        Subspace j = vanishing_ideal(doc.algebra, u);
        std::vector<Vec> gens;
        for (std::size_t r = 0; r < j.dim(); ++r) gens.push_back(j.basis().row(r));
        doc.ideal_generators.push_back(std::move(gens));
        name << "-";
        for (std::size_t x : u) name << x;
    }
    doc.name = name.str();
    return doc;
}

FixtureDocument build_nil3_fixture(Field field) {
    FixtureDocument doc;
    doc.name = "nil3";
    doc.field = field;
    // basis {1, x, y}; x,y span a square-zero radical
    Matrix table(field, 9, 3);
    auto set_prod = [&](std::size_t i, std::size_t j, std::size_t k) {
        table.set(i * 3 + j, k, field.one());
    };
    set_prod(0, 0, 0);
    set_prod(0, 1, 1);
    set_prod(0, 2, 2);
    set_prod(1, 0, 1);
    set_prod(2, 0, 2);
    Vec unit{field.one(), field.zero(), field.zero()};
    doc.algebra = Algebra(field, 3, std::move(table), std::move(unit), {"1", "x", "y"});
    doc.ideal_generators = {
        {Vec{field.zero(), field.one(), field.zero()}},
        {Vec{field.zero(), field.zero(), field.one()}},
        {Vec{field.zero(), field.one(), field.one()}},
    };
    return doc;
}

GeneratorProfile parse_profile(const std::string& name) {
    if (name == "two-ideal") return GeneratorProfile::two_ideal;
    if (name == "semisimple") return GeneratorProfile::semisimple;
    if (name == "mixed") return GeneratorProfile::mixed;
    throw error("unknown profile '" + name + "' (want two-ideal|semisimple|mixed)");
}

std::string profile_name(GeneratorProfile p) {
    switch (p) {
        case GeneratorProfile::two_ideal: return "two-ideal";
        case GeneratorProfile::semisimple: return "semisimple";
        case GeneratorProfile::mixed: return "mixed";
    }
    return "?";
}

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
};

Algebra random_base_algebra(Rng& rng, const Field& f, bool allow_radical) {
    if (allow_radical && rng.below(3) == 0) {
        // k ⊕ V with V·V = 0
        std::size_t r = 1 + rng.below(4);
        std::size_t dim = 1 + r;
        Matrix table(f, dim * dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            table.set(0 * dim + i, i, f.one());
            table.set(i * dim + 0, i, f.one());
        }
        table.set(0, 0, f.one()); // 1·1 = 1 (already set, idempotent)
        Vec unit(dim, f.zero());
        unit[0] = f.one();
        return Algebra(f, dim, std::move(table), std::move(unit));
    }
    // product of diagonal blocks and occasional 2×2 matrix blocks
    std::vector<Algebra> blocks;
    std::size_t total = 0;
    std::size_t target = 2 + rng.below(5); // 2..6
    while (total < target) {
        if (target - total >= 4 && rng.below(4) == 0) {
            blocks.push_back(Algebra::matrix_algebra(f, 2));
            total += 4;
        } else {
            std::size_t d = 1 + rng.below(std::min<std::size_t>(3, target - total));
            blocks.push_back(Algebra::functions(f, d));
            total += d;
        }
    }
    return direct_sum(blocks).sum;
}

Vec random_element(Rng& rng, const Field& f, std::size_t dim) {
    // support restricted to a random proper subset, so the generated ideal
    // has a decent chance of being proper
    std::size_t keep = 1 + rng.below(dim > 1 ? dim - 1 : 1);
    std::vector<bool> in(dim, false);
    for (std::size_t t = 0; t < keep; ++t) in[rng.below(dim)] = true;
    Vec v(dim, f.zero());
    for (std::size_t i = 0; i < dim; ++i) {
        if (!in[i]) continue;
        if (f.is_prime_field())
            v[i] = f.of(static_cast<long>(rng.below(static_cast<std::size_t>(f.p()))));
        else
            v[i] = f.of(static_cast<long>(rng.below(5)) - 2);
    }
    return v;
}

} // namespace

FixtureDocument random_covering(std::uint64_t seed, GeneratorProfile profile) {
    Rng rng(seed);
    Field field = rng.below(2) == 0 ? Field::rationals()
                                    : Field::prime(std::vector<long>{2, 3, 5, 7, 13}[rng.below(5)]);
    bool allow_radical = profile == GeneratorProfile::mixed;
    std::size_t ideal_count = profile == GeneratorProfile::two_ideal ? 2 : 2 + rng.below(3);

    for (int attempt = 0; attempt < 400; ++attempt) {
        Algebra b = random_base_algebra(rng, field, allow_radical);
        std::vector<Subspace> ideals;
        bool bad = false;
        for (std::size_t i = 0; i < ideal_count && !bad; ++i) {
            std::vector<Vec> gens{random_element(rng, field, b.dim())};
            if (rng.below(2) == 0) gens.push_back(random_element(rng, field, b.dim()));
            Subspace j = ideal_closure(b, gens);
            if (j.dim() == b.dim()) bad = true; // skip the unit ideal
            else ideals.push_back(j);
        }
        if (bad) continue;
        if (intersect_ideals(b, ideals).dim() != 0) continue;
        // keep the downstream corings desk-sized
        std::size_t dim_a = 0, dim_c = 0;
        for (const auto& j : ideals) dim_a += b.dim() - j.dim();
        if (dim_a == 0 || dim_a > 10) continue;
        for (std::size_t i = 0; i < ideals.size(); ++i)
            for (std::size_t j = 0; j < ideals.size(); ++j)
                dim_c += b.dim() - subspace_sum(ideals[i], ideals[j]).dim();
        if (dim_c > 12) continue;

        FixtureDocument doc;
        doc.field = field;
        doc.algebra = b;
        doc.name = "random-" + profile_name(profile) + "-" + std::to_string(seed);
        for (const auto& j : ideals) {
            std::vector<Vec> gens;
            for (std::size_t r = 0; r < j.dim(); ++r) gens.push_back(j.basis().row(r));
            doc.ideal_generators.push_back(std::move(gens));
        }
        return doc;
    }
    throw error("random_covering: no valid covering found for seed " + std::to_string(seed) +
                " after bounded retries");
}

} // namespace coralg
