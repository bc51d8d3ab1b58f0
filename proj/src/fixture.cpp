#include "boundaryk/fixture.hpp"

#include <json.hpp>

#include "boundaryk/errors.hpp"

namespace boundaryk::cli {

using ojson = nlohmann::ordered_json;

namespace {

const ojson& require(const ojson& j, const char* key, const std::string& path) {
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "." + key, "missing required field");
    return *it;
}

std::string require_string(const ojson& j, const char* key, const std::string& path) {
    const ojson& v = require(j, key, path);
    if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

bool require_bool(const ojson& j, const char* key, const std::string& path) {
    const ojson& v = require(j, key, path);
    if (!v.is_boolean()) throw SchemaError(path + "." + key, "expected a boolean");
    return v.get<bool>();
}

std::size_t require_count(const ojson& v, const std::string& path) {
    if (!v.is_number_unsigned())
        throw SchemaError(path, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

// Unbounded values travel as decimal strings; plain JSON integers are
// accepted on input for convenience.
mpz_class parse_entry(const ojson& v, const std::string& path) {
    if (v.is_number_integer()) return mpz_class(v.dump(), 10);
    if (!v.is_string()) throw SchemaError(path, "expected a decimal-string integer");
    const std::string s = v.get<std::string>();
    if (s.empty()) throw SchemaError(path, "empty integer literal");
    for (std::size_t i = (s[0] == '-' ? 1 : 0); i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw SchemaError(path, "malformed integer '" + s + "'");
    if (s == "-") throw SchemaError(path, "malformed integer '-'");
    return mpz_class(s, 10);
}

intlin::IntMatrix parse_matrix(const ojson& v, const std::string& path) {
    if (!v.is_object()) throw SchemaError(path, "expected an object {rows, cols, entries}");
    const std::size_t rows = require_count(require(v, "rows", path), path + ".rows");
    const std::size_t cols = require_count(require(v, "cols", path), path + ".cols");
    const ojson& entries = require(v, "entries", path);
    if (!entries.is_array() || entries.size() != rows * cols)
        throw SchemaError(path + ".entries",
                          "expected " + std::to_string(rows * cols) + " entries in row-major order");
    intlin::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = parse_entry(entries[i * cols + j],
                                  path + ".entries[" + std::to_string(i * cols + j) + "]");
    return m;
}

ojson matrix_json(const intlin::IntMatrix& m) {
    ojson out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    ojson entries = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).get_str());
    out["entries"] = std::move(entries);
    return out;
}

}  // namespace

ManifoldFixture parse_fixture(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("$", "fixture must be a JSON object");

    const std::string schema = require_string(j, "schema", "$");
    if (schema != kFixtureSchema)
        throw SchemaError("$.schema", "unsupported schema '" + schema + "', expected '" +
                                          std::string(kFixtureSchema) + "'");

    ManifoldFixture f;
    f.name = require_string(j, "name", "$");
    if (f.name.empty()) throw SchemaError("$.name", "name must be nonempty");

    const std::string mode = require_string(j, "mode", "$");
    if (mode == "simplices") f.mode = FixtureMode::Simplices;
    else if (mode == "matrices") f.mode = FixtureMode::Matrices;
    else throw SchemaError("$.mode", "expected 'simplices' or 'matrices', got '" + mode + "'");

    const ojson& flags = require(j, "flags", "$");
    if (!flags.is_object()) throw SchemaError("$.flags", "expected an object");
    f.flags.closed = require_bool(flags, "closed", "$.flags");
    f.flags.orientable = require_bool(flags, "orientable", "$.flags");
    f.flags.hyperbolic = require_bool(flags, "hyperbolic", "$.flags");

    if (f.mode == FixtureMode::Simplices) {
        const ojson& degrees = require(j, "simplices", "$");
        if (!degrees.is_array()) throw SchemaError("$.simplices", "expected per-degree lists");
        for (std::size_t k = 0; k < degrees.size(); ++k) {
            const std::string dpath = "$.simplices[" + std::to_string(k) + "]";
            if (!degrees[k].is_array()) throw SchemaError(dpath, "expected a list of simplices");
            chain::SimplexList level;
            for (std::size_t s = 0; s < degrees[k].size(); ++s) {
                const ojson& tuple = degrees[k][s];
                const std::string spath = dpath + "[" + std::to_string(s) + "]";
                if (!tuple.is_array() || tuple.size() != k + 1)
                    throw SchemaError(spath, "expected a vertex tuple of length " +
                                                 std::to_string(k + 1));
                std::vector<int> vertices;
                for (const auto& v : tuple) {
                    if (!v.is_number_integer()) throw SchemaError(spath, "vertex ids are integers");
                    vertices.push_back(v.get<int>());
                }
                level.push_back(std::move(vertices));
            }
            f.simplices.push_back(std::move(level));
        }
        f.complex = chain::ChainComplexData::from_simplicial(f.simplices);
    } else {
        const ojson& ranks = require(j, "ranks", "$");
        if (!ranks.is_array() || ranks.empty())
            throw SchemaError("$.ranks", "expected a nonempty list of chain ranks");
        for (std::size_t i = 0; i < ranks.size(); ++i)
            f.ranks.push_back(require_count(ranks[i], "$.ranks[" + std::to_string(i) + "]"));

        const ojson& boundaries = require(j, "boundaries", "$");
        if (!boundaries.is_array() || boundaries.size() + 1 != f.ranks.size())
            throw SchemaError("$.boundaries", "expected " + std::to_string(f.ranks.size() - 1) +
                                                  " boundary matrices");
        for (std::size_t i = 0; i < boundaries.size(); ++i)
            f.boundaries.push_back(
                parse_matrix(boundaries[i], "$.boundaries[" + std::to_string(i) + "]"));

        try {
            f.complex = chain::ChainComplexData::from_matrices(f.ranks, f.boundaries);
        } catch (const BoundarySquare& e) {
            throw SchemaError("$.boundaries", std::string(e.name()) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw SchemaError("$.boundaries", e.what());
        }
    }

    if (j.contains("expected")) {
        const ojson& expected = j.at("expected");
        if (!expected.is_object()) throw SchemaError("$.expected", "expected an object");
        const ojson& groups = require(expected, "homology", "$.expected");
        if (!groups.is_array() || groups.size() != 4)
            throw SchemaError("$.expected.homology", "expected four group expressions");
        std::array<fgab::FgAbGroup, 4> h;
        for (std::size_t k = 0; k < 4; ++k) {
            if (!groups[k].is_string())
                throw SchemaError("$.expected.homology[" + std::to_string(k) + "]",
                                  "expected a group expression string");
            try {
                h[k] = fgab::parse_group(groups[k].get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw SchemaError("$.expected.homology[" + std::to_string(k) + "]", e.what());
            }
        }
        f.expected_homology = h;
    }

    return f;
}

std::string serialize_fixture(const ManifoldFixture& fixture) {
    ojson j;
    j["schema"] = kFixtureSchema;
    j["name"] = fixture.name;
    j["mode"] = fixture.mode == FixtureMode::Simplices ? "simplices" : "matrices";
    j["flags"] = {{"closed", fixture.flags.closed},
                  {"orientable", fixture.flags.orientable},
                  {"hyperbolic", fixture.flags.hyperbolic}};
    if (fixture.mode == FixtureMode::Simplices) {
        ojson degrees = ojson::array();
        for (const auto& level : fixture.simplices) {
            ojson l = ojson::array();
            for (const auto& s : level) l.push_back(s);
            degrees.push_back(std::move(l));
        }
        j["simplices"] = std::move(degrees);
    } else {
        j["ranks"] = fixture.ranks;
        ojson boundaries = ojson::array();
        for (const auto& b : fixture.boundaries) boundaries.push_back(matrix_json(b));
        j["boundaries"] = std::move(boundaries);
    }
    if (fixture.expected_homology) {
        ojson groups = ojson::array();
        for (const auto& g : *fixture.expected_homology) groups.push_back(fgab::to_string(g));
        j["expected"] = ojson{{"homology", std::move(groups)}};
    }
    return j.dump(2) + "\n";
}

}  // namespace boundaryk::cli
