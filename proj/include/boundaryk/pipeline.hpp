#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boundaryk/crossed.hpp"
#include "boundaryk/fixture.hpp"

namespace boundaryk::cli {

// How far each subcommand drives a fixture. Classify runs the full
// per-fixture pipeline and then partitions the corpus.
enum class Stage { Validate, Homology, KTheory, Crossed, Classify };
std::string to_string(Stage s);

struct PipelineOptions {
    enum class Coeff { Integral, Rationals, PrimeField };
    Coeff coefficients = Coeff::Integral;
    std::uint64_t p = 0;

    std::optional<fgab::FieldSpec> field() const;
    std::string label() const;  // "Z", "Q", or "F<p>"
};

// Accepts "z" | "q" | "f<p>" (case-insensitive). Throws SchemaError for
// malformed text and NotPrime for composite moduli.
PipelineOptions parse_coefficients(const std::string& text);

// One corpus member: a parsed fixture or the load error that replaced it.
struct CorpusEntry {
    std::string source;
    std::optional<ManifoldFixture> fixture;
    std::string error_name;
    std::string error_detail;
};

CorpusEntry load_entry(std::string source, const std::string& text);

struct SectionResult {
    nlohmann::ordered_json json;
    bool validation_failed = false;
    bool regression_failed = false;  // declared expected homology did not match
    bool refused = false;
    std::optional<crossed::PointedKInvariants> invariants;  // set when crossed succeeded
};

// Runs one fixture through the requested stages. Never throws: refusals
// and failed expectations become records inside the section.
SectionResult run_pipeline(const ManifoldFixture& fixture, const PipelineOptions& options,
                           Stage stage);

struct Report {
    nlohmann::ordered_json document;
    bool any_schema_error = false;
    bool any_validation_failure = false;
    bool any_regression_failure = false;
    bool any_refusal = false;
};

// Deterministic corpus report: fixtures sorted by name, per-fixture work
// parallel, single-threaded merge. Duplicate names are schema errors.
Report run_command(Stage stage, const std::vector<CorpusEntry>& entries,
                   const PipelineOptions& options);

}  // namespace boundaryk::cli
