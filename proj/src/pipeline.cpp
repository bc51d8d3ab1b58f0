#include "boundaryk/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "boundaryk/ahss.hpp"
#include "boundaryk/errors.hpp"

namespace boundaryk::cli {

using ojson = nlohmann::ordered_json;

std::string to_string(Stage s) {
    switch (s) {
        case Stage::Validate: return "validate";
        case Stage::Homology: return "homology";
        case Stage::KTheory: return "ktheory";
        case Stage::Crossed: return "crossed";
        default: return "classify";
    }
}

std::optional<fgab::FieldSpec> PipelineOptions::field() const {
    switch (coefficients) {
        case Coeff::Integral: return std::nullopt;
        case Coeff::Rationals: return fgab::FieldSpec::rationals();
        default: return fgab::FieldSpec::prime_field(p);
    }
}

std::string PipelineOptions::label() const {
    switch (coefficients) {
        case Coeff::Integral: return "Z";
        case Coeff::Rationals: return "Q";
        default: return "F" + std::to_string(p);
    }
}

PipelineOptions parse_coefficients(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    PipelineOptions options;
    if (t == "z") {
        options.coefficients = PipelineOptions::Coeff::Integral;
    } else if (t == "q") {
        options.coefficients = PipelineOptions::Coeff::Rationals;
    } else if (t.size() > 1 && t[0] == 'f') {
        for (std::size_t i = 1; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw SchemaError("--coefficients", "expected z, q, or f<p>; got '" + text + "'");
        options.coefficients = PipelineOptions::Coeff::PrimeField;
        options.p = std::stoull(t.substr(1));
        fgab::FieldSpec::prime_field(options.p);  // NotPrime on composite moduli
    } else {
        throw SchemaError("--coefficients", "expected z, q, or f<p>; got '" + text + "'");
    }
    return options;
}

CorpusEntry load_entry(std::string source, const std::string& text) {
    CorpusEntry entry;
    entry.source = std::move(source);
    try {
        entry.fixture = parse_fixture(text);
    } catch (const Error& e) {
        entry.error_name = e.name();
        entry.error_detail = e.what();
    } catch (const std::exception& e) {
        entry.error_name = "SchemaError";
        entry.error_detail = e.what();
    }
    return entry;
}

namespace {

ojson element_json(const fgab::GroupElement& e) {
    ojson free = ojson::array();
    for (const auto& c : e.free_coords) free.push_back(c.get_str());
    ojson torsion = ojson::array();
    for (const auto& c : e.torsion_coords) torsion.push_back(c.get_str());
    return ojson{{"free", std::move(free)}, {"torsion", std::move(torsion)}};
}

ojson refusal_json(const std::string& error, const std::string& precondition,
                   const std::string& detail) {
    return ojson{{"refused",
                  ojson{{"error", error}, {"precondition", precondition}, {"detail", detail}}}};
}

ojson validation_json(const chain::ValidationReport& report) {
    ojson clauses = ojson::array();
    for (const auto& clause : report.clauses)
        clauses.push_back(
            ojson{{"name", clause.name}, {"pass", clause.pass}, {"detail", clause.detail}});
    return ojson{{"pass", report.all_pass}, {"clauses", std::move(clauses)}};
}

ojson rung_json(const ahss::FiltrationRung& rung) {
    return ojson{{"p", rung.p},
                 {"subgroup", fgab::to_string(rung.subgroup)},
                 {"quotient", fgab::to_string(rung.quotient)},
                 {"result", fgab::to_string(rung.result)},
                 {"splitting", rung.splitting}};
}

ojson sequence_json(const crossed::ShortExactSequence& seq) {
    auto term = [](const crossed::SequenceTerm& t) {
        return ojson{{"symbol", t.symbol}, {"group", fgab::to_string(t.group)}};
    };
    return ojson{{"left", term(seq.left)},
                 {"middle", term(seq.middle)},
                 {"right", term(seq.right)},
                 {"left_identification", seq.left_identification},
                 {"splitting", seq.splitting}};
}

ojson log_json(const ahss::JustificationLog& log) {
    ojson out = ojson::array();
    for (const auto& entry : log)
        out.push_back(ojson{{"claim", entry.claim}, {"rule", entry.rule}, {"basis", entry.basis}});
    return out;
}

ojson log_digest_json(const ahss::JustificationLog& log) {
    std::map<std::string, int> counts;
    for (const auto& entry : log) ++counts[entry.rule];
    ojson rules;
    for (const auto& [rule, count] : counts) rules[rule] = count;
    return ojson{{"entries", log.size()}, {"rules", std::move(rules)}};
}

std::string flags_line(const FixtureFlags& flags) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    return std::string("declared flags: closed=") + b(flags.closed) +
           ", orientable=" + b(flags.orientable) + ", hyperbolic=" + b(flags.hyperbolic) +
           " (hyperbolicity is an input hypothesis, never verified)";
}

}  // namespace

SectionResult run_pipeline(const ManifoldFixture& fixture, const PipelineOptions& options,
                           Stage stage) {
    SectionResult result;
    ojson& sec = result.json;
    sec["name"] = fixture.name;
    sec["flags"] = ojson{{"closed", fixture.flags.closed},
                         {"orientable", fixture.flags.orientable},
                         {"hyperbolic", fixture.flags.hyperbolic}};

    const chain::ChainComplexData& complex = *fixture.complex;
    const chain::ValidationReport validation = chain::validate_closed_oriented_3mfld(complex);
    sec["assumptions"] = ojson::array({flags_line(fixture.flags), "validation: " + validation.digest()});
    sec["validation"] = validation_json(validation);
    if (!validation.all_pass) result.validation_failed = true;
    if (stage == Stage::Validate) return result;

    const chain::HomologyProfile profile = chain::homology(complex);
    const auto coh = chain::cohomology(complex);

    ojson homology_sec;
    for (int k = 0; k <= 3; ++k)
        homology_sec["H_" + std::to_string(k)] =
            fgab::to_string(profile.h[static_cast<std::size_t>(k)]);
    homology_sec["base_point_class"] = element_json(profile.base_point_class);
    if (fixture.expected_homology) {
        const bool match = profile.h == *fixture.expected_homology;
        homology_sec["expected_match"] = match;
        if (!match) result.regression_failed = true;
    }
    sec["homology"] = std::move(homology_sec);

    ojson cohomology_sec;
    for (int k = 0; k <= 3; ++k)
        cohomology_sec["H^" + std::to_string(k)] =
            fgab::to_string(coh[static_cast<std::size_t>(k)]);
    sec["cohomology"] = std::move(cohomology_sec);

    if (const auto field = options.field()) {
        const auto dims = chain::homology_with_field(complex, *field);
        ojson field_sec;
        field_sec["field"] = fgab::to_string(*field);
        for (int k = 0; k <= 3; ++k)
            field_sec["H_" + std::to_string(k)] = dims[static_cast<std::size_t>(k)];
        sec["field_dims"] = std::move(field_sec);
    }
    if (stage == Stage::Homology) return result;

    // AHSS route plus the homological formulas; gated on validation, which
    // is exactly what certifies the degeneration and the splittings.
    std::optional<ahss::KTheoryResult> ktheory;
    std::optional<ahss::KHomologyResult> khomology;
    if (!validation.all_pass) {
        const auto refusal = refusal_json("ValidationFailed",
                                          "complex passes validate_closed_oriented_3mfld",
                                          validation.digest());
        sec["k_theory"] = refusal;
        sec["k_homology"] = refusal;
        sec["duality_crosscheck"] = refusal;
    } else {
        try {
            const ahss::SpectralPage page2 = ahss::second_page(coh);
            ahss::CertifiedLimit certified = ahss::certify_degeneration(page2);
            ktheory = ahss::assemble_k_groups(certified.einf);
            ojson kt;
            kt["K^0"] = fgab::to_string(ktheory->k0);
            kt["K^1"] = fgab::to_string(ktheory->k1);
            ojson ladder;
            ladder["degree_0"] = ojson::array();
            for (const auto& rung : ktheory->ladder.degree0) ladder["degree_0"].push_back(rung_json(rung));
            ladder["degree_1"] = ojson::array();
            for (const auto& rung : ktheory->ladder.degree1) ladder["degree_1"].push_back(rung_json(rung));
            kt["filtration"] = std::move(ladder);
            kt["justification_log_digest"] = log_digest_json(certified.log);
            kt["justification_log"] = log_json(certified.log);
            sec["k_theory"] = std::move(kt);
        } catch (const Error& e) {
            sec["k_theory"] = refusal_json(e.name(), "degeneration and splitting rules apply",
                                           e.what());
            result.refused = true;
        }

        khomology = ahss::k_homology(profile);
        sec["k_homology"] = ojson{{"K_0", fgab::to_string(khomology->k0.group)},
                                  {"unit", element_json(khomology->k0.point)},
                                  {"K_1", fgab::to_string(khomology->k1)}};

        if (ktheory) {
            const ahss::DualityReport duality = ahss::duality_crosscheck(*ktheory, *khomology);
            sec["duality_crosscheck"] = ojson{{"pass", duality.pass}, {"detail", duality.detail}};
        }
    }
    if (stage == Stage::KTheory) return result;

    if (!validation.all_pass) {
        sec["crossed_product"] = refusal_json(
            "ValidationFailed", "profile passed manifold validation", validation.digest());
        return result;
    }

    std::vector<std::string> assumptions{flags_line(fixture.flags),
                                         "validation: " + validation.digest()};
    try {
        crossed::CrossedProductResult product = [&] {
            if (const auto field = options.field())
                return crossed::crossed_product_k_field(profile, *field, assumptions);
            if (!ktheory || !khomology)
                throw std::logic_error("integral crossed products need the K-theory stage results");
            return crossed::crossed_product_k_integral(*khomology, *ktheory, profile, assumptions);
        }();

        ojson cp;
        cp["mode"] = crossed::to_string(product.invariants.mode);
        if (product.invariants.field) cp["field"] = fgab::to_string(*product.invariants.field);
        cp["K0"] = fgab::to_string(product.invariants.k0.group);
        cp["unit"] = element_json(product.invariants.k0.point);
        cp["K1"] = fgab::to_string(product.invariants.k1);
        cp["assumptions"] = product.invariants.assumptions;
        cp["evidence"] = ojson{{"ladder", ojson{{"K0_sequence", sequence_json(product.ladder.k0_sequence)},
                                                {"K1_sequence", sequence_json(product.ladder.k1_sequence)}}}};
        sec["crossed_product"] = std::move(cp);
        result.invariants = std::move(product.invariants);
    } catch (const IntegralTorsionUnsupported& e) {
        sec["crossed_product"] = refusal_json(e.name(), "H1(M) is torsion-free", e.what());
        result.refused = true;
    }
    return result;
}

Report run_command(Stage stage, const std::vector<CorpusEntry>& entries,
                   const PipelineOptions& options) {
    Report report;

    // Stable processing order: by fixture name, falling back to the source
    // label for entries that failed to load.
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto key = [&entries](std::size_t i) {
        return entries[i].fixture ? entries[i].fixture->name : entries[i].source;
    };
    std::sort(order.begin(), order.end(),
              [&key](std::size_t a, std::size_t b) { return key(a) < key(b); });

    std::set<std::string> seen;
    std::vector<bool> duplicate(entries.size(), false);
    for (std::size_t i : order) {
        if (!entries[i].fixture) continue;
        if (!seen.insert(entries[i].fixture->name).second) duplicate[i] = true;
    }

    const Stage fixture_stage = stage == Stage::Classify ? Stage::Crossed : stage;
    std::vector<SectionResult> results(entries.size());
    const std::int64_t n = static_cast<std::int64_t>(order.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < n; ++k) {
        const std::size_t i = order[static_cast<std::size_t>(k)];
        if (!entries[i].fixture || duplicate[i]) continue;
        try {
            results[i] = run_pipeline(*entries[i].fixture, options, fixture_stage);
        } catch (const std::exception& e) {
            // exceptions may not cross the parallel region
            results[i].json = ojson{{"name", entries[i].fixture->name},
                                    {"error", ojson{{"name", "InternalError"},
                                                    {"detail", e.what()}}}};
            results[i].validation_failed = true;
        }
    }

    ojson manifolds = ojson::array();
    std::vector<crossed::PointedKInvariants> invariants;
    std::vector<std::string> classified_names;
    ojson excluded = ojson::array();

    for (std::size_t i : order) {
        const CorpusEntry& entry = entries[i];
        if (!entry.fixture) {
            manifolds.push_back(ojson{{"source", entry.source},
                                      {"error", ojson{{"name", entry.error_name},
                                                      {"detail", entry.error_detail}}}});
            report.any_schema_error = true;
            continue;
        }
        if (duplicate[i]) {
            manifolds.push_back(
                ojson{{"source", entry.source},
                      {"error", ojson{{"name", "SchemaError"},
                                      {"detail", "duplicate fixture name '" +
                                                     entry.fixture->name + "'"}}}});
            report.any_schema_error = true;
            continue;
        }
        SectionResult& r = results[i];
        ojson section;
        section["name"] = entry.fixture->name;
        section["source"] = entry.source;
        for (auto& [key, value] : r.json.items())
            if (key != "name") section[key] = std::move(value);
        manifolds.push_back(std::move(section));
        report.any_validation_failure = report.any_validation_failure || r.validation_failed;
        report.any_regression_failure = report.any_regression_failure || r.regression_failed;
        report.any_refusal = report.any_refusal || r.refused;
        if (stage == Stage::Classify) {
            if (r.invariants) {
                invariants.push_back(*r.invariants);
                classified_names.push_back(entry.fixture->name);
            } else {
                excluded.push_back(ojson{{"name", entry.fixture->name},
                                         {"reason", r.validation_failed
                                                        ? "validation failed"
                                                        : "crossed-product computation refused"}});
            }
        }
    }

    ojson document;
    document["schema"] = kReportSchema;
    document["command"] = to_string(stage);
    document["coefficients"] = options.label();
    document["manifolds"] = std::move(manifolds);

    if (stage == Stage::Classify) {
        const crossed::Partition partition = crossed::classify_corpus(invariants);
        ojson classes = ojson::array();
        for (const auto& cls : partition.classes) {
            ojson members = ojson::array();
            for (std::size_t idx : cls) members.push_back(classified_names[idx]);
            const crossed::PointedKInvariants& rep = invariants[cls.front()];
            classes.push_back(ojson{{"members", std::move(members)},
                                    {"K0", fgab::to_string(rep.k0.group)},
                                    {"unit_content", fgab::content(rep.k0.point).get_str()},
                                    {"K1", fgab::to_string(rep.k1)}});
        }
        ojson matrix = ojson::array();
        for (std::size_t i = 0; i < invariants.size(); ++i) {
            ojson row = ojson::array();
            for (std::size_t j = 0; j < invariants.size(); ++j)
                row.push_back(crossed::to_string(crossed::kp_compare(invariants[i], invariants[j])));
            matrix.push_back(std::move(row));
        }
        document["classification"] =
            ojson{{"classes", std::move(classes)},
                  {"excluded", std::move(excluded)},
                  {"pairwise", ojson{{"names", classified_names}, {"verdicts", std::move(matrix)}}}};
    }

    report.document = std::move(document);
    return report;
}

}  // namespace boundaryk::cli
