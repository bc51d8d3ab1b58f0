#include <omp.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "boundaryk/errors.hpp"
#include "boundaryk/pipeline.hpp"

namespace fs = std::filesystem;
using namespace boundaryk;

namespace {

std::vector<std::string> expand_paths(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> found;
            for (const auto& e : fs::directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".json")
                    found.push_back(e.path().string());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(p);
        }
    }
    return files;
}

std::vector<cli::CorpusEntry> load_corpus(const std::vector<std::string>& files) {
    std::vector<cli::CorpusEntry> entries;
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) {
            cli::CorpusEntry entry;
            entry.source = f;
            entry.error_name = "SchemaError";
            entry.error_detail = "cannot read file";
            entries.push_back(std::move(entry));
            continue;
        }
        std::ostringstream text;
        text << in.rdbuf();
        entries.push_back(cli::load_entry(f, text.str()));
    }
    return entries;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "boundaryk: K-theory invariants of boundary crossed products of closed 3-manifold "
        "groups, and Kirchberg-Phillips comparison of the results"};
    app.require_subcommand(1);

    std::string coefficients = "z";
    std::string output;
    bool keep_going = false;
    std::vector<std::string> paths;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("paths", paths, "fixture files or directories of *.json fixtures");
        sub->add_option("-c,--coefficients", coefficients,
                        "coefficient ring: z (integral), q, or f<p> (p prime)");
        sub->add_option("-o,--output", output, "write the report here instead of stdout");
        sub->add_flag("-k,--keep-going", keep_going,
                      "record failures in the report and exit 0");
        return sub;
    };

    CLI::App* validate =
        add_common(app.add_subcommand("validate", "closed-oriented-3-manifold validation"));
    CLI::App* homology =
        add_common(app.add_subcommand("homology", "integral homology and cohomology tables"));
    CLI::App* ktheory =
        add_common(app.add_subcommand("ktheory", "manifold K-theory and K-homology"));
    CLI::App* crossed =
        add_common(app.add_subcommand("crossed", "crossed-product pointed K-invariants"));
    CLI::App* classify =
        add_common(app.add_subcommand("classify", "partition a corpus by pointed K-invariants"));

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("BOUNDARYK_THREADS")) {
        const long threads = std::strtol(env, nullptr, 10);
        if (threads > 0) omp_set_num_threads(static_cast<int>(threads));
    }

    cli::Stage stage = cli::Stage::Validate;
    if (homology->parsed()) stage = cli::Stage::Homology;
    else if (ktheory->parsed()) stage = cli::Stage::KTheory;
    else if (crossed->parsed()) stage = cli::Stage::Crossed;
    else if (classify->parsed()) stage = cli::Stage::Classify;
    else if (!validate->parsed()) return 2;

    cli::PipelineOptions options;
    try {
        options = cli::parse_coefficients(coefficients);
    } catch (const Error& e) {
        std::cerr << "boundaryk: " << e.what() << "\n";
        return 2;
    }

    cli::Report report;
    try {
        report = cli::run_command(stage, load_corpus(expand_paths(paths)), options);
    } catch (const Error& e) {
        std::cerr << "boundaryk: " << e.name() << ": " << e.what() << "\n";
        return 2;
    }

    for (const auto& section : report.document["manifolds"])
        if (section.contains("error"))
            std::cerr << "boundaryk: " << section["error"]["name"].get<std::string>() << " in "
                      << section["source"].get<std::string>() << ": "
                      << section["error"]["detail"].get<std::string>() << "\n";

    const std::string text = report.document.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "boundaryk: cannot write " << output << "\n";
            return 2;
        }
        out << text;
    }

    if (keep_going) return 0;
    if (report.any_schema_error) return 2;
    if (stage != cli::Stage::Homology && report.any_validation_failure) return 3;
    if (stage != cli::Stage::Validate && report.any_regression_failure) return 3;
    if (stage == cli::Stage::KTheory || stage == cli::Stage::Crossed ||
        stage == cli::Stage::Classify)
        if (report.any_refusal) return 4;
    return 0;
}
