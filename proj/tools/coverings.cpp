// Command-line front end: validate covering fixtures, run the full
// verification pipeline, and generate example/random fixtures.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "coralg/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictNegative = 1;
constexpr int kExitInputError = 2;

int cmd_validate(const std::string& path) {
    coralg::FixtureDocument doc;
    try {
        doc = coralg::load_fixture(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    try {
        coralg::Covering cov = doc.covering();
        std::cout << "valid covering: " << cov.count << " ideal(s) of a dim-"
                  << cov.base.dim() << " algebra (fixture " << coralg::fixture_hash(doc)
                  << ")\n";
        return kExitOk;
    } catch (const coralg::error& e) {
        std::cout << "not a covering: " << e.what() << "\n";
        return kExitVerdictNegative;
    }
}

int cmd_report(const std::string& path, bool json, bool skip_projectivity) {
    coralg::FixtureDocument doc;
    try {
        doc = coralg::load_fixture(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    try {
        auto start = std::chrono::steady_clock::now();
        coralg::Covering cov = doc.covering();
        coralg::Theorem3Report rep = coralg::theorem3_report(cov, skip_projectivity);
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        if (json)
            std::cout << coralg::report_to_json(rep, coralg::fixture_hash(doc));
        else
            std::cout << coralg::report_to_text(rep, coralg::fixture_hash(doc), elapsed);
        return kExitOk;
    } catch (const coralg::error& e) {
        std::cout << "not a covering: " << e.what() << "\n";
        return kExitVerdictNegative;
    }
}

std::vector<std::vector<std::size_t>> parse_sets(const std::string& text) {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> cur;
    std::string num;
    auto flush_num = [&] {
        if (num.empty()) return;
        std::size_t p = std::stoul(num);
        if (p == 0) throw coralg::error("points are numbered from 1");
        cur.push_back(p - 1);
        num.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') num += c;
        else if (c == ',') flush_num();
        else if (c == ';') {
            flush_num();
            sets.push_back(cur);
            cur.clear();
        } else if (c != ' ')
            throw coralg::error(std::string("unexpected character '") + c + "' in set list");
    }
    flush_num();
    if (!cur.empty()) sets.push_back(cur);
    return sets;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverings of finite-dimensional algebras and their corings"};
    app.require_subcommand(1);

    std::string path, out_path, profile = "semisimple", example_name, example_params;
    bool json = false, skip_projectivity = false;
    std::uint64_t seed = 0;
    std::size_t points = 0;

    auto* validate = app.add_subcommand("validate", "check a fixture is a covering");
    validate->add_option("file", path)->required();

    auto* report = app.add_subcommand("report", "run the full verification pipeline");
    report->add_option("file", path)->required();
    report->add_flag("--json", json, "emit the cover-report/1 JSON document");
    report->add_flag("--skip-projectivity", skip_projectivity,
                     "skip the projectivity checks (the most expensive step)");

    auto* generate = app.add_subcommand("generate", "write a random covering fixture");
    generate->add_option("--seed", seed)->required();
    generate->add_option("--profile", profile, "two-ideal|semisimple|mixed");
    generate->add_option("out", out_path)->required();

    auto* example = app.add_subcommand("example", "write a named example fixture");
    example->add_option("name", example_name, "open-cover|nil3")->required();
    example->add_option("out", out_path)->required();
    example->add_option("--sets", example_params,
                        "for open-cover: the covering subsets, e.g. \"1,2;2,3\"");
    example->add_option("--points", points, "point count for open-cover");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (report->parsed()) return cmd_report(path, json, skip_projectivity);
        if (generate->parsed()) {
            coralg::FixtureDocument doc =
                coralg::random_covering(seed, coralg::parse_profile(profile));
            coralg::save_fixture(doc, out_path);
            std::cout << "wrote " << out_path << " (fixture " << coralg::fixture_hash(doc)
                      << ")\n";
            return kExitOk;
        }
        if (example->parsed()) {
            coralg::FixtureDocument doc;
            if (example_name == "nil3") {
                doc = coralg::build_nil3_fixture();
            } else if (example_name == "open-cover") {
                if (example_params.empty())
                    throw coralg::error("open-cover needs --sets");
                auto sets = parse_sets(example_params);
                std::size_t n = points;
                if (n == 0)
                    for (const auto& s : sets)
                        for (std::size_t x : s) n = std::max(n, x + 1);
                doc = coralg::build_open_cover_fixture(n, sets);
            } else {
                std::cerr << "error: unknown example '" << example_name << "'\n";
                return kExitInputError;
            }
            coralg::save_fixture(doc, out_path);
            std::cout << "wrote " << out_path << " (fixture " << coralg::fixture_hash(doc)
                      << ")\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
