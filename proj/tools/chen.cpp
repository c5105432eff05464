#include "report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace alexchen::cli;

int main(int argc, char** argv) {
    CLI::App app{"chen: Chen ranks of line arrangement groups"};
    app.set_version_flag("--version", "chen 1.0");

    std::vector<std::string> arrangements, lattices, monodromies, presentations;
    JobSpec base;
    std::string pipeline, expect;
    std::string json_path;

    app.add_option("--arrangement", arrangements, "Arrangement file (affine lines or central planes)")
        ->check(CLI::ExistingFile);
    app.add_option("--lattice", lattices, "Rank-two lattice file")->check(CLI::ExistingFile);
    app.add_option("--monodromy", monodromies, "Braid monodromy file")->check(CLI::ExistingFile);
    app.add_option("--presentation", presentations, "Alexander presentation file")->check(CLI::ExistingFile);
    app.add_flag("--central", base.central, "Require the arrangement file to list planes");
    app.add_option("--decone", base.decone, "Plane sent to infinity (1-based; default last)")
        ->check(CLI::PositiveNumber);
    app.add_option("-K", base.K, "Highest Chen rank to compute")->check(CLI::Range(2, 12));
    app.add_option("--truncate", base.truncate, "Power series truncation degree D (default K-2)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--pipeline", pipeline, "general | real | reduced")
        ->check(CLI::IsMember({"general", "real", "reduced"}));
    app.add_flag("--verify", base.verify, "Cross-check with the linear algebra oracle and the other pipeline");
    app.add_option("--oracle-max-k", base.oracle_max_k, "Highest k handed to the oracle")->check(CLI::Range(2, 12));
    app.add_option("--expect", expect, "Comma separated theta_2,theta_3,... to compare against");
    app.add_option("--write-presentation", base.write_presentation, "Write the presentation used to a file");
    app.add_option("--json", json_path, "Also write the report as JSON to this path");

    CLI11_PARSE(app, argc, argv);

    if (!pipeline.empty()) base.pipeline = parse_pipeline(pipeline);
    if (!expect.empty()) {
        std::stringstream ss(expect);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                base.expect.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                std::cerr << "error: --expect wants integers, got '" << tok << "'\n";
                return 1;
            }
        }
    }

    std::vector<JobSpec> jobs;
    auto add = [&](const std::vector<std::string>& paths, InputKind kind) {
        for (auto& p : paths) {
            JobSpec j = base;
            j.kind = kind;
            j.path = p;
            jobs.push_back(j);
        }
    };
    add(arrangements, InputKind::Arrangement);
    add(lattices, InputKind::Lattice);
    add(monodromies, InputKind::Monodromy);
    add(presentations, InputKind::Presentation);
    if (jobs.empty()) {
        std::cerr << "error: give at least one of --arrangement, --lattice, --monodromy, --presentation\n";
        return 1;
    }
    if (jobs.size() > 1 && base.write_presentation) {
        std::cerr << "error: --write-presentation takes a single input\n";
        return 1;
    }

    std::vector<std::string> names;
    std::vector<JobResult> results;
    bool mismatch = false;
    for (auto& j : jobs) {
        try {
            results.push_back(run_job(j));
        } catch (const std::exception& e) {
            std::cerr << "error: " << j.path << ": " << e.what() << "\n";
            return 1;
        }
        auto slash = j.path.find_last_of('/');
        names.push_back(slash == std::string::npos ? j.path : j.path.substr(slash + 1));
        mismatch = mismatch || results.back().mismatch;
    }

    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results.size() > 1) std::cout << "=== " << names[i] << "\n";
        std::cout << results[i].text;
    }
    if (results.size() > 1) std::cout << side_by_side(names, results);
    if (!json_path.empty()) {
        nlohmann::json doc;
        if (results.size() == 1) {
            doc = results[0].json;
        } else {
            doc = nlohmann::json::array();
            for (auto& r : results) doc.push_back(r.json);
        }
        std::ofstream jo(json_path);
        if (!jo) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return 1;
        }
        jo << doc.dump(2) << "\n";
    }
    return mismatch ? 2 : 0;
}
