#pragma once

#include "alexchen/chenranks.hpp"

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace alexchen::cli {

enum class InputKind { Arrangement, Lattice, Monodromy, Presentation };
enum class Pipeline { General, Real, Reduced };

struct JobSpec {
    InputKind kind = InputKind::Arrangement;
    std::string path;
    bool central = false;
    std::optional<int> decone;
    int K = 8;
    std::optional<int> truncate;
    std::optional<Pipeline> pipeline;
    bool verify = false;
    int oracle_max_k = 7;
    std::vector<long long> expect;  // θ_2, θ_3, ... when given
    std::optional<std::string> write_presentation;
};

struct JobResult {
    std::string text;
    nlohmann::json json;
    std::optional<ChenProfile> profile;
    bool mismatch = false;
};

std::optional<Pipeline> parse_pipeline(const std::string& s);
std::string pipeline_name(Pipeline p);

// Throws std::exception with a readable message on bad input.
JobResult run_job(const JobSpec& job);

// Table of θ_k for several finished jobs, one column per job.
std::string side_by_side(const std::vector<std::string>& names, const std::vector<JobResult>& results);

}  // namespace alexchen::cli
