#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace seshadri::cli {

enum ExitCode : int
{
    kSuccess = 0,
    kUsage = 1,
    kVerificationFailed = 2,
    kPrecisionShortfall = 3,
};

enum class Format
{
    Tsv,
    Json,
};

/// Output of one command. Keys serialize in sorted order, so equal inputs
/// give byte-identical reports.
struct Report
{
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> provenance;
    /// Human-readable rendering, one line each.
    std::vector<std::string> tsv;

    void write(std::ostream& out, Format format) const;
};

} // namespace seshadri::cli
