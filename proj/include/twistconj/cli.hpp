#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "twistconj/oracle.hpp"

namespace twistconj {

/// Machine-readable command result. The JSON document always has the shape
/// {command, inputs, result, exact}; identical inputs produce byte-identical
/// output. verdict_ok feeds the process exit code.
struct Envelope
{
    nlohmann::ordered_json doc;
    bool verdict_ok = true;
};

Envelope cmd_classify(const std::string& element, const std::string& twist);
Envelope cmd_reidemeister(const std::string& twist);
Envelope cmd_chartable();
Envelope cmd_congruence(const std::string& matrix, long n_max);
Envelope cmd_orbits(long q_max);
Envelope cmd_oracle(const std::string& twist, const BoxSpec& box, int jobs, std::uint64_t seed);

std::string render_json(const Envelope& e);

/// Same information as the JSON, flattened to comma-separated rows.
std::string render_csv(const Envelope& e);

} // namespace twistconj
