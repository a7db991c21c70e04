#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "startopo/io.hpp"

namespace startopo::suite {

enum class status { verified, degenerate_documented, falsified };

std::string_view to_string(status s);

struct scope {
    int max_n;
    bool exhaustive; // true when every instance class was scanned in full
    std::uint64_t seed;
};

struct result {
    std::string claim;
    scope sc{};
    status st = status::verified;
    io::ojson counterexample; // null when there is none
    std::string note;
};

struct config {
    int max_n = 4;
    std::uint64_t seed = 0;
    int jobs = 1;
};

/// Claim identifiers in canonical (registry) order.
std::vector<std::string> claim_ids();

/// Expected status of a claim: the shipped manifest. Claims whose literal
/// statement fails in this model are shipped as expected-falsified with a
/// pinned counterexample, so a run that reproduces the documented findings
/// exits cleanly and any new discrepancy stands out.
status expected_status(const std::string& claim);

/// Runs the registered claims (all of them, or those matching one of the
/// comma-separated ids/prefixes in filter). Results come back in registry
/// order regardless of the worker count.
std::vector<result> run_suite(const config& cfg, const std::string& filter = "");

io::ojson render_result(const result& r);

/// True iff every result status matches the manifest.
bool matches_manifest(const std::vector<result>& results);

} // namespace startopo::suite
