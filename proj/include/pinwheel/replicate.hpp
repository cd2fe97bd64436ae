#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pinwheel {

// One checked fact: a self-contained mathematical claim, the expected value,
// and what this build computed. `pass` is simply expected == computed.
struct ReplicationFact {
    std::string id;
    std::string claim;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ReportDocument {
    std::string schema;
    std::string tool_version;
    std::uint64_t seed = 0;
    std::vector<ReplicationFact> facts;
    int passed = 0;
    int failed = 0;

    bool all_passed() const { return failed == 0; }
};

struct ReplicateOptions {
    std::uint64_t seed = 7;
    std::string only; // run only facts whose id contains this substring
};

// Runs the full replication suite: every worked example the library's
// results are pinned to, plus the seeded property suites. Deterministic:
// equal options produce an identical document (no timestamps, no
// environment-dependent values).
ReportDocument run_replication(const ReplicateOptions& options);

// Stable JSON rendering of the document (sorted keys, trailing newline).
// Re-rendering the same document is byte-identical.
std::string render_report(const ReportDocument& doc);

} // namespace pinwheel
