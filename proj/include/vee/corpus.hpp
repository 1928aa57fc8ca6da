#pragma once

#include <string>
#include <vector>

namespace vee {

struct CorpusRow {
    std::string name;
    std::size_t count = 0;
    std::string vee_status;     // "vee" / "degenerate" / "error: ..."
    std::string exponents;      // exponent list or raw Poincare coefficients
    bool matches = false;
    std::string detail;         // first mismatch, empty when matching
};

struct CorpusResult {
    std::vector<CorpusRow> rows; // sorted by name
    bool all_match = false;
    std::string table;           // rendered summary, byte-stable
};

// Runs the bundled verification corpus: vee/holonomy checks, harmonicity
// where expected, and the Poincare factorization, comparing everything
// against the expectations file. Entries run in parallel up to VEE_THREADS.
CorpusResult corpus_run(const std::string& corpus_dir, const std::string& only = "");

} // namespace vee
