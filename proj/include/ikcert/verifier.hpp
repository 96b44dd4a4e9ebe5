#pragma once

#include "ikcert/catalog.hpp"
#include "ikcert/minor.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ikcert {

enum class ClaimVerdict {
    pass,
    fail,
    error, // a search ran out of budget; says nothing about the claim
};

std::string to_string(ClaimVerdict v);

struct ClaimResult {
    std::string id;
    std::string anchor;
    ClaimVerdict verdict = ClaimVerdict::fail;
    std::string summary;
    double seconds = 0.0;
};

struct ClaimReport {
    /// Sorted by id.
    std::vector<ClaimResult> claims;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::size_t count(ClaimVerdict v) const;
};

struct VerifyOptions {
    /// Group names ("table1"), exact ids, or id prefixes ending in '.'. Empty runs everything.
    std::vector<std::string> only;
    SearchOptions search;
    /// Called with each claim id before it runs.
    std::function<void(const std::string&)> progress;
};

/// The claim groups in run order.
const std::vector<std::string>& claim_groups();

/// Ids of every claim the suite defines, sorted.
std::vector<std::string> claim_ids();

ClaimReport verify_paper(const Catalog& catalog, const VerifyOptions& opts = {});

/// Line-oriented report. With timing off the output is byte-stable across runs.
std::string render_text(const ClaimReport& report, bool timing = true);
/// JSON object: {"overall", "counts", "claims": [{"id","anchor","verdict","summary"[,"seconds"]}]}.
std::string render_json(const ClaimReport& report, bool timing = true);

/// 0 all pass, 1 some claim failed, 3 some search exceeded its budget.
int exit_status(const ClaimReport& report);

} // namespace ikcert
