#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homcx/hom.hpp"
#include "homcx/io.hpp"

namespace homcx {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  ///< counterexample or mismatch when failed
};

struct FixtureReport {
    std::string fixture;
    std::vector<Check> checks;
    Json artifacts = Json::object();
    bool cap_exceeded = false;
    std::string cap_detail;
    bool skipped = false;  ///< outside the suite's domain; recorded, not counted as failure
    double wall_time = 0;

    bool passed() const;
};

struct VerificationReport {
    std::string theorem;
    std::string surrogate;
    std::vector<FixtureReport> fixtures;
    double wall_time = 0;

    bool passed() const;
    bool cap_exceeded() const;
};

struct VerifyOptions {
    /// "core", a comma-separated id list, or empty for the suite's default set.
    std::string fixtures;
    /// Size of K_n where the suite takes one; 0 selects the default.
    int n = 0;
    std::size_t cap = kDefaultHomCap;
};

/// thm-1.1, thm-1.2, thm-1.3, lemma-hom-nbhd, prop-3.1, prop-collapse, prop-4.1, quillen, fold.
const std::vector<std::string>& theorem_ids();

/// Throws DomainError for an unknown theorem id.
VerificationReport run_verification(const std::string& theorem, const VerifyOptions& options);

Json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

/// FNV-1a over the certificate's simplices, as 16 hex digits.
std::string certificate_digest(const CollapseCertificate& c);

}  // namespace homcx
