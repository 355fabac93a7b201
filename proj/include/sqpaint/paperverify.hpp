#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sqpaint {

enum class CertKind { circulation_count, at_verdict, paint_verdict, structural, formula_identity };

std::string to_string(CertKind k);

struct Certificate {
    std::string id;
    CertKind kind = CertKind::structural;
    /// Canonical text of the expected value(s); pass <=> observed == expected.
    std::string expected;
    std::string citation;
    std::string observed;
    bool pass = false;
    /// Supporting numbers that are reported but not compared.
    std::string note;
    double runtime_ms = 0;
};

struct CheckInfo {
    std::string id;
    CertKind kind;
    std::string citation;
    /// Closed n-range for formula identities, {0, 0} otherwise.
    int lo = 0;
    int hi = 0;
};

/// Every registered check in report order.
const std::vector<CheckInfo>& certificate_registry();

struct VerifyOptions {
    /// Fault injection for tests: the named check runs on a deliberately
    /// damaged copy of its fixture.
    std::optional<std::string> corrupt;
    std::uint64_t paint_budget = 20'000'000;
};

/// Runs one registered check. Throws InputError for an unknown id; engine
/// failures are recorded in the certificate rather than thrown.
Certificate verify_certificate(std::string_view id, const VerifyOptions& options = {});

/// verify_certificate restricted to lemma/figure checks (every kind but
/// structural) or to structural ones; the wrong kind is an InputError.
Certificate verify_lemma(std::string_view id, const VerifyOptions& options = {});
Certificate verify_structural(std::string_view id, const VerifyOptions& options = {});

/// A formula identity over a custom range (within the brute-force limits).
Certificate verify_formula(std::string_view id, int lo, int hi, const VerifyOptions& options = {});

struct Report {
    std::vector<Certificate> certificates;
    int passed() const;
    int failed() const;
    bool ok() const { return failed() == 0; }
};

Report verify_all(const VerifyOptions& options = {});

/// One JSON object; runtime_ms is omitted when `deterministic`.
nlohmann::json certificate_to_json(const Certificate& c, bool deterministic);
/// One line per certificate.
std::string report_json_lines(const Report& r, bool deterministic);
std::string report_table(const Report& r, bool deterministic);

} // namespace sqpaint
