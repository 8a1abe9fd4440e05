#pragma once

// Class-number parity data and the status of the equivalent parity
// statements for Q(zeta_N):
//
//   (1) h(K) odd          (a1) h(K+) odd            (b1) h(K+) = strict h(K+)
//   (2) h^-(K) odd        (a2) [E : C] odd          (b2) E^+ = E^2
//   (3) |Cl^+(K)| odd     (a3) C cap E^2 = C^2      (b3) units of every signature
//   (4) strict h(K+) odd
//   (6) circular units of every signature
//
// (1)-(4) and (6) are equivalent to each other and to "(a) and (b)", where
// (a1)-(a3) are equivalent among themselves, as are (b1)-(b3).

#include "cycsig/resgroup.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cycsig {

enum class Parity { Odd, Even, Unknown };

std::string_view to_string(Parity p) noexcept;

struct ClassParityRecord {
    std::int64_t p = 0;
    int n = 1;
    Parity h_K = Parity::Unknown;
    Parity h_minus = Parity::Unknown;
    Parity h_Kplus = Parity::Unknown;
    Parity h_strict_Kplus = Parity::Unknown;
    std::string source;
};

/// Throws InconsistentParities when the parities violate h(K) = h^- h(K+)
/// or h(K+) | strict h(K+).
void validate(const ClassParityRecord& r);

/// CSV with header p,n,h_K,h_minus,h_Kplus,h_strict_Kplus,source. The source
/// column runs to the end of the line. Blank lines and '#' lines are skipped.
std::vector<ClassParityRecord> parse_class_data(std::istream& is);
std::vector<ClassParityRecord> load_class_data(const std::string& path);

/// The parities stated for p = 29, p = 163 and p = 2 (n = 2..7).
std::string_view bundled_class_data_csv() noexcept;
std::vector<ClassParityRecord> bundled_class_data();

std::optional<ClassParityRecord> find_record(const std::vector<ClassParityRecord>& records, const Modulus& m);

enum class Status { Holds, Fails, Unknown };
enum class Provenance { Computed, FromData, Inferred, None };

std::string_view to_string(Status s) noexcept;
std::string_view to_string(Provenance p) noexcept;

struct StatementStatus {
    std::string_view id;
    Status status = Status::Unknown;
    Provenance provenance = Provenance::None;
};

inline constexpr std::array<std::string_view, 11> kStatementIds = {
    "1", "2", "3", "4", "a1", "a2", "a3", "b1", "b2", "b3", "6"};

struct Prop1Report {
    Modulus modulus;
    std::int64_t circular_rank;
    std::optional<std::int64_t> augmented_rank;
    std::array<StatementStatus, kStatementIds.size()> statements;

    const StatementStatus& statement(std::string_view id) const;
    StatementStatus& statement(std::string_view id);
};

/// Seeds statuses from the ranks and the data, then closes under the
/// equivalences. Throws Contradiction when the seeds disagree, and
/// RankOutOfRange / InconsistentParities on malformed input.
Prop1Report evaluate_prop1(const Modulus& mod, std::int64_t circular_rank,
                           std::optional<std::int64_t> augmented_rank,
                           const std::optional<ClassParityRecord>& data);

/// Applies the equivalence closure to an existing report. Idempotent.
void close_statuses(Prop1Report& r);

enum class ReportFormat { Json, Text };

std::string emit_report(const Prop1Report& r, ReportFormat format);

} // namespace cycsig
