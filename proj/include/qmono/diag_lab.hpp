#pragma once

// Finite stages of the diagonalization constructions. Each stage picks a
// diagonal length n past the staged oracle's watermark, runs one machine at
// 0^n, extends the oracle so the machine either disagrees with the test
// language or shows an illegal query pattern, and records a certificate that
// can be replayed against any later (frozen) oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "qmono/bitstring.hpp"
#include "qmono/machine.hpp"
#include "qmono/staged_oracle.hpp"
#include "qmono/test_languages.hpp"
#include "qmono/truth_table.hpp"

namespace qmono {

enum class StageKind { thm4_4, thm4_7, thm4_9, thm4_13_odd, thm4_13_even };
enum class ConstructionKind { thm4_4, thm4_7, thm4_9, thm4_13 };
enum class CaseTag { disagreement_accept, disagreement_reject, constraint_violation };

std::string to_string(StageKind k);
std::string to_string(ConstructionKind k);
std::string to_string(CaseTag c);
std::optional<StageKind> parse_stage_kind(const std::string& s);
std::optional<ConstructionKind> parse_construction_kind(const std::string& s);
std::optional<CaseTag> parse_case_tag(const std::string& s);

/// The test language a stage diagonalizes against.
TestLanguageKind stage_language(StageKind k);

using DiagMachine = std::variant<OracleMachine, TruthTableMachine>;

const std::string& diag_machine_name(const DiagMachine& m);
const StepBudget& diag_machine_budget(const DiagMachine& m);

struct StageCertificate {
    StageKind kind = StageKind::thm4_4;
    std::size_t stage = 1;
    std::string machine;
    std::optional<unsigned> exponent;
    std::uint64_t n = 0;
    CaseTag case_tag = CaseTag::disagreement_reject;
    /// Only for the stages that pick a free block of bits.
    std::optional<BitString> alpha;
    /// Strings this stage added to the oracle, shortlex order.
    std::vector<BitString> added;
    std::uint64_t watermark = 0;

    friend bool operator==(const StageCertificate&, const StageCertificate&) = default;
};

nlohmann::json to_json(const StageCertificate& c);
/// Throws InvalidInput on schema errors.
StageCertificate certificate_from_json(const nlohmann::json& j);

struct StageResult {
    StagedOracle oracle;
    StageCertificate certificate;
};

/// Default bound on the diagonal length a stage may pick.
inline constexpr std::uint64_t kDefaultStageCap = 1u << 12;

/// Throws ResourceError when no n <= cap satisfies the side conditions or the
/// machine exceeds its budget, ConfigurationError for a machine shape the
/// stage cannot use (THM_4_7 needs a truth-table machine).
StageResult run_diag_stage(StageKind kind, const DiagMachine& m, const StagedOracle& o, std::size_t stage = 1,
                           std::uint64_t cap = kDefaultStageCap);

/// Re-runs the machine at 0^n on o and checks the recorded case. The
/// machine's name must match; o's watermark must be at least the
/// certificate's and every added string must still be a member.
bool verify_certificate(const StageCertificate& cert, const DiagMachine& m, const StagedOracle& o,
                        std::string* why = nullptr);

struct ConstructionResult {
    StagedOracle oracle;
    std::vector<StageCertificate> certificates;
};

/// One stage per machine in order, starting from the empty oracle. thm4.13
/// alternates odd and even stages.
ConstructionResult run_construction(ConstructionKind kind, const std::vector<DiagMachine>& machines,
                                    std::uint64_t cap_per_stage = kDefaultStageCap);

// Diagonal-length selection, exposed for independent checking.
std::uint64_t diag_length_thm4_4(std::uint64_t watermark, std::uint64_t cap = kDefaultStageCap);
/// smallest 8^k with budget(n) < 2^(n/8) and watermark < 3n/4
std::uint64_t diag_length_thm4_7(const StepBudget& b, std::uint64_t watermark, std::uint64_t cap = kDefaultStageCap);
/// smallest 4^k with budget(n) < 2^(n/4) and watermark < n/2
std::uint64_t diag_length_thm4_9(const StepBudget& b, std::uint64_t watermark, std::uint64_t cap = kDefaultStageCap);
/// smallest 4k (k >= 1) above the watermark
std::uint64_t diag_length_thm4_13_odd(std::uint64_t watermark, std::uint64_t cap = kDefaultStageCap);
/// smallest 4k+3 (k >= 1) with watermark < n - 1
std::uint64_t diag_length_thm4_13_even(std::uint64_t watermark, std::uint64_t cap = kDefaultStageCap);

/// The lexicographically least string of the given width not in `taken`,
/// found by scanning |taken| + 1 candidates.
BitString first_free_block(std::size_t width, const std::vector<BitString>& taken);

} // namespace qmono
