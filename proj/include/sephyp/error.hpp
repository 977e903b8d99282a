#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sephyp {

enum class errc {
    invalid_input,        // malformed data, violated type invariant
    budget_exceeded,      // brute-force domain larger than the configured guard
    invalid_partition,
    not_a_graph,
    not_a_matroid,
    precondition_violated,
    rank_collapse,        // minor or constructor would leave 1 <= k < n
    rank_zero,
    has_loops,
    oracle_inconsistent,
    internal              // a self-check failed; always a bug
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
    case errc::invalid_input: return "InvalidInput";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::invalid_partition: return "InvalidPartition";
    case errc::not_a_graph: return "NotAGraph";
    case errc::not_a_matroid: return "NotAMatroid";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::rank_collapse: return "RankCollapse";
    case errc::rank_zero: return "RankZero";
    case errc::has_loops: return "HasLoops";
    case errc::oracle_inconsistent: return "OracleInconsistent";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond)
        fail(code, what);
}

} // namespace sephyp
