#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "sephyp/error.hpp"

namespace sephyp {

/// Guards on every brute-force domain in the library. Operations refuse with
/// errc::budget_exceeded rather than run past these.
struct Budgets {
    /// enumerate_hypergraphs: largest C(n,k), i.e. up to 2^24 instances.
    std::uint64_t enumeration_exponent = 24;
    /// Rows of the Farkas system (C(n,k)) that decide will build.
    std::uint64_t lp_rows = 200'000;
    /// decide_fm refuses above this many vertices.
    std::uint64_t fm_max_vertices = 6;
    /// Nominal domain C(C(n,k), s) of the 0/1 certificate search.
    std::uint64_t search_domain = 1'000'000'000;
    /// C(n,r)^2 pairs for is_r_monotone.
    std::uint64_t monotone_pairs = 100'000'000;
    /// Number of k-sets materialized by complement, matroid constructors, etc.
    std::uint64_t ksets = 2'000'000;
    /// 2^n subsets for circuit enumeration.
    std::uint64_t subset_exponent = 22;

    static Budgets defaults() { return Budgets{}; }

    /// Parses "key=value,key=value" (keys as the field names above).
    static Budgets parse(std::string_view spec, Budgets base) {
        while (!spec.empty()) {
            auto comma = spec.find(',');
            auto item = spec.substr(0, comma);
            spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
            if (item.empty())
                continue;
            auto eq = item.find('=');
            require(eq != std::string_view::npos, errc::invalid_input,
                    "budget entry '" + std::string(item) + "' is not key=value");
            auto key = item.substr(0, eq);
            auto text = item.substr(eq + 1);
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            require(ec == std::errc{} && ptr == text.data() + text.size(), errc::invalid_input,
                    "budget value '" + std::string(text) + "' is not a non-negative integer");
            if (key == "enumeration_exponent") base.enumeration_exponent = value;
            else if (key == "lp_rows") base.lp_rows = value;
            else if (key == "fm_max_vertices") base.fm_max_vertices = value;
            else if (key == "search_domain") base.search_domain = value;
            else if (key == "monotone_pairs") base.monotone_pairs = value;
            else if (key == "ksets") base.ksets = value;
            else if (key == "subset_exponent") base.subset_exponent = value;
            else fail(errc::invalid_input, "unknown budget key '" + std::string(key) + "'");
        }
        return base;
    }

    static Budgets parse(std::string_view spec);

    /// Defaults overridden by the SEPHYP_BUDGET environment variable, if set.
    static Budgets from_environment() {
        const char* env = std::getenv("SEPHYP_BUDGET");
        return env ? parse(env) : Budgets{};
    }
};

inline Budgets Budgets::parse(std::string_view spec) { return parse(spec, Budgets{}); }

} // namespace sephyp
