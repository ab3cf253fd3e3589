#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reconlab/code.hpp"
#include "reconlab/limits.hpp"

namespace reconlab::cli {

/// Grid overrides for a suite; zero keeps the suite's own default.
struct SuiteGrid {
    std::size_t max_n = 0;
    unsigned max_q = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

struct InstanceResult {
    std::string instance;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<InstanceResult> instances;

    bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Instances are reported in a fixed order whatever `jobs` is.
SuiteReport verify_suite(const std::string& name, const SuiteGrid& grid, const Limits& limits = Limits::from_env());

/// Binary length-n code {x : XOR of labels i over x_i = 1 is 0} with labels 1..n,
/// which has minimum distance 3 for 3 <= n <= 15.
Code shortened_hamming_code(std::size_t n);

/// max over u in Z_q^n of |B_r(u) ∩ C|.
std::size_t list_ball_cap(const Code& code, std::size_t radius, const Limits& limits = Limits::from_env());

}  // namespace reconlab::cli
