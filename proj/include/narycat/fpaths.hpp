#pragma once

#include <string>
#include <vector>

#include "narycat/paths.hpp" // kDefaultGuard

namespace narycat {

// One (run,1) step of an F-path: right `run`, up 1. Steps with run >= 1
// carry a label; for membership in F_d it is a composition of run-1 into
// d-1 nonnegative parts.
struct FStep {
    long long run = 0;
    std::vector<int> label;
    bool operator==(const FStep&) const = default;
};

struct FPath {
    std::vector<FStep> steps;
    bool operator==(const FPath&) const = default;
};

// Structural check without a degree: runs >= 0, every prefix stays weakly
// above the diagonal (x <= y), and run-0 steps carry no label.
bool is_valid_fpath(const FPath& f);

struct FPathStats {
    long long length = 0; // number of steps
    long long north = 0;  // number of (0,1) steps
    long long height = 0; // y - x at the endpoint
};

FPathStats fpath_stats(const FPath& f);

// F_d: valid F-path whose run >= 1 labels are compositions of run-1 into
// d-1 parts.
bool in_F(const FPath& f, int d);

// Text: "(0,1) (1,1)[0,0] (4,1)[1,2]". Labels print for d >= 3 and are
// suppressed at d = 2 where they are forced to (run-1).
std::string to_string(const FPath& f, int d);
// Accepts spaces or commas between steps; reconstructs suppressed labels.
FPath parse_fpath(const std::string& text, int d);

// All F_d paths with n steps, k of them (0,1); k < 0 drops the filter.
// Bases ordered lexicographically by run sequence, labels odometer-style.
// |enumerate_F(d, n, k)| = narayana(d, n, k).
std::vector<FPath> enumerate_F(int d, long long n, long long k,
                               long long guard = kDefaultGuard);

} // namespace narycat
