#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace narycat {

inline constexpr long long kDefaultGuard = 1'000'000;

enum class Step : char { Up = 'U', Down = 'D', Flat = 'H' };

// Schroder path: steps U=(1,1), D=(1,-1), H=(2,0); never dips below the
// x-axis and ends on it. The empty path is a valid value (the recursive
// bijections need it) even though some families exclude it.
struct LatticePath {
    std::vector<Step> steps;
    bool operator==(const LatticePath&) const = default;
};

bool is_valid_path(const LatticePath& p);

struct PathStats {
    long long semilength = 0; // (#U + #D + 2 #H) / 2
    long long up_count = 0;
    long long h_count = 0;
    long long peaks = 0;    // UD adjacencies
    long long uu_count = 0; // UU adjacencies
    long long hdd = 0;      // #H plus DD adjacencies
    std::vector<long long> ascent_lengths;  // maximal U runs
    std::vector<long long> descent_lengths; // maximal D runs
};

PathStats stats_path(const LatticePath& p);

// Index of the D step matching the U at steps[up_index] (same height, first
// return). Pre: valid path, steps[up_index] is a U.
std::size_t matching_down(const LatticePath& p, std::size_t up_index);

// S_d: nonempty, total #H = 1 mod d-1, and the #H strictly between every U
// and its matching D is = 1 mod d-1.
bool in_S(const LatticePath& p, int d);

// Q_d: nonempty, H-free, every maximal ascent length = 1 mod d-1.
bool in_Q(const LatticePath& p, int d);

std::string to_string(const LatticePath& p);
// Accepts U/D/H letters (whitespace ignored); validates the path conditions.
LatticePath parse_path(const std::string& text);

// Descent-labelled Schroder path (family ~S_d): every maximal descent of
// length len carries a sorted (len-1)-subset of {1..d-2}; so descents are
// capped at d-1. H steps allowed; the empty path is a member.
struct LabeledSchroderPath {
    LatticePath base;
    std::vector<std::vector<int>> labels; // one per maximal descent
    bool operator==(const LabeledSchroderPath&) const = default;
};

// Descent-labelled Dyck path (family ~Q_d): nonempty and H-free; every
// maximal descent except the last carries a composition of len-1 into
// exactly d-1 nonnegative parts; the last descent is unlabelled.
struct LabeledDyckPath {
    LatticePath base;
    std::vector<std::vector<int>> labels; // one per non-final maximal descent
    bool operator==(const LabeledDyckPath&) const = default;
};

bool in_labeled_S(const LabeledSchroderPath& p, int d);
bool in_labeled_Q(const LabeledDyckPath& p, int d);

// Text forms: step letters with each labelled maximal descent followed by
// "{i,j}" (subset, ~S_d) or "(c1,..,c_{d-1})" (composition, ~Q_d). Subset
// labels are printed only when more than one subset is possible (a length-1
// descent's {} and a length-(d-1) descent's full set are forced and
// suppressed); composition labels are printed whenever d >= 3 and suppressed
// for d = 2 where they are forced. Parsers accept explicit forced labels.
std::string to_string(const LabeledSchroderPath& p, int d);
std::string to_string(const LabeledDyckPath& p, int d);
LabeledSchroderPath parse_labeled_schroder(const std::string& text, int d);
LabeledDyckPath parse_labeled_dyck(const std::string& text, int d);

// S_d members with semilength (n-k)(d-1)+k+1 and exactly k up steps,
// lexicographic in step order U < D < H. |result| = narayana(d, n, k).
std::vector<LatticePath> enumerate_S(int d, long long n, long long k,
                                     long long guard = kDefaultGuard);

// Q_d members with the given semilength and peak count (peaks < 0: no peak
// filter), lexicographic in step order U < D.
std::vector<LatticePath> enumerate_Q(int d, long long semilength, long long peaks,
                                     long long guard = kDefaultGuard);

// ~S_d members with semilength n and hdd = k (k < 0: no filter), ordered by
// base path then label tuple. |result| = narayana(d, n, k).
std::vector<LabeledSchroderPath> enumerate_labeled_S(int d, long long n, long long k,
                                                     long long guard = kDefaultGuard);

// ~Q_d members with semilength n+1 and exactly k UU adjacencies (k < 0: no
// filter), ordered by base path then label tuple. |result| = narayana(d,n,k).
std::vector<LabeledDyckPath> enumerate_labeled_Q(int d, long long n, long long k,
                                                 long long guard = kDefaultGuard);

// Native-parameter variant of enumerate_S: S_d members by semilength and up
// count directly (ups < 0: no filter). Used by the CLI.
std::vector<LatticePath> enumerate_schroder_native(int d, long long semilength, long long ups,
                                                   long long guard = kDefaultGuard);

// Native variant of enumerate_labeled_S by semilength and hdd.
std::vector<LabeledSchroderPath> enumerate_labeled_schroder_native(
    int d, long long semilength, long long hdd, long long guard = kDefaultGuard);

// Native variant of enumerate_labeled_Q by semilength and UU count.
std::vector<LabeledDyckPath> enumerate_labeled_dyck_native(int d, long long semilength,
                                                           long long uu,
                                                           long long guard = kDefaultGuard);

} // namespace narycat
