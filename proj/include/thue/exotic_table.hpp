#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <utility>
#include <vector>

namespace thue {

/* Known sporadic solutions of F_{n,a}(X, Y) = 1 — those not accounted for by
 * the trivial family {(c,0), (0,-c)}, the all-n family F_{n,1}(-c, c) = c, or
 * the n = 0 families F_{0,1}(-c,-c) = c and F_{0,2}(c,c) = c. Entries are the
 * canonical representatives with F = +1 of each sign orbit. The list is
 * complete for 0 <= n <= 10, 1 <= a <= 70, |X|, |Y| <= 1000 (and for a = 1
 * the rows are complete outright). */
struct exotic_row {
    long long n;
    long long a;
    std::vector<std::pair<long long, long long>> entries;
};

const std::vector<exotic_row>& expected_exotic_rows();

/* data/exotic_solutions.json mirrors the embedded table; the loader lets a
 * test pin the two copies together and the CLI accept an external table. */
std::vector<exotic_row> load_exotic_rows(std::istream& in);
void write_exotic_rows(std::ostream& out, const std::vector<exotic_row>& rows);

}  // namespace thue
