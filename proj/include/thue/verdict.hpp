#pragma once

namespace thue {

/* Outcome of a certified numeric comparison: holds / fails mean the interval
 * computation proved the inequality true / false; undecided means the
 * precision cap was reached with the intervals still straddling. */
enum class refined_verdict {
    holds,
    fails,
    undecided,
};

const char* verdict_name(refined_verdict v);

}  // namespace thue
