#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "framecheck/interval.hpp"

namespace framecheck {

// One failed condition instance: which condition, at which lattice shift, and
// a concrete point where the offending function is nonzero (or differs from
// the required constant).
struct Violation {
    std::string condition;
    std::vector<Rational> shift;           // alpha / k / q; empty for shift-free conditions
    std::optional<Interval> where;         // 1-D piece that witnesses the failure
    std::vector<Rational> witness_xi;
    std::complex<double> value{0.0, 0.0};
    std::string detail;
};

// Records which finite ranges replaced the statement's infinite quantifiers,
// so a verdict is auditable.
struct TruncationRecord {
    std::string name;
    Box box;
    long count = 0;
    int j_lo = 0;
    int j_hi = -1;  // j range empty unless j_lo <= j_hi
    bool has_j_range() const { return j_lo <= j_hi; }
};

struct Verdict {
    bool holds = false;
    // False when only a sufficient condition was evaluated: a failing verdict
    // then means "undecided", not "disproved".
    bool characterized = true;
    std::vector<Violation> violations;
    std::vector<TruncationRecord> truncation;
    std::string note;

    void add(Violation v) { violations.push_back(std::move(v)); }
    void record(TruncationRecord r) { truncation.push_back(std::move(r)); }
    // Sorts violations (condition, shift, location) and sets `holds`.
    void finalize();
};

}  // namespace framecheck
