#include "framecheck/verdict.hpp"

#include <algorithm>

namespace framecheck {

void Verdict::finalize() {
    std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
        if (a.condition != b.condition) return a.condition < b.condition;
        int c = compare(a.shift, b.shift);
        if (c != 0) return c < 0;
        bool aw = a.where.has_value();
        bool bw = b.where.has_value();
        if (aw != bw) return bw;
        if (aw && bw) {
            int cl = compare(a.where->lo, b.where->lo);
            if (cl != 0) return cl < 0;
        }
        return compare(a.witness_xi, b.witness_xi) < 0;
    });
    holds = violations.empty();
}

}  // namespace framecheck
