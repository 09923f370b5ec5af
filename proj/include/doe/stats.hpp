#pragma once

#include <vector>

namespace doe {

/// Five-number summary; quartiles by linear interpolation between order
/// statistics.
struct BoxplotStats {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    int count = 0;
};

BoxplotStats boxplot_stats(std::vector<double> values);

}  // namespace doe
