#include "qbc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qbc/error.hpp"

namespace qbc {

double mse(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height) throw DimensionError("MSE requires identical dimensions");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = static_cast<double>(a.data[i]) - static_cast<double>(b.data[i]);
        sum += d * d;
    }
    return sum / static_cast<double>(a.data.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
    const double e = mse(a, b);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / e);
}

std::vector<RdPoint> rd_sweep(const GrayImage& img, const std::vector<int>& qfs, Scheme scheme,
                              const PipelineOptions& opts) {
    if (qfs.empty()) throw ConfigError("qf list must not be empty");
    std::vector<int> sorted = qfs;
    std::sort(sorted.begin(), sorted.end());

    std::vector<RdPoint> points;
    points.reserve(sorted.size());
    for (const int qf : sorted) {
        const QfResult r = run_pipeline(img, qf, opts);
        points.push_back({qf, r.report(scheme, opts).br, r.psnr_db, scheme});
    }
    return points;
}

}  // namespace qbc
