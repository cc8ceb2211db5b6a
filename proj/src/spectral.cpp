#include "slrt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace slrt {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Truncation range of the long-tailed shapes, in units of b_c.
constexpr int kShapeTruncationFactor = 10;

double shape_value(DriveShape shape, double r, double bc) {
    const double u = r / bc;
    switch (shape) {
        case DriveShape::Rectangular:
            return r <= bc ? 1.0 : 0.0;
        case DriveShape::Lorentzian: {
            // squared-Lorentzian core: integrable tails, <1% mass beyond 10*b_c
            const double d = 1.0 + u * u;
            return 1.0 / (d * d);
        }
        case DriveShape::Gaussian:
            return std::exp(-0.5 * u * u);
    }
    return 0.0;
}

}  // namespace

SpectralWeight::SpectralWeight(double rms_drive, std::vector<double> weight_by_band,
                               int cutoff_band)
    : power_(rms_drive * rms_drive),
      weight_by_band_(std::move(weight_by_band)),
      cutoff_band_(cutoff_band) {
    if (!(rms_drive > 0.0)) {
        throw std::invalid_argument("SpectralWeight: rms drive must be positive");
    }
    if (cutoff_band_ < 1) {
        throw std::invalid_argument("SpectralWeight: cutoff band must be >= 1");
    }
    if (weight_by_band_.empty()) {
        throw std::invalid_argument("SpectralWeight: empty band weight");
    }
    double sum = 0.0;
    for (double f : weight_by_band_) {
        if (f < 0.0) throw std::invalid_argument("SpectralWeight: negative band weight");
        sum += f;
    }
    if (std::abs(2.0 * sum - 1.0) > 1e-12) {
        throw std::invalid_argument("SpectralWeight: band weights must sum to 1");
    }
}

double SpectralWeight::rms_drive() const { return std::sqrt(power_); }

double SpectralWeight::power_at(double omega, double density) const {
    const long long r = std::llround(density * omega);
    const double f = band_weight(static_cast<int>(std::min<long long>(
        std::abs(r), static_cast<long long>(max_band()) + 1)));
    return kTwoPi * power_ * density * f;
}

SpectralWeight SpectralWeight::scaled_power(double factor) const {
    if (!(factor > 0.0)) {
        throw std::invalid_argument("SpectralWeight: power scale must be positive");
    }
    SpectralWeight out = *this;
    out.power_ *= factor;
    return out;
}

SpectralWeight make_spectral_weight_bands(double rms_drive, DriveShape shape, int cutoff_band) {
    if (cutoff_band < 1) {
        throw std::invalid_argument(
            "make_spectral_weight: driving narrower than the level spacing (b_c < 1)");
    }
    const int r_max =
        shape == DriveShape::Rectangular ? cutoff_band : kShapeTruncationFactor * cutoff_band;
    std::vector<double> f(static_cast<std::size_t>(r_max));
    double sum = 0.0;
    for (int r = 1; r <= r_max; ++r) {
        const double v = shape_value(shape, static_cast<double>(r), cutoff_band);
        f[static_cast<std::size_t>(r - 1)] = v;
        sum += v;
    }
    if (!(sum > 0.0)) {
        throw std::invalid_argument("make_spectral_weight: band weight vanished");
    }
    for (double& v : f) v /= 2.0 * sum;  // sum over +-r equals 1
    return SpectralWeight(rms_drive, std::move(f), cutoff_band);
}

SpectralWeight make_spectral_weight(double rms_drive, DriveShape shape, double cutoff_omega,
                                    double density) {
    if (!(cutoff_omega > 0.0) || !(density > 0.0)) {
        throw std::invalid_argument("make_spectral_weight: cutoff and density must be positive");
    }
    const int bc = static_cast<int>(std::llround(density * cutoff_omega));
    if (bc < 1) {
        throw std::invalid_argument(
            "make_spectral_weight: driving narrower than the level spacing (b_c < 1)");
    }
    return make_spectral_weight_bands(rms_drive, shape, bc);
}

SpectralWeight add_drives(const SpectralWeight& a, const SpectralWeight& b) {
    const double pa = a.power();
    const double pb = b.power();
    const double p = pa + pb;
    const int r_max = std::max(a.max_band(), b.max_band());
    std::vector<double> f(static_cast<std::size_t>(r_max), 0.0);
    for (int r = 1; r <= r_max; ++r) {
        f[static_cast<std::size_t>(r - 1)] =
            (pa * a.band_weight(r) + pb * b.band_weight(r)) / p;
    }
    return SpectralWeight(std::sqrt(p), std::move(f),
                          std::max(a.cutoff_band(), b.cutoff_band()));
}

std::vector<BandProfileBin> band_profile(const CouplingMatrix& x, const LevelSet& levels,
                                         const OccupationSpec& occupation, double bin_width) {
    const int n = x.size();
    if (n != levels.size()) {
        throw std::invalid_argument("band_profile: matrix and level set sizes differ");
    }
    if (n < 2) return {};
    const double h = bin_width > 0.0 ? bin_width : levels.mean_spacing();
    const std::vector<double> p = occupation.weights(levels);

    double omega_min = 0.0, omega_max = 0.0;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (p[static_cast<std::size_t>(i)] == 0.0) continue;
        for (int m = 0; m < n; ++m) {
            if (m == i) continue;
            const double w = levels.energy(m) - levels.energy(i);
            if (!any) {
                omega_min = omega_max = w;
                any = true;
            } else {
                omega_min = std::min(omega_min, w);
                omega_max = std::max(omega_max, w);
            }
        }
    }
    if (!any) return {};

    const int bins = static_cast<int>(std::floor((omega_max - omega_min) / h + 1e-9)) + 1;
    std::vector<BandProfileBin> out(static_cast<std::size_t>(bins));
    for (int k = 0; k < bins; ++k) {
        out[static_cast<std::size_t>(k)].omega = omega_min + (k + 0.5) * h;
    }
    for (int i = 0; i < n; ++i) {
        const double pi_w = p[static_cast<std::size_t>(i)];
        if (pi_w == 0.0) continue;
        for (int m = 0; m < n; ++m) {
            if (m == i) continue;
            const double w = levels.energy(m) - levels.energy(i);
            int k = static_cast<int>(std::floor((w - omega_min) / h + 1e-9));
            k = std::clamp(k, 0, bins - 1);
            out[static_cast<std::size_t>(k)].value += kTwoPi * pi_w * x(i, m);
        }
    }
    for (auto& bin : out) bin.value /= h;
    return out;
}

SparsityReport sparsity_measures(const CouplingMatrix& x, const BandWindow& window,
                                 int histogram_bins) {
    window.validate(x.size());
    if (histogram_bins < 1) {
        throw std::invalid_argument("sparsity_measures: need at least one histogram bin");
    }
    std::vector<double> vals;
    for (int n = window.first(); n <= window.last(); ++n) {
        const int m_end = std::min(window.last(), n + window.max_r);
        for (int m = n + window.min_r; m <= m_end; ++m) {
            vals.push_back(x(n, m));
        }
    }
    if (vals.empty()) {
        throw std::invalid_argument("sparsity_measures: window contains no in-band elements");
    }

    SparsityReport rep;
    rep.element_count = static_cast<std::int64_t>(vals.size());
    double sum = 0.0, sum_sq = 0.0;
    for (double v : vals) {
        sum += v;
        sum_sq += v * v;
    }
    rep.mean = sum / static_cast<double>(vals.size());

    std::vector<double> sorted(vals);
    std::sort(sorted.begin(), sorted.end());
    rep.median = sorted[(sorted.size() - 1) / 2];

    rep.participation_defined = sum_sq > 0.0;
    rep.participation =
        rep.participation_defined ? sum * sum / (static_cast<double>(vals.size()) * sum_sq) : 0.0;
    rep.q_ratio = rep.mean > 0.0 ? rep.median / rep.mean : 0.0;

    // histogram of the positive elements on a log grid
    double min_pos = 0.0;
    std::int64_t positives = 0;
    for (double v : sorted) {
        if (v > 0.0) {
            if (positives == 0) min_pos = v;
            ++positives;
        }
    }
    rep.histogram.zero_count = rep.element_count - positives;
    if (positives == 0) return rep;

    const double max_val = sorted.back();
    if (min_pos == max_val) {
        rep.histogram.edges = {min_pos * (1.0 - 1e-12), max_val * (1.0 + 1e-12)};
        rep.histogram.counts = {positives};
        return rep;
    }
    const int nb = histogram_bins;
    const double log_lo = std::log(min_pos);
    const double log_span = std::log(max_val) - log_lo;
    rep.histogram.edges.resize(static_cast<std::size_t>(nb + 1));
    for (int i = 0; i <= nb; ++i) {
        rep.histogram.edges[static_cast<std::size_t>(i)] =
            std::exp(log_lo + log_span * static_cast<double>(i) / nb);
    }
    rep.histogram.counts.assign(static_cast<std::size_t>(nb), 0);
    for (double v : vals) {
        if (v <= 0.0) continue;
        int k = static_cast<int>(std::floor((std::log(v) - log_lo) / log_span * nb));
        k = std::clamp(k, 0, nb - 1);
        ++rep.histogram.counts[static_cast<std::size_t>(k)];
    }
    return rep;
}

}  // namespace slrt
