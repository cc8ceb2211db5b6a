// spectral.hpp — Driving power spectrum on the integer band grid, band-profile
// histograms, and sparsity diagnostics of coupling matrices.

#pragma once

#include "slrt/types.hpp"

#include <cstdint>
#include <vector>

namespace slrt {

enum class DriveShape { Rectangular, Lorentzian, Gaussian };

// Normalized spectral content of a stationary low-frequency driving source.
// band_weight(r) = F(r) is the weight of transitions r levels away, with
// F(r) = F(-r) >= 0, F(0) = 0 and sum_r F(r) = 1. cutoff_band() is
// b_c = rho * omega_c, the bandwidth in units of the level spacing.
// power() is the mean-square drive rate (the square of rms_drive()).
class SpectralWeight {
public:
    // weight_by_band[r-1] = F(r) for r >= 1; the negative side is implied.
    SpectralWeight(double rms_drive, std::vector<double> weight_by_band, int cutoff_band);

    double rms_drive() const;
    double power() const { return power_; }
    int cutoff_band() const { return cutoff_band_; }
    int max_band() const { return static_cast<int>(weight_by_band_.size()); }

    double band_weight(int r) const {
        const int a = r < 0 ? -r : r;
        if (a < 1 || a > max_band()) return 0.0;
        return weight_by_band_[static_cast<std::size_t>(a - 1)];
    }

    // S~(omega) = 2*pi*power*rho*F(round(rho*omega)): the power spectrum
    // evaluated with omega snapped to the nearest integer band.
    double power_at(double omega, double density) const;

    // Scales the driving intensity (mean-square rate) by the given factor.
    SpectralWeight scaled_power(double factor) const;

private:
    double power_;
    std::vector<double> weight_by_band_;
    int cutoff_band_;
};

// Discretizes a line shape of cutoff omega_c onto the band grid of a spectrum
// with the given level density. Throws if the resulting b_c = rho*omega_c
// rounds below 1 (driving narrower than one level spacing).
SpectralWeight make_spectral_weight(double rms_drive, DriveShape shape, double cutoff_omega,
                                    double density);

// Same, with the dimensionless bandwidth b_c given directly.
SpectralWeight make_spectral_weight_bands(double rms_drive, DriveShape shape, int cutoff_band);

// Spectrum of two independent sources driving the same perturbation:
// powers add, band weights combine power-weighted.
SpectralWeight add_drives(const SpectralWeight& a, const SpectralWeight& b);

// One bin of the occupation-weighted transition-strength histogram.
struct BandProfileBin {
    double omega = 0.0;  // bin center
    double value = 0.0;  // sum of p_n * X_nm * 2*pi over the bin, per unit omega
};

// Histogram over omega = E_m - E_n of p_n * X_nm * 2*pi, binned with the
// given width (default: one mean level spacing). The integral over omega
// equals 2*pi * sum_{n != m} p_n X_nm.
std::vector<BandProfileBin> band_profile(const CouplingMatrix& x, const LevelSet& levels,
                                         const OccupationSpec& occupation,
                                         double bin_width = 0.0);

// Log-binned histogram of the positive in-band elements; zeros counted apart.
struct ElementHistogram {
    std::vector<double> edges;        // bin edges, ascending (size = counts.size() + 1)
    std::vector<std::int64_t> counts; // counts of positive elements per bin
    std::int64_t zero_count = 0;
};

// Sparsity descriptors of the in-band elements of a window: a log-wide
// distribution shows up as median << mean (q_ratio small) and a small
// participation ratio.
struct SparsityReport {
    double mean = 0.0;
    double median = 0.0;          // lower median for even counts
    double q_ratio = 0.0;         // median / mean
    double participation = 0.0;   // (sum x)^2 / (count * sum x^2)
    bool participation_defined = false;
    std::int64_t element_count = 0;
    ElementHistogram histogram;
};

// In-band elements are the unordered pairs {X_nm : min_r <= m-n <= max_r}
// with both indices inside the window.
SparsityReport sparsity_measures(const CouplingMatrix& x, const BandWindow& window,
                                 int histogram_bins = 48);

}  // namespace slrt
