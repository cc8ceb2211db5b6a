// types.hpp — Core domain types: energy levels, squared-coupling matrices,
// analysis windows, and occupation weights.

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace slrt {

// Ordered unperturbed energy levels E_n together with their mean density
// rho [states/energy]. The stored density must agree with the coarse
// estimate (N-1)/(E_max - E_min) to within 20% (roughly uniform spectra).
class LevelSet {
public:
    LevelSet(std::vector<double> energies, double density);

    // n levels at uniform spacing; density = 1/spacing.
    static LevelSet uniform(int count, double spacing = 1.0);

    int size() const { return static_cast<int>(energies_.size()); }
    double energy(int n) const { return energies_[static_cast<std::size_t>(n)]; }
    const std::vector<double>& energies() const { return energies_; }
    double density() const { return density_; }
    double mean_spacing() const { return 1.0 / density_; }

    // Contiguous sub-range [first, first+count) with locally recomputed density.
    LevelSet window(int first, int count) const;

    // Index of the level closest to the given energy.
    int nearest_index(double energy) const;

private:
    std::vector<double> energies_;
    double density_;
};

// Symmetric nonnegative matrix of squared coupling elements with a zero
// diagonal. Stored dense; exact symmetry is canonicalized on construction.
class CouplingMatrix {
public:
    explicit CouplingMatrix(Eigen::MatrixXd elements);

    // Off-diagonal constant x, optionally restricted to |n-m| <= max_band.
    static CouplingMatrix constant(int size, double value, int max_band = -1);

    int size() const { return static_cast<int>(elements_.rows()); }
    double operator()(int n, int m) const { return elements_(n, m); }
    const Eigen::MatrixXd& elements() const { return elements_; }

    // Principal sub-block [first, first+count).
    CouplingMatrix block(int first, int count) const;

    CouplingMatrix scaled(double factor) const;

private:
    CouplingMatrix() = default;
    Eigen::MatrixXd elements_;
};

// Selects a sub-matrix (window) and a band of off-diagonal distances
// min_r <= |n-m| <= max_r for in-band diagnostics.
struct BandWindow {
    int center_index = 0;
    int half_size = 0;
    int min_r = 1;
    int max_r = 1;

    static BandWindow centered(int center_index, int half_size, int min_r, int max_r);
    static BandWindow full(int matrix_size, int min_r, int max_r);

    int first() const { return center_index - half_size; }
    int last() const { return center_index + half_size; }
    int count() const { return 2 * half_size + 1; }

    // Throws std::invalid_argument on 1 <= min_r <= max_r violations or if
    // the window does not fit inside a matrix of the given size.
    void validate(int matrix_size) const;
};

// Occupation probabilities p_n over a level set: a delta at one level, a
// Boltzmann factor, or a thermally broadened window at the Fermi energy.
class OccupationSpec {
public:
    enum class Kind { Microcanonical, Boltzmann, FermiWindow };

    static OccupationSpec microcanonical(int level_index);
    static OccupationSpec boltzmann(double temperature);
    static OccupationSpec fermi_window(double fermi_energy, double temperature);

    Kind kind() const { return kind_; }
    int level_index() const { return level_index_; }
    double temperature() const { return temperature_; }
    double fermi_energy() const { return fermi_energy_; }

    // Normalized weights p_n (sum exactly renormalized to 1).
    std::vector<double> weights(const LevelSet& levels) const;

private:
    OccupationSpec() = default;
    Kind kind_ = Kind::Microcanonical;
    int level_index_ = 0;
    double temperature_ = 0.0;
    double fermi_energy_ = 0.0;
};

}  // namespace slrt
