#include "slrt/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace slrt {

namespace {

void check_density_consistency(const std::vector<double>& energies, double density) {
    const int n = static_cast<int>(energies.size());
    if (n < 2) return;
    const double span = energies.back() - energies.front();
    if (!(span > 0.0)) {
        throw std::invalid_argument("LevelSet: zero spectral span, density undefined");
    }
    const double estimate = static_cast<double>(n - 1) / span;
    const double ratio = density / estimate;
    if (ratio < 0.8 || ratio > 1.2) {
        throw std::invalid_argument(
            "LevelSet: stored density " + std::to_string(density) +
            " deviates more than 20% from (N-1)/span = " + std::to_string(estimate));
    }
}

}  // namespace

LevelSet::LevelSet(std::vector<double> energies, double density)
    : energies_(std::move(energies)), density_(density) {
    if (energies_.empty()) {
        throw std::invalid_argument("LevelSet: empty energy list");
    }
    if (!(density_ > 0.0) || !std::isfinite(density_)) {
        throw std::invalid_argument("LevelSet: density must be positive");
    }
    if (!std::is_sorted(energies_.begin(), energies_.end())) {
        throw std::invalid_argument("LevelSet: energies must be non-decreasing");
    }
    check_density_consistency(energies_, density_);
}

LevelSet LevelSet::uniform(int count, double spacing) {
    if (count < 1 || !(spacing > 0.0)) {
        throw std::invalid_argument("LevelSet::uniform: need count >= 1 and spacing > 0");
    }
    std::vector<double> e(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) e[static_cast<std::size_t>(n)] = n * spacing;
    return LevelSet(std::move(e), 1.0 / spacing);
}

LevelSet LevelSet::window(int first, int count) const {
    if (first < 0 || count < 1 || first + count > size()) {
        throw std::invalid_argument("LevelSet::window: range out of bounds");
    }
    std::vector<double> e(energies_.begin() + first, energies_.begin() + first + count);
    if (count == 1) return LevelSet(std::move(e), density_);
    const double span = e.back() - e.front();
    if (!(span > 0.0)) {
        throw std::invalid_argument("LevelSet::window: degenerate window span");
    }
    return LevelSet(std::move(e), static_cast<double>(count - 1) / span);
}

int LevelSet::nearest_index(double energy) const {
    const auto it = std::lower_bound(energies_.begin(), energies_.end(), energy);
    if (it == energies_.begin()) return 0;
    if (it == energies_.end()) return size() - 1;
    const auto i = static_cast<int>(it - energies_.begin());
    return (energy - energies_[static_cast<std::size_t>(i - 1)] <=
            energies_[static_cast<std::size_t>(i)] - energy)
               ? i - 1
               : i;
}

CouplingMatrix::CouplingMatrix(Eigen::MatrixXd elements) : elements_(std::move(elements)) {
    const auto n = elements_.rows();
    if (n == 0 || elements_.cols() != n) {
        throw std::invalid_argument("CouplingMatrix: matrix must be square and non-empty");
    }
    const double scale = elements_.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (elements_(i, i) != 0.0) {
            throw std::invalid_argument("CouplingMatrix: diagonal must be identically zero");
        }
    }
    const double asym = (elements_ - elements_.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(scale, 1e-300)) {
        throw std::invalid_argument("CouplingMatrix: matrix is not symmetric");
    }
    // canonicalize to exact symmetry
    elements_ = 0.5 * (elements_ + elements_.transpose().eval());
    if (elements_.minCoeff() < 0.0) {
        throw std::invalid_argument("CouplingMatrix: elements must be nonnegative");
    }
}

CouplingMatrix CouplingMatrix::constant(int size, double value, int max_band) {
    if (size < 1 || value < 0.0) {
        throw std::invalid_argument("CouplingMatrix::constant: bad arguments");
    }
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(size, size);
    for (int n = 0; n < size; ++n) {
        for (int m = n + 1; m < size; ++m) {
            if (max_band > 0 && m - n > max_band) break;
            x(n, m) = x(m, n) = value;
        }
    }
    return CouplingMatrix(std::move(x));
}

CouplingMatrix CouplingMatrix::block(int first, int count) const {
    if (first < 0 || count < 1 || first + count > size()) {
        throw std::invalid_argument("CouplingMatrix::block: range out of bounds");
    }
    CouplingMatrix out;
    out.elements_ = elements_.block(first, first, count, count);
    return out;
}

CouplingMatrix CouplingMatrix::scaled(double factor) const {
    if (factor < 0.0) {
        throw std::invalid_argument("CouplingMatrix::scaled: factor must be nonnegative");
    }
    CouplingMatrix out;
    out.elements_ = factor * elements_;
    return out;
}

BandWindow BandWindow::centered(int center_index, int half_size, int min_r, int max_r) {
    BandWindow w;
    w.center_index = center_index;
    w.half_size = half_size;
    w.min_r = min_r;
    w.max_r = max_r;
    return w;
}

// Largest centered window that fits; for even sizes this covers size-1 rows.
BandWindow BandWindow::full(int matrix_size, int min_r, int max_r) {
    BandWindow w;
    w.center_index = (matrix_size - 1) / 2;
    w.half_size = std::min(w.center_index, matrix_size - 1 - w.center_index);
    w.min_r = min_r;
    w.max_r = max_r;
    return w;
}

void BandWindow::validate(int matrix_size) const {
    if (min_r < 1 || min_r > max_r) {
        throw std::invalid_argument("BandWindow: need 1 <= min_r <= max_r");
    }
    if (half_size < 0 || first() < 0 || last() >= matrix_size) {
        throw std::invalid_argument("BandWindow: window does not fit inside the matrix");
    }
}

OccupationSpec OccupationSpec::microcanonical(int level_index) {
    if (level_index < 0) {
        throw std::invalid_argument("OccupationSpec: level index must be nonnegative");
    }
    OccupationSpec o;
    o.kind_ = Kind::Microcanonical;
    o.level_index_ = level_index;
    return o;
}

OccupationSpec OccupationSpec::boltzmann(double temperature) {
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("OccupationSpec: temperature must be positive");
    }
    OccupationSpec o;
    o.kind_ = Kind::Boltzmann;
    o.temperature_ = temperature;
    return o;
}

OccupationSpec OccupationSpec::fermi_window(double fermi_energy, double temperature) {
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("OccupationSpec: temperature must be positive");
    }
    OccupationSpec o;
    o.kind_ = Kind::FermiWindow;
    o.fermi_energy_ = fermi_energy;
    o.temperature_ = temperature;
    return o;
}

std::vector<double> OccupationSpec::weights(const LevelSet& levels) const {
    const int n = levels.size();
    std::vector<double> p(static_cast<std::size_t>(n), 0.0);
    switch (kind_) {
        case Kind::Microcanonical: {
            if (level_index_ >= n) {
                throw std::invalid_argument("OccupationSpec: level index outside level set");
            }
            p[static_cast<std::size_t>(level_index_)] = 1.0;
            return p;
        }
        case Kind::Boltzmann: {
            const double e0 = levels.energy(0);
            for (int i = 0; i < n; ++i) {
                p[static_cast<std::size_t>(i)] = std::exp(-(levels.energy(i) - e0) / temperature_);
            }
            break;
        }
        case Kind::FermiWindow: {
            if (fermi_energy_ < levels.energy(0) || fermi_energy_ > levels.energy(n - 1)) {
                throw std::invalid_argument("OccupationSpec: Fermi energy outside level set");
            }
            for (int i = 0; i < n; ++i) {
                // -df/dE line shape: (1/4T) sech^2((E-E_F)/2T), normalized below
                const double u = (levels.energy(i) - fermi_energy_) / (2.0 * temperature_);
                const double c = std::cosh(std::min(std::abs(u), 350.0));
                p[static_cast<std::size_t>(i)] = 1.0 / (c * c);
            }
            break;
        }
    }
    double sum = 0.0;
    for (double v : p) sum += v;
    if (!(sum > 0.0)) {
        throw std::invalid_argument("OccupationSpec: all weights vanish on this level set");
    }
    for (double& v : p) v /= sum;
    return p;
}

}  // namespace slrt
