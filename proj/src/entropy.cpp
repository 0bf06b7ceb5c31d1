#include "entlab/entropy.hpp"

#include "entlab/error.hpp"

#include <string>

namespace entlab {

void require_positive_kb(double kb) {
    if(!(kb > 0.0) || !std::isfinite(kb)) throw Error(ErrorKind::InvalidArgument, "kb must be positive and finite");
}

double von_neumann_of_spectrum(std::span<const double> spectrum, double kb) {
    double acc = 0.0;
    for(double lambda : spectrum)
        if(lambda >= kEntropyClip) acc -= lambda * std::log(lambda);
    return kb * acc;
}

EntropyValue von_neumann(const DensityMatrix &rho, double kb) {
    require_positive_kb(kb);
    return {von_neumann_of_spectrum(rho.spectrum(), kb), kb};
}

EntropyValue boltzmann_planck(std::size_t n, double kb) {
    require_positive_kb(kb);
    if(n == 0) throw Error(ErrorKind::InvalidArgument, "Boltzmann-Planck needs N >= 1");
    return {kb * std::log(static_cast<double>(n)), kb};
}

double renyi_of_spectrum(std::span<const double> spectrum, double alpha, double kb) {
    if(!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha))
        throw Error(ErrorKind::AlphaInvalid, "Renyi order must be positive and different from 1");
    double power_sum = 0.0;
    for(double lambda : spectrum)
        if(lambda >= kEntropyClip) power_sum += std::pow(lambda, alpha);
    return kb * std::log(power_sum) / (1.0 - alpha);
}

EntropyValue renyi(const DensityMatrix &rho, double alpha, double kb) {
    require_positive_kb(kb);
    return {renyi_of_spectrum(rho.spectrum(), alpha, kb), kb};
}

EntropyValue shannon(std::span<const double> p, double kb) {
    require_positive_kb(kb);
    double total = 0.0;
    for(double x : p) {
        if(!(x >= 0.0)) throw Error(ErrorKind::NotNormalized, "probabilities must be non-negative");
        total += x;
    }
    if(std::abs(total - 1.0) > 1e-10)
        throw Error(ErrorKind::NotNormalized, "probabilities sum to " + std::to_string(total));
    double acc = 0.0;
    for(double x : p)
        if(x > 0.0) acc -= x * std::log(x);
    return {kb * acc, kb};
}

double relative_entropy(const DensityMatrix &omega, const DensityMatrix &sigma) {
    if(omega.block_count() != sigma.block_count())
        throw Error(ErrorKind::DimensionMismatch, "block layouts differ: " + std::to_string(omega.block_count()) +
                                                      " vs " + std::to_string(sigma.block_count()) + " blocks");
    double total = 0.0;
    for(std::size_t b = 0; b < omega.block_count(); ++b) {
        const auto &om = omega.blocks()[b].matrix;
        const auto &sg = sigma.blocks()[b].matrix;
        if(om.rows() != sg.rows())
            throw Error(ErrorKind::DimensionMismatch, "block " + std::to_string(b) + " dimensions differ");

        const auto eig = hermitian_eigen(sg);
        // Diagonal of Omega in sigma's eigenbasis: w_i = <v_i|Omega|v_i>.
        double kernel_weight = 0.0;
        double cross         = 0.0; // Tr(Omega ln sigma)
        for(std::size_t i = 0; i < sg.rows(); ++i) {
            Complex w = 0.0;
            for(std::size_t r = 0; r < om.rows(); ++r) {
                const Complex vr = eig.eigenvectors(r, i);
                if(vr == Complex{}) continue;
                Complex row = 0.0;
                for(std::size_t c = 0; c < om.cols(); ++c) {
                    const Complex vc = eig.eigenvectors(c, i);
                    if(vc != Complex{}) row += om(r, c) * vc;
                }
                w += std::conj(vr) * row;
            }
            const double lambda = eig.eigenvalues[i];
            if(lambda <= kDefaultSupportFloor)
                kernel_weight += w.real();
            else
                cross += w.real() * std::log(lambda);
        }
        if(kernel_weight > kKernelWeightTol) return kInfinity;

        const auto omega_eigs = hermitian_eigenvalues(om);
        double     self       = 0.0; // Tr(Omega ln Omega)
        for(double lambda : omega_eigs)
            if(lambda >= kEntropyClip) self += lambda * std::log(lambda);
        total += self - cross;
    }
    return total;
}

} // namespace entlab
