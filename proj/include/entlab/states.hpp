#pragma once

#include "entlab/matrix.hpp"

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace entlab {

using Rational = boost::rational<std::int64_t>;

inline constexpr double kStateTraceTol = 1e-10;
inline constexpr double kStatePsdTol   = 1e-10;

/// Opaque superselection-sector label (e.g. a serialized charge tuple).
struct SectorLabel {
    std::string id = "0";
    auto operator<=>(const SectorLabel &) const = default;
};

struct Block {
    SectorLabel   sector;
    ComplexMatrix matrix;
};

/// Block-diagonal density matrix. There are no cross-block entries: each block
/// lives in its own sector. Construction validates every invariant (square,
/// Hermitian, PSD, unit total trace, unique labels) and caches the spectrum.
class DensityMatrix {
  public:
    explicit DensityMatrix(std::vector<Block> blocks);
    explicit DensityMatrix(ComplexMatrix matrix, SectorLabel sector = {});

    /// Single diagonal block with the given eigenvalues. Validation is O(d):
    /// entries finite and >= -1e-10, sum within 1e-10 of 1.
    static DensityMatrix diagonal(std::span<const double> values, SectorLabel sector = {});

    [[nodiscard]] std::span<const Block> blocks() const noexcept { return blocks_; }
    [[nodiscard]] std::size_t            block_count() const noexcept { return blocks_.size(); }
    [[nodiscard]] std::size_t            dimension() const noexcept;

    /// All block eigenvalues, descending.
    [[nodiscard]] std::span<const double> spectrum() const noexcept { return spectrum_; }

    /// Number of eigenvalues above the support floor.
    [[nodiscard]] std::size_t rank(double support_floor = kDefaultSupportFloor) const noexcept;

    /// The single block; MultiBlockUnsupported otherwise.
    [[nodiscard]] const ComplexMatrix &single_block() const;

    /// Block-diagonal assembly in block order.
    [[nodiscard]] ComplexMatrix to_dense() const;

  private:
    DensityMatrix() = default;

    std::vector<Block>  blocks_;
    std::vector<double> spectrum_;
};

/// Exact probability vector with positive rational entries summing to 1.
/// Entries are kept in descending order.
class RationalSpectrum {
  public:
    explicit RationalSpectrum(std::vector<Rational> entries);

    /// Parses "2/3,1/3" (integers such as "1" are accepted).
    static RationalSpectrum parse(std::string_view text);

    [[nodiscard]] std::span<const Rational> entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t               rank() const noexcept { return entries_.size(); }
    [[nodiscard]] std::int64_t              common_denominator() const noexcept { return common_denominator_; }
    [[nodiscard]] std::vector<double>       to_doubles() const;
    [[nodiscard]] bool                      is_uniform() const noexcept;
    [[nodiscard]] std::string               to_string() const;

  private:
    std::vector<Rational> entries_;
    std::int64_t          common_denominator_ = 1;
};

/// pi(N) = P_N / N on one sector.
[[nodiscard]] DensityMatrix qlb(std::size_t n, SectorLabel sector = {});

/// |v><v| / <v|v>.
[[nodiscard]] DensityMatrix pure(std::span<const Complex> v, SectorLabel sector = {});

/// Uniform state on the span of the given vectors (orthonormalized first).
[[nodiscard]] DensityMatrix qlb_on_span(std::span<const ComplexVector> vectors, SectorLabel sector = {});

[[nodiscard]] DensityMatrix tensor_power(const DensityMatrix &rho, std::size_t n, std::size_t dim_cap = kDefaultDimCap);

/// rho (x) sigma; every pair of blocks becomes one block labelled "a*b".
[[nodiscard]] DensityMatrix tensor_product(const DensityMatrix &rho, const DensityMatrix &sigma,
                                           std::size_t dim_cap = kDefaultDimCap);

[[nodiscard]] std::vector<double> spectrum(const DensityMatrix &rho);

[[nodiscard]] DensityMatrix from_rational_spectrum(const RationalSpectrum &s, SectorLabel sector = {},
                                                   std::size_t dim_cap = kDefaultDimCap);

/// G G^dagger / Tr(G G^dagger) for a d x rank complex Gaussian G.
[[nodiscard]] DensityMatrix random_density(std::size_t d, std::size_t rank, std::uint64_t seed);

/// Modified Gram-Schmidt applied to the columns of a complex Gaussian matrix.
[[nodiscard]] ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed);

/// Block b -> U_b b U_b^dagger.
[[nodiscard]] DensityMatrix conjugate(const DensityMatrix &rho, std::span<const ComplexMatrix> unitaries);

} // namespace entlab
