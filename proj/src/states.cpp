#include "entlab/states.hpp"

#include "entlab/error.hpp"
#include "entlab/random.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

namespace entlab {

namespace {

    constexpr std::int64_t kMaxCommonDenominator = std::int64_t{1} << 40;

    std::string describe(const SectorLabel &s) { return "'" + s.id + "'"; }

    // Orthonormalizes in place; returns false if a vector collapses to zero.
    bool gram_schmidt(std::vector<ComplexVector> &vectors) {
        for(std::size_t i = 0; i < vectors.size(); ++i) {
            for(int pass = 0; pass < 2; ++pass) {
                for(std::size_t j = 0; j < i; ++j) {
                    Complex overlap = 0.0;
                    for(std::size_t k = 0; k < vectors[i].size(); ++k)
                        overlap += std::conj(vectors[j][k]) * vectors[i][k];
                    for(std::size_t k = 0; k < vectors[i].size(); ++k) vectors[i][k] -= overlap * vectors[j][k];
                }
            }
            double norm = 0.0;
            for(const auto &z : vectors[i]) norm += std::norm(z);
            norm = std::sqrt(norm);
            if(!(norm > 1e-12)) return false;
            for(auto &z : vectors[i]) z /= norm;
        }
        return true;
    }

    std::int64_t parse_int(std::string_view text, std::string_view whole) {
        while(!text.empty() && text.front() == ' ') text.remove_prefix(1);
        while(!text.empty() && text.back() == ' ') text.remove_suffix(1);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if(text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
            throw Error(ErrorKind::ParseError, "cannot parse '" + std::string(text) + "' in spectrum '" +
                                                   std::string(whole) + "'");
        return value;
    }

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, SectorLabel sector)
    : DensityMatrix(std::vector<Block>{Block{std::move(sector), std::move(matrix)}}) {}

DensityMatrix::DensityMatrix(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if(blocks_.empty()) throw Error(ErrorKind::InvalidState, "at least one block: state has no blocks");
    std::set<SectorLabel> seen;
    double                trace = 0.0;
    for(auto &block : blocks_) {
        if(!seen.insert(block.sector).second)
            throw Error(ErrorKind::InvalidState, "unique sector labels: " + describe(block.sector) + " repeated");
        if(block.matrix.rows() == 0 || !block.matrix.is_square())
            throw Error(ErrorKind::InvalidState, "square block: sector " + describe(block.sector) + " is " +
                                                     std::to_string(block.matrix.rows()) + "x" +
                                                     std::to_string(block.matrix.cols()));
        const double defect = hermiticity_defect(block.matrix);
        if(defect > kDefaultHermiticityTol)
            throw Error(ErrorKind::InvalidState, "Hermitian block: sector " + describe(block.sector) +
                                                     " has relative defect " + std::to_string(defect));
        block.matrix    = symmetrized(block.matrix);
        const auto eigs = hermitian_eigenvalues(block.matrix);
        if(eigs.front() < -kStatePsdTol)
            throw Error(ErrorKind::InvalidState, "positive semidefinite block: sector " + describe(block.sector) +
                                                     " has eigenvalue " + std::to_string(eigs.front()));
        trace += block.matrix.trace().real();
        spectrum_.insert(spectrum_.end(), eigs.begin(), eigs.end());
    }
    if(std::abs(trace - 1.0) > kStateTraceTol)
        throw Error(ErrorKind::InvalidState, "unit trace: total trace is " + std::to_string(trace));
    std::sort(spectrum_.begin(), spectrum_.end(), std::greater<>());
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> values, SectorLabel sector) {
    if(values.empty()) throw Error(ErrorKind::InvalidState, "square block: sector " + describe(sector) + " is 0x0");
    double trace = 0.0;
    for(double v : values) {
        if(!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "diagonal entry is not finite");
        if(v < -kStatePsdTol)
            throw Error(ErrorKind::InvalidState, "positive semidefinite block: sector " + describe(sector) +
                                                     " has eigenvalue " + std::to_string(v));
        trace += v;
    }
    if(std::abs(trace - 1.0) > kStateTraceTol)
        throw Error(ErrorKind::InvalidState, "unit trace: total trace is " + std::to_string(trace));
    DensityMatrix out;
    out.blocks_.push_back(Block{std::move(sector), ComplexMatrix::diagonal(values)});
    out.spectrum_.assign(values.begin(), values.end());
    std::sort(out.spectrum_.begin(), out.spectrum_.end(), std::greater<>());
    return out;
}

std::size_t DensityMatrix::dimension() const noexcept {
    std::size_t d = 0;
    for(const auto &b : blocks_) d += b.matrix.rows();
    return d;
}

std::size_t DensityMatrix::rank(double support_floor) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(spectrum_.begin(), spectrum_.end(), [&](double v) { return v > support_floor; }));
}

const ComplexMatrix &DensityMatrix::single_block() const {
    if(blocks_.size() != 1)
        throw Error(ErrorKind::MultiBlockUnsupported, "operation needs a single-block state, got " +
                                                          std::to_string(blocks_.size()) + " blocks");
    return blocks_.front().matrix;
}

ComplexMatrix DensityMatrix::to_dense() const {
    const std::size_t d = dimension();
    ComplexMatrix     out(d, d);
    std::size_t       offset = 0;
    for(const auto &b : blocks_) {
        for(std::size_t i = 0; i < b.matrix.rows(); ++i)
            for(std::size_t j = 0; j < b.matrix.cols(); ++j) out(offset + i, offset + j) = b.matrix(i, j);
        offset += b.matrix.rows();
    }
    return out;
}

RationalSpectrum::RationalSpectrum(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if(entries_.empty()) throw Error(ErrorKind::NotNormalized, "spectrum has no entries");
    std::int64_t lcm = 1;
    for(const auto &r : entries_) {
        if(r <= 0) throw Error(ErrorKind::NotNormalized, "spectrum entries must be positive");
        const std::int64_t g = std::gcd(lcm, r.denominator());
        if(lcm / g > kMaxCommonDenominator / r.denominator())
            throw Error(ErrorKind::SizeOverflow, "common denominator too large");
        lcm = lcm / g * r.denominator();
    }
    __int128 total = 0;
    for(const auto &r : entries_) total += static_cast<__int128>(r.numerator()) * (lcm / r.denominator());
    if(total != lcm) throw Error(ErrorKind::NotNormalized, "spectrum entries do not sum to exactly 1");
    common_denominator_ = lcm;
    std::stable_sort(entries_.begin(), entries_.end(), std::greater<>());
}

RationalSpectrum RationalSpectrum::parse(std::string_view text) {
    std::vector<Rational> entries;
    std::string_view      rest = text;
    while(true) {
        const auto       comma = rest.find(',');
        std::string_view item  = rest.substr(0, comma);
        const auto       slash = item.find('/');
        std::int64_t     num   = parse_int(item.substr(0, slash), text);
        std::int64_t     den   = slash == std::string_view::npos ? 1 : parse_int(item.substr(slash + 1), text);
        if(den <= 0) throw Error(ErrorKind::ParseError, "denominator must be positive in '" + std::string(text) + "'");
        entries.emplace_back(num, den);
        if(comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return RationalSpectrum(std::move(entries));
}

std::vector<double> RationalSpectrum::to_doubles() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for(const auto &r : entries_)
        out.push_back(static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
    return out;
}

bool RationalSpectrum::is_uniform() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [&](const Rational &r) { return r == entries_.front(); });
}

std::string RationalSpectrum::to_string() const {
    std::string out;
    for(const auto &r : entries_) {
        if(!out.empty()) out += ',';
        out += std::to_string(r.numerator());
        if(r.denominator() != 1) out += "/" + std::to_string(r.denominator());
    }
    return out;
}

DensityMatrix qlb(std::size_t n, SectorLabel sector) {
    if(n == 0) throw Error(ErrorKind::InvalidState, "QLB dimension must be at least 1");
    const std::vector<double> values(n, 1.0 / static_cast<double>(n));
    return DensityMatrix::diagonal(values, std::move(sector));
}

DensityMatrix pure(std::span<const Complex> v, SectorLabel sector) {
    double norm = 0.0;
    for(const auto &z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if(!(norm > 0.0)) throw Error(ErrorKind::ZeroVector, "pure state needs a non-zero vector");
    ComplexVector u(v.begin(), v.end());
    for(auto &z : u) z /= norm;
    return DensityMatrix(ComplexMatrix::outer(u, u), std::move(sector));
}

DensityMatrix qlb_on_span(std::span<const ComplexVector> vectors, SectorLabel sector) {
    if(vectors.empty()) throw Error(ErrorKind::ZeroVector, "span of no vectors");
    const std::size_t d = vectors.front().size();
    for(const auto &v : vectors)
        if(v.size() != d) throw Error(ErrorKind::DimensionMismatch, "span vectors differ in length");
    std::vector<ComplexVector> basis(vectors.begin(), vectors.end());
    if(!gram_schmidt(basis)) throw Error(ErrorKind::ZeroVector, "span vectors are linearly dependent");
    ComplexMatrix m(d, d);
    for(const auto &v : basis) m += ComplexMatrix::outer(v, v);
    m *= 1.0 / static_cast<double>(basis.size());
    return DensityMatrix(std::move(m), std::move(sector));
}

DensityMatrix tensor_power(const DensityMatrix &rho, std::size_t n, std::size_t dim_cap) {
    if(n == 0) throw Error(ErrorKind::IndexOutOfRange, "tensor power needs n >= 1");
    if(rho.block_count() != 1)
        throw Error(ErrorKind::MultiBlockUnsupported, "tensor powers of multi-sector states are not modeled");
    const auto &base = rho.single_block();
    (void) checked_power(base.rows(), n, dim_cap);
    ComplexMatrix out = base;
    for(std::size_t i = 1; i < n; ++i) out = kron(out, base, dim_cap);
    SectorLabel label = rho.blocks().front().sector;
    if(n > 1) label.id += "^" + std::to_string(n);
    return DensityMatrix(std::move(out), std::move(label));
}

DensityMatrix tensor_product(const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t dim_cap) {
    if(sigma.dimension() != 0 && rho.dimension() > dim_cap / sigma.dimension())
        throw Error(ErrorKind::SizeOverflow, "tensor product exceeds dimension cap " + std::to_string(dim_cap));
    std::vector<Block> blocks;
    for(const auto &a : rho.blocks())
        for(const auto &b : sigma.blocks())
            blocks.push_back(Block{SectorLabel{a.sector.id + "*" + b.sector.id}, kron(a.matrix, b.matrix, dim_cap)});
    return DensityMatrix(std::move(blocks));
}

std::vector<double> spectrum(const DensityMatrix &rho) {
    const auto s = rho.spectrum();
    return {s.begin(), s.end()};
}

DensityMatrix from_rational_spectrum(const RationalSpectrum &s, SectorLabel sector, std::size_t dim_cap) {
    if(s.rank() > dim_cap)
        throw Error(ErrorKind::SizeOverflow, "rank " + std::to_string(s.rank()) + " exceeds dimension cap");
    const auto values = s.to_doubles();
    return DensityMatrix::diagonal(values, std::move(sector));
}

DensityMatrix random_density(std::size_t d, std::size_t rank, std::uint64_t seed) {
    if(d == 0 || rank == 0) throw Error(ErrorKind::RankExceedsDim, "dimension and rank must be positive");
    if(rank > d)
        throw Error(ErrorKind::RankExceedsDim, "rank " + std::to_string(rank) + " > dimension " + std::to_string(d));
    Rng           rng(seed);
    ComplexMatrix g(d, rank);
    for(std::size_t i = 0; i < d; ++i)
        for(std::size_t j = 0; j < rank; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j)         = Complex(re, im);
        }
    ComplexMatrix m = g * g.adjoint();
    m *= 1.0 / m.trace().real();
    return DensityMatrix(std::move(m));
}

ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed) {
    if(d == 0) throw Error(ErrorKind::IndexOutOfRange, "unitary dimension must be positive");
    Rng                        rng(seed);
    std::vector<ComplexVector> columns(d, ComplexVector(d));
    for(std::size_t i = 0; i < d; ++i)
        for(std::size_t j = 0; j < d; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            columns[j][i]   = Complex(re, im);
        }
    if(!gram_schmidt(columns)) throw Error(ErrorKind::NoConvergence, "degenerate Gaussian sample");
    ComplexMatrix u(d, d);
    for(std::size_t i = 0; i < d; ++i)
        for(std::size_t j = 0; j < d; ++j) u(i, j) = columns[j][i];
    return u;
}

DensityMatrix conjugate(const DensityMatrix &rho, std::span<const ComplexMatrix> unitaries) {
    if(unitaries.size() != rho.block_count())
        throw Error(ErrorKind::DimensionMismatch, std::to_string(unitaries.size()) + " unitaries for " +
                                                      std::to_string(rho.block_count()) + " blocks");
    std::vector<Block> blocks;
    blocks.reserve(rho.block_count());
    for(std::size_t b = 0; b < unitaries.size(); ++b) {
        const auto &block = rho.blocks()[b];
        const auto &u     = unitaries[b];
        if(!u.is_square() || u.rows() != block.matrix.rows())
            throw Error(ErrorKind::DimensionMismatch, "unitary for sector " + describe(block.sector) +
                                                          " has wrong dimension");
        blocks.push_back(Block{block.sector, u * block.matrix * u.adjoint()});
    }
    return DensityMatrix(std::move(blocks));
}

} // namespace entlab
