#ifndef SIGNREP_SEARCH_HPP
#define SIGNREP_SEARCH_HPP

#include "signrep/feasibility.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace signrep {

struct SearchConfig {
    unsigned degree_cap = 1;        ///< per-variable exponent bound D of the monomial pool
    std::size_t max_support = 0;    ///< largest subset size tried; 0 means the whole pool
    bool symmetry = false;          ///< skip subsets that are not minimal in their symmetry orbit
    std::size_t grid_cap = kDefaultGridCap;
    std::uint64_t subset_cap = std::uint64_t{1} << 20;  ///< subsets enumerated before refusing
    std::size_t pool_cap = 4096;
    unsigned workers = 1;
};

struct SearchStats {
    std::uint64_t subsets_enumerated = 0;  ///< including those skipped by symmetry
    std::uint64_t certificates_checked = 0;  ///< subsets decided with a certificate
    std::uint64_t symmetry_pruned = 0;
    std::uint64_t ray_reuses = 0;  ///< subsets refuted by an already known Farkas ray
    std::uint64_t lps_solved = 0;
    std::uint64_t pivots = 0;

    SearchStats& operator+=(const SearchStats& o);
};

nlohmann::json to_json(const SearchStats& s);

/// Integer matrix, rows = grid points, columns = pool elements, entry (-1)^f(a) * phi_j(a).
using SignedPool = Matrix<BigInt>;

struct SubsetSearchJob {
    const SignedPool* pool = nullptr;
    RepKind kind = RepKind::Sign;
    /// Permutations of pool indices induced by symmetries of the target; used only when pruning.
    std::vector<std::vector<std::size_t>> pool_symmetries;
    std::size_t size = 1;  ///< subset size to scan
    bool symmetry = false;
    std::uint64_t subset_cap = std::uint64_t{1} << 20;
    std::uint64_t already_enumerated = 0;  ///< counted against subset_cap
    unsigned workers = 1;
};

struct SubsetHit {
    std::vector<std::size_t> subset;
    std::vector<Rational> weights;
};

struct SubsetSearchResult {
    std::optional<SubsetHit> hit;
    SearchStats stats;
};

/// First feasible subset of the given size in lexicographic order of pool indices.
/// The result and every statistic are independent of the worker count.
SubsetSearchResult search_subsets(const SubsetSearchJob& job);

/// All exponent vectors with entries <= degree_cap, ascending graded-lex order.
std::vector<ExponentVector> monomial_pool(std::size_t n, unsigned degree_cap);

/// Signed pool matrix for a monomial pool.
SignedPool signed_monomial_pool(const std::vector<ExponentVector>& pool, const TargetFunction& target,
                                std::size_t grid_cap);

struct SparsityResult {
    std::optional<std::size_t> k;  ///< empty when no support up to max_support works
    std::optional<SparsePoly> witness;
    std::vector<ExponentVector> support;
    unsigned degree_cap = 0;
    SearchStats stats;
};

/// Smallest support (from the pool with per-variable degree <= D) admitting a representation.
/// Exhaustive in size order, lexicographic within a size; the first feasible support wins.
SparsityResult min_sparsity(const TargetFunction& target, RepKind kind, const SearchConfig& config);

struct DegreeResult {
    std::optional<unsigned> degree;
    std::optional<SparsePoly> witness;
    unsigned degree_cap = 0;
    SearchStats stats;
};

/// Smallest total degree d such that all pool monomials of total degree <= d admit a representation.
DegreeResult min_degree(const TargetFunction& target, RepKind kind, const SearchConfig& config);

struct CensusEntry {
    ExponentVector monomial;
    int expected_sign = 0;  ///< (-1)^|S|
    /// +1 / -1 when every sign representation has that coefficient sign, 0 when unconstrained.
    int verdict = 0;
    /// Ray refuting the wrong-sign system (grid rows followed by the appended sign row).
    std::optional<std::vector<Rational>> wrong_sign_ray;
    bool ray_verified = false;
    std::size_t lps_solved = 0;
};

/// For parity on {0,1}^n and every multilinear monomial S, decides whether a sign
/// representation can have (-1)^|S| c_S <= 0.
std::vector<CensusEntry> coefficient_sign_census(std::size_t n, const SearchConfig& config = {});

nlohmann::json to_json(const SparsityResult& r);
nlohmann::json to_json(const DegreeResult& r);
nlohmann::json to_json(const std::vector<CensusEntry>& census);

}  // namespace signrep

#endif  // SIGNREP_SEARCH_HPP
