#include "signrep/search.hpp"

#include "signrep/errors.hpp"
#include "signrep/poly_io.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace signrep {

namespace {

constexpr std::size_t kBlockSize = 256;
constexpr std::size_t kBlocksPerBatch = 16;
constexpr std::size_t kRayCacheSize = 64;

using Combo = std::vector<std::size_t>;

bool next_combination(Combo& c, std::size_t pool) {
    const auto k = c.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (c[i] < pool - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool is_canonical(const Combo& c, const std::vector<std::vector<std::size_t>>& perms) {
    Combo img(c.size());
    for (const auto& perm : perms) {
        for (std::size_t i = 0; i < c.size(); ++i) img[i] = perm[c[i]];
        std::sort(img.begin(), img.end());
        if (std::lexicographical_compare(img.begin(), img.end(), c.begin(), c.end())) return false;
    }
    return true;
}

std::vector<BigInt> integer_ray(const std::vector<Rational>& y) {
    BigInt l = 1;
    for (const auto& v : y) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(y.size());
    for (const auto& v : y) out.push_back(v.num() * (l / v.den()));
    return out;
}

struct CachedRay {
    std::vector<std::uint64_t> orth;  // bit j set when the ray annihilates pool column j
    std::vector<Rational> ray;
};

class RayCache {
public:
    explicit RayCache(const SignedPool& pool) : pool_(pool) {}

    void add(const std::vector<Rational>& ray) {
        const auto yi = integer_ray(ray);
        CachedRay entry;
        entry.orth.assign((pool_.cols() + 63) / 64, 0);
        BigInt s;
        for (std::size_t j = 0; j < pool_.cols(); ++j) {
            s = 0;
            for (std::size_t r = 0; r < pool_.rows(); ++r)
                if (yi[r] != 0) s += yi[r] * pool_(r, j);
            if (s == 0) entry.orth[j / 64] |= std::uint64_t{1} << (j % 64);
        }
        entry.ray = ray;
        entries_.insert(entries_.begin(), std::move(entry));
        if (entries_.size() > kRayCacheSize) entries_.pop_back();
    }

    /// A cached ray orthogonal to every column of the subset, moved to the front.
    const std::vector<Rational>* find_any(const Combo& c) {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (covers(entries_[i], c)) {
                std::rotate(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(i),
                            entries_.begin() + static_cast<std::ptrdiff_t>(i + 1));
                return &entries_.front().ray;
            }
        return nullptr;
    }

    /// Sum of all cached rays orthogonal to the subset; empty if none.
    std::vector<Rational> sum_covering(const Combo& c) const {
        std::vector<Rational> total;
        for (const auto& e : entries_) {
            if (!covers(e, c)) continue;
            if (total.empty()) total.assign(e.ray.size(), Rational(0));
            for (std::size_t r = 0; r < total.size(); ++r) total[r] += e.ray[r];
        }
        return total;
    }

private:
    static bool covers(const CachedRay& e, const Combo& c) {
        for (auto j : c)
            if (!((e.orth[j / 64] >> (j % 64)) & 1U)) return false;
        return true;
    }

    const SignedPool& pool_;
    std::vector<CachedRay> entries_;
};

struct BlockOutcome {
    std::optional<std::size_t> hit;
    std::vector<Rational> weights;
    SearchStats stats;
};

RationalMatrix submatrix(const SignedPool& pool, const Combo& c) {
    RationalMatrix m(pool.rows(), c.size());
    for (std::size_t r = 0; r < pool.rows(); ++r)
        for (std::size_t j = 0; j < c.size(); ++j) m(r, j) = Rational(pool(r, c[j]));
    return m;
}

BlockOutcome process_block(const SubsetSearchJob& job, const std::vector<Combo>& combos) {
    BlockOutcome out;
    RayCache cache(*job.pool);
    for (std::size_t i = 0; i < combos.size(); ++i) {
        const auto& c = combos[i];
        if (job.symmetry && !is_canonical(c, job.pool_symmetries)) {
            ++out.stats.symmetry_pruned;
            continue;
        }
        ++out.stats.certificates_checked;
        if (job.kind == RepKind::Sign) {
            if (cache.find_any(c)) {
                ++out.stats.ray_reuses;
                continue;
            }
            auto d = decide_sign(submatrix(*job.pool, c));
            out.stats.lps_solved += d.lps_solved;
            out.stats.pivots += d.pivots;
            if (d.feasible) {
                out.hit = i;
                out.weights = std::move(d.weights);
                return out;
            }
            cache.add(d.ray);
        } else {
            auto known = cache.sum_covering(c);
            if (!known.empty() &&
                std::all_of(known.begin(), known.end(), [](const Rational& v) { return v.sign() > 0; })) {
                ++out.stats.ray_reuses;
                continue;
            }
            auto d = decide_weak(submatrix(*job.pool, c), std::nullopt, known.empty() ? nullptr : &known);
            out.stats.lps_solved += d.lps_solved;
            out.stats.pivots += d.pivots;
            if (d.feasible) {
                out.hit = i;
                out.weights = std::move(d.weights);
                return out;
            }
            cache.add(d.ray);
        }
    }
    return out;
}

}  // namespace

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    subsets_enumerated += o.subsets_enumerated;
    certificates_checked += o.certificates_checked;
    symmetry_pruned += o.symmetry_pruned;
    ray_reuses += o.ray_reuses;
    lps_solved += o.lps_solved;
    pivots += o.pivots;
    return *this;
}

nlohmann::json to_json(const SearchStats& s) {
    return {{"subsets_enumerated", s.subsets_enumerated}, {"certificates_checked", s.certificates_checked},
            {"symmetry_pruned", s.symmetry_pruned},       {"ray_reuses", s.ray_reuses},
            {"lps_solved", s.lps_solved},                 {"pivots", s.pivots}};
}

SubsetSearchResult search_subsets(const SubsetSearchJob& job) {
    if (job.pool == nullptr) throw std::invalid_argument("subset search without a pool");
    if (job.kind == RepKind::Exact) throw std::invalid_argument("subset search supports sign and weak kinds only");
    const auto pool_size = job.pool->cols();
    SubsetSearchResult result;
    if (job.size == 0 || job.size > pool_size) return result;

    Combo cur(job.size);
    for (std::size_t i = 0; i < job.size; ++i) cur[i] = i;
    bool more = true;
    std::uint64_t enumerated = job.already_enumerated;
    const unsigned workers = std::max(1U, job.workers);

    while (more) {
        // build the next batch in enumeration order, stopping at the subset cap
        std::vector<std::vector<Combo>> blocks;
        bool capped = false;
        while (more && blocks.size() < kBlocksPerBatch) {
            std::vector<Combo> block;
            while (more && block.size() < kBlockSize) {
                if (enumerated >= job.subset_cap) {
                    capped = true;
                    break;
                }
                block.push_back(cur);
                ++enumerated;
                more = next_combination(cur, pool_size);
            }
            if (!block.empty()) blocks.push_back(std::move(block));
            if (capped) break;
        }

        std::vector<BlockOutcome> outcomes(blocks.size());
        if (workers == 1 || blocks.size() == 1) {
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                outcomes[b] = process_block(job, blocks[b]);
                if (outcomes[b].hit) break;
            }
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            std::exception_ptr error;
            std::mutex error_mutex;
            for (unsigned w = 0; w < std::min<std::size_t>(workers, blocks.size()); ++w)
                pool.emplace_back([&] {
                    try {
                        for (std::size_t b = next++; b < blocks.size(); b = next++)
                            outcomes[b] = process_block(job, blocks[b]);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                });
            for (auto& t : pool) t.join();
            if (error) std::rethrow_exception(error);
        }

        for (std::size_t b = 0; b < blocks.size(); ++b) {
            auto& o = outcomes[b];
            if (o.hit) {
                o.stats.subsets_enumerated = *o.hit + 1;
                result.stats += o.stats;
                result.hit = SubsetHit{blocks[b][*o.hit], std::move(o.weights)};
                return result;
            }
            o.stats.subsets_enumerated = blocks[b].size();
            result.stats += o.stats;
        }
        if (capped)
            throw CapExceeded("subset enumeration exceeded the cap of " + std::to_string(job.subset_cap) +
                              " subsets");
    }
    return result;
}

std::vector<ExponentVector> monomial_pool(std::size_t n, unsigned degree_cap) {
    std::vector<ExponentVector> pool;
    ExponentVector e(n);
    while (true) {
        pool.push_back(e);
        std::size_t i = n;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (e[i] < degree_cap) {
                ++e[i];
                advanced = true;
                break;
            }
            e[i] = 0;
        }
        if (!advanced) break;
    }
    std::sort(pool.begin(), pool.end(), GradedLex{});
    return pool;
}

SignedPool signed_monomial_pool(const std::vector<ExponentVector>& pool, const TargetFunction& target,
                                std::size_t grid_cap) {
    const auto points = target.grid().enumerate(grid_cap);
    SignedPool g(points.size(), pool.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
        const bool negate = target(points[r]) == 1;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            BigInt v = 1;
            for (std::size_t i = 0; i < pool[j].size(); ++i)
                if (pool[j][i] > 0) v *= pow(BigInt(points[r][i]), pool[j][i]);
            g(r, j) = negate ? BigInt(-v) : v;
        }
    }
    return g;
}

namespace {

std::size_t checked_pool_size(std::size_t n, unsigned degree_cap, std::size_t cap) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        size *= degree_cap + 1;
        if (size > cap)
            throw CapExceeded("monomial pool with degree cap " + std::to_string(degree_cap) + " in " +
                              std::to_string(n) + " variables exceeds the pool cap of " + std::to_string(cap));
    }
    return size;
}

std::vector<std::vector<std::size_t>> pool_permutations(const std::vector<ExponentVector>& pool,
                                                        const TargetFunction& target) {
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t j = 0; j < pool.size(); ++j) index.emplace(pool[j].values(), j);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& perm : target.symmetries()) {
        std::vector<std::size_t> img(pool.size());
        for (std::size_t j = 0; j < pool.size(); ++j) {
            std::vector<unsigned> e(pool[j].size());
            for (std::size_t i = 0; i < e.size(); ++i) e[perm[i]] = pool[j][i];
            img[j] = index.at(e);
        }
        out.push_back(std::move(img));
    }
    return out;
}

SparsePoly weighted_sum(const std::vector<ExponentVector>& support, const std::vector<Rational>& w, std::size_t n) {
    SparsePoly p(n);
    for (std::size_t j = 0; j < support.size(); ++j) p.add_term(support[j], w[j]);
    return p;
}

}  // namespace

SparsityResult min_sparsity(const TargetFunction& target, RepKind kind, const SearchConfig& config) {
    if (kind == RepKind::Exact) throw std::invalid_argument("min_sparsity supports sign and weak kinds only");
    const auto n = target.grid().dimension();
    checked_pool_size(n, config.degree_cap, config.pool_cap);
    const auto pool = monomial_pool(n, config.degree_cap);
    const auto matrix = signed_monomial_pool(pool, target, config.grid_cap);

    SubsetSearchJob job;
    job.pool = &matrix;
    job.kind = kind;
    job.symmetry = config.symmetry;
    if (config.symmetry) job.pool_symmetries = pool_permutations(pool, target);
    job.subset_cap = config.subset_cap;
    job.workers = config.workers;

    SparsityResult result;
    result.degree_cap = config.degree_cap;
    const auto max_k = config.max_support == 0 ? pool.size() : std::min(config.max_support, pool.size());
    for (std::size_t k = 1; k <= max_k; ++k) {
        job.size = k;
        job.already_enumerated = result.stats.subsets_enumerated;
        auto r = search_subsets(job);
        result.stats += r.stats;
        if (!r.hit) continue;
        for (auto j : r.hit->subset) result.support.push_back(pool[j]);
        auto witness = weighted_sum(result.support, r.hit->weights, n);
        if (!verify(witness, target, kind, config.grid_cap).pass)
            throw std::logic_error("search witness failed independent verification");
        result.k = k;
        result.witness = std::move(witness);
        return result;
    }
    return result;
}

DegreeResult min_degree(const TargetFunction& target, RepKind kind, const SearchConfig& config) {
    if (kind == RepKind::Exact) throw std::invalid_argument("min_degree supports sign and weak kinds only");
    const auto n = target.grid().dimension();
    checked_pool_size(n, config.degree_cap, config.pool_cap);
    const auto pool = monomial_pool(n, config.degree_cap);
    DegreeResult result;
    result.degree_cap = config.degree_cap;
    const auto top = static_cast<unsigned>(n) * config.degree_cap;
    for (unsigned d = 0; d <= top; ++d) {
        std::vector<ExponentVector> support;
        for (const auto& e : pool)
            if (e.total_degree() <= d) support.push_back(e);
        const auto g = signed_rows(support, target, config.grid_cap);
        auto dec = kind == RepKind::Sign ? decide_sign(g) : decide_weak(g);
        ++result.stats.certificates_checked;
        result.stats.lps_solved += dec.lps_solved;
        result.stats.pivots += dec.pivots;
        if (!dec.feasible) continue;
        auto witness = weighted_sum(support, dec.weights, n);
        if (!verify(witness, target, kind, config.grid_cap).pass)
            throw std::logic_error("degree witness failed independent verification");
        result.degree = d;
        result.witness = std::move(witness);
        return result;
    }
    return result;
}

std::vector<CensusEntry> coefficient_sign_census(std::size_t n, const SearchConfig& config) {
    const auto target = TargetFunction::parity(Grid(n, {0, 1}));
    checked_pool_size(n, 1, config.pool_cap);
    const auto pool = monomial_pool(n, 1);
    const auto base = signed_rows(pool, target, config.grid_cap);
    const auto rows = base.rows();

    std::vector<CensusEntry> out;
    for (std::size_t s = 0; s < pool.size(); ++s) {
        CensusEntry entry;
        entry.monomial = pool[s];
        entry.expected_sign = pool[s].total_degree() % 2 == 0 ? 1 : -1;

        // appended row asks for sigma * c_S <= 0, i.e. -sigma * c_S >= 0
        auto with_sign_row = [&](int sigma) {
            RationalMatrix a(rows + 1, pool.size());
            std::vector<Rational> b(rows + 1, Rational(1));
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t j = 0; j < pool.size(); ++j) a(r, j) = base(r, j);
            a(rows, s) = Rational(-sigma);
            b[rows] = Rational(0);
            auto res = lp::solve(a, b);
            ++entry.lps_solved;
            return std::make_tuple(std::move(a), std::move(b), std::move(res));
        };

        auto [wa, wb, wrong] = with_sign_row(entry.expected_sign);
        if (!wrong.feasible) {
            entry.verdict = entry.expected_sign;
            entry.ray_verified = lp::is_farkas_ray(wa, wb, wrong.ray);
            entry.wrong_sign_ray = std::move(wrong.ray);
        } else {
            auto [ra, rb, right] = with_sign_row(-entry.expected_sign);
            entry.verdict = right.feasible ? 0 : -entry.expected_sign;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

nlohmann::json to_json(const SparsityResult& r) {
    nlohmann::json j;
    j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
    j["degree_cap"] = r.degree_cap;
    j["witness"] = r.witness ? nlohmann::json(to_text(*r.witness)) : nlohmann::json(nullptr);
    nlohmann::json support = nlohmann::json::array();
    for (const auto& e : r.support) support.push_back(e.values());
    j["support"] = support;
    j["certificates_checked"] = r.stats.certificates_checked;
    j["stats"] = to_json(r.stats);
    return j;
}

nlohmann::json to_json(const DegreeResult& r) {
    nlohmann::json j;
    j["degree"] = r.degree ? nlohmann::json(*r.degree) : nlohmann::json(nullptr);
    j["degree_cap"] = r.degree_cap;
    j["witness"] = r.witness ? nlohmann::json(to_text(*r.witness)) : nlohmann::json(nullptr);
    j["certificates_checked"] = r.stats.certificates_checked;
    j["stats"] = to_json(r.stats);
    return j;
}

nlohmann::json to_json(const std::vector<CensusEntry>& census) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : census) {
        nlohmann::json j;
        j["monomial"] = e.monomial.values();
        j["expected_sign"] = e.expected_sign;
        j["verdict"] = e.verdict == 0 ? "unconstrained" : (e.verdict > 0 ? "positive" : "negative");
        j["ray_verified"] = e.ray_verified;
        if (e.wrong_sign_ray) {
            nlohmann::json ray = nlohmann::json::array();
            for (const auto& v : *e.wrong_sign_ray) ray.push_back(v.str());
            j["wrong_sign_ray"] = ray;
        } else {
            j["wrong_sign_ray"] = nullptr;
        }
        arr.push_back(j);
    }
    return arr;
}

}  // namespace signrep
