#ifndef SIGNREP_CIRCUITS_HPP
#define SIGNREP_CIRCUITS_HPP

#include "signrep/search.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace signrep {

/// The AND gate prod_{i in I} X_i * prod_{j in J} (1 - X_j), variables as 0-based bit positions.
struct AndGateTerm {
    std::uint64_t positive = 0;  ///< I
    std::uint64_t negated = 0;   ///< J

    /// Throws std::invalid_argument when I and J overlap or an index is >= 64.
    static AndGateTerm from_sets(const std::vector<std::size_t>& positive, const std::vector<std::size_t>& negated);

    [[nodiscard]] std::vector<std::size_t> positive_set() const;
    [[nodiscard]] std::vector<std::size_t> negated_set() const;
    [[nodiscard]] std::size_t width() const;  ///< |I| + |J|
    [[nodiscard]] std::string str() const;

    friend bool operator==(const AndGateTerm&, const AndGateTerm&) = default;
};

/// Basis order: by |I| + |J|, then lexicographic on the sorted (variable, polarity) list
/// with the positive literal before the negated one.
bool basis_less(const AndGateTerm& a, const AndGateTerm& b);

/// Expanded multilinear polynomial of the gate in n variables.
SparsePoly gate_poly(const AndGateTerm& term, std::size_t n);

/// 0/1 output of the gate at a hypercube point.
int gate_value(const AndGateTerm& term, std::span<const std::int64_t> point);

/// All 3^n gates in basis order. Throws CapExceeded when 3^n > cap.
std::vector<AndGateTerm> enumerate_basis(std::size_t n, std::size_t cap = 4096);

struct ThrAndCircuit {
    std::size_t n = 0;
    std::vector<AndGateTerm> gates;
    std::vector<Rational> weights;
    Rational bias{0};

    [[nodiscard]] std::size_t size() const { return gates.size(); }
};

/// bias + sum_i w_i * gate_i. Throws on duplicate gates or mismatched weight count.
SparsePoly circuit_poly(const ThrAndCircuit& c);
Rational circuit_eval(const ThrAndCircuit& c, std::span<const std::int64_t> point);
/// Sign check of the circuit polynomial against f; a zero value is a failure.
VerificationReport circuit_verify(const ThrAndCircuit& c, const TargetFunction& f,
                                  std::size_t grid_cap = kDefaultGridCap);

struct CircuitSearchResult {
    std::optional<std::size_t> k;
    std::optional<ThrAndCircuit> witness;
    SearchStats stats;
};

/// Fewest basis elements (the constant included) whose combination sign represents f on {0,1}^n.
CircuitSearchResult min_spr_B(const TargetFunction& f, const SearchConfig& config = {});

/// Product of n/3 copies of the 5-gate exact-parity block 1 - 2Q on three bits.
ThrAndCircuit construct_parity_5_circuit(std::size_t n);
/// Product over pairs of blocks 1 - 2(X1 Y1 + X2 Y2 - 2 X1 Y1 X2 Y2); 2^pairs gates.
ThrAndCircuit construct_ip_circuit(std::size_t pairs);

/// Splitting P = X_last * A + (1 - X_last) * B + C by the last variable's literal in each gate.
/// A, B, C live in the remaining n-1 variables.
struct VariableSplit {
    SparsePoly with_positive;  ///< A
    SparsePoly with_negated;   ///< B
    SparsePoly without;        ///< C
};
VariableSplit split_on_last_variable(const ThrAndCircuit& c);

/// {"n": .., "bias": "p/q", "gates": [{"I": [..], "J": [..], "w": "p/q"}]}, 1-based indices.
nlohmann::json to_json(const ThrAndCircuit& c);
ThrAndCircuit circuit_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CircuitSearchResult& r);

}  // namespace signrep

#endif  // SIGNREP_CIRCUITS_HPP
