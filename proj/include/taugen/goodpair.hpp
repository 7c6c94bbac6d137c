#pragma once
// Good pairs (V, W): presentation types, the three validation conditions
// (containment in the prolongation, generic projection, affine generic
// fibers), certificate extraction, and the two certified constructions
// (graph closures and affine-bundle closures).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taugen/diff.hpp"
#include "taugen/ideal.hpp"
#include "taugen/io.hpp"
#include "taugen/ratexpr.hpp"

namespace taugen {

struct VarietyPresentation {
    std::uint32_t n = 1;
    Ideal ideal;           // over x1..xn (V side) or x1..xn,u1..un (W side)
    std::string primality = "asserted"; // "asserted" | "constructed:<family>"
};

VarietyPresentation make_v_presentation(GroundField field, std::uint32_t n,
                                        std::vector<Polynomial> gens, std::string primality);
VarietyPresentation make_w_presentation(GroundField field, std::uint32_t n,
                                        std::vector<Polynomial> gens, std::string primality);

// u_target = constant + sum_j coeffs[j] * u_{basis_indices[j]}
struct LinearFiberForm {
    std::uint32_t target = 0;
    RatExpr constant;
    std::vector<RatExpr> coeffs;
};

struct GoodPairCertificate {
    bool containment_ok = false;
    bool projection_ok = false;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> basis_indices;  // ascending; the lex-least valid set
    std::vector<LinearFiberForm> fiber_forms;  // one per non-basis index, ascending
};

struct GoodPair {
    std::uint32_t n = 1;
    VarietyPresentation V;
    VarietyPresentation W;
    GoodPairCertificate certificate;
    std::optional<PointSpec> point; // forwarded to the series oracle
};

struct CheckResult {
    bool accepted = false;
    std::string failed_condition; // "(i)" | "(ii)" | "(iii)" | "primality" | ""
    std::string detail;
    std::string warning; // set under --permissive for asserted primality
    std::optional<GoodPair> pair;
};

// condition (i): every prolongation generator lies in I(W)
bool check_containment(const Ideal& V, const Ideal& W, std::uint32_t n);

// condition (ii): eliminating the u-block from I(W) recovers I(V)
bool check_generic_projection(const Ideal& V, const Ideal& W, std::uint32_t n);

// condition (iii) data
struct FiberAnalysis {
    bool affine = false;
    std::string detail;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> basis_indices;
    std::vector<LinearFiberForm> forms;
};

// Groebner basis of the fiber ideal over the function field of V
// (pseudo-reduction, coefficients normal-formed modulo I(V)); preconditions:
// (i) and (ii) already hold
FiberAnalysis fiber_analysis(const Ideal& V, const Ideal& W, std::uint32_t n);

// full three-condition check; names the first failing condition
CheckResult check_good_pair(const VarietyPresentation& V, const VarietyPresentation& W,
                            bool permissive, std::uint64_t seed,
                            std::optional<PointSpec> point = std::nullopt);

// W = Zariski closure of the graph {(x, g(x)) : x in V}; m = 0 on success
CheckResult build_graph_pair(const VarietyPresentation& V, const std::vector<RatExpr>& g,
                             bool permissive, std::uint64_t seed,
                             std::optional<PointSpec> point = std::nullopt);

// W = closure of {(x, s0(x) + sum_j tau_j * directions[j](x))}
CheckResult build_bundle_pair(const VarietyPresentation& V, const std::vector<RatExpr>& s0,
                              const std::vector<std::vector<RatExpr>>& directions,
                              bool permissive, std::uint64_t seed,
                              std::optional<PointSpec> point = std::nullopt);

// manifest glue
VarietyPresentation v_from_manifest(const PairManifest& m);
VarietyPresentation w_from_manifest(const PairManifest& m);
PairManifest manifest_from_pair(const GoodPair& p, const std::string& recipe = "");

} // namespace taugen
