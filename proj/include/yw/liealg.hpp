#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace yw {

using BigInt = boost::multiprecision::cpp_int;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family parse_family(const std::string& s);
char family_char(Family f);

// Weights and roots are integer vectors. Weights are stored as pairings <h_j, .>,
// roots in simple-root coordinates.
using WeightVector = std::vector<int>;
using RootVector = std::vector<int>;

struct RootDatum {
    Family family;
    int n;
    std::vector<std::vector<int>> cartan;   // cartan[i][j] = <h_i, alpha_j>
    std::vector<RootVector> positive_roots; // sorted
    std::vector<int> half_len;              // (alpha_i, alpha_i) / 2
    RootVector two_rho;                     // 2*rho in simple-root coordinates

    static RootDatum make(Family f, int n);
    // Simple root alpha_i (0-based) as a weight vector.
    WeightVector simple_root_weight(int i) const;
    WeightVector root_weight(const RootVector& r) const;
};

enum class AffineType { A1, A2tw, B1, D1 };

std::string affine_name(AffineType t);
AffineType parse_affine(const std::string& s);
AffineType affine_for(Family f);

struct AffineDatum {
    AffineType type;
    int n;
    std::vector<std::vector<int>> cartan; // (n+1)x(n+1), cartan[i][j] = <h_i, alpha_j>
    std::vector<int> marks;               // a_0..a_n

    static AffineDatum make(AffineType t, int n);
};

using DominantWeight = std::vector<int>;

struct OmegaDecomposition {
    std::vector<int> omegas;     // i_1 <= ... <= i_t
    std::pair<int, int> spin{0, 0}; // b for B (second entry 0), (b1,b2) for D
    bool has_spin() const { return spin.first || spin.second; }
};

OmegaDecomposition decompose(Family f, int n, const DominantWeight& lambda);
DominantWeight reconstruct(Family f, int n, const OmegaDecomposition& d);
int choose_level_one(Family f, int n, const OmegaDecomposition& d);

BigInt weyl_dimension(const RootDatum& rd, const DominantWeight& lambda);

using WeightMultiplicities = std::map<WeightVector, std::uint64_t>;
WeightMultiplicities freudenthal_multiplicities(const RootDatum& rd, const DominantWeight& lambda);

// <h_j, w>, j 1-based for classical weights.
int pairing(const WeightVector& w, int j);

// Simple reflection s_j (1-based) on a weight.
WeightVector reflect(const RootDatum& rd, const WeightVector& w, int j);

} // namespace yw
