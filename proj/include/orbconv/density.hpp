#pragma once

// Certification of absolute continuity for convolutions of orbital measures.
//
// The convolution of the orbital measures of e^X and e^Y has a density iff
// V_X + Ad(k) V_Y = p for some k in K; the l-fold power of the orbital measure
// of e^X has a density iff the differential of
//     (k_1, ..., k_{l+1}) -> k_1 e^X k_2 e^X ... e^X k_{l+1}
// is onto somewhere. Both are rank tests, carried out at Haar-random points.

#include "orbconv/types.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace orbconv {

using Rng = std::mt19937_64;

/// Symmetrized root vectors spanning V_x, ordered as the root system.
struct SpanBasis {
    std::vector<PVector> vectors;
    CartanVector source;
};

SpanBasis span_basis(const CartanVector& x, Space space);

/// Haar-random element of SO(p) x SO(p) (RealD) or S(U(p) x U(p)) (ComplexC).
KElement haar_sample(Space space, int p, Rng& rng);

enum class CertVerdict { Dense, Singular };
enum class CertMode { Float, ExactRational };

std::string_view to_string(CertVerdict v);
std::string_view to_string(CertMode m);
CertMode parse_mode(std::string_view name);

struct CertResult {
    CertVerdict verdict = CertVerdict::Singular;
    int achieved_rank = 0;
    int target_dim = 0;
    int trials = 0;
    CertMode mode = CertMode::Float;
    double tolerance = 0.0;  // relative singular value cut-off (0 in exact mode)
};

inline constexpr double kDefaultRankTolerance = 1e-9;
inline constexpr int kDefaultTrials = 8;

/// Number of singular values above tol * sigma_max after rescaling every
/// nonzero column to unit norm. Zero columns are dropped.
int numerical_rank(Eigen::MatrixXd m, double tol = kDefaultRankTolerance);

/// Rank of V_x + Ad(k) V_y at one fixed k (float arithmetic).
int pair_rank(const SpanBasis& bx, const SpanBasis& by, const KElement& k, Space space,
              double tol = kDefaultRankTolerance);

CertResult certify_pair(const CartanVector& x, const CartanVector& y, Space space, int trials, CertMode mode,
                        Rng& rng, double tol = kDefaultRankTolerance);

/// e^H for the Cartan element H = [[0, D], [D, 0]]: [[cosh D, sinh D], [sinh D, cosh D]].
Eigen::MatrixXcd cartan_exp(const CartanVector& x);

/// a(g) from the singular values of g: (log s_1, ..., log s_p), last entry >= 0.
CartanVector cartan_projection(const Eigen::MatrixXcd& g);

struct ProjectionSample {
    std::vector<CartanVector> points;
    CartanVector x;
    CartanVector y;
    int count = 0;
};

/// n points a(e^X k e^Y) for Haar-random k.
ProjectionSample sample_projection(const CartanVector& x, const CartanVector& y, int n, Space space, Rng& rng);

/// A coordinate value forced to repeat in every point of a(e^X K e^Y), with
/// the guaranteed number of repetitions (bound <= 0 when none is forced).
struct RepetitionPrediction {
    double value = 0.0;
    int bound = 0;
};

RepetitionPrediction predict_repetition(const CartanVector& x, const CartanVector& y);

inline constexpr double kClusterTolerance = 1e-7;

/// Minimum over the sample of the multiplicity of the predicted repeated value.
int repetition_check(const CartanVector& x, const CartanVector& y, const ProjectionSample& sample);

/// Rank test for the l-fold convolution power of the orbital measure of e^X.
CertResult power_certify(const CartanVector& x, int l, Space space, int trials, Rng& rng,
                         double tol = kDefaultRankTolerance);

}  // namespace orbconv
