#include "orbconv/density.hpp"

#include "orbconv/config.hpp"
#include "orbconv/liealg.hpp"
#include "orbconv/rational.hpp"

#include <algorithm>
#include <cmath>

namespace orbconv {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;

void require_numeric_space(Space space, std::string_view op)
{
    if (space == Space::QuaternionC)
        throw Unsupported(std::string(op) + ": quaternionic spaces are supported at criterion level only");
}

void require_same_rank(const CartanVector& x, const CartanVector& y, std::string_view op)
{
    if (x.size() != y.size()) throw InvalidArgument(std::string(op) + ": x and y have different length");
}

MatrixXcd haar_unitary(Space space, int p, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    MatrixXcd g(p, p);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c)
            g(r, c) = space == Space::RealD ? cplx(normal(rng), 0.0) : cplx(normal(rng), normal(rng));

    Eigen::HouseholderQR<MatrixXcd> qr(g);
    MatrixXcd q = qr.householderQ() * MatrixXcd::Identity(p, p);
    const MatrixXcd& r = qr.matrixQR();
    for (int j = 0; j < p; ++j) {
        const cplx d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0 ? d / mag : cplx(1.0);
    }
    if (space == Space::RealD) {
        q = q.real().cast<cplx>();  // strip round-off in the imaginary part
        if (q.real().determinant() < 0) q.col(0) *= -1.0;
    }
    return q;
}

// Real coordinates of a 2p x 2p matrix: real parts (RealD) or interleaved real
// and imaginary parts (ComplexC), row-major.
Eigen::VectorXd flatten_full(const MatrixXcd& m, Space space)
{
    const Eigen::Index n = m.rows();
    const Eigen::Index stride = space == Space::RealD ? 1 : 2;
    Eigen::VectorXd out(n * n * stride);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            out((r * n + c) * stride) = m(r, c).real();
            if (stride == 2) out((r * n + c) * stride + 1) = m(r, c).imag();
        }
    return out;
}

int exact_pair_rank(const SpanBasis& bx, const SpanBasis& by, const RationalMatrix& k1, const RationalMatrix& k2)
{
    const int p = k1.rows();
    const int cols = static_cast<int>(bx.vectors.size() + by.vectors.size());
    RationalMatrix m(p * p, cols);
    int col = 0;
    const auto to_rational = [p](const PVector& v) {
        RationalMatrix b(p, p);
        for (int r = 0; r < p; ++r)
            for (int c = 0; c < p; ++c) {
                const double e = v.b(r, c).real();
                if (e != std::round(e)) throw NumericFailure("exact mode needs integral basis vectors");
                b(r, c) = static_cast<long>(e);
            }
        return b;
    };
    const auto put = [&](const RationalMatrix& b) {
        for (int r = 0; r < p; ++r)
            for (int c = 0; c < p; ++c) m(r * p + c, col) = b(r, c);
        ++col;
    };
    for (const auto& v : bx.vectors) put(to_rational(v));
    const RationalMatrix k2t = k2.transpose();
    for (const auto& v : by.vectors) put(k1 * to_rational(v) * k2t);
    return m.rank();
}

}  // namespace

std::string_view to_string(CertVerdict v)
{
    return v == CertVerdict::Dense ? "dense" : "singular";
}

std::string_view to_string(CertMode m)
{
    return m == CertMode::Float ? "float" : "exact";
}

CertMode parse_mode(std::string_view name)
{
    if (name == "float") return CertMode::Float;
    if (name == "exact") return CertMode::ExactRational;
    throw InvalidArgument("unknown mode '" + std::string(name) + "'");
}

SpanBasis span_basis(const CartanVector& x, Space space)
{
    require_numeric_space(space, "span_basis");
    const CartanVector h = project_to_chamber(x, space);
    SpanBasis basis{{}, x};
    for (const auto& root : build_root_system(space, x.size()).roots) {
        if (root_value(root, h) == 0.0) continue;
        for (auto& v : symmetrized_vectors(root, space, x.size())) basis.vectors.push_back(std::move(v));
    }
    return basis;
}

KElement haar_sample(Space space, int p, Rng& rng)
{
    require_numeric_space(space, "haar_sample");
    if (p < 1) throw InvalidArgument("haar_sample: p must be positive");
    KElement k{haar_unitary(space, p, rng), haar_unitary(space, p, rng)};
    if (space == Space::ComplexC) {
        const cplx c = k.k1.determinant() * k.k2.determinant();
        k.k2 *= std::polar(1.0, -std::arg(c) / p);
    }
    return k;
}

int numerical_rank(MatrixXd m, double tol)
{
    std::vector<Eigen::Index> keep;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const double n = m.col(c).norm();
        if (n > 0) {
            m.col(c) /= n;
            keep.push_back(c);
        }
    }
    if (keep.empty() || m.rows() == 0) return 0;
    MatrixXd a(m.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) a.col(static_cast<Eigen::Index>(i)) = m.col(keep[i]);

    const Eigen::BDCSVD<MatrixXd> svd(a);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > tol * s(0)) ++rank;
    return rank;
}

int pair_rank(const SpanBasis& bx, const SpanBasis& by, const KElement& k, Space space, double tol)
{
    const int p = k.p();
    const int rows = dim_p(space, p);
    MatrixXd m(rows, static_cast<Eigen::Index>(bx.vectors.size() + by.vectors.size()));
    Eigen::Index col = 0;
    for (const auto& v : bx.vectors) m.col(col++) = flatten(v, space);
    for (const auto& v : by.vectors) m.col(col++) = flatten(adjoint_on_p(k, v), space);
    return numerical_rank(std::move(m), tol);
}

CertResult certify_pair(const CartanVector& x, const CartanVector& y, Space space, int trials, CertMode mode,
                        Rng& rng, double tol)
{
    require_numeric_space(space, "certify_pair");
    require_same_rank(x, y, "certify_pair");
    if (trials < 1) throw InvalidArgument("certify_pair: trials must be >= 1");
    if (mode == CertMode::ExactRational && space != Space::RealD)
        throw Unsupported("certify_pair: exact rational mode is available for the real space only");

    const int p = x.size();
    const SpanBasis bx = span_basis(x, space);
    const SpanBasis by = span_basis(y, space);

    CertResult res;
    res.target_dim = dim_p(space, p);
    res.mode = mode;
    res.tolerance = mode == CertMode::Float ? tol : 0.0;

    for (int t = 0; t < trials && res.achieved_rank < res.target_dim; ++t) {
        int rank = 0;
        if (mode == CertMode::Float) {
            rank = pair_rank(bx, by, haar_sample(space, p, rng), space, tol);
        } else {
            const RationalMatrix k1 = cayley_transform(random_rational_skew(p, rng));
            const RationalMatrix k2 = cayley_transform(random_rational_skew(p, rng));
            rank = exact_pair_rank(bx, by, k1, k2);
        }
        res.achieved_rank = std::max(res.achieved_rank, rank);
        res.trials = t + 1;
    }
    res.verdict = res.achieved_rank == res.target_dim ? CertVerdict::Dense : CertVerdict::Singular;
    return res;
}

MatrixXcd cartan_exp(const CartanVector& x)
{
    const int p = x.size();
    MatrixXcd g = MatrixXcd::Zero(2 * p, 2 * p);
    for (int i = 0; i < p; ++i) {
        g(i, i) = g(p + i, p + i) = std::cosh(x[i]);
        g(i, p + i) = g(p + i, i) = std::sinh(x[i]);
    }
    return g;
}

CartanVector cartan_projection(const MatrixXcd& g)
{
    if (g.rows() != g.cols() || g.rows() % 2 != 0 || g.rows() < 4)
        throw InvalidArgument("cartan_projection: expected a 2p x 2p matrix with p >= 2");
    const int p = static_cast<int>(g.rows() / 2);
    const Eigen::JacobiSVD<MatrixXcd> svd(g);
    const auto& s = svd.singularValues();
    if (!(s(2 * p - 1) > 0) || s(0) / s(2 * p - 1) > 1e12)
        throw NumericFailure("cartan_projection: matrix is singular or too ill-conditioned");
    std::vector<double> h(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) h[static_cast<std::size_t>(i)] = std::log(s(i));
    h.back() = std::abs(h.back());
    return CartanVector(std::move(h));
}

ProjectionSample sample_projection(const CartanVector& x, const CartanVector& y, int n, Space space, Rng& rng)
{
    require_numeric_space(space, "sample_projection");
    require_same_rank(x, y, "sample_projection");
    if (n < 1) throw InvalidArgument("sample_projection: n must be >= 1");
    const MatrixXcd ex = cartan_exp(x);
    const MatrixXcd ey = cartan_exp(y);
    ProjectionSample sample{{}, x, y, n};
    sample.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        sample.points.push_back(cartan_projection(ex * embed(haar_sample(space, x.size(), rng)) * ey));
    return sample;
}

RepetitionPrediction predict_repetition(const CartanVector& x, const CartanVector& y)
{
    require_same_rank(x, y, "predict_repetition");
    const int p = x.size();

    // Largest block of equal nonzero magnitudes, and the number of zeros.
    const auto profile = [](const CartanVector& v, int& zeros, int& block, double& value) {
        std::vector<double> a;
        for (double e : v.values()) a.push_back(std::abs(e));
        std::sort(a.begin(), a.end(), std::greater<>());
        zeros = static_cast<int>(std::count(a.begin(), a.end(), 0.0));
        block = 0;
        value = 0.0;
        for (std::size_t i = 0; i < a.size() && a[i] > 0;) {
            std::size_t j = i;
            while (j < a.size() && a[j] == a[i]) ++j;
            if (static_cast<int>(j - i) > block) {
                block = static_cast<int>(j - i);
                value = a[i];
            }
            i = j;
        }
    };
    int u = 0, s = 0, v = 0, t = 0;
    double x0 = 0.0, y0 = 0.0;
    profile(x, u, s, x0);
    profile(y, v, t, y0);

    RepetitionPrediction best{0.0, u + v - p};
    if (t > 0 && 2 * u + t - 2 * p > best.bound) best = {y0, 2 * u + t - 2 * p};
    if (s > 0 && 2 * v + s - 2 * p > best.bound) best = {x0, 2 * v + s - 2 * p};
    return best;
}

int repetition_check(const CartanVector& x, const CartanVector& y, const ProjectionSample& sample)
{
    if (!(sample.x == x) || !(sample.y == y))
        throw InvalidArgument("repetition_check: sample was drawn for a different pair");
    if (sample.points.empty()) throw InvalidArgument("repetition_check: empty sample");
    const double value = predict_repetition(x, y).value;
    int least = x.size();
    for (const auto& pt : sample.points) {
        int hits = 0;
        for (double h : pt.values())
            if (std::abs(h - value) <= kClusterTolerance) ++hits;
        least = std::min(least, hits);
    }
    return least;
}

CertResult power_certify(const CartanVector& x, int l, Space space, int trials, Rng& rng, double tol)
{
    require_numeric_space(space, "power_certify");
    if (l < 2) throw InvalidArgument("power_certify: l must be >= 2");
    if (trials < 1) throw InvalidArgument("power_certify: trials must be >= 1");

    const int p = x.size();
    const int n = 2 * p;
    const MatrixXcd ex = cartan_exp(x);
    const std::vector<MatrixXcd> kb = k_basis(space, p);

    CertResult res;
    res.target_dim = dim_k(space, p) + dim_p(space, p);
    res.tolerance = tol;

    for (int t = 0; t < trials && res.achieved_rank < res.target_dim; ++t) {
        // ks[0] = k_1 = I and ks[l] = k_{l+1} = I; the interior factors are Haar.
        std::vector<MatrixXcd> ks(static_cast<std::size_t>(l + 1), MatrixXcd::Identity(n, n));
        for (int i = 1; i < l; ++i) ks[static_cast<std::size_t>(i)] = embed(haar_sample(space, p, rng));

        // Suffix products w_i = k_i e^X k_{i+1} ... e^X k_{l+1}.
        std::vector<MatrixXcd> w(static_cast<std::size_t>(l + 1));
        w[static_cast<std::size_t>(l)] = ks[static_cast<std::size_t>(l)];
        for (int i = l - 1; i >= 0; --i)
            w[static_cast<std::size_t>(i)] = ks[static_cast<std::size_t>(i)] * ex * w[static_cast<std::size_t>(i + 1)];

        const Eigen::Index rows = space == Space::RealD ? n * n : 2 * n * n;
        MatrixXd m(rows, static_cast<Eigen::Index>((l + 1) * kb.size()));
        Eigen::Index col = 0;
        for (const auto& wi : w) {
            const MatrixXcd inv = wi.partialPivLu().inverse();
            for (const auto& a : kb) m.col(col++) = flatten_full(inv * a * wi, space);
        }
        res.achieved_rank = std::max(res.achieved_rank, numerical_rank(std::move(m), tol));
        res.trials = t + 1;
    }
    res.verdict = res.achieved_rank == res.target_dim ? CertVerdict::Dense : CertVerdict::Singular;
    return res;
}

}  // namespace orbconv
