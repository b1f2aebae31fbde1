#include "orbconv/density.hpp"
#include "orbconv/liealg.hpp"

#include <doctest.h>

#include <Eigen/LU>

#include <cmath>
#include <random>

using namespace orbconv;
using Eigen::MatrixXcd;

namespace {

const cplx I{0.0, 1.0};

MatrixXcd cartan_element(const CartanVector& h)
{
    const int p = h.size();
    MatrixXcd m = MatrixXcd::Zero(2 * p, 2 * p);
    for (int k = 0; k < p; ++k) m(k, p + k) = m(p + k, k) = h[k];
    return m;
}

MatrixXcd e_unit(int r, int c, int p)
{
    MatrixXcd m = MatrixXcd::Zero(p, p);
    m(r, c) = 1.0;
    return m;
}

// J = diag(I_p, -I_p); g = {X : X^* J + J X = 0}.
bool in_g(const MatrixXcd& x, Space space)
{
    const int p = static_cast<int>(x.rows() / 2);
    Eigen::VectorXcd d(2 * p);
    d << Eigen::VectorXcd::Ones(p), -Eigen::VectorXcd::Ones(p);
    const MatrixXcd j = d.asDiagonal();
    if ((x.adjoint() * j + j * x).norm() > 1e-12) return false;
    if (space == Space::RealD && x.imag().norm() > 0) return false;
    if (space == Space::ComplexC && std::abs(x.trace()) > 1e-12) return false;
    return true;
}

int full_rank(const std::vector<PVector>& vs, Space space)
{
    Eigen::MatrixXd m(vs.empty() ? 0 : flatten(vs[0], space).size(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t c = 0; c < vs.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = flatten(vs[c], space);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    return static_cast<int>(lu.rank());
}

CartanVector generic_h(int p)
{
    std::vector<double> h;
    for (int k = 0; k < p; ++k) h.push_back(1.7 * (k + 1) + 0.31 * k * k);
    return CartanVector(h);
}

}  // namespace

TEST_SUITE("liealg")
{
    TEST_CASE("root system sizes and multiplicities")
    {
        const RootDatum r3 = build_root_system(Space::RealD, 3);
        CHECK(r3.roots.size() == 6);
        CHECK(r3.total_multiplicity() == 6);
        CHECK(build_root_system(Space::RealD, 2).roots.size() == 2);

        const RootDatum c2 = build_root_system(Space::ComplexC, 2);
        CHECK(c2.total_multiplicity() == 6);
        int doubles = 0;
        for (const auto& r : c2.roots) {
            if (r.kind == RootKind::Double) {
                ++doubles;
                CHECK(r.multiplicity == 1);
            } else {
                CHECK(r.multiplicity == 2);
            }
        }
        CHECK(doubles == 2);

        for (int p = 2; p <= 7; ++p) {
            CHECK(build_root_system(Space::RealD, p).total_multiplicity() == dim_p(Space::RealD, p) - p);
            CHECK(build_root_system(Space::ComplexC, p).total_multiplicity() == dim_p(Space::ComplexC, p) - p);
            CHECK(build_root_system(Space::QuaternionC, p).total_multiplicity() ==
                  dim_p(Space::QuaternionC, p) - p);
        }
    }

    TEST_CASE("root system rejects p < 2")
    {
        CHECK_THROWS_AS(build_root_system(Space::RealD, 1), InvalidArgument);
        CHECK_THROWS_AS(build_root_system(Space::ComplexC, 0), InvalidArgument);
    }

    TEST_CASE("root labels")
    {
        CHECK(PositiveRoot::diff(0, 1).str() == "H1-H2");
        CHECK(PositiveRoot::sum(1, 3).str() == "H2+H4");
        CHECK(PositiveRoot::twice(2).str() == "2H3");
    }

    TEST_CASE("root values")
    {
        CHECK(root_value(PositiveRoot::diff(0, 1), {3, 1}) == 2);
        CHECK(root_value(PositiveRoot::sum(0, 1), {3, -3}) == 0);
        CHECK(root_value(PositiveRoot::twice(0), {5, 0}) == 10);
    }

    TEST_CASE("root vectors lie in g and in their root space")
    {
        for (Space space : {Space::RealD, Space::ComplexC})
            for (int p = 2; p <= 4; ++p) {
                const CartanVector h = generic_h(p);
                const MatrixXcd hm = cartan_element(h);
                for (const auto& root : build_root_system(space, p).roots) {
                    const auto xs = root_vectors(root, space, p);
                    CHECK(static_cast<int>(xs.size()) == root.multiplicity);
                    for (const auto& x : xs) {
                        CHECK(in_g(x, space));
                        const MatrixXcd ad = hm * x - x * hm;
                        CHECK((ad - root_value(root, h) * x).norm() < 1e-12);
                    }
                }
            }
    }

    TEST_CASE("root vectors are unavailable for the quaternionic space")
    {
        CHECK_THROWS_AS(root_vectors(PositiveRoot::diff(0, 1), Space::QuaternionC, 2), Unsupported);
        CHECK_THROWS_AS(symmetrized_vectors(PositiveRoot::diff(0, 1), Space::QuaternionC, 2), Unsupported);
        CHECK_THROWS_AS(root_vectors(PositiveRoot::twice(0), Space::RealD, 2), InvalidArgument);
    }

    TEST_CASE("symmetrized vectors: closed-form B blocks")
    {
        MatrixXcd y(2, 2), z(2, 2), x1(2, 2);
        y << 0, 1, 1, 0;
        z << 0, -1, 1, 0;
        x1 << I, 0, 0, 0;
        CHECK(symmetrized_vectors(PositiveRoot::diff(0, 1), Space::RealD, 2)[0].b == y);
        CHECK(symmetrized_vectors(PositiveRoot::sum(0, 1), Space::RealD, 2)[0].b == z);
        CHECK(symmetrized_vectors(PositiveRoot::twice(0), Space::ComplexC, 2)[0].b == x1);

        const int p = 4;
        const auto yc = symmetrized_vectors(PositiveRoot::diff(1, 3), Space::ComplexC, p);
        REQUIRE(yc.size() == 2);
        CHECK((yc[0].b - (e_unit(1, 3, p) + e_unit(3, 1, p))).norm() == 0);
        CHECK((yc[1].b - I * (e_unit(1, 3, p) - e_unit(3, 1, p))).norm() == 0);
        const auto zc = symmetrized_vectors(PositiveRoot::sum(1, 3), Space::ComplexC, p);
        REQUIRE(zc.size() == 2);
        CHECK((zc[0].b - (e_unit(3, 1, p) - e_unit(1, 3, p))).norm() == 0);
        CHECK((zc[1].b - I * (e_unit(1, 3, p) + e_unit(3, 1, p))).norm() == 0);
    }

    TEST_CASE("symmetrized vectors are theta-odd")
    {
        for (Space space : {Space::RealD, Space::ComplexC})
            for (const auto& root : build_root_system(space, 3).roots)
                for (const auto& v : symmetrized_vectors(root, space, 3)) {
                    const MatrixXcd m = embed(v);
                    CHECK((cartan_involution(m) + m).norm() == 0);
                }
    }

    TEST_CASE("compact vectors are theta-even and lie in g")
    {
        for (Space space : {Space::RealD, Space::ComplexC})
            for (const auto& root : build_root_system(space, 3).roots)
                for (const auto& k : compact_vectors(root, space, 3)) {
                    CHECK((cartan_involution(k) - k).norm() < 1e-14);
                    CHECK(in_g(k, space));
                }
    }

    TEST_CASE("p basis spans p")
    {
        for (Space space : {Space::RealD, Space::ComplexC})
            for (int p = 2; p <= 5; ++p) {
                const auto basis = p_basis(space, p);
                CHECK(static_cast<int>(basis.size()) == dim_p(space, p));
                CHECK(full_rank(basis, space) == dim_p(space, p));
            }
    }

    TEST_CASE("root vectors and the diagonal units with i A_k form a basis of p (complex)")
    {
        // Independent check: the A_k, the symmetrized vectors of the pair roots and the
        // imaginary units i E_kk give a basis as well.
        const int p = 3;
        std::vector<PVector> vs;
        for (const auto& root : build_root_system(Space::ComplexC, p).roots)
            if (root.kind != RootKind::Double)
                for (const auto& v : symmetrized_vectors(root, Space::ComplexC, p)) vs.push_back(v);
        for (int k = 0; k < p; ++k) {
            vs.push_back(cartan_unit(k, p));
            vs.push_back({I * e_unit(k, k, p)});
        }
        CHECK(full_rank(vs, Space::ComplexC) == 2 * p * p);
    }

    TEST_CASE("k basis has the right dimension and lies in k")
    {
        for (Space space : {Space::RealD, Space::ComplexC})
            for (int p = 2; p <= 5; ++p) {
                const auto basis = k_basis(space, p);
                CHECK(static_cast<int>(basis.size()) == dim_k(space, p));
                Eigen::MatrixXd m(8 * p * p, static_cast<Eigen::Index>(basis.size()));
                for (std::size_t c = 0; c < basis.size(); ++c) {
                    const MatrixXcd& k = basis[c];
                    CHECK(in_g(k, space));
                    CHECK((cartan_involution(k) - k).norm() < 1e-14);
                    Eigen::VectorXd col(8 * p * p);
                    for (int a = 0; a < 2 * p; ++a)
                        for (int b = 0; b < 2 * p; ++b) {
                            col(2 * (a * 2 * p + b)) = k(a, b).real();
                            col(2 * (a * 2 * p + b) + 1) = k(a, b).imag();
                        }
                    m.col(static_cast<Eigen::Index>(c)) = col;
                }
                CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(m).rank() == dim_k(space, p));
            }
        CHECK(dim_k(Space::RealD, 4) == 12);
        CHECK(dim_k(Space::ComplexC, 3) == 17);
    }

    TEST_CASE("embed and block_of are inverse")
    {
        MatrixXcd b(2, 2);
        b << 1, 2.0 * I, 3, 4;
        const MatrixXcd m = embed(PVector{b});
        CHECK(m.block(2, 0, 2, 2) == b.adjoint());
        CHECK(block_of(m).b == b);
    }

    TEST_CASE("adjoint action: identity, Weyl permutation, brute-force conjugation")
    {
        const int p = 3;
        MatrixXcd diag = MatrixXcd::Zero(p, p);
        diag.diagonal() << 3, 2, 1;
        const PVector v{diag};
        CHECK(adjoint_on_p(KElement::identity(p), v).b == diag);

        MatrixXcd w = MatrixXcd::Zero(p, p);
        w(0, 1) = w(1, 2) = w(2, 0) = 1;  // cyclic permutation
        const PVector moved = adjoint_on_p({w, w}, v);
        MatrixXcd expected = MatrixXcd::Zero(p, p);
        expected.diagonal() << 2, 1, 3;
        CHECK(moved.b == expected);

        Rng rng(7);
        std::normal_distribution<double> n01;
        for (Space space : {Space::RealD, Space::ComplexC})
            for (int trial = 0; trial < 20; ++trial) {
                const KElement k = haar_sample(space, 4, rng);
                MatrixXcd b(4, 4);
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c)
                        b(r, c) = space == Space::RealD ? cplx(n01(rng), 0) : cplx(n01(rng), n01(rng));
                const MatrixXcd km = embed(k);
                const MatrixXcd brute = (km * embed(PVector{b}) * km.inverse()).block(0, 4, 4, 4);
                CHECK((adjoint_on_p(k, {b}).b - brute).cwiseAbs().maxCoeff() < 1e-12);
            }
    }

    TEST_CASE("adjoint action is a group action")
    {
        Rng rng(11);
        for (Space space : {Space::RealD, Space::ComplexC}) {
            const KElement a = haar_sample(space, 3, rng);
            const KElement b = haar_sample(space, 3, rng);
            const PVector v = p_basis(space, 3)[4];
            const PVector lhs = adjoint_on_p(compose(a, b), v);
            const PVector rhs = adjoint_on_p(a, adjoint_on_p(b, v));
            CHECK((lhs.b - rhs.b).cwiseAbs().maxCoeff() < 1e-10);
        }
    }

    TEST_CASE("adjoint action rejects shape mismatch")
    {
        CHECK_THROWS_AS(adjoint_on_p(KElement::identity(3), PVector{MatrixXcd::Zero(2, 2)}), InvalidArgument);
    }

    TEST_CASE("flatten layout")
    {
        MatrixXcd b(2, 2);
        b << cplx(1, 5), 2, 3, cplx(4, -1);
        const Eigen::VectorXd r = flatten({b}, Space::RealD);
        CHECK(r.size() == 4);
        CHECK(r(0) == 1);
        CHECK(r(3) == 4);
        const Eigen::VectorXd c = flatten({b}, Space::ComplexC);
        CHECK(c.size() == 8);
        CHECK(c(0) == 1);
        CHECK(c(1) == 5);
        CHECK(c(7) == -1);
    }

    TEST_CASE("bracket oracle: all index quadruples up to p = 6")
    {
        for (int p = 2; p <= 6; ++p)
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j)
                    for (int k = 0; k < p; ++k)
                        for (int l = k + 1; l < p; ++l) {
                            const BracketResult r = bracket_oracle(i, j, k, l, p);
                            CHECK(r.matches());
                        }
    }

    TEST_CASE("bracket oracle: case tags and an independent complex computation")
    {
        CHECK(bracket_oracle(0, 1, 2, 3, 4).tag == BracketCase::Disjoint);
        CHECK(bracket_oracle(0, 1, 2, 3, 4).matrix.isZero());
        CHECK(bracket_oracle(1, 2, 1, 2, 4).tag == BracketCase::Equal);
        CHECK(bracket_oracle(0, 2, 0, 1, 4).tag == BracketCase::SameFirst);
        CHECK(bracket_oracle(0, 2, 1, 2, 4).tag == BracketCase::SameSecond);
        CHECK(bracket_oracle(0, 1, 1, 3, 4).tag == BracketCase::SecondIsFirst);
        CHECK(bracket_oracle(1, 3, 0, 1, 4).tag == BracketCase::FirstIsSecond);

        // {i,j} = {k,l}: 4 (A_i + A_j), via the floating-point root machinery.
        const int p = 4;
        const auto kz = compact_vectors(PositiveRoot::sum(1, 2), Space::RealD, p)[0];
        const MatrixXcd z = embed(symmetrized_vectors(PositiveRoot::sum(1, 2), Space::RealD, p)[0]);
        const MatrixXcd br = kz * z - z * kz;
        const MatrixXcd expected = 4.0 * (embed(cartan_unit(1, p)) + embed(cartan_unit(2, p)));
        CHECK((br - expected).norm() < 1e-14);
        CHECK((br - bracket_oracle(1, 2, 1, 2, p).matrix.cast<cplx>()).norm() < 1e-14);

        CHECK_THROWS_AS(bracket_oracle(1, 1, 0, 1, 3), InvalidArgument);
    }

    TEST_CASE("adjoint exponential: rotation of Y_ij and Z_ij into the Cartan space")
    {
        // The orbit of Y_ij (resp. Z_ij) stays on the circle spanned with A_i - A_j
        // (resp. A_i + A_j); both have the same norm, so the rotation coefficient is 1.
        const int p = 4;
        for (double t : {0.1, 0.37, 1.0, -0.8}) {
            for (bool is_sum : {false, true}) {
                const int i = 1, j = 3;
                const PositiveRoot root = is_sum ? PositiveRoot::sum(i, j) : PositiveRoot::diff(i, j);
                const PVector target = symmetrized_vectors(root, Space::RealD, p)[0];
                const PVector got = exp_adjoint_oracle({is_sum, i, j}, t, target);
                const MatrixXcd a = cartan_unit(i, p).b + (is_sum ? 1.0 : -1.0) * cartan_unit(j, p).b;
                const MatrixXcd expected = std::cos(4 * t) * target.b + std::sin(4 * t) * a;
                CHECK((got.b - expected).cwiseAbs().maxCoeff() < 1e-10);
                CHECK(got.b.norm() == doctest::Approx(target.b.norm()).epsilon(1e-12));
            }
        }
    }

    TEST_CASE("adjoint exponential: no Cartan component from other symmetrized vectors")
    {
        const int p = 4;
        for (bool is_sum : {false, true})
            for (const auto& root : build_root_system(Space::RealD, p).roots) {
                const bool same = root.i == 0 && root.j == 1 && ((root.kind == RootKind::Sum) == is_sum);
                if (same) continue;
                const PVector target = symmetrized_vectors(root, Space::RealD, p)[0];
                const PVector got = exp_adjoint_oracle({is_sum, 0, 1}, 0.37, target);
                CHECK(got.b.diagonal().cwiseAbs().maxCoeff() < 1e-10);
            }
    }

    TEST_CASE("integer root vectors match the floating-point ones")
    {
        for (int p = 2; p <= 4; ++p)
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j) {
                    CHECK((real_root_vector(false, i, j, p).cast<cplx>() -
                           root_vectors(PositiveRoot::diff(i, j), Space::RealD, p)[0])
                              .norm() == 0);
                    CHECK((real_root_vector(true, i, j, p).cast<cplx>() -
                           root_vectors(PositiveRoot::sum(i, j), Space::RealD, p)[0])
                              .norm() == 0);
                }
    }
}
