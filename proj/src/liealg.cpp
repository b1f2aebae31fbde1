#include "orbconv/liealg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <sstream>

namespace orbconv {

namespace {

using Eigen::MatrixXcd;

const cplx I{0.0, 1.0};

MatrixXcd unit(int r, int c, int n)
{
    MatrixXcd m = MatrixXcd::Zero(n, n);
    m(r, c) = 1.0;
    return m;
}

MatrixXcd blocks(const MatrixXcd& a, const MatrixXcd& b, const MatrixXcd& c, const MatrixXcd& d)
{
    const Eigen::Index p = a.rows();
    MatrixXcd m(2 * p, 2 * p);
    m << a, b, c, d;
    return m;
}

void check_root(const PositiveRoot& root, int p)
{
    const bool ok = root.kind == RootKind::Double ? (root.i >= 0 && root.i < p)
                                                  : (root.i >= 0 && root.i < root.j && root.j < p);
    if (!ok)
        throw InvalidArgument("root " + root.str() + " does not belong to a rank " + std::to_string(p) +
                              " root system");
}

}  // namespace

std::string PositiveRoot::str() const
{
    std::ostringstream os;
    switch (kind) {
    case RootKind::Diff: os << 'H' << i + 1 << "-H" << j + 1; break;
    case RootKind::Sum: os << 'H' << i + 1 << "+H" << j + 1; break;
    case RootKind::Double: os << "2H" << i + 1; break;
    }
    return os.str();
}

int RootDatum::total_multiplicity() const
{
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

RootDatum build_root_system(Space space, int p)
{
    if (p < 2)
        throw InvalidArgument("root system needs p >= 2");

    int pair_mult = 1;
    int double_mult = 0;
    switch (space) {
    case Space::RealD: break;
    case Space::ComplexC: pair_mult = 2; double_mult = 1; break;
    case Space::QuaternionC: pair_mult = 4; double_mult = 3; break;
    }

    RootDatum rd{space, p, {}};
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            rd.roots.push_back(PositiveRoot::diff(i, j, pair_mult));
            rd.roots.push_back(PositiveRoot::sum(i, j, pair_mult));
        }
    if (double_mult > 0)
        for (int k = 0; k < p; ++k) rd.roots.push_back(PositiveRoot::twice(k, double_mult));
    return rd;
}

double root_value(const PositiveRoot& root, const CartanVector& h)
{
    switch (root.kind) {
    case RootKind::Diff: return h[root.i] - h[root.j];
    case RootKind::Sum: return h[root.i] + h[root.j];
    case RootKind::Double: return 2.0 * h[root.i];
    }
    return 0.0;
}

std::vector<MatrixXcd> root_vectors(const PositiveRoot& root, Space space, int p)
{
    if (space == Space::QuaternionC)
        throw Unsupported("quaternionic root vectors are not represented");
    check_root(root, p);
    if (root.kind == RootKind::Double && space == Space::RealD)
        throw InvalidArgument("so(p,p) has no root 2H_k");

    const MatrixXcd e = unit(root.i, root.j, p);
    const MatrixXcd sym = e + e.transpose();
    const MatrixXcd skew = e - e.transpose();

    std::vector<MatrixXcd> out;
    switch (root.kind) {
    case RootKind::Diff:
        out.push_back(blocks(skew, sym, sym, skew));  // Y+
        if (space == Space::ComplexC)
            out.push_back(blocks(I * sym, I * skew, I * skew, I * sym));  // Y+_C
        break;
    case RootKind::Sum:
        out.push_back(blocks(skew, -skew, skew, -skew));  // Z+
        if (space == Space::ComplexC)
            // Z+_C; the lower-left block is -i(E_rs + E_sr), which puts the
            // matrix in su(p,p) and in the H_r + H_s root space.
            out.push_back(blocks(-I * sym, I * sym, -I * sym, I * sym));
        break;
    case RootKind::Double:
        out.push_back(blocks(-I * e, I * e, -I * e, I * e));  // X+_k
        break;
    }
    return out;
}

MatrixXcd cartan_involution(const MatrixXcd& x)
{
    return -x.adjoint();
}

std::vector<PVector> symmetrized_vectors(const PositiveRoot& root, Space space, int p)
{
    std::vector<PVector> out;
    for (const auto& x : root_vectors(root, space, p))
        out.push_back(block_of(0.5 * (x - cartan_involution(x))));
    return out;
}

std::vector<MatrixXcd> compact_vectors(const PositiveRoot& root, Space space, int p)
{
    std::vector<MatrixXcd> out;
    for (const auto& x : root_vectors(root, space, p)) out.push_back(x + cartan_involution(x));
    return out;
}

PVector cartan_unit(int i, int p)
{
    return {unit(i, i, p)};
}

MatrixXcd embed(const PVector& v)
{
    const Eigen::Index p = v.b.rows();
    return blocks(MatrixXcd::Zero(p, p), v.b, v.b.adjoint(), MatrixXcd::Zero(p, p));
}

MatrixXcd embed(const KElement& k)
{
    const Eigen::Index p = k.k1.rows();
    return blocks(k.k1, MatrixXcd::Zero(p, p), MatrixXcd::Zero(p, p), k.k2);
}

PVector block_of(const MatrixXcd& m)
{
    const Eigen::Index p = m.rows() / 2;
    return {m.topRightCorner(p, p)};
}

PVector adjoint_on_p(const KElement& k, const PVector& v)
{
    if (k.k1.rows() != v.b.rows() || k.k2.rows() != v.b.cols())
        throw InvalidArgument("adjoint_on_p: shape mismatch");
    return {k.k1 * v.b * k.k2.adjoint()};
}

KElement compose(const KElement& a, const KElement& b)
{
    return {a.k1 * b.k1, a.k2 * b.k2};
}

Eigen::VectorXd flatten(const PVector& v, Space space)
{
    const Eigen::Index p = v.b.rows();
    if (space == Space::RealD) {
        Eigen::VectorXd out(p * p);
        for (Eigen::Index r = 0; r < p; ++r)
            for (Eigen::Index c = 0; c < p; ++c) out(r * p + c) = v.b(r, c).real();
        return out;
    }
    if (space == Space::QuaternionC)
        throw Unsupported("quaternionic p is not represented");
    Eigen::VectorXd out(2 * p * p);
    for (Eigen::Index r = 0; r < p; ++r)
        for (Eigen::Index c = 0; c < p; ++c) {
            out(2 * (r * p + c)) = v.b(r, c).real();
            out(2 * (r * p + c) + 1) = v.b(r, c).imag();
        }
    return out;
}

std::vector<PVector> p_basis(Space space, int p)
{
    std::vector<PVector> out;
    for (const auto& root : build_root_system(space, p).roots)
        for (auto& v : symmetrized_vectors(root, space, p)) out.push_back(std::move(v));
    for (int i = 0; i < p; ++i) out.push_back(cartan_unit(i, p));
    return out;
}

std::vector<MatrixXcd> k_basis(Space space, int p)
{
    if (space == Space::QuaternionC)
        throw Unsupported("quaternionic k is not represented");
    const int n = 2 * p;
    std::vector<MatrixXcd> out;
    for (int block = 0; block < 2; ++block) {
        const int o = block * p;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) {
                out.push_back(unit(o + i, o + j, n) - unit(o + j, o + i, n));
                if (space == Space::ComplexC) out.push_back(I * (unit(o + i, o + j, n) + unit(o + j, o + i, n)));
            }
    }
    if (space == Space::ComplexC)
        // traceless imaginary diagonal of s(u(p) + u(p))
        for (int m = 0; m + 1 < n; ++m) out.push_back(I * (unit(m, m, n) - unit(m + 1, m + 1, n)));
    return out;
}

// ---------------------------------------------------------------------------

Eigen::MatrixXi real_root_vector(bool is_sum, int i, int j, int p)
{
    if (!(0 <= i && i < j && j < p))
        throw InvalidArgument("real_root_vector: need 0 <= i < j < p");
    Eigen::MatrixXi skew = Eigen::MatrixXi::Zero(p, p);
    skew(i, j) = 1;
    skew(j, i) = -1;
    Eigen::MatrixXi sym = skew.cwiseAbs();
    Eigen::MatrixXi m(2 * p, 2 * p);
    if (is_sum)
        m << skew, -skew, skew, -skew;
    else
        m << skew, sym, sym, skew;
    return m;
}

std::string_view to_string(BracketCase c)
{
    switch (c) {
    case BracketCase::Disjoint: return "disjoint";
    case BracketCase::Equal: return "equal";
    case BracketCase::SameFirst: return "i=k";
    case BracketCase::SameSecond: return "j=l";
    case BracketCase::SecondIsFirst: return "j=k";
    case BracketCase::FirstIsSecond: return "i=l";
    }
    return "?";
}

namespace {

Eigen::MatrixXi int_cartan_unit(int i, int p)
{
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(2 * p, 2 * p);
    m(i, p + i) = 1;
    m(p + i, i) = 1;
    return m;
}

// X^s = 1/2 (X - theta X) for an integer real root vector; entries stay integral.
Eigen::MatrixXi int_symmetrized(bool is_sum, int i, int j, int p)
{
    const Eigen::MatrixXi x = real_root_vector(is_sum, i, j, p);
    return (x + x.transpose()) / 2;
}

}  // namespace

BracketResult bracket_oracle(int i, int j, int k, int l, int p)
{
    if (!(0 <= i && i < j && j < p && 0 <= k && k < l && l < p))
        throw InvalidArgument("bracket_oracle: need i < j and k < l within 0..p-1");

    const Eigen::MatrixXi zp = real_root_vector(true, i, j, p);
    const Eigen::MatrixXi zk = zp - zp.transpose();
    const Eigen::MatrixXi target = int_symmetrized(true, k, l, p);

    BracketResult res;
    res.matrix = zk * target - target * zk;

    const auto y = [&](int a, int b) { return int_symmetrized(false, std::min(a, b), std::max(a, b), p); };
    if (i != k && i != l && j != k && j != l) {
        res.tag = BracketCase::Disjoint;
        res.predicted = Eigen::MatrixXi::Zero(2 * p, 2 * p);
    } else if (i == k && j == l) {
        res.tag = BracketCase::Equal;
        res.predicted = 4 * (int_cartan_unit(i, p) + int_cartan_unit(j, p));
    } else if (i == k) {
        res.tag = BracketCase::SameFirst;
        res.predicted = 2 * y(j, l);
    } else if (j == l) {
        res.tag = BracketCase::SameSecond;
        res.predicted = 2 * y(i, k);
    } else if (j == k) {
        res.tag = BracketCase::SecondIsFirst;
        res.predicted = -2 * y(i, l);
    } else {
        res.tag = BracketCase::FirstIsSecond;
        res.predicted = -2 * y(k, j);
    }
    return res;
}

PVector exp_adjoint_oracle(const RootVectorLabel& label, double t, const PVector& target)
{
    const int p = target.p();
    const Eigen::MatrixXd x = real_root_vector(label.is_sum, label.i, label.j, p).cast<double>();
    const Eigen::MatrixXd gen = t * (x - x.transpose());
    const Eigen::MatrixXd g = gen.exp();
    const MatrixXcd gc = g.cast<cplx>();
    return block_of(gc * embed(target) * gc.inverse());
}

}  // namespace orbconv
