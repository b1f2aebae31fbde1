#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbconv {

using cplx = std::complex<double>;

/// The three symmetric spaces handled by the library.
///   RealD       SO_0(p,p) / SO(p) x SO(p)          (root system D_p)
///   ComplexC    SU(p,p) / S(U(p) x U(p))           (root system C_p)
///   QuaternionC Sp(p,p) / Sp(p) x Sp(p)            (root system C_p, criterion level only)
enum class Space { RealD, ComplexC, QuaternionC };

std::string_view to_string(Space s);
Space parse_space(std::string_view name);

/// Real dimension of the tangent space p: p^2, 2p^2 or 4p^2.
int dim_p(Space s, int p);

/// Real dimension of the isotropy algebra k (RealD and ComplexC only).
int dim_k(Space s, int p);

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is not available for the requested space or mode.
struct Unsupported : std::logic_error {
    using std::logic_error::logic_error;
};

struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Diagonal (H_1, ..., H_p) of an element H of the Cartan space.
class CartanVector {
public:
    CartanVector() = default;
    explicit CartanVector(std::vector<double> h);
    CartanVector(std::initializer_list<double> h) : CartanVector(std::vector<double>(h)) {}

    int size() const { return static_cast<int>(h_.size()); }
    double operator[](int i) const { return h_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return h_; }

    bool is_zero() const;
    std::string str() const;

    friend bool operator==(const CartanVector&, const CartanVector&) = default;

private:
    std::vector<double> h_;
};

/// Element of p, stored as its upper-right p x p block B of [[0, B], [B*, 0]].
/// Real-space vectors keep a zero imaginary part.
struct PVector {
    Eigen::MatrixXcd b;

    int p() const { return static_cast<int>(b.rows()); }
};

/// Element diag(k1, k2) of the maximal compact subgroup K.
struct KElement {
    Eigen::MatrixXcd k1;
    Eigen::MatrixXcd k2;

    static KElement identity(int p);
    int p() const { return static_cast<int>(k1.rows()); }
};

}  // namespace orbconv
