#include "orbconv/types.hpp"

#include <cmath>
#include <sstream>

namespace orbconv {

std::string_view to_string(Space s)
{
    switch (s) {
    case Space::RealD: return "real";
    case Space::ComplexC: return "complex";
    case Space::QuaternionC: return "quaternion";
    }
    return "?";
}

Space parse_space(std::string_view name)
{
    if (name == "real") return Space::RealD;
    if (name == "complex") return Space::ComplexC;
    if (name == "quaternion") return Space::QuaternionC;
    throw InvalidArgument("unknown space '" + std::string(name) + "'");
}

int dim_p(Space s, int p)
{
    switch (s) {
    case Space::RealD: return p * p;
    case Space::ComplexC: return 2 * p * p;
    case Space::QuaternionC: return 4 * p * p;
    }
    return 0;
}

int dim_k(Space s, int p)
{
    switch (s) {
    case Space::RealD: return p * (p - 1);
    case Space::ComplexC: return 2 * p * p - 1;
    case Space::QuaternionC: return 2 * p * (2 * p + 1);
    }
    return 0;
}

CartanVector::CartanVector(std::vector<double> h) : h_(std::move(h))
{
    if (h_.size() < 2)
        throw InvalidArgument("Cartan vector needs p >= 2 entries");
    for (double v : h_)
        if (!std::isfinite(v))
            throw InvalidArgument("Cartan vector entries must be finite");
}

bool CartanVector::is_zero() const
{
    for (double v : h_)
        if (v != 0.0) return false;
    return true;
}

std::string CartanVector::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < h_.size(); ++i) {
        if (i) os << ',';
        os << h_[i];
    }
    os << ')';
    return os.str();
}

KElement KElement::identity(int p)
{
    return {Eigen::MatrixXcd::Identity(p, p), Eigen::MatrixXcd::Identity(p, p)};
}

}  // namespace orbconv
