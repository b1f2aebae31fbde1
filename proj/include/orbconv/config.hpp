#pragma once

// Weyl chamber projection, configurations [s;u], [s] and [s]^- of Cartan
// vectors, and the eligibility criterion for pairs.

#include "orbconv/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orbconv {

/// Representative of the Weyl orbit of x in the closed positive chamber.
/// D_p: |x_i| sorted descending, last entry carries the sign of the product of
/// the entries (always + when some entry vanishes). C_p: |x_i| sorted descending.
CartanVector project_to_chamber(const CartanVector& x, Space space = Space::RealD);

enum class ConfigKind {
    WithZeros,       // [s;u]  diag[x1^(s1), ..., xr^(sr), 0^(u)]
    MinusSingleton,  // [s]    diag[x1^(s1), ..., x_{r-1}^(s_{r-1}), -x_r]
    MinusPaired,     // [s]^-  diag[x1^(s1), ..., x_r^(s_r - 1), -x_r]
};

struct Part {
    double value = 0.0;  // positive
    int count = 0;

    friend bool operator==(const Part&, const Part&) = default;
};

struct Configuration {
    ConfigKind kind = ConfigKind::WithZeros;
    std::vector<Part> parts;  // strictly decreasing values
    int u = 0;                // number of zero entries (WithZeros only)

    int p() const;
    int max_part() const;             // max s, 0 for X = 0
    int zeros() const { return u; }
    bool is_zero() const { return parts.empty(); }
    bool is_regular() const;          // [1^p] or [1^(p-1);1]
    std::vector<int> counts() const;

    /// Form used for tables and enumeration: part counts sorted nonincreasing
    /// (all but the last part for [s]^-); [s] with a negative singleton is
    /// folded into [s;0]. Part values become r, r-1, ..., 1.
    Configuration normalized() const;

    /// Bracket notation: "[3,2]", "[2;2]", "[2,2]-", "[2,1^3]", "[0;4]".
    std::string label() const;

    /// Integer representative diag entries r-i+1 for the i-th part, zeros last,
    /// and the final entry negated for [s]^- (and [s] with a negative singleton).
    CartanVector representative() const;

    /// Same class as `other` (compares kind, counts and u; values ignored).
    bool same_class(const Configuration& other) const;
};

/// Builds a configuration from the bracket notation produced by label().
/// A trailing "-" or "^-" marks [s]^-; "a^k" expands to k copies of a.
Configuration parse_configuration(std::string_view label);

Configuration classify(const CartanVector& x, Space space = Space::RealD);

/// |V_x|: number of positive roots (with multiplicity) not vanishing on x.
int v_dim(const CartanVector& x, Space space);

enum class EligibilityRule { Case2p2, Case2p, ExceptionP4, ZeroElement };

std::string_view to_string(EligibilityRule r);

struct EligibilityVerdict {
    bool eligible = false;
    EligibilityRule rule = EligibilityRule::ZeroElement;
};

EligibilityVerdict is_eligible(const Configuration& x, const Configuration& y, Space space);
EligibilityVerdict is_eligible(const CartanVector& x, const CartanVector& y, Space space);

/// The four p = 4 pairs ({[4],[2,2]}, {[4]^-,[2,2]^-}, {[4],[2;2]}, {[4]^-,[2;2]})
/// that satisfy the counting rules yet carry no density.
bool is_p4_exception(const Configuration& x, const Configuration& y);

/// x with entry `index` (0-based) negated.
CartanVector relative_of(const CartanVector& x, int index);

/// |V_x| + |V_y| >= dim p.
bool necessary_count_ok(const CartanVector& x, const CartanVector& y, Space space);

}  // namespace orbconv
