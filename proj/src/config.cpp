#include "orbconv/config.hpp"

#include "orbconv/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

namespace orbconv {

CartanVector project_to_chamber(const CartanVector& x, Space space)
{
    std::vector<double> a(x.values());
    int negatives = 0;
    bool has_zero = false;
    for (double& v : a) {
        if (v < 0) ++negatives;
        if (v == 0) has_zero = true;
        v = std::abs(v);
    }
    std::sort(a.begin(), a.end(), std::greater<>());
    if (space == Space::RealD && !has_zero && negatives % 2 == 1) a.back() = -a.back();
    return CartanVector(std::move(a));
}

// ---------------------------------------------------------------------------

int Configuration::p() const
{
    int n = u;
    for (const auto& part : parts) n += part.count;
    return n;
}

int Configuration::max_part() const
{
    int m = 0;
    for (const auto& part : parts) m = std::max(m, part.count);
    return m;
}

bool Configuration::is_regular() const
{
    return u <= 1 && kind != ConfigKind::MinusPaired && max_part() == 1;
}

std::vector<int> Configuration::counts() const
{
    std::vector<int> c;
    for (const auto& part : parts) c.push_back(part.count);
    return c;
}

Configuration Configuration::normalized() const
{
    std::vector<int> c = counts();
    Configuration out;
    out.u = u;
    if (kind == ConfigKind::MinusPaired) {
        out.kind = ConfigKind::MinusPaired;
        std::sort(c.begin(), c.end() - 1, std::greater<>());
    } else {
        out.kind = ConfigKind::WithZeros;
        std::sort(c.begin(), c.end(), std::greater<>());
    }
    const int r = static_cast<int>(c.size());
    for (int i = 0; i < r; ++i) out.parts.push_back({static_cast<double>(r - i), c[static_cast<std::size_t>(i)]});
    return out;
}

namespace {

std::string join_counts(const std::vector<int>& c)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size();) {
        std::size_t j = i;
        while (j < c.size() && c[j] == c[i]) ++j;
        const std::size_t run = j - i;
        const auto emit = [&](const std::string& s) {
            if (!first) os << ',';
            os << s;
            first = false;
        };
        if (run >= 3)
            emit(std::to_string(c[i]) + "^" + std::to_string(run));
        else
            for (std::size_t k = 0; k < run; ++k) emit(std::to_string(c[i]));
        i = j;
    }
    return os.str();
}

}  // namespace

std::string Configuration::label() const
{
    if (is_zero()) return "[0;" + std::to_string(u) + "]";
    std::string s = "[" + join_counts(counts());
    if (kind == ConfigKind::WithZeros && u > 0) s += ";" + std::to_string(u);
    s += "]";
    if (kind == ConfigKind::MinusPaired) s += "-";
    return s;
}

CartanVector Configuration::representative() const
{
    std::vector<double> h;
    const int r = static_cast<int>(parts.size());
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < parts[static_cast<std::size_t>(i)].count; ++k) h.push_back(r - i);
    for (int k = 0; k < u; ++k) h.push_back(0.0);
    if (kind != ConfigKind::WithZeros) h.back() = -h.back();
    return CartanVector(std::move(h));
}

bool Configuration::same_class(const Configuration& other) const
{
    const Configuration a = normalized();
    const Configuration b = other.normalized();
    return a.kind == b.kind && a.u == b.u && a.counts() == b.counts();
}

Configuration parse_configuration(std::string_view label)
{
    const auto fail = [&]() -> Configuration {
        throw InvalidArgument("cannot parse configuration '" + std::string(label) + "'");
    };
    std::string s(label);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());

    bool minus = false;
    if (s.size() >= 2 && s.ends_with("^-")) {
        minus = true;
        s.resize(s.size() - 2);
    } else if (!s.empty() && s.back() == '-') {
        minus = true;
        s.pop_back();
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') return fail();
    s = s.substr(1, s.size() - 2);

    std::string body = s;
    int u = 0;
    if (const auto semi = s.find(';'); semi != std::string::npos) {
        body = s.substr(0, semi);
        try {
            u = std::stoi(s.substr(semi + 1));
        } catch (const std::exception&) {
            return fail();
        }
        if (u < 0 || minus) return fail();
    }

    std::vector<int> counts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int base = 0;
        int rep = 1;
        try {
            if (const auto caret = item.find('^'); caret != std::string::npos) {
                base = std::stoi(item.substr(0, caret));
                rep = std::stoi(item.substr(caret + 1));
            } else {
                base = std::stoi(item);
            }
        } catch (const std::exception&) {
            return fail();
        }
        if (base < 0 || rep < 1) return fail();
        for (int k = 0; k < rep; ++k) counts.push_back(base);
    }

    Configuration c;
    c.u = u;
    c.kind = minus ? ConfigKind::MinusPaired : ConfigKind::WithZeros;
    if (counts.size() == 1 && counts[0] == 0) counts.clear();  // X = 0, "[0;p]"
    for (int v : counts)
        if (v <= 0) return fail();
    if (minus && (counts.empty() || counts.back() < 2)) return fail();
    const int r = static_cast<int>(counts.size());
    for (int i = 0; i < r; ++i) c.parts.push_back({static_cast<double>(r - i), counts[static_cast<std::size_t>(i)]});
    if (c.p() < 2) return fail();
    return c;
}

Configuration classify(const CartanVector& x, Space space)
{
    const CartanVector h = project_to_chamber(x, space);
    const int p = h.size();

    Configuration c;
    const auto push = [&](double v) {
        if (!c.parts.empty() && c.parts.back().value == v)
            ++c.parts.back().count;
        else
            c.parts.push_back({v, 1});
    };

    const double last = h[p - 1];
    if (last >= 0) {
        c.kind = ConfigKind::WithZeros;
        for (int i = 0; i < p; ++i) {
            if (h[i] == 0)
                ++c.u;
            else
                push(h[i]);
        }
        return c;
    }

    for (int i = 0; i + 1 < p; ++i) push(h[i]);
    const double mag = -last;
    if (mag == h[p - 2]) {
        c.kind = ConfigKind::MinusPaired;
        ++c.parts.back().count;
    } else {
        c.kind = ConfigKind::MinusSingleton;
        c.parts.push_back({mag, 1});
    }
    return c;
}

int v_dim(const CartanVector& x, Space space)
{
    const CartanVector h = project_to_chamber(x, space);
    int n = 0;
    for (const auto& root : build_root_system(space, h.size()).roots)
        if (root_value(root, h) != 0.0) n += root.multiplicity;
    return n;
}

std::string_view to_string(EligibilityRule r)
{
    switch (r) {
    case EligibilityRule::Case2p2: return "max(s)+max(t)<=2p-2";
    case EligibilityRule::Case2p: return "max(s,2u)+max(t,2v)<=2p";
    case EligibilityRule::ExceptionP4: return "p=4 exception";
    case EligibilityRule::ZeroElement: return "zero element";
    }
    return "?";
}

bool is_p4_exception(const Configuration& x, const Configuration& y)
{
    if (x.p() != 4 || y.p() != 4) return false;
    const auto is = [](const Configuration& c, ConfigKind kind, std::vector<int> counts, int u) {
        const Configuration n = c.normalized();
        return n.kind == kind && n.counts() == counts && n.u == u;
    };
    const auto four = [&](const Configuration& c) { return is(c, ConfigKind::WithZeros, {4}, 0); };
    const auto four_minus = [&](const Configuration& c) { return is(c, ConfigKind::MinusPaired, {4}, 0); };
    const auto two_two = [&](const Configuration& c) { return is(c, ConfigKind::WithZeros, {2, 2}, 0); };
    const auto two_two_minus = [&](const Configuration& c) { return is(c, ConfigKind::MinusPaired, {2, 2}, 0); };
    const auto two_zeros = [&](const Configuration& c) { return is(c, ConfigKind::WithZeros, {2}, 2); };

    const auto ordered = [&](const Configuration& a, const Configuration& b) {
        return (four(a) && (two_two(b) || two_zeros(b))) || (four_minus(a) && (two_two_minus(b) || two_zeros(b)));
    };
    return ordered(x, y) || ordered(y, x);
}

EligibilityVerdict is_eligible(const Configuration& x, const Configuration& y, Space space)
{
    const int p = x.p();
    if (y.p() != p)
        throw InvalidArgument("is_eligible: configurations of different rank");
    if (x.is_zero() || y.is_zero()) return {false, EligibilityRule::ZeroElement};

    const int s = x.max_part();
    const int t = y.max_part();
    const int u = x.u;
    const int v = y.u;

    if (space != Space::RealD)
        return {std::max(s, 2 * u) + std::max(t, 2 * v) <= 2 * p, EligibilityRule::Case2p};

    if (is_p4_exception(x, y)) return {false, EligibilityRule::ExceptionP4};
    if (u <= 1 && v <= 1) return {s + t <= 2 * p - 2, EligibilityRule::Case2p2};
    return {std::max(s, 2 * u) + std::max(t, 2 * v) <= 2 * p, EligibilityRule::Case2p};
}

EligibilityVerdict is_eligible(const CartanVector& x, const CartanVector& y, Space space)
{
    if (x.size() != y.size())
        throw InvalidArgument("is_eligible: vectors of different length");
    return is_eligible(classify(x, space), classify(y, space), space);
}

CartanVector relative_of(const CartanVector& x, int index)
{
    if (index < 0 || index >= x.size())
        throw InvalidArgument("relative_of: index out of range");
    std::vector<double> h(x.values());
    h[static_cast<std::size_t>(index)] = -h[static_cast<std::size_t>(index)];
    return CartanVector(std::move(h));
}

bool necessary_count_ok(const CartanVector& x, const CartanVector& y, Space space)
{
    if (x.size() != y.size())
        throw InvalidArgument("necessary_count_ok: vectors of different length");
    return v_dim(x, space) + v_dim(y, space) >= dim_p(space, x.size());
}

}  // namespace orbconv
