#include "qlbm/velocity_set.hpp"

#include "qlbm/errors.hpp"

namespace qlbm {

std::string to_string(VelocitySetName name) {
    switch (name) {
    case VelocitySetName::D1Q3: return "D1Q3";
    case VelocitySetName::D2Q9: return "D2Q9";
    }
    return "?";
}

VelocitySetName velocity_set_from_string(const std::string& s) {
    if (s == "D1Q3" || s == "d1q3") return VelocitySetName::D1Q3;
    if (s == "D2Q9" || s == "d2q9") return VelocitySetName::D2Q9;
    throw ConfigError("unknown velocity set '" + s + "' (expected D1Q3 or D2Q9)");
}

bool VelocitySet::pair_weights_match() const {
    for (const auto& p : pairs) {
        if (w_num[static_cast<std::size_t>(p[0])] != w_num[static_cast<std::size_t>(p[1])]) return false;
        for (int a = 0; a < 3; ++a) {
            if (c[static_cast<std::size_t>(p[0])][static_cast<std::size_t>(a)] !=
                -c[static_cast<std::size_t>(p[1])][static_cast<std::size_t>(a)]) return false;
        }
    }
    return true;
}

VelocitySet make_velocity_set(VelocitySetName name, double cs2) {
    VelocitySet s;
    s.name = name;
    s.cs2 = cs2;
    switch (name) {
    case VelocitySetName::D1Q3:
        s.dim = 1;
        s.q = 3;
        s.c = {{0, 0, 0}, {1, 0, 0}, {-1, 0, 0}};
        s.w_num = {4, 1, 1};
        s.w_den = 6;
        s.pairs = {{1, 2}};
        break;
    case VelocitySetName::D2Q9:
        // Ordering: rest, E, N, W, S, NE, NW, SW, SE.
        s.dim = 2;
        s.q = 9;
        s.c = {{0, 0, 0},  {1, 0, 0},  {0, 1, 0},   {-1, 0, 0}, {0, -1, 0},
               {1, 1, 0},  {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}};
        s.w_num = {16, 4, 4, 4, 4, 1, 1, 1, 1};
        s.w_den = 36;
        s.pairs = {{1, 3}, {2, 4}, {5, 7}, {6, 8}};
        break;
    }
    s.w.resize(s.w_num.size());
    for (std::size_t i = 0; i < s.w_num.size(); ++i)
        s.w[i] = static_cast<double>(s.w_num[i]) / static_cast<double>(s.w_den);
    return s;
}

VelocitySet make_velocity_set(const std::string& name, double cs2) {
    return make_velocity_set(velocity_set_from_string(name), cs2);
}

} // namespace qlbm
