#include "enumera/projective.hpp"

#include <sstream>
#include <stdexcept>

#include "enumera/matrix.hpp"

namespace enumera {

HomCoords normalize(std::array<Rat, 4> c) {
    int lead = -1;
    for (int i = 0; i < 4; ++i) {
        if (c[i] != 0) {
            lead = i;
            break;
        }
    }
    if (lead < 0) throw std::invalid_argument("HomCoords: all coordinates zero");
    Rat s = c[lead];
    for (int i = lead; i < 4; ++i) c[i] /= s;
    return HomCoords{c};
}

std::string HomCoords::str() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < 4; ++i) {
        if (i) out << ":";
        out << c[i];
    }
    out << ")";
    return out.str();
}

ProjPoint make_point(const Rat& x0, const Rat& x1, const Rat& x2, const Rat& x3) {
    return ProjPoint{normalize({x0, x1, x2, x3})};
}

ProjPlane make_plane(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3) {
    return ProjPlane{normalize({a0, a1, a2, a3})};
}

Rat incidence_pairing(const ProjPoint& p, const ProjPlane& h) {
    Rat s = 0;
    for (int i = 0; i < 4; ++i) s += p.h.c[i] * h.h.c[i];
    return s;
}

bool incident(const ProjPoint& p, const ProjPlane& h) { return incidence_pairing(p, h) == 0; }

namespace {

RatMatrix stack_rows(std::initializer_list<const HomCoords*> rows) {
    RatMatrix m(rows.size(), 4);
    size_t r = 0;
    for (const HomCoords* h : rows) {
        for (size_t c = 0; c < 4; ++c) m.at(r, c) = h->c[c];
        ++r;
    }
    return m;
}

}  // namespace

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    return rank(stack_rows({&a.h, &b.h, &c.h})) <= 2;
}

bool coplanar(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d) {
    return det(stack_rows({&a.h, &b.h, &c.h, &d.h})) == 0;
}

ProjPlane span_plane(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    // Coefficients are the signed 3x3 minors of the 3x4 coordinate matrix.
    std::array<Rat, 4> coeffs;
    const std::array<const HomCoords*, 3> rows{&a.h, &b.h, &c.h};
    for (int skip = 0; skip < 4; ++skip) {
        RatMatrix m(3, 3);
        for (int r = 0; r < 3; ++r) {
            int cc = 0;
            for (int col = 0; col < 4; ++col) {
                if (col == skip) continue;
                m.at(r, cc++) = rows[r]->c[col];
            }
        }
        Rat minor = det(m);
        coeffs[skip] = (skip % 2 == 0) ? minor : -minor;
    }
    for (const Rat& v : coeffs)
        if (v != 0) return ProjPlane{normalize(coeffs)};
    throw std::domain_error("span_plane: points are collinear");
}

}  // namespace enumera
