#ifndef ENUMERA_PROJECTIVE_HPP
#define ENUMERA_PROJECTIVE_HPP

#include <array>
#include <compare>
#include <string>

#include "enumera/bigint.hpp"

namespace enumera {

// Homogeneous 4-tuple in canonical form: not all zero, first nonzero
// coordinate scaled to 1.
struct HomCoords {
    std::array<Rat, 4> c;

    bool operator==(const HomCoords&) const = default;
    bool operator<(const HomCoords& o) const { return c < o.c; }
    std::string str() const;
};

HomCoords normalize(std::array<Rat, 4> c);

struct ProjPoint {
    HomCoords h;
    bool operator==(const ProjPoint&) const = default;
    bool operator<(const ProjPoint& o) const { return h < o.h; }
};

struct ProjPlane {
    HomCoords h;
    bool operator==(const ProjPlane&) const = default;
    bool operator<(const ProjPlane& o) const { return h < o.h; }
};

ProjPoint make_point(const Rat& x0, const Rat& x1, const Rat& x2, const Rat& x3);
ProjPlane make_plane(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3);

Rat incidence_pairing(const ProjPoint& p, const ProjPlane& h);
bool incident(const ProjPoint& p, const ProjPlane& h);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool coplanar(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d);

// The plane spanned by three non-collinear points; throws std::domain_error
// on a collinear triple.
ProjPlane span_plane(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

}  // namespace enumera

#endif
