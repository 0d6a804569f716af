#pragma once

// PG(2,q) over a prime field: points and lines are the normalized nonzero
// homogeneous triples, incidence is a vanishing dot product.  Construction
// verifies the plane axioms before returning.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rmf/circuit.hpp"

namespace rmf {

inline bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

struct ProjectivePlane {
    std::uint64_t q = 0;
    std::size_t n = 0; // q^2 + q + 1 points (and as many lines)
    std::vector<std::array<std::uint64_t, 3>> points; // normalized triples
    std::vector<std::array<std::uint64_t, 3>> lines;  // normalized triples
    std::vector<std::vector<std::size_t>> incidence;  // line -> sorted point ids
};

namespace detail {

// First nonzero coordinate scaled to 1; unique representative per ray.
inline std::vector<std::array<std::uint64_t, 3>> normalized_triples(std::uint64_t q) {
    std::vector<std::array<std::uint64_t, 3>> out;
    out.reserve(static_cast<std::size_t>(q * q + q + 1));
    // (1, y, z), (0, 1, z), (0, 0, 1) in lexicographic order
    for (std::uint64_t y = 0; y < q; ++y)
        for (std::uint64_t z = 0; z < q; ++z)
            out.push_back({1, y, z});
    for (std::uint64_t z = 0; z < q; ++z)
        out.push_back({0, 1, z});
    out.push_back({0, 0, 1});
    return out;
}

} // namespace detail

/// Builds the plane of prime order q and checks all four axioms: unique line
/// through two points, unique meeting point of two lines, q+1 lines per
/// point, and a quadrilateral with no three corners collinear.
inline ProjectivePlane make_projective_plane(std::uint64_t q) {
    if (!is_prime(q))
        throw Error(Errc::NotPrime, "projective plane generator needs a prime order");

    ProjectivePlane p;
    p.q = q;
    p.points = detail::normalized_triples(q);
    p.lines = detail::normalized_triples(q);
    p.n = p.points.size();

    auto incident = [&](const std::array<std::uint64_t, 3>& line,
                        const std::array<std::uint64_t, 3>& pt) {
        return (line[0] * pt[0] + line[1] * pt[1] + line[2] * pt[2]) % q == 0;
    };

    p.incidence.resize(p.n);
    std::vector<std::size_t> lines_per_point(p.n, 0);
    for (std::size_t l = 0; l < p.n; ++l) {
        for (std::size_t i = 0; i < p.n; ++i)
            if (incident(p.lines[l], p.points[i])) {
                p.incidence[l].push_back(i);
                ++lines_per_point[i];
            }
        if (p.incidence[l].size() != q + 1)
            throw std::logic_error("projective plane: line has wrong point count");
    }
    for (std::size_t i = 0; i < p.n; ++i)
        if (lines_per_point[i] != q + 1)
            throw std::logic_error("projective plane: point has wrong line count");

    // Pairwise axioms via incidence bitsets.
    std::vector<std::vector<std::uint8_t>> on(p.n, std::vector<std::uint8_t>(p.n, 0));
    for (std::size_t l = 0; l < p.n; ++l)
        for (std::size_t i : p.incidence[l])
            on[l][i] = 1;
    for (std::size_t a = 0; a < p.n; ++a)
        for (std::size_t b = a + 1; b < p.n; ++b) {
            std::size_t common_lines = 0, common_points = 0;
            for (std::size_t l = 0; l < p.n; ++l)
                if (on[l][a] && on[l][b]) ++common_lines;
            for (std::size_t i = 0; i < p.n; ++i)
                if (on[a][i] && on[b][i]) ++common_points;
            if (common_lines != 1)
                throw std::logic_error("projective plane: point pair not on a unique line");
            if (common_points != 1)
                throw std::logic_error("projective plane: line pair without a unique point");
        }

    // Standard frame e1, e2, e3, e1+e2+e3: no three collinear.
    const std::array<std::array<std::uint64_t, 3>, 4> frame = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            for (std::size_t c = b + 1; c < 4; ++c)
                for (std::size_t l = 0; l < p.n; ++l)
                    if (incident(p.lines[l], frame[a]) && incident(p.lines[l], frame[b]) &&
                        incident(p.lines[l], frame[c]))
                        throw std::logic_error("projective plane: frame has three collinear points");

    return p;
}

} // namespace rmf
