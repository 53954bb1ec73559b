#ifndef LGCM_HOMOLOGY_HPP
#define LGCM_HOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "lgcm/simplicial.hpp"

namespace lgcm {

/// The coefficient field: characteristic 0 (rationals) or a prime p.
struct FieldId {
    long long characteristic = 0;

    static FieldId rationals() { return FieldId{0}; }
    static FieldId gf(long long p); // throws input_error unless p is prime

    bool operator==(const FieldId&) const = default;
    std::string name() const;
};

/// Reduced Betti numbers, degree -1 .. dim.
struct HomologyProfile {
    std::map<int, long long> betti;

    long long operator()(int i) const {
        auto it = betti.find(i);
        return it == betti.end() ? 0 : it->second;
    }
    bool all_zero() const;
};

/// Signed boundary matrix of the augmented oriented chain complex: rows are
/// (d-1)-faces, columns are d-faces, both in sorted order; the d = 0 matrix is
/// the augmentation row of all ones.
std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& c, int d);

/// Exact rank over the given field (Gaussian elimination mod p, or
/// fraction-free Bareiss elimination over the integers for the rationals).
long long matrix_rank(const std::vector<std::vector<int>>& m, FieldId field);

HomologyProfile reduced_homology(const SimplicialComplex& c, FieldId field);

} // namespace lgcm

#endif
