#include "lgcm/homology.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "lgcm/errors.hpp"

namespace lgcm {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    auto mod = [p](long long x) {
        x %= p;
        return x < 0 ? x + p : x;
    };
    auto inv = [&](long long a) {
        // Fermat
        long long r = 1, b = mod(a), e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    long long rank = 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (mod(m[r][col]) != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        long long scale = inv(m[rank][col]);
        for (std::size_t c = col; c < cols; ++c) m[rank][c] = mod(m[rank][c]) * scale % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            long long f = mod(m[r][col]);
            if (!f) continue;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = mod(m[r][c] - f * m[rank][c]);
        }
        ++rank;
    }
    return rank;
}

long long rank_rational(const std::vector<std::vector<int>>& in) {
    using boost::multiprecision::cpp_int;
    std::size_t rows = in.size();
    std::size_t cols = rows ? in[0].size() : 0;
    std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = in[r][c];

    // Bareiss fraction-free elimination; intermediate entries are minors.
    cpp_int prev = 1;
    long long rank = 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace

FieldId FieldId::gf(long long p) {
    if (!is_prime(p)) throw input_error("FieldId: " + std::to_string(p) + " is not prime");
    return FieldId{p};
}

std::string FieldId::name() const {
    return characteristic == 0 ? "Q" : "GF(" + std::to_string(characteristic) + ")";
}

bool HomologyProfile::all_zero() const {
    for (auto [i, b] : betti)
        if (b != 0) return false;
    return true;
}

std::vector<std::vector<int>> boundary_matrix(const SimplicialComplex& c, int d) {
    if (c.is_void()) throw input_error("boundary_matrix: void complex");
    auto faces = c.faces_by_dim();
    auto level = [&](int dd) -> const std::vector<std::vector<int>>& {
        static const std::vector<std::vector<int>> none;
        int idx = dd + 1;
        if (idx < 0 || idx >= static_cast<int>(faces.size())) return none;
        return faces[idx];
    };
    const auto& rows_faces = level(d - 1);
    const auto& cols_faces = level(d);
    std::vector<std::vector<int>> m(rows_faces.size(), std::vector<int>(cols_faces.size(), 0));
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t r = 0; r < rows_faces.size(); ++r) row_of[rows_faces[r]] = r;
    for (std::size_t cidx = 0; cidx < cols_faces.size(); ++cidx) {
        const auto& face = cols_faces[cidx];
        int sign = 1;
        for (std::size_t i = 0; i < face.size(); ++i) {
            std::vector<int> sub;
            for (std::size_t j = 0; j < face.size(); ++j)
                if (j != i) sub.push_back(face[j]);
            m[row_of.at(sub)][cidx] = sign;
            sign = -sign;
        }
    }
    return m;
}

long long matrix_rank(const std::vector<std::vector<int>>& m, FieldId field) {
    if (m.empty() || m[0].empty()) return 0;
    if (field.characteristic == 0) return rank_rational(m);
    std::vector<std::vector<long long>> copy(m.size(), std::vector<long long>(m[0].size()));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[0].size(); ++c) copy[r][c] = m[r][c];
    return rank_mod_p(std::move(copy), field.characteristic);
}

HomologyProfile reduced_homology(const SimplicialComplex& c, FieldId field) {
    if (c.is_void()) throw input_error("reduced_homology: void complex");
    int d = c.dim();
    auto faces = c.faces_by_dim();
    auto count = [&](int dd) -> long long {
        int idx = dd + 1;
        if (idx < 0 || idx >= static_cast<int>(faces.size())) return 0;
        return static_cast<long long>(faces[idx].size());
    };
    std::vector<long long> rank(d + 2, 0); // rank[i+1] = rank of boundary_i
    for (int i = 0; i <= d; ++i) rank[i + 1] = matrix_rank(boundary_matrix(c, i), field);
    HomologyProfile profile;
    for (int i = -1; i <= d; ++i) {
        long long nullity = count(i) - rank[i + 1];
        long long next_rank = (i + 2 <= d + 1) ? rank[i + 2] : 0;
        profile.betti[i] = nullity - next_rank;
    }
    return profile;
}

} // namespace lgcm
