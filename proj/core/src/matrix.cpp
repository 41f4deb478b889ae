#include "mukai/matrix.hpp"

namespace mukai {

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // Bareiss: division is exact.
                a.at(i, j) = num / prev;
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("inverse of non-square matrix");
    const std::size_t n = m.rows();

    // Gauss-Jordan over exact rationals on [m | I].
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw ValidationError("singular matrix has no inverse");
        std::swap(a[col], a[p]);
        const Rat pivot = a[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }

    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& q = a[i][n + j];
            if (q.get_den() != 1)
                throw ValidationError("matrix inverse is not integral");
            inv.at(i, j) = rat_num(q);
        }
    return inv;
}

} // namespace mukai
