#include "mcb/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace mcb {

int rank_exact_int(std::vector<std::vector<Int>> m) {
    const size_t nrows = m.size();
    if (nrows == 0) return 0;
    const size_t ncols = m[0].size();

    Int prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < nrows; ++col) {
        size_t pivot = row;
        while (pivot < nrows && m[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[row], m[pivot]);

        for (size_t i = row + 1; i < nrows; ++i) {
            for (size_t jj = col + 1; jj < ncols; ++jj) {
                Int num = m[row][col] * m[i][jj] - m[i][col] * m[row][jj];
                Int quo, rem;
                divide_qr(num, prev, quo, rem);
                if (rem != 0) {
                    throw std::logic_error("rank_exact: inexact Bareiss division (bug)");
                }
                m[i][jj] = std::move(quo);
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

int rank_exact(std::vector<std::vector<Rat>> rows) {
    std::vector<std::vector<Int>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        Int lcm = 1;
        for (const Rat& x : r) {
            lcm = boost::integer::lcm(lcm, Int(denominator(x)));
        }
        std::vector<Int> scaled;
        scaled.reserve(r.size());
        for (const Rat& x : r) {
            scaled.push_back(Int(numerator(x)) * (lcm / Int(denominator(x))));
        }
        m.push_back(std::move(scaled));
    }
    return rank_exact_int(std::move(m));
}

}  // namespace mcb
