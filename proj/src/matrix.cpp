#include "enumera/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace enumera {

RatMatrix::RatMatrix(size_t rows, size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw std::invalid_argument("RatMatrix: entry count must be rows*cols");
}

namespace {

// Bareiss elimination on an integer matrix. Returns the rank; if det_out is
// non-null the matrix must be square and receives the exact determinant.
size_t bareiss(std::vector<std::vector<BigInt>>& a, BigInt* det_out) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    BigInt prev = 1;
    int sign = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            sign = -sign;
        }
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    if (det_out) *det_out = (r == rows) ? BigInt(sign) * prev : BigInt(0);
    return r;
}

// Clears denominators of each row; the scale of row i goes to scales[i].
std::vector<std::vector<BigInt>> to_integer_rows(const RatMatrix& m, std::vector<BigInt>& scales) {
    std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
    scales.assign(m.rows(), 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, BigInt(denominator(m.at(i, j))));
        scales[i] = l;
        for (size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            a[i][j] = numerator(q) * exact_div(l, denominator(q));
        }
    }
    return a;
}

}  // namespace

size_t int_rank(std::vector<std::vector<BigInt>> a) { return bareiss(a, nullptr); }

BigInt int_det(std::vector<std::vector<BigInt>> a) {
    if (!a.empty() && a.size() != a[0].size())
        throw std::invalid_argument("int_det: matrix must be square");
    BigInt d;
    bareiss(a, &d);
    return d;
}

size_t rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<BigInt> scales;
    auto a = to_integer_rows(m, scales);
    return bareiss(a, nullptr);
}

Rat det(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: matrix must be square");
    if (m.rows() == 0) return Rat(1);
    std::vector<BigInt> scales;
    auto a = to_integer_rows(m, scales);
    BigInt d;
    bareiss(a, &d);
    BigInt denom = 1;
    for (const BigInt& s : scales) denom *= s;
    return make_rat(d, denom);
}

}  // namespace enumera
