#include <jetmoduli/linalg.hpp>

#include <stdexcept>
#include <utility>

namespace jetmoduli {

namespace {

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

// Rows of m scaled by the lcm of their denominators: integer matrix with the
// same row space and kernel.
std::vector<std::vector<Int>> integer_rows(const QMatrix& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> out(static_cast<size_t>(rows));
    for (Eigen::Index i = 0; i < rows; ++i) {
        Int scale = 1;
        for (Eigen::Index j = 0; j < cols; ++j)
            scale = lcm_int(scale, m(i, j).denominator());
        auto& row = out[static_cast<size_t>(i)];
        row.resize(static_cast<size_t>(cols));
        for (Eigen::Index j = 0; j < cols; ++j)
            row[static_cast<size_t>(j)] = m(i, j).numerator() * (scale / m(i, j).denominator());
    }
    return out;
}

struct Echelon {
    std::vector<std::vector<Int>> rows;     // pivot rows only, echelon order
    std::vector<Eigen::Index> pivot_cols;   // strictly increasing
    Eigen::Index cols = 0;
};

// Fraction-free (Bareiss) forward elimination with column scanning, so
// rank-deficient and non-square inputs reduce correctly. Pivot choice within
// the current column is the nonzero entry of least magnitude (lowest row index
// on ties), which keeps the integer minors small and is deterministic.
Echelon bareiss_echelon(const QMatrix& m) {
    Echelon ech;
    ech.cols = m.cols();
    auto rows = integer_rows(m);
    const size_t nrows = rows.size();
    const size_t ncols = static_cast<size_t>(m.cols());

    Int prev = 1;
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < nrows; ++col) {
        size_t piv = nrows;
        for (size_t i = r; i < nrows; ++i) {
            const Int& v = rows[i][col];
            if (v == 0) continue;
            if (piv == nrows || boost::multiprecision::abs(v) < boost::multiprecision::abs(rows[piv][col]))
                piv = i;
        }
        if (piv == nrows) continue;
        if (piv != r) std::swap(rows[piv], rows[r]);

        const Int pivot = rows[r][col];
        for (size_t i = r + 1; i < nrows; ++i) {
            const Int factor = rows[i][col];
            for (size_t j = col + 1; j < ncols; ++j)
                rows[i][j] = (pivot * rows[i][j] - factor * rows[r][j]) / prev;
            rows[i][col] = 0;
        }
        prev = pivot;
        ech.pivot_cols.push_back(static_cast<Eigen::Index>(col));
        ++r;
    }
    rows.resize(r);
    ech.rows = std::move(rows);
    return ech;
}

}  // namespace

Eigen::Index rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<Eigen::Index>(bareiss_echelon(m).pivot_cols.size());
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    const Eigen::Index cols = m.cols();
    std::vector<QVector> basis;
    if (cols == 0) return basis;

    Echelon ech = (m.rows() == 0) ? Echelon{{}, {}, cols} : bareiss_echelon(m);
    const size_t r = ech.pivot_cols.size();

    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (Eigen::Index p : ech.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;

    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        QVector v = QVector::Zero(cols);
        v(f) = Rational(1);
        // Back-substitute the pivot coordinates; rows above the free column's
        // position are the only ones with nonzero contributions.
        for (size_t ii = r; ii-- > 0;) {
            const Eigen::Index p = ech.pivot_cols[ii];
            if (p > f) continue;
            const auto& row = ech.rows[ii];
            Rational s(0);
            for (Eigen::Index j = p + 1; j <= f; ++j) {
                if (row[static_cast<size_t>(j)] == 0 || v(j).is_zero()) continue;
                s += Rational(row[static_cast<size_t>(j)]) * v(j);
            }
            v(p) = -s / Rational(row[static_cast<size_t>(p)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Int binomial(const Int& a, const Int& b) {
    if (a < 0) throw std::invalid_argument("binomial: negative upper argument");
    if (b < 0 || b > a) return 0;
    Int bb = b;
    if (a - b < bb) bb = a - b;
    Int r = 1;
    for (Int i = 1; i <= bb; ++i)
        r = r * (a - bb + i) / i;
    return r;
}

Int binomial(long long a, long long b) { return binomial(Int(a), Int(b)); }

}  // namespace jetmoduli
