#include <jetmoduli/multi_index.hpp>

#include <numeric>
#include <stdexcept>

namespace jetmoduli {

int MultiIndex::check_vars(int n) {
    if (n < 1) throw std::invalid_argument("MultiIndex: need at least one variable");
    return n;
}

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    check_vars(static_cast<int>(e_.size()));
    for (int v : e_)
        if (v < 0) throw std::invalid_argument("MultiIndex: negative exponent");
}

int MultiIndex::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

MultiIndex MultiIndex::plus(int var) const {
    MultiIndex m = *this;
    ++m.e_[static_cast<size_t>(var)];
    return m;
}

MultiIndex MultiIndex::minus(int var) const {
    if (e_[static_cast<size_t>(var)] == 0)
        throw std::invalid_argument("MultiIndex::minus: exponent already zero");
    MultiIndex m = *this;
    --m.e_[static_cast<size_t>(var)];
    return m;
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Inside a degree block earlier means lexicographically larger.
    return a.exponents() > b.exponents();
}

namespace {

void emit_degree(int n, int d, int pos, MultiIndex& scratch, std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        scratch[pos] = d;
        out.push_back(scratch);
        scratch[pos] = 0;
        return;
    }
    for (int e = d; e >= 0; --e) {
        scratch[pos] = e;
        emit_degree(n, d - e, pos + 1, scratch, out);
    }
    scratch[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(int n, int d) {
    if (d < 0) throw std::invalid_argument("multi_indices_of_degree: negative degree");
    std::vector<MultiIndex> out;
    MultiIndex scratch(n);
    emit_degree(n, d, 0, scratch, out);
    return out;
}

std::vector<MultiIndex> multi_indices_in_range(int n, int lo, int hi) {
    std::vector<MultiIndex> out;
    for (int d = lo; d <= hi; ++d) {
        auto block = multi_indices_of_degree(n, d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

Int monomial_count(int n, int d) {
    return binomial(Int(n + d - 1), Int(n - 1));
}

}  // namespace jetmoduli
