#include "sqc/latin.hpp"

#include <stdexcept>
#include <string>

namespace sqc {

LatinSquare::LatinSquare(int order, const std::vector<std::vector<int>>& rows)
    : order_(order) {
    if (order < 1) throw std::invalid_argument("latin square order must be positive");
    if (static_cast<int>(rows.size()) != order)
        throw std::invalid_argument("latin square needs exactly order rows");
    cells_.reserve(static_cast<size_t>(order) * order);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != order)
            throw std::invalid_argument("ragged latin square row");
        for (int v : row) {
            if (v < 1 || v > order)
                throw std::invalid_argument("latin square entry out of range: " +
                                            std::to_string(v));
            cells_.push_back(v - 1);
        }
    }
}

int LatinSquare::value(int row, int col) const {
    if (row < 1 || row > order_ || col < 1 || col > order_)
        throw std::invalid_argument("latin square index out of range");
    return cells_[static_cast<size_t>(row - 1) * order_ + (col - 1)] + 1;
}

std::vector<std::vector<int>> LatinSquare::rows() const {
    std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c)
            out[r][c] = cells_[static_cast<size_t>(r) * order_ + c] + 1;
    return out;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<LatinSquare> mols_family(int n) {
    if (n < 3) throw std::domain_error("mols_family requires n >= 3, got " + std::to_string(n));
    if (!is_prime(n)) throw std::domain_error("mols_family requires prime n, got " + std::to_string(n));
    std::vector<LatinSquare> fam;
    fam.reserve(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                rows[j - 1][k - 1] = 1 + ((j - 1) + i * (k - 1)) % n;
        fam.emplace_back(n, rows);
    }
    return fam;
}

bool is_latin(const LatinSquare& s) {
    const int n = s.order();
    for (int r = 1; r <= n; ++r) {
        std::vector<char> seen(n + 1, 0);
        for (int c = 1; c <= n; ++c) {
            const int v = s.value(r, c);
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    for (int c = 1; c <= n; ++c) {
        std::vector<char> seen(n + 1, 0);
        for (int r = 1; r <= n; ++r) {
            const int v = s.value(r, c);
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("orthogonality needs equal orders");
    const int n = a.order();
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            const size_t pair = static_cast<size_t>(a.value(r, c) - 1) * n + (b.value(r, c) - 1);
            if (seen[pair]) return false;
            seen[pair] = 1;
        }
    return true;
}

}  // namespace sqc
