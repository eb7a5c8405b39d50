// Cyclic Latin squares of prime order and mutual orthogonality checks.
#pragma once

#include <vector>

namespace sqc {

// Square array with entries in 1..order. Construction validates shape and
// entry range only; Latinness is a separate predicate so that defective
// candidates can be represented and rejected.
class LatinSquare {
public:
    // rows: order x order, 1-based entries.
    LatinSquare(int order, const std::vector<std::vector<int>>& rows);

    int order() const { return order_; }

    // 1-based row/column in 1..order; returns the entry in 1..order.
    int value(int row, int col) const;

    // Materializes 1-based rows (storage is 0-based internally).
    std::vector<std::vector<int>> rows() const;

    bool operator==(const LatinSquare& other) const = default;

private:
    int order_ = 0;
    std::vector<int> cells_;  // row-major, 0-based values
};

bool is_prime(int n);

// The family L_1..L_{n-1} with L_i(j,k) = 1 + ((j-1) + i*(k-1) mod n).
// Each member is Latin and the family is pairwise orthogonal when n is prime.
// Throws std::domain_error when n < 3 or n is not prime.
std::vector<LatinSquare> mols_family(int n);

// True iff every row and every column is a permutation of 1..order.
bool is_latin(const LatinSquare& s);

// True iff the n^2 ordered pairs (a(j,k), b(j,k)) are all distinct.
// Throws std::invalid_argument when orders differ.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

}  // namespace sqc
