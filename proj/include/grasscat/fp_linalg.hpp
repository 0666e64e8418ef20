#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grasscat/field.hpp"

namespace grasscat {

using FpVec = std::vector<Fp>;
using FpMat = std::vector<FpVec>;

// Row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(FpMat& m, int cols);
int fp_rank(FpMat m, int cols);
// Basis of {v : m v = 0}.
std::vector<FpVec> nullspace(FpMat m, int cols);

// Deterministic source of generic field elements.
class FieldRng {
public:
    explicit FieldRng(std::uint64_t seed) : gen_(seed) {}
    Fp next() { return Fp::raw(gen_() % Fp::P); }

private:
    std::mt19937_64 gen_;
};

}  // namespace grasscat
