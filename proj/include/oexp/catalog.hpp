#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oexp/algebra_io.hpp"

namespace oexp {

// Built-in example algebras. Parameterized families take the parameter n:
//   dim2_solvable          [e1,e2] = e2
//   heisenberg3            [e1,e2] = e3
//   example6dim            the six-dimensional iterated semidirect sum
//   cn_sln(n)              C^n semidirect sl_n with the standard action
//   abelian(m)             abelian C^m
std::vector<std::string> catalog_names();

bool catalog_requires_param(const std::string& name);

AlgebraFile catalog_entry(const std::string& name,
                          std::optional<std::size_t> param = std::nullopt);

// Structure constants for sl_n in the basis h1..h_{n-1}, then e_{ij} (i != j)
// in row-major order; used by the catalog and by tests.
LieAlgebra sl_algebra(std::size_t n);

}  // namespace oexp
