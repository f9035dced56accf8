#pragma once

#include <string>

#include "homcoho/deformation.hpp"
#include "homcoho/gs.hpp"

namespace homcoho {

// Algebra files are UTF-8 JSON with exact rational literals ("3/2") and
// 0-based basis indices:
//   { "schema": "homcoho/algebra-v1", "dim": d, "basis": [..],
//     "mu": [[i, j, k, "p/q"], ...],      e_i e_j = sum_k c e_k
//     "alpha": [[k, j, "p/q"], ...],      alpha(e_j) = sum_k c e_k
//     "unit": ["c0", ...],                optional
//     "delta": [[i, j, k, "p/q"], ...],   coefficient of e_j (x) e_k in Delta e_i
//     "beta": [[k, j, "p/q"], ...], "counit": ["c0", ...] }
// A file with coalgebra data (delta/beta/counit) parses as a Hom-bialgebra.
struct ParsedFile {
    bool is_bialgebra = false;
    HomAlgebra algebra;
    HomBialgebra bialgebra;
};

ParsedFile parse_algebra_file(const std::string& text);

// { "schema": "homcoho/map-v1", "dim": d, "entries": [[k, j, "p/q"], ...] }
// with f(e_j) = sum_k c e_k.
MultiMap parse_map_file(const std::string& text);

// { "schema": "homcoho/deformation-v1", "order": N,
//   "mu": [[n, i, j, k, "p/q"], ...], "alpha": [[n, k, j, "p/q"], ...] }
// with orders n >= 1; order-0 terms come from the base algebra.
TruncatedDeformation parse_deformation_file(const std::string& text, const HomAlgebra& base);

std::string serialize_algebra(const HomAlgebra& a);
std::string serialize_bialgebra(const HomBialgebra& b);

std::string read_file(const std::string& path);  // throws StructureError
std::string fnv1a_hex(const std::string& bytes);

}  // namespace homcoho
