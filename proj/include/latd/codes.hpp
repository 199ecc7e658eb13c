#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latd/intmat.hpp"

// Nested linear codes C_1 c C_2 c ... c C_a over F_p in semi-systematic
// form: the stacked generator matrix M has identity blocks on the diagonal
// of its first k_a columns and blocks B_1..B_a on the right, so the first
// k_i rows generate C_i and nesting holds by construction.
namespace latd {

struct NestedCodeFamily {
  i64 p = 0;
  int N = 0;
  int a = 0;
  std::vector<int> dims;        // k_1 < k_2 < ... < k_a <= N
  std::vector<IntMat> blocks;   // blocks[i] is (k_{i+1} - k_i) x (N - k_a)
  IntMat M;                     // k_a x N, entries in [0, p)
};

NestedCodeFamily build_family(i64 p, int N, const std::vector<int>& dims,
                              const std::vector<IntMat>& blocks);
// B entries drawn i.i.d. uniform over F_p from a stream keyed on seed alone,
// so a recorded seed reproduces the family bit-exactly.
NestedCodeFamily random_family(i64 p, int N, const std::vector<int>& dims,
                               uint64_t seed);

// Level of row t (0-based): the smallest i with t < k_i, returned 1-based.
int row_level(const NestedCodeFamily& family, int t);

std::vector<i64> encode_level(const NestedCodeFamily& family, int level,
                              const std::vector<i64>& message);
bool is_codeword(const NestedCodeFamily& family, int level,
                 const std::vector<i64>& word);

// Text form: header "p N a k_1 ... k_a", then the k_a rows of B_1..B_a
// stacked, each row one string of digits (requires p <= 10); no B lines
// when k_a = N.
std::string serialize_family(const NestedCodeFamily& family);
NestedCodeFamily parse_family(const std::string& text);

}  // namespace latd
