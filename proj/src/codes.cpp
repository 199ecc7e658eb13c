#include "latd/codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "latd/numfield.hpp"
#include "latd/rng.hpp"

namespace latd {
namespace {

void validate_shape(i64 p, int N, const std::vector<int>& dims) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (N < 1) throw std::invalid_argument("code length must be positive");
  if (dims.empty()) throw std::invalid_argument("at least one level required");
  int prev = 0;
  for (int k : dims) {
    if (k <= prev) throw std::invalid_argument("dimensions must be strictly increasing");
    prev = k;
  }
  if (dims.back() > N) throw std::invalid_argument("top dimension exceeds length");
}

}  // namespace

NestedCodeFamily build_family(i64 p, int N, const std::vector<int>& dims,
                              const std::vector<IntMat>& blocks) {
  validate_shape(p, N, dims);
  if (blocks.size() != dims.size())
    throw std::invalid_argument("one B block per level required");
  const int ka = dims.back();
  const int width = N - ka;
  NestedCodeFamily f;
  f.p = p;
  f.N = N;
  f.a = static_cast<int>(dims.size());
  f.dims = dims;
  f.blocks = blocks;
  f.M.assign(ka, IntVec(N, 0));
  int row = 0;
  for (int i = 0; i < f.a; ++i) {
    const int rows = dims[i] - (i == 0 ? 0 : dims[i - 1]);
    if (static_cast<int>(blocks[i].size()) != rows)
      throw std::invalid_argument("B block has wrong row count");
    for (const IntVec& brow : blocks[i]) {
      if (static_cast<int>(brow.size()) != width)
        throw std::invalid_argument("B block has wrong width");
      f.M[row][row] = 1;
      for (int j = 0; j < width; ++j) {
        if (brow[j] < 0 || brow[j] >= p)
          throw std::invalid_argument("B entry outside [0, p)");
        f.M[row][ka + j] = brow[j];
      }
      ++row;
    }
  }
  return f;
}

NestedCodeFamily random_family(i64 p, int N, const std::vector<int>& dims,
                               uint64_t seed) {
  validate_shape(p, N, dims);
  RngStream stream = make_stream(seed, StreamPurpose::kCodeBlocks, 0, 0);
  const int width = N - dims.back();
  std::vector<IntMat> blocks(dims.size());
  for (size_t i = 0; i < dims.size(); ++i) {
    const int rows = dims[i] - (i == 0 ? 0 : dims[i - 1]);
    blocks[i].assign(rows, IntVec(width, 0));
    for (int r = 0; r < rows; ++r)
      for (int j = 0; j < width; ++j)
        blocks[i][r][j] = static_cast<i64>(stream.next_below(static_cast<uint64_t>(p)));
  }
  return build_family(p, N, dims, blocks);
}

int row_level(const NestedCodeFamily& family, int t) {
  for (int i = 0; i < family.a; ++i)
    if (t < family.dims[i]) return i + 1;
  throw std::out_of_range("row index beyond k_a");
}

std::vector<i64> encode_level(const NestedCodeFamily& family, int level,
                              const std::vector<i64>& message) {
  if (level < 1 || level > family.a) throw std::invalid_argument("bad level");
  const int k = family.dims[level - 1];
  if (static_cast<int>(message.size()) != k)
    throw std::invalid_argument("message length must be k_i");
  std::vector<i64> word(family.N, 0);
  for (int t = 0; t < k; ++t) {
    const i64 u = ((message[t] % family.p) + family.p) % family.p;
    for (int j = 0; j < family.N; ++j)
      word[j] = (word[j] + u * family.M[t][j]) % family.p;
  }
  return word;
}

bool is_codeword(const NestedCodeFamily& family, int level,
                 const std::vector<i64>& word) {
  if (level < 1 || level > family.a) throw std::invalid_argument("bad level");
  if (static_cast<int>(word.size()) != family.N)
    throw std::invalid_argument("word length must be N");
  for (i64 v : word)
    if (v < 0 || v >= family.p) throw std::invalid_argument("word entry outside [0, p)");
  // Identity columns force the message; one re-encode settles membership.
  const int k = family.dims[level - 1];
  const std::vector<i64> message(word.begin(), word.begin() + k);
  return encode_level(family, level, message) == word;
}

std::string serialize_family(const NestedCodeFamily& family) {
  if (family.p > 10)
    throw std::invalid_argument("digit-string form requires p <= 10");
  std::ostringstream out;
  out << family.p << ' ' << family.N << ' ' << family.a;
  for (int k : family.dims) out << ' ' << k;
  out << '\n';
  if (family.N > family.dims.back())
    for (const IntMat& block : family.blocks)
      for (const IntVec& row : block) {
        for (i64 v : row) out << static_cast<char>('0' + v);
        out << '\n';
      }
  return out.str();
}

NestedCodeFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  i64 p = 0;
  int N = 0, a = 0;
  if (!(in >> p >> N >> a) || a < 1) throw std::invalid_argument("bad family header");
  std::vector<int> dims(a);
  for (int& k : dims)
    if (!(in >> k)) throw std::invalid_argument("bad family header");
  validate_shape(p, N, dims);
  if (p > 10) throw std::invalid_argument("digit-string form requires p <= 10");
  const int ka = dims.back();
  const int width = N - ka;
  std::vector<IntMat> blocks(a);
  std::string line;
  std::getline(in, line);
  for (int i = 0; i < a; ++i) {
    const int rows = dims[i] - (i == 0 ? 0 : dims[i - 1]);
    blocks[i].assign(rows, IntVec(width, 0));
    for (int r = 0; r < rows && width > 0; ++r) {
      do {
        if (!std::getline(in, line)) throw std::invalid_argument("missing B row");
      } while (line.empty());
      if (static_cast<int>(line.size()) != width)
        throw std::invalid_argument("B row has wrong width");
      for (int j = 0; j < width; ++j) {
        const int d = line[j] - '0';
        if (d < 0 || d >= p) throw std::invalid_argument("B digit outside [0, p)");
        blocks[i][r][j] = d;
      }
    }
  }
  return build_family(p, N, dims, blocks);
}

}  // namespace latd
