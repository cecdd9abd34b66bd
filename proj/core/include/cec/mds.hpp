#pragma once

#include <cstdint>
#include <vector>

namespace cec {

/// Prime-field element value; all codec arithmetic is mod p with p > Z.
using Fp = std::uint64_t;

constexpr Fp kDefaultPrime = 65537;

Fp fp_add(Fp a, Fp b, Fp p);
Fp fp_sub(Fp a, Fp b, Fp p);
Fp fp_mul(Fp a, Fp b, Fp p);
Fp fp_pow(Fp a, std::uint64_t e, Fp p);
Fp fp_inv(Fp a, Fp p);
bool is_prime(Fp p);

/// Dense row-major matrix over GF(p).
struct FieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Fp> a;

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  Fp& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Fp at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Z x L Vandermonde generator over GF(p), evaluation points 1..Z. Every
/// L x L row-submatrix is invertible, so any L cs-matrices decode.
struct Generator {
  int Z = 0;
  int L = 0;
  Fp p = kDefaultPrime;
  FieldMatrix G;                // Z x L, G[i][l] = (i+1)^l
  std::vector<Fp> eval_points;  // 1..Z
};

/// Coded sub-matrix: row i of G applied to the L row-blocks of X.
struct CsMatrix {
  int index = 0;     // i in [1..Z]
  FieldMatrix rows;  // (q/L) x r
};

/// One coded dot product: row `row_index` of cs-matrix `cs_index` times w.
struct PartialResult {
  int cs_index = 0;
  std::int64_t row_index = 0;  // 1-based, in [1..q/L]
  Fp value = 0;
};

Generator build_generator(int Z, int L, Fp p = kDefaultPrime);

/// Splits X row-wise into L blocks and forms the Z coded combinations.
/// Entries are reduced mod p at ingestion.
std::vector<CsMatrix> encode(const FieldMatrix& X, const Generator& gen);

/// Computes the requested coded dot products of one cs-matrix.
std::vector<PartialResult> worker_compute(const CsMatrix& cs,
                                          const std::vector<std::int64_t>& row_indices,
                                          const std::vector<Fp>& w, Fp p);

/// Precomputed inverse of the L x L generator row-submatrix for one set of
/// cs-matrix indices; decodes per-row batches of L partial results.
class Decoder {
 public:
  Decoder(const Generator& gen, const std::vector<int>& cs_indices);

  /// values[k] is the partial result of cs_indices[k] for a common row;
  /// returns the j-th entries of X_1 w .. X_L w.
  std::vector<Fp> decode(const std::vector<Fp>& values) const;

  const std::vector<int>& cs_indices() const { return cs_indices_; }

 private:
  std::vector<int> cs_indices_;
  FieldMatrix inverse_;  // L x L
  Fp p_;
};

/// Convenience single-row decode; `results` are L partial results with
/// distinct cs-indices sharing one row index.
std::vector<Fp> decode_row(const std::vector<PartialResult>& results,
                           const Generator& gen);

/// Inverts an n x n matrix over GF(p); throws on a singular input.
FieldMatrix fp_invert_matrix(const FieldMatrix& m, Fp p);

FieldMatrix mat_vec(const FieldMatrix& m, const std::vector<Fp>& v, Fp p);

}  // namespace cec
