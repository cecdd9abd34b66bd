#include "cec/mds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cec {

namespace {
using u128 = unsigned __int128;
}

Fp fp_add(Fp a, Fp b, Fp p) { return (a + b) % p; }
Fp fp_sub(Fp a, Fp b, Fp p) { return (a + p - b % p) % p; }
Fp fp_mul(Fp a, Fp b, Fp p) {
  return static_cast<Fp>((u128(a) * b) % p);
}

Fp fp_pow(Fp a, std::uint64_t e, Fp p) {
  Fp result = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) result = fp_mul(result, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return result;
}

Fp fp_inv(Fp a, Fp p) {
  a %= p;
  if (a == 0) throw std::domain_error("no inverse of 0");
  return fp_pow(a, p - 2, p);  // Fermat; p is prime
}

bool is_prime(Fp p) {
  if (p < 2) return false;
  for (Fp d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Generator build_generator(int Z, int L, Fp p) {
  if (L < 1 || Z < L) throw std::invalid_argument("need Z >= L >= 1");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p <= static_cast<Fp>(Z))
    throw std::invalid_argument("p must exceed Z for distinct eval points");

  Generator gen;
  gen.Z = Z;
  gen.L = L;
  gen.p = p;
  gen.G = FieldMatrix(Z, L);
  for (int i = 0; i < Z; ++i) {
    gen.eval_points.push_back(i + 1);
    for (int l = 0; l < L; ++l)
      gen.G.at(i, l) = fp_pow(i + 1, l, p);
  }
  return gen;
}

std::vector<CsMatrix> encode(const FieldMatrix& X, const Generator& gen) {
  if (X.rows % gen.L != 0)
    throw std::invalid_argument("q must be divisible by L");
  const std::size_t block = X.rows / gen.L;
  const Fp p = gen.p;

  std::vector<CsMatrix> out;
  out.reserve(gen.Z);
  for (int i = 0; i < gen.Z; ++i) {
    CsMatrix cs;
    cs.index = i + 1;
    cs.rows = FieldMatrix(block, X.cols);
    for (int l = 0; l < gen.L; ++l) {
      const Fp g = gen.G.at(i, l);
      const std::size_t base = l * block;
      for (std::size_t j = 0; j < block; ++j)
        for (std::size_t c = 0; c < X.cols; ++c)
          cs.rows.at(j, c) = fp_add(cs.rows.at(j, c),
                                    fp_mul(g, X.at(base + j, c) % p, p), p);
    }
    out.push_back(std::move(cs));
  }
  return out;
}

std::vector<PartialResult> worker_compute(
    const CsMatrix& cs, const std::vector<std::int64_t>& row_indices,
    const std::vector<Fp>& w, Fp p) {
  if (w.size() != cs.rows.cols)
    throw std::invalid_argument("vector length mismatch");
  std::vector<PartialResult> out;
  out.reserve(row_indices.size());
  for (std::int64_t j : row_indices) {
    if (j < 1 || j > static_cast<std::int64_t>(cs.rows.rows))
      throw std::out_of_range("row index " + std::to_string(j) +
                              " out of range");
    Fp acc = 0;
    for (std::size_t c = 0; c < w.size(); ++c)
      acc = fp_add(acc, fp_mul(cs.rows.at(j - 1, c), w[c] % p, p), p);
    out.push_back({cs.index, j, acc});
  }
  return out;
}

FieldMatrix fp_invert_matrix(const FieldMatrix& m, Fp p) {
  if (m.rows != m.cols) throw std::invalid_argument("not square");
  const std::size_t n = m.rows;
  FieldMatrix work = m;
  FieldMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) % p == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work.a[pivot * n + c], work.a[col * n + c]);
        std::swap(inv.a[pivot * n + c], inv.a[col * n + c]);
      }
    const Fp scale = fp_inv(work.at(col, col), p);
    for (std::size_t c = 0; c < n; ++c) {
      work.at(col, c) = fp_mul(work.at(col, c), scale, p);
      inv.at(col, c) = fp_mul(inv.at(col, c), scale, p);
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const Fp factor = work.at(row, col) % p;
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work.at(row, c) =
            fp_sub(work.at(row, c), fp_mul(factor, work.at(col, c), p), p);
        inv.at(row, c) =
            fp_sub(inv.at(row, c), fp_mul(factor, inv.at(col, c), p), p);
      }
    }
  }
  return inv;
}

Decoder::Decoder(const Generator& gen, const std::vector<int>& cs_indices)
    : cs_indices_(cs_indices), p_(gen.p) {
  if (static_cast<int>(cs_indices.size()) != gen.L)
    throw std::invalid_argument("need exactly L cs-matrix indices");
  std::set<int> distinct(cs_indices.begin(), cs_indices.end());
  if (static_cast<int>(distinct.size()) != gen.L)
    throw std::invalid_argument("duplicate cs-matrix indices");

  FieldMatrix sub(gen.L, gen.L);
  for (int k = 0; k < gen.L; ++k) {
    int i = cs_indices[k];
    if (i < 1 || i > gen.Z) throw std::out_of_range("cs index out of [Z]");
    for (int l = 0; l < gen.L; ++l) sub.at(k, l) = gen.G.at(i - 1, l);
  }
  inverse_ = fp_invert_matrix(sub, gen.p);  // cannot be singular (Vandermonde)
}

std::vector<Fp> Decoder::decode(const std::vector<Fp>& values) const {
  if (values.size() != inverse_.rows)
    throw std::invalid_argument("need exactly L partial results");
  std::vector<Fp> out(inverse_.rows, 0);
  for (std::size_t l = 0; l < inverse_.rows; ++l)
    for (std::size_t k = 0; k < inverse_.cols; ++k)
      out[l] = fp_add(out[l], fp_mul(inverse_.at(l, k), values[k] % p_, p_), p_);
  return out;
}

std::vector<Fp> decode_row(const std::vector<PartialResult>& results,
                           const Generator& gen) {
  std::vector<int> indices;
  std::vector<Fp> values;
  for (const auto& r : results) {
    if (!indices.empty() && r.row_index != results.front().row_index)
      throw std::invalid_argument("partial results span different rows");
    indices.push_back(r.cs_index);
    values.push_back(r.value);
  }
  return Decoder(gen, indices).decode(values);
}

FieldMatrix mat_vec(const FieldMatrix& m, const std::vector<Fp>& v, Fp p) {
  if (v.size() != m.cols) throw std::invalid_argument("dimension mismatch");
  FieldMatrix out(m.rows, 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Fp acc = 0;
    for (std::size_t c = 0; c < m.cols; ++c)
      acc = fp_add(acc, fp_mul(m.at(i, c) % p, v[c] % p, p), p);
    out.at(i, 0) = acc;
  }
  return out;
}

}  // namespace cec
