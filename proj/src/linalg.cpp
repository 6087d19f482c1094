#include "bergman/linalg.hpp"

#include <algorithm>

namespace bergman {

SparseRow sparse_axpy(const SparseRow& row, const Rational& s, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, s * other[j].second);
      ++j;
    } else {
      Rational v = row[i].second + s * other[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

SparseRow SparseRref::reduce(SparseRow row) const {
  // eliminating column c only touches columns > c, so one ascending pass
  // over the row's entries suffices
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = rows_.find(row[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    row = sparse_axpy(row, -row[pos].second, it->second);
  }
  return row;
}

bool SparseRref::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  // normalize to leading 1
  Rational lead = row.front().second;
  for (auto& [c, v] : row) v /= lead;
  int pivot = row.front().first;
  // back-reduce the existing rows so the form stays fully reduced
  for (auto& [p, r] : rows_) {
    auto hit = std::lower_bound(
        r.begin(), r.end(), pivot,
        [](const auto& entry, int col) { return entry.first < col; });
    if (hit != r.end() && hit->first == pivot) r = sparse_axpy(r, -hit->second, row);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<std::vector<Rational>> SparseRref::nullspace() const {
  std::vector<std::vector<Rational>> basis;
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& [p, _] : rows_) is_pivot[p] = true;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols_);
    x[f] = 1;
    for (const auto& [p, r] : rows_) {
      auto hit = std::lower_bound(
          r.begin(), r.end(), f,
          [](const auto& entry, int col) { return entry.first < col; });
      if (hit != r.end() && hit->first == f) x[p] = -hit->second;
    }
    normalize_primitive(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

void normalize_primitive(std::vector<Rational>& v) {
  Integer lcm_den = 1, gcd_num = 0;
  const Rational* first_nonzero = nullptr;
  for (const Rational& x : v) {
    if (x == 0) continue;
    if (!first_nonzero) first_nonzero = &x;
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  }
  if (!first_nonzero) return;
  for (const Rational& x : v) {
    if (x == 0) continue;
    Integer scaled = numerator(x) * (lcm_den / denominator(x));
    gcd_num = boost::multiprecision::gcd(gcd_num, scaled);
  }
  Rational scale(lcm_den, gcd_num);
  if (*first_nonzero < 0) scale = -scale;
  for (Rational& x : v) x *= scale;
}

void ProvenanceSpan::insert(const std::vector<Rational>& row) {
  Reduction red = reduce(row);
  int idx = n_inserted_++;
  if (red.member) return;

  // adopt the residual; its combo is e_idx minus the eliminating combo
  BasisRow br;
  br.row = std::move(red.residual);
  br.combo.assign(n_inserted_, Rational(0));
  br.combo[idx] = 1;
  for (std::size_t j = 0; j < red.coefficients.size(); ++j)
    br.combo[j] -= red.coefficients[j];
  br.pivot = 0;
  while (br.row[br.pivot] == 0) ++br.pivot;
  Rational lead = br.row[br.pivot];
  for (auto& x : br.row) x /= lead;
  for (auto& x : br.combo) x /= lead;

  // back-reduce so every stored row is zero on every other pivot column;
  // reduce() relies on this to finish in one ascending pass
  for (BasisRow& other : rows_) {
    Rational f = other.row[br.pivot];
    if (f == 0) continue;
    for (int c = 0; c < cols_; ++c) other.row[c] -= f * br.row[c];
    other.combo.resize(n_inserted_, Rational(0));
    for (std::size_t j = 0; j < br.combo.size(); ++j)
      other.combo[j] -= f * br.combo[j];
  }
  auto at = std::upper_bound(rows_.begin(), rows_.end(), br.pivot,
                             [](int p, const BasisRow& r) { return p < r.pivot; });
  rows_.insert(at, std::move(br));
}

ProvenanceSpan::Reduction ProvenanceSpan::reduce(const std::vector<Rational>& row) const {
  Reduction out;
  out.residual = row;
  out.residual.resize(cols_);
  out.coefficients.assign(n_inserted_, Rational(0));
  for (const BasisRow& br : rows_) {
    const Rational& factor = out.residual[br.pivot];
    if (factor == 0) continue;
    Rational f = factor;
    for (int c = 0; c < cols_; ++c) out.residual[c] -= f * br.row[c];
    for (std::size_t j = 0; j < br.combo.size(); ++j)
      out.coefficients[j] += f * br.combo[j];
  }
  out.member = std::all_of(out.residual.begin(), out.residual.end(),
                           [](const Rational& x) { return x == 0; });
  return out;
}

}  // namespace bergman
