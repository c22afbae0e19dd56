// Incremental reduced row echelon form over an abstract field.
//
// Rows are kept fully reduced at all times: every row is zero in every pivot
// column except its own, and each pivot is 1. Reducing a vector therefore
// takes a single pass over its pivot-column entries, and the row set is the
// canonical basis of the subspace regardless of insertion order.
//
// When tracking is on, every row also carries the combination of inserted
// generators that produces it, so membership can be certified.

#ifndef SKEWLAB_ECHELON_HPP
#define SKEWLAB_ECHELON_HPP

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skewlab {

template <class Scalar>
struct SparseEntry {
  uint32_t col;
  Scalar val;

  friend bool operator==(const SparseEntry& a, const SparseEntry& b) {
    return a.col == b.col && a.val == b.val;
  }
};

/// Sorted by column, no stored zeros.
template <class Scalar>
using SparseRow = std::vector<SparseEntry<Scalar>>;

template <class Field>
class Echelon {
 public:
  using Scalar = typename Field::Element;
  using Row = SparseRow<Scalar>;
  /// Generator id -> coefficient.
  using Combination = SparseRow<Scalar>;

  Echelon(const Field& field, std::size_t dim, bool track = false)
      : field_(field), dim_(dim), track_(track), pivot_row_(dim, kNone) {}

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }
  bool tracking() const { return track_; }

  /// v minus its projection onto the pivot columns. With `combo` given
  /// (tracking only), combo is updated so that it keeps describing the
  /// reduced vector: combo_out = combo_in - sum f_c * combination(row_c).
  Row reduce(const Row& v, Combination* combo = nullptr) const {
    Row out;
    std::map<uint32_t, Scalar> acc;
    for (const auto& e : v) acc.emplace(e.col, e.val);
    std::map<uint32_t, Scalar> cacc;
    if (combo)
      for (const auto& e : *combo) cacc.emplace(e.col, e.val);
    for (const auto& e : v) {
      check_col(e.col);
      const std::size_t r = pivot_row_[e.col];
      if (r == kNone) continue;
      const Scalar f = e.val;
      for (const auto& re : rows_[r]) {
        auto [it, inserted] = acc.try_emplace(re.col, field_.zero());
        field_.sub_mul(it->second, f, re.val);
      }
      if (combo) {
        for (const auto& ce : combos_[r]) {
          auto [it, inserted] = cacc.try_emplace(ce.col, field_.zero());
          field_.sub_mul(it->second, f, ce.val);
        }
      }
    }
    for (auto& [c, x] : acc)
      if (!field_.is_zero(x)) out.push_back({c, std::move(x)});
    if (combo) {
      combo->clear();
      for (auto& [c, x] : cacc)
        if (!field_.is_zero(x)) combo->push_back({c, std::move(x)});
    }
    return out;
  }

  bool contains(const Row& v) const { return reduce(v).empty(); }

  /// For v in the span, the generator combination equal to v.
  std::optional<Combination> express(const Row& v) const {
    if (!track_) throw std::logic_error("Echelon::express needs tracking");
    Combination combo;
    Row rem = reduce(v, &combo);
    if (!rem.empty()) return std::nullopt;
    // combo now holds -(sum f_c C_c); v = sum f_c row_c
    for (auto& e : combo) e.val = field_.neg(e.val);
    return combo;
  }

  /// Adds v (generator `id` when tracking); returns true if the rank grew.
  bool insert(const Row& v, std::size_t id = 0) {
    Combination combo;
    if (track_) combo.push_back({static_cast<uint32_t>(id), field_.one()});
    return insert_with(v, std::move(combo));
  }

  /// Reference path: one generator at a time.
  void insert_all_serial(const std::vector<Row>& gens, std::size_t first_id = 0) {
    for (std::size_t i = 0; i < gens.size() && !full(); ++i) insert(gens[i], first_id + i);
  }

  /// Parallel path: each chunk is reduced against a snapshot of the basis
  /// by all threads, then merged in generator order. The resulting rows are
  /// identical to insert_all_serial (the reduced basis is unique).
  void insert_all(const std::vector<Row>& gens, std::size_t first_id = 0, std::size_t chunk = 512) {
    if (omp_get_max_threads() <= 1) {
      insert_all_serial(gens, first_id);
      return;
    }
    for (std::size_t start = 0; start < gens.size() && !full(); start += chunk) {
      const std::size_t stop = std::min(gens.size(), start + chunk);
      std::vector<Row> reduced(stop - start);
      std::vector<Combination> combos(stop - start);
#pragma omp parallel for schedule(dynamic, 8)
      for (std::size_t i = start; i < stop; ++i) {
        Combination* cp = nullptr;
        if (track_) {
          combos[i - start].push_back({static_cast<uint32_t>(first_id + i), field_.one()});
          cp = &combos[i - start];
        }
        reduced[i - start] = reduce(gens[i], cp);
      }
      for (std::size_t i = 0; i < reduced.size() && !full(); ++i)
        if (!reduced[i].empty()) insert_with(reduced[i], std::move(combos[i]));
    }
  }

  /// Rows sorted by pivot column (the canonical basis).
  std::vector<Row> rows_by_pivot() const {
    std::vector<Row> out;
    out.reserve(rows_.size());
    for (std::size_t c = 0; c < dim_; ++c)
      if (pivot_row_[c] != kNone) out.push_back(rows_[pivot_row_[c]]);
    return out;
  }

  /// Rows in insertion order, and the generator combination of each.
  const std::vector<Row>& rows() const { return rows_; }
  const Combination& combination(std::size_t r) const { return combos_.at(r); }

  std::vector<uint32_t> pivots() const {
    std::vector<uint32_t> out;
    for (std::size_t c = 0; c < dim_; ++c)
      if (pivot_row_[c] != kNone) out.push_back(static_cast<uint32_t>(c));
    return out;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  void check_col(uint32_t c) const {
    if (c >= dim_) throw std::out_of_range("Echelon: column outside the ambient dimension");
  }

  bool insert_with(const Row& v, Combination combo) {
    if (full()) return false;
    Row rem = reduce(v, track_ ? &combo : nullptr);
    if (rem.empty()) return false;
    const uint32_t p = rem.front().col;
    const Scalar inv = field_.inv(rem.front().val);
    for (auto& e : rem) e.val = field_.mul(e.val, inv);
    for (auto& e : combo) e.val = field_.mul(e.val, inv);
    // clear column p from the existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto& row = rows_[r];
      auto it = std::lower_bound(row.begin(), row.end(), p,
                                 [](const SparseEntry<Scalar>& e, uint32_t c) { return e.col < c; });
      if (it == row.end() || it->col != p) continue;
      const Scalar f = it->val;
      row = axpy(row, f, rem);
      if (track_) combos_[r] = axpy(combos_[r], f, combo);
    }
    pivot_row_[p] = rows_.size();
    rows_.push_back(std::move(rem));
    combos_.push_back(std::move(combo));
    return true;
  }

  /// a - f * b for sorted sparse rows.
  Row axpy(const Row& a, const Scalar& f, const Row& b) const {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].col < a[i].col) {
        Scalar x = field_.zero();
        field_.sub_mul(x, f, b[j].val);
        if (!field_.is_zero(x)) out.push_back({b[j].col, std::move(x)});
        ++j;
      } else {
        Scalar x = a[i].val;
        field_.sub_mul(x, f, b[j].val);
        if (!field_.is_zero(x)) out.push_back({a[i].col, std::move(x)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Field field_;
  std::size_t dim_;
  bool track_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Row> rows_;
  std::vector<Combination> combos_;
};

}  // namespace skewlab

#endif  // SKEWLAB_ECHELON_HPP
