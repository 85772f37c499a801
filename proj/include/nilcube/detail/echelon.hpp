#pragma once

// Sparse row echelon over a field policy. Columns are word ranks inside one
// WordSpace, so a larger column is a larger word and the pivot of a row is
// its largest column.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilcube::detail {

/// Sparse row, sorted by descending column, no zero entries.
template <class V>
using Row = std::vector<std::pair<std::uint32_t, V>>;

template <class F>
class SparseEchelon {
 public:
  using value_type = typename F::value_type;
  using row_type = Row<value_type>;

  SparseEchelon(F field, std::size_t ncols)
      : f_(std::move(field)),
        n_(ncols),
        where_(ncols, -1),
        acc_(ncols, f_.zero()),
        mark_(ncols, 0) {}

  [[nodiscard]] const F& field() const noexcept { return f_; }
  [[nodiscard]] std::size_t ncols() const noexcept { return n_; }
  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] bool finalized() const noexcept { return finalized_; }
  /// False once some pivot inversion left Z[1/2,1/3] (rational runs only).
  [[nodiscard]] bool ring_ok() const noexcept { return ring_ok_; }

  [[nodiscard]] bool is_pivot(std::uint32_t c) const { return where_[c] >= 0; }
  /// Row whose leading column is c. The leading entry is 1.
  [[nodiscard]] const row_type& row_for(std::uint32_t c) const {
    if (where_[c] < 0) throw std::out_of_range("no pivot in this column");
    return rows_[static_cast<std::size_t>(where_[c])];
  }
  [[nodiscard]] const std::vector<row_type>& rows() const noexcept {
    return rows_;
  }

  [[nodiscard]] std::vector<std::uint32_t> pivots() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (std::uint32_t c = 0; c < n_; ++c) {
      if (where_[c] >= 0) out.push_back(c);
    }
    return out;
  }
  [[nodiscard]] std::vector<std::uint32_t> free_columns() const {
    std::vector<std::uint32_t> out;
    out.reserve(n_ - rows_.size());
    for (std::uint32_t c = 0; c < n_; ++c) {
      if (where_[c] < 0) out.push_back(c);
    }
    return out;
  }

  /// Adds a row to the span. Returns true when the rank grows. The input must
  /// be merged (one entry per column) but need not be sorted.
  bool insert(const row_type& row) {
    if (row.empty()) return false;
    if (finalized_) {
      row_type r = reduce_scratch(row);
      if (r.empty()) return false;
      if (r.front().first > max_pivot_ || rows_.empty()) {
        normalize_and_store(std::move(r));
        return true;
      }
      finalized_ = false;
      return insert_lead_reduced(r);
    }
    return insert_lead_reduced(row);
  }

  /// Fully reduces every row so that tails only touch free columns.
  void finalize() {
    if (finalized_) return;
    for (std::uint32_t c = 0; c < n_; ++c) {
      if (where_[c] < 0) continue;
      auto& r = rows_[static_cast<std::size_t>(where_[c])];
      if (r.size() == 1) continue;
      touched_.clear();
      for (std::size_t k = 1; k < r.size(); ++k) {
        const auto& [col, v] = r[k];
        if (where_[col] >= 0) {
          for (const auto& [c2, v2] : tail(row_for(col))) {
            scatter_submul(c2, v, v2);
          }
        } else {
          scatter_add(col, v);
        }
      }
      row_type out;
      out.reserve(touched_.size() + 1);
      out.emplace_back(c, f_.one());
      gather(out);
      r = std::move(out);
    }
    finalized_ = true;
  }

  /// Normal form of g modulo the span: a combination of free columns only.
  /// Requires finalize(). Does not touch shared scratch space.
  [[nodiscard]] row_type reduce(const row_type& g) const {
    if (!finalized_) throw std::logic_error("reduce() before finalize()");
    std::vector<std::pair<std::uint32_t, value_type>> terms;
    for (const auto& [col, v] : g) {
      if (where_[col] >= 0) {
        for (const auto& [c2, v2] : tail(row_for(col))) {
          terms.emplace_back(c2, f_.neg(f_.mul(v, v2)));
        }
      } else {
        terms.emplace_back(col, v);
      }
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      return a.first > b.first;
    });
    row_type out;
    for (auto& [c, v] : terms) {
      if (!out.empty() && out.back().first == c) {
        out.back().second = f_.add(out.back().second, v);
        if (f_.is_zero(out.back().second)) out.pop_back();
      } else if (!f_.is_zero(v)) {
        out.emplace_back(c, std::move(v));
      }
    }
    return out;
  }

  /// Same result as reduce(), using the kernel's scratch space. Not safe to
  /// call concurrently on one object.
  [[nodiscard]] row_type reduce_scratch(const row_type& g) {
    if (!finalized_) throw std::logic_error("reduce() before finalize()");
    touched_.clear();
    for (const auto& [col, v] : g) {
      if (where_[col] >= 0) {
        for (const auto& [c2, v2] : tail(row_for(col))) {
          scatter_submul(c2, v, v2);
        }
      } else {
        scatter_add(col, v);
      }
    }
    row_type out;
    out.reserve(touched_.size());
    gather(out);
    return out;
  }

 private:
  struct Tail {
    const row_type& r;
    auto begin() const { return r.begin() + 1; }
    auto end() const { return r.end(); }
  };
  static Tail tail(const row_type& r) { return Tail{r}; }

  void touch(std::uint32_t c) {
    if (!mark_[c]) {
      mark_[c] = 1;
      touched_.push_back(c);
    }
  }
  void scatter_add(std::uint32_t c, const value_type& v) {
    touch(c);
    acc_[c] = f_.add(acc_[c], v);
  }
  // acc[c] -= a*b
  void scatter_submul(std::uint32_t c, const value_type& a,
                      const value_type& b) {
    touch(c);
    f_.submul(acc_[c], a, b);
  }
  // Moves all touched nonzero entries into out (descending) and clears acc.
  void gather(row_type& out) {
    std::sort(touched_.begin(), touched_.end(), std::greater<>{});
    for (std::uint32_t c : touched_) {
      mark_[c] = 0;
      if (!f_.is_zero(acc_[c])) out.emplace_back(c, std::move(acc_[c]));
      acc_[c] = f_.zero();
    }
    touched_.clear();
  }

  void normalize_and_store(row_type r) {
    const std::uint32_t lead = r.front().first;
    if (!f_.ring_inverse(r.front().second)) ring_ok_ = false;
    const value_type s = f_.inv(r.front().second);
    r.front().second = f_.one();
    for (std::size_t k = 1; k < r.size(); ++k) {
      r[k].second = f_.mul(r[k].second, s);
    }
    where_[lead] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    if (rows_.size() == 1 || lead > max_pivot_) max_pivot_ = lead;
  }

  bool insert_lead_reduced(const row_type& row) {
    std::priority_queue<std::uint32_t> heap;
    for (const auto& [c, v] : row) {
      acc_[c] = f_.add(acc_[c], v);
      if (!mark_[c]) {
        mark_[c] = 1;
        heap.push(c);
      }
    }
    while (!heap.empty()) {
      const std::uint32_t c = heap.top();
      heap.pop();
      mark_[c] = 0;
      if (f_.is_zero(acc_[c])) continue;
      if (where_[c] < 0) {
        row_type out;
        out.emplace_back(c, std::move(acc_[c]));
        acc_[c] = f_.zero();
        while (!heap.empty()) {
          const std::uint32_t c2 = heap.top();
          heap.pop();
          mark_[c2] = 0;
          if (!f_.is_zero(acc_[c2])) out.emplace_back(c2, std::move(acc_[c2]));
          acc_[c2] = f_.zero();
        }
        normalize_and_store(std::move(out));
        return true;
      }
      const value_type coef = std::move(acc_[c]);
      acc_[c] = f_.zero();
      for (const auto& [c2, v2] : tail(row_for(c))) {
        f_.submul(acc_[c2], coef, v2);
        if (!mark_[c2]) {
          mark_[c2] = 1;
          heap.push(c2);
        }
      }
    }
    return false;
  }

  F f_;
  std::size_t n_;
  std::vector<std::int32_t> where_;
  std::vector<row_type> rows_;
  std::uint32_t max_pivot_ = 0;
  bool ring_ok_ = true;
  bool finalized_ = true;
  std::vector<value_type> acc_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace nilcube::detail
