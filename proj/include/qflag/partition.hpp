#pragma once

#include "qflag/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace qflag {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped at construction, so two partitions are equal iff their stored
/// parts are equal. The empty partition is the default.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0)
        throw ValidationError("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw ValidationError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
      parts_.pop_back();
  }

  /// Part i (0-based); zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int> &parts() const { return parts_; }

  friend auto operator<=>(const Partition &, const Partition &) = default;
  friend bool operator==(const Partition &, const Partition &) = default;

private:
  std::vector<int> parts_;
};

/// Either zero, or +/- a partition. Produced by rim-hook removal.
class SignedPartition {
public:
  SignedPartition() = default; // zero
  SignedPartition(int sign, Partition p) : sign_(sign), partition_(std::move(p)) {}

  static SignedPartition zero() { return {}; }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  const Partition &partition() const { return partition_; }

  friend bool operator==(const SignedPartition &, const SignedPartition &) = default;

private:
  int sign_ = 0;
  Partition partition_;
};

inline Partition transpose(const Partition &p) {
  std::vector<int> t(p.width(), 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c)
      ++t[c];
  return Partition(std::move(t));
}

/// length <= rows and width <= cols.
inline bool fits_box(const Partition &p, int rows, int cols) {
  return p.length() <= rows && p.width() <= cols;
}

inline Partition add_first_row(const Partition &p, int m) {
  if (m < 0)
    throw ValidationError("cannot add a negative number of boxes to the first row");
  if (m == 0)
    return p;
  std::vector<int> parts = p.parts();
  if (parts.empty())
    parts.push_back(m);
  else
    parts.front() += m;
  return Partition(std::move(parts));
}

/// The partition (1,...,1) with k ones, i.e. the transpose of (k).
inline Partition column(int k) { return Partition(std::vector<int>(std::max(k, 0), 1)); }

/// Removes the border strip of n boxes that starts at the last box of the
/// first row and follows the rim down and to the left. Returns zero if the
/// strip does not exist (too few boxes) or if what remains is not a
/// partition; otherwise (-1)^(h+1) times the remainder, h being the number
/// of rows the strip meets.
inline SignedPartition remove_rim_hook(const Partition &p, int n) {
  if (n <= 0)
    throw ValidationError("rim-hook length must be positive");
  if (n > p.size())
    return SignedPartition::zero();

  std::vector<int> rows = p.parts();
  int r = 0;
  int c = rows[0] - 1;
  int rows_met = 1;
  // cut[r] is the new length of row r after the removal (if row r is met).
  std::vector<int> cut(rows.size(), -1);
  cut[0] = c;
  for (int taken = 1; taken < n; ++taken) {
    bool below = (r + 1 < static_cast<int>(rows.size())) && rows[r + 1] > c;
    if (below) {
      ++r;
      ++rows_met;
    } else {
      --c;
      if (c < 0)
        return SignedPartition::zero(); // ran off the rim
    }
    cut[r] = c;
  }
  for (int i = 0; i <= r; ++i)
    rows[i] = cut[i];
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i] > rows[i - 1])
      return SignedPartition::zero();
  return SignedPartition(rows_met % 2 == 1 ? 1 : -1, Partition(std::move(rows)));
}

/// "[a,b,c]"; "[]" is the empty partition.
inline std::string format_partition(const Partition &p) {
  std::string s = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

inline Partition parse_partition(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ' && ch != '\t')
      t += ch;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("partition must look like [a,b,...]: '" + std::string(text) + "'");
  std::vector<int> parts;
  std::string body = t.substr(1, t.size() - 2);
  if (body.empty())
    return Partition();
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("bad partition entry '" + tok + "' in '" + std::string(text) + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

/// All partitions inside the rows x cols box, ordered by size and then by
/// descending lexicographic order within a size.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto &&self, int max_part) -> void {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows)
      return;
    for (int v = 1; v <= max_part; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, cols);
  std::sort(out.begin(), out.end(), [](const Partition &a, const Partition &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a > b;
  });
  return out;
}

/// All partitions of n with at most max_length parts, in descending lex order.
inline std::vector<Partition> partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto &&self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length)
      return;
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      cur.push_back(v);
      self(self, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

} // namespace qflag
