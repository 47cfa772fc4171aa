#include "permpat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "permpat/errors.hpp"

namespace permpat {

const char* to_string(ContainmentKind kind) {
  switch (kind) {
    case ContainmentKind::Classic:
      return "classic";
    case ContainmentKind::Tight:
      return "tight";
    case ContainmentKind::VeryTight:
      return "very-tight";
  }
  return "?";
}

ContainmentKind containment_kind_from_string(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(c));
  if (t == "classic") return ContainmentKind::Classic;
  if (t == "tight") return ContainmentKind::Tight;
  if (t == "very-tight" || t == "verytight" || t == "very_tight")
    return ContainmentKind::VeryTight;
  throw std::invalid_argument("unknown containment kind: " + text);
}

namespace {

void validate_entries(const std::vector<int>& entries) {
  std::vector<int> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] != i + 1)
      throw std::invalid_argument(
          "entries are not a permutation of {1..n}");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  validate_entries(entries_);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  Permutation p;
  p.entries_ = std::move(e);
  return p;
}

Permutation Permutation::parse(const std::string& text) {
  std::string trimmed;
  size_t b = text.find_first_not_of(" \t\r\n");
  size_t e = text.find_last_not_of(" \t\r\n");
  if (b != std::string::npos) trimmed = text.substr(b, e - b + 1);
  if (trimmed.empty()) return Permutation();

  std::vector<int> entries;
  bool all_digits = std::all_of(trimmed.begin(), trimmed.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (all_digits) {
    // Compact one-line notation, one digit per entry (n <= 9).
    for (char c : trimmed) {
      if (c == '0')
        throw std::invalid_argument("compact notation uses digits 1-9");
      entries.push_back(c - '0');
    }
  } else {
    std::string normalized = trimmed;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    int v;
    while (in >> v) entries.push_back(v);
    if (!in.eof())
      throw std::invalid_argument("cannot parse permutation: " + text);
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::reversed() const {
  Permutation out;
  out.entries_.assign(entries_.rbegin(), entries_.rend());
  return out;
}

Permutation Permutation::complemented() const {
  Permutation out;
  int n = size();
  out.entries_.reserve(n);
  for (int v : entries_) out.entries_.push_back(n + 1 - v);
  return out;
}

bool Permutation::is_increasing() const {
  return std::is_sorted(entries_.begin(), entries_.end());
}

bool Permutation::is_decreasing() const {
  return std::is_sorted(entries_.rbegin(), entries_.rend());
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

Permutation monotone_pattern(int k) { return Permutation::identity(k); }

Permutation apply_symmetry(const Permutation& p, Symmetry which) {
  return which == Symmetry::Reverse ? p.reversed() : p.complemented();
}

std::vector<std::pair<int, int>> left_to_right_minima(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  int best = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i) {
    if (p[i] < best) {
      best = p[i];
      out.emplace_back(i, best);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> right_to_left_maxima(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  int best = 0;
  for (int i = p.size(); i >= 1; --i) {
    if (p[i] > best) {
      best = p[i];
      out.emplace_back(i, best);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t inversion_count(const Permutation& p) {
  std::uint64_t count = 0;
  int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

std::vector<int> entry_ranks(const Permutation& p) {
  int n = p.size();
  std::vector<int> ranks(n, 1);
  const auto& e = p.entries();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (e[i] < e[j] && ranks[i] + 1 > ranks[j]) ranks[j] = ranks[i] + 1;
    }
  }
  return ranks;
}

}  // namespace permpat
