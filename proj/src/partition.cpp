#include "rsshape/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "rsshape/error.hpp"

namespace rsshape {

namespace {

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error("malformed partition '" + std::string(context) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) throw Error("empty partition");

  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find_first_of(", ", pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view token = trim(body.substr(pos, end - pos));
    pos = end + 1;
    if (token.empty()) {
      if (end == body.size()) break;
      continue;
    }
    std::size_t caret = token.find('^');
    int value = 0;
    int repeat = 1;
    if (caret == std::string_view::npos) {
      value = parse_int(token, text);
    } else {
      value = parse_int(trim(token.substr(0, caret)), text);
      repeat = parse_int(trim(token.substr(caret + 1)), text);
      if (repeat < 1) throw Error("malformed partition '" + std::string(text) + "'");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
  }
  if (parts.empty()) throw Error("empty partition");
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int row : lambda.parts()) {
    for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

std::vector<Partition> enumerate_partitions(int n, int max_part) {
  if (n < 1) throw Error("cannot enumerate partitions of a non-positive integer");
  std::vector<Partition> out;
  // Reverse-lexicographic successor on a dense parts array.
  std::vector<int> a{std::min(n, max_part)};
  int rest = n - a.back();
  while (rest > 0) {
    a.push_back(std::min(rest, a.back()));
    rest -= a.back();
  }
  for (;;) {
    out.emplace_back(a);
    // Find the rightmost part > 1, decrement it, redistribute the tail greedily.
    int carry = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++carry;
    }
    if (a.empty()) break;
    --a.back();
    ++carry;
    const int cap = a.back();
    while (carry > 0) {
      a.push_back(std::min(cap, carry));
      carry -= a.back();
    }
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int n) { return enumerate_partitions(n, n); }

ShapeStats shape_stats(const Partition& lambda) {
  ShapeStats s;
  s.tail_length = lambda.part(1) - lambda.part(2);
  s.is_hook = lambda.length() >= 2 && lambda.part(2) == 1 && lambda.part(1) > 1;
  const Partition cols = conjugate(lambda);
  for (int c : cols.parts()) s.odd_column_count += c % 2;
  return s;
}

BoundingBox bounding_box(const Partition& alpha) {
  const int n = alpha.size();
  const int r = alpha.length();
  const int twos = multiplicity(alpha, 2);
  const int ones = multiplicity(alpha, 1);
  BoundingBox box;
  box.max_rows = n - r + twos + (ones > 0 ? 1 : 0);
  box.max_cols = n - r + ones;
  return box;
}

std::vector<Partition> enumerate_B_alpha(const Partition& alpha) {
  if (alpha.empty()) throw Error("empty cycle type");
  const BoundingBox box = bounding_box(alpha);
  std::vector<Partition> out;
  for (auto& lambda : enumerate_partitions(alpha.size(), box.max_cols)) {
    if (lambda.length() <= box.max_rows) out.push_back(std::move(lambda));
  }
  return out;
}

bool is_strict(const Partition& alpha) {
  return std::adjacent_find(alpha.parts().begin(), alpha.parts().end()) == alpha.parts().end();
}

int multiplicity(const Partition& alpha, int value) {
  return static_cast<int>(std::count(alpha.parts().begin(), alpha.parts().end(), value));
}

std::vector<Partition> difference(const std::vector<Partition>& a, const std::vector<Partition>& b) {
  std::vector<Partition> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), CanonicalOrder{});
  return out;
}

}  // namespace rsshape
