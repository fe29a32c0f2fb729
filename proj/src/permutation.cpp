#include "rsshape/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>

#include "rsshape/error.hpp"

namespace rsshape {

namespace {

int parse_value(std::string_view token, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error("malformed permutation '" + std::string(context) + "'");
  }
  return value;
}

std::vector<int> split_ints(std::string_view body, std::string_view context) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < body.size()) {
    char c = body[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < body.size() && body[j] != ',' && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
    values.push_back(parse_value(body.substr(i, j - i), context));
    i = j;
  }
  return values;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : one_line_) {
    if (v < 1 || v > n) throw Error("permutation value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)]) throw Error("permutation value " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse_one_line(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw Error("malformed permutation '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  return Permutation(split_ints(body, text));
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') throw Error("malformed cycle notation '" + std::string(text) + "'");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw Error("unbalanced parenthesis in '" + std::string(text) + "'");
    auto cycle = split_ints(text.substr(i + 1, close - i - 1), text);
    if (cycle.empty()) throw Error("empty cycle in '" + std::string(text) + "'");
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  int largest = 0;
  for (const auto& cyc : cycles) largest = std::max(largest, *std::max_element(cyc.begin(), cyc.end()));
  if (n == 0) n = largest;
  if (largest > n) throw Error("cycle element " + std::to_string(largest) + " out of range 1.." + std::to_string(n));

  std::vector<int> one_line(static_cast<std::size_t>(n));
  std::iota(one_line.begin(), one_line.end(), 1);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int a = cyc[k];
      if (a < 1) throw Error("cycle element " + std::to_string(a) + " out of range 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(a)]) throw Error("element " + std::to_string(a) + " repeated across cycles");
      seen[static_cast<std::size_t>(a)] = 1;
      one_line[static_cast<std::size_t>(a - 1)] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(one_line));
}

Permutation Permutation::parse(std::string_view text, int n) {
  if (text.find('(') != std::string_view::npos) return parse_cycles(text, n);
  bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (blank) return parse_cycles(text, n);
  Permutation p = parse_one_line(text);
  if (n != 0 && p.size() != n) throw Error("permutation has size " + std::to_string(p.size()) + ", expected " + std::to_string(n));
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> inv(static_cast<std::size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i) inv[static_cast<std::size_t>(sigma(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw Error("cannot compose permutations of different sizes");
  std::vector<int> out(static_cast<std::size_t>(tau.size()));
  for (int i = 1; i <= tau.size(); ++i) out[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
  return Permutation(std::move(out));
}

Partition cycle_type(const Permutation& sigma) {
  std::vector<int> lengths;
  for (const auto& c : sigma.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

std::string format_cycles(const Permutation& sigma) {
  std::string out;
  for (const auto& cyc : sigma.cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(cyc[k]);
    }
    out += ')';
  }
  return out;
}

std::string format_one_line(const Permutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(sigma(i));
  }
  return out;
}

std::uint64_t class_size(const Partition& alpha) {
  const int n = alpha.size();
  if (n > 20) throw Error("class size only computed exactly for n <= 20");
  // n! / prod(alpha_i) / prod(m_j!), dividing as we go to stay exact.
  std::uint64_t num = 1;
  for (int k = 2; k <= n; ++k) num *= static_cast<std::uint64_t>(k);
  for (int a : alpha.parts()) num /= static_cast<std::uint64_t>(a);
  for (int v = 1; v <= n; ++v) {
    for (int k = 2; k <= multiplicity(alpha, v); ++k) num /= static_cast<std::uint64_t>(k);
  }
  return num;
}

ClassEnumerator::ClassEnumerator(Partition alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw Error("empty cycle type");
  for (int a : alpha_.parts()) {
    if (distinct_lengths_.empty() || distinct_lengths_.back() != a) distinct_lengths_.push_back(a);
  }
}

ClassEnumerator::State ClassEnumerator::restore(const Task& task) const {
  State s;
  s.n = alpha_.size();
  s.remaining.assign(static_cast<std::size_t>(s.n) + 1, 0);
  for (int a : alpha_.parts()) ++s.remaining[static_cast<std::size_t>(a)];
  s.used.assign(static_cast<std::size_t>(s.n) + 1, 0);
  s.one_line.assign(static_cast<std::size_t>(s.n) + 1, 0);

  std::size_t pos = 0;
  for (int len : task.lengths) {
    --s.remaining[static_cast<std::size_t>(len)];
    s.lengths.push_back(len);
    s.block_start = static_cast<int>(pos);
    s.block_length = len;
    const std::size_t end = std::min(task.sequence.size(), pos + static_cast<std::size_t>(len));
    for (std::size_t k = pos; k < end; ++k) {
      const int x = task.sequence[k];
      s.used[static_cast<std::size_t>(x)] = 1;
      s.sequence.push_back(x);
      if (k > pos) s.one_line[static_cast<std::size_t>(task.sequence[k - 1])] = x;
    }
    if (end == pos + static_cast<std::size_t>(len)) {
      s.one_line[static_cast<std::size_t>(task.sequence[end - 1])] = task.sequence[pos];
    }
    pos = end;
  }
  return s;
}

std::vector<ClassEnumerator::Task> ClassEnumerator::children(const Task& task) const {
  std::vector<Task> out;
  State s = restore(task);
  const int pos = static_cast<int>(s.sequence.size());
  if (pos == s.block_start + s.block_length) {
    int first = 1;
    while (s.used[static_cast<std::size_t>(first)]) ++first;
    for (int len : distinct_lengths_) {
      if (s.remaining[static_cast<std::size_t>(len)] == 0) continue;
      Task child = task;
      child.lengths.push_back(len);
      child.sequence.push_back(first);
      out.push_back(std::move(child));
    }
    return out;
  }
  const int head = s.sequence[static_cast<std::size_t>(s.block_start)];
  for (int y = head + 1; y <= s.n; ++y) {
    if (s.used[static_cast<std::size_t>(y)]) continue;
    Task child = task;
    child.sequence.push_back(y);
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<ClassEnumerator::Task> ClassEnumerator::split(std::size_t min_tasks) const {
  std::vector<Task> frontier{root()};
  while (frontier.size() < min_tasks) {
    std::vector<Task> next;
    bool grew = false;
    for (auto& t : frontier) {
      if (is_leaf(t)) {
        next.push_back(std::move(t));
        continue;
      }
      for (auto& c : children(t)) next.push_back(std::move(c));
      grew = true;
    }
    frontier = std::move(next);
    if (!grew) break;
  }
  return frontier;
}

}  // namespace rsshape
