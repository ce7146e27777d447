#include "homconj/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace homconj {

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be at least 1");
  table_.resize(static_cast<std::size_t>(degree) + 1);
  std::iota(table_.begin(), table_.end(), 0);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<int> table(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    const int img = images[static_cast<std::size_t>(i) - 1];
    if (img < 1 || img > n) throw std::invalid_argument("image out of range: " + std::to_string(img));
    if (seen[static_cast<std::size_t>(img)])
      throw std::invalid_argument("not a bijection: image " + std::to_string(img) + " repeats");
    seen[static_cast<std::size_t>(img)] = true;
    table[static_cast<std::size_t>(i)] = img;
  }
  return from_table_unchecked(std::move(table));
}

Permutation Permutation::from_table_unchecked(std::vector<int> table) {
  assert(table.size() >= 2);
  table[0] = 0;
#ifndef NDEBUG
  {
    std::vector<bool> seen(table.size(), false);
    for (std::size_t i = 1; i < table.size(); ++i) {
      assert(table[i] >= 1 && table[i] < static_cast<int>(table.size()));
      assert(!seen[static_cast<std::size_t>(table[i])]);
      seen[static_cast<std::size_t>(table[i])] = true;
    }
  }
#endif
  Permutation p(static_cast<int>(table.size()) - 1);
  p.table_ = std::move(table);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (table_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  for (int l : lengths_)
    if (l < 1) throw std::invalid_argument("cycle length must be positive");
  std::sort(lengths_.begin(), lengths_.end(), std::greater<int>());
}

int CycleType::total() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), 0);
}

std::string CycleType::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths_[i]);
  }
  out += ']';
  return out;
}

static void check_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q);
  const int n = p.degree();
  std::vector<int> table(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) table[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation inverse(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> table(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) table[static_cast<std::size_t>(p(i))] = i;
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation conjugate_by(const Permutation& g, const Permutation& p) {
  check_same_degree(g, p);
  const int n = p.degree();
  std::vector<int> table(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) table[static_cast<std::size_t>(g(i))] = g(p(i));
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation power(const Permutation& p, long long e) {
  const int n = p.degree();
  std::vector<int> table(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> cycle;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    cycle.clear();
    int x = start;
    do {
      visited[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
      x = p(x);
    } while (x != start);
    const long long len = static_cast<long long>(cycle.size());
    const long long shift = ((e % len) + len) % len;
    for (std::size_t j = 0; j < cycle.size(); ++j)
      table[static_cast<std::size_t>(cycle[j])] =
          cycle[(j + static_cast<std::size_t>(shift)) % cycle.size()];
  }
  return Permutation::from_table_unchecked(std::move(table));
}

std::vector<std::vector<int>> all_cycles_of(const Permutation& p) {
  const int n = p.degree();
  std::vector<std::vector<int>> cycles;
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      visited[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
      x = p(x);
    } while (x != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  auto cycles = all_cycles_of(p);
  std::erase_if(cycles, [](const std::vector<int>& c) { return c.size() < 2; });
  return cycles;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : all_cycles_of(p)) lengths.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(lengths));
}

long long order_of(const Permutation& p) {
  long long ord = 1;
  for (const auto& c : all_cycles_of(p)) ord = std::lcm(ord, static_cast<long long>(c.size()));
  return ord;
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> fixed;
  for (int i = 1; i <= p.degree(); ++i)
    if (p(i) == i) fixed.push_back(i);
  return fixed;
}

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1) throw ParseError("degree must be at least 1");
  std::vector<int> table(static_cast<std::size_t>(degree) + 1, 0);
  std::iota(table.begin(), table.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);

  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_spaces();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_spaces();
      if (pos >= text.size()) throw ParseError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!cycle.empty() && text[pos] == ',') {
        ++pos;
        skip_spaces();
        if (pos >= text.size()) throw ParseError("unterminated cycle");
        if (text[pos] == ')') throw ParseError("dangling separator before ')'");
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(std::string("unexpected character '") + text[pos] + "' at position " +
                         std::to_string(pos));
      long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > degree)
          throw ParseError("point " + std::to_string(value) + " out of range for degree " +
                           std::to_string(degree));
        ++pos;
      }
      if (value < 1)
        throw ParseError("points are 1-based; 0 is not a valid point");
      const int point = static_cast<int>(value);
      if (used[static_cast<std::size_t>(point)])
        throw ParseError("repeated point " + std::to_string(point));
      used[static_cast<std::size_t>(point)] = true;
      cycle.push_back(point);
    }
    for (std::size_t t = 0; t < cycle.size(); ++t)
      table[static_cast<std::size_t>(cycle[t])] = cycle[(t + 1) % cycle.size()];
    skip_spaces();
  }
  return Permutation::from_table_unchecked(std::move(table));
}

std::string format_cycles(const Permutation& p) {
  const auto cycles = cycles_of(p);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(c[j]);
    }
    out += ')';
  }
  return out;
}

Permutation aligning_conjugator(const Permutation& from, const Permutation& to) {
  check_same_degree(from, to);
  if (cycle_type(from) != cycle_type(to))
    throw std::invalid_argument("cycle types differ; no conjugator exists");
  auto canonical = [](const Permutation& p) {
    auto cycles = all_cycles_of(p);
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return cycles;
  };
  const auto from_cycles = canonical(from);
  const auto to_cycles = canonical(to);
  const int n = from.degree();
  std::vector<int> table(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t c = 0; c < from_cycles.size(); ++c)
    for (std::size_t t = 0; t < from_cycles[c].size(); ++t)
      table[static_cast<std::size_t>(from_cycles[c][t])] = to_cycles[c][t];
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation restricted_to(const Permutation& p, const std::vector<int>& points) {
  const int n = p.degree();
  std::vector<bool> in_set(static_cast<std::size_t>(n) + 1, false);
  for (int x : points) {
    if (x < 1 || x > n) throw std::invalid_argument("point out of range: " + std::to_string(x));
    in_set[static_cast<std::size_t>(x)] = true;
  }
  std::vector<int> table(static_cast<std::size_t>(n) + 1, 0);
  std::iota(table.begin(), table.end(), 0);
  for (int x : points) {
    if (!in_set[static_cast<std::size_t>(p(x))])
      throw std::invalid_argument("permutation does not map the point set onto itself");
    table[static_cast<std::size_t>(x)] = p(x);
  }
  return Permutation::from_table_unchecked(std::move(table));
}

CycleType restricted_cycle_type(const Permutation& p, const std::vector<int>& points) {
  const Permutation r = restricted_to(p, points);
  std::vector<bool> in_set(static_cast<std::size_t>(p.degree()) + 1, false);
  for (int x : points) in_set[static_cast<std::size_t>(x)] = true;
  std::vector<int> lengths;
  for (const auto& c : all_cycles_of(r))
    if (in_set[static_cast<std::size_t>(c.front())])
      lengths.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(lengths));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << format_cycles(p);
}

std::ostream& operator<<(std::ostream& os, const CycleType& t) {
  return os << t.to_string();
}

}  // namespace homconj
