#include "lieelem/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lieelem/errors.hpp"

namespace lieelem {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(images_.size(), false);
  for (const int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidCycleError("Permutation: image array is not a bijection of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) { return from_cycles(n, {{i, j}}); }

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (const int v : cycle) {
      if (v < 1 || v > n) throw InvalidCycleError("cycle index " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(v - 1)]) throw InvalidCycleError("cycle index " + std::to_string(v) + " repeated");
      used[static_cast<std::size_t>(v - 1)] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p.images_[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::parse(int n, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("permutation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("permutation: unterminated cycle in \"" + text + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("permutation: unexpected character in \"" + text + "\"");
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      cycle.push_back(v);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(n, cycles);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return inv;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) seen[j] = true;
  }
  return count;
}

int Permutation::sign() const { return ((degree() - cycle_count()) % 2 == 0) ? 1 : -1; }

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j + 1));
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

Permutation Permutation::extended(int m) const {
  if (m < degree()) throw DimensionError("Permutation::extended: target degree is smaller");
  Permutation p = identity(m);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw DimensionError("compose: degree mismatch");
  std::vector<int> im(static_cast<std::size_t>(s.degree()));
  for (int i = 1; i <= s.degree(); ++i) im[static_cast<std::size_t>(i - 1)] = s(t(i));
  return Permutation(std::move(im));
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::size_t lex_rank(const Permutation& p) {
  const int n = p.degree();
  std::size_t rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    const int v = p(i);
    std::size_t smaller = 0;
    for (int u = 1; u < v; ++u)
      if (!used[static_cast<std::size_t>(u)]) ++smaller;
    rank += smaller * factorial(n - i);
    used[static_cast<std::size_t>(v)] = true;
  }
  return rank;
}

Permutation lex_unrank(int n, std::size_t rank) {
  if (rank >= factorial(n)) throw DimensionError("lex_unrank: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> im;
  im.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::size_t f = factorial(i - 1);
    const std::size_t k = rank / f;
    rank %= f;
    im.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace lieelem
