#pragma once
// Integer Laurent polynomials in one variable, stored sparsely.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cubik {

class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(std::int64_t c) { if (c) c_[0] = c; }
  static Laurent monomial(int e, std::int64_t c) {
    Laurent p; if (c) p.c_[e] = c; return p;
  }

  const std::map<int, std::int64_t>& terms() const { return c_; }
  bool zero() const { return c_.empty(); }
  std::int64_t coeff(int e) const { auto it = c_.find(e); return it == c_.end() ? 0 : it->second; }

  void add(int e, std::int64_t c) {
    if (!c) return;
    auto it = c_.emplace(e, 0).first;
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }

  Laurent& operator+=(const Laurent& p) {
    for (auto [e, c] : p.c_) add(e, c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto [e1, c1] : a.c_)
      for (auto [e2, c2] : b.c_) r.add(e1 + e2, c1 * c2);
    return r;
  }
  Laurent& operator*=(const Laurent& p) { *this = *this * p; return *this; }

  // substitute variable -> variable^-1
  Laurent invert_variable() const {
    Laurent r;
    for (auto [e, c] : c_) r.add(-e, c);
    return r;
  }

  // exact division; throws if remainder nonzero
  Laurent divide_exact(const Laurent& d) const {
    if (d.zero()) throw std::runtime_error("laurent: divide by zero");
    Laurent rem = *this, q;
    auto lead = *d.c_.rbegin();  // highest-degree term of divisor
    while (!rem.zero()) {
      auto rl = *rem.c_.rbegin();
      if (rl.second % lead.second != 0) throw std::runtime_error("laurent: inexact division");
      int e = rl.first - lead.first;
      std::int64_t c = rl.second / lead.second;
      q.add(e, c);
      for (auto [de, dc] : d.c_) rem.add(e + de, -c * dc);
    }
    return q;
  }

  bool operator==(const Laurent& p) const { return c_ == p.c_; }

  // "e:c,e:c,..." ascending exponents; "0:0" for zero
  std::string serialize() const {
    if (c_.empty()) return "0:0";
    std::ostringstream ss;
    bool first = true;
    for (auto [e, c] : c_) {
      if (!first) ss << ',';
      ss << e << ':' << c;
      first = false;
    }
    return ss.str();
  }

 private:
  std::map<int, std::int64_t> c_;
};

}  // namespace cubik
