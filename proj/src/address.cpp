#include "fractops/address.hpp"

#include <algorithm>
#include <cmath>

#include "fractops/error.hpp"

namespace fractops {

AddressPrefix AddressPrefix::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char ch : text) {
    if (ch < '1' || ch > '9') {
      throw ValidationError("address symbols must be digits 1-9, got '" + std::string(text) + "'");
    }
    symbols.push_back(static_cast<Symbol>(ch - '0'));
  }
  return AddressPrefix(std::move(symbols));
}

AddressPrefix AddressPrefix::repeated(Symbol s, std::size_t count) {
  return AddressPrefix(std::vector<Symbol>(count, s));
}

std::string AddressPrefix::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    if (s >= 1 && s <= 9) {
      out.push_back(static_cast<char>('0' + s));
    } else {
      out += "[" + std::to_string(s) + "]";
    }
  }
  return out;
}

AddressPrefix AddressPrefix::truncated(std::size_t depth) const {
  if (depth >= symbols_.size()) return *this;
  return AddressPrefix(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + depth));
}

std::strong_ordering tops_compare(const AddressPrefix& p, const AddressPrefix& q) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol a = p.padded(i);
    const Symbol b = q.padded(i);
    if (a != b) return a < b ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering tops_compare(std::span<const Symbol> p, std::span<const Symbol> q) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol a = i < p.size() ? p[i] : Symbol{1};
    const Symbol b = i < q.size() ? q[i] : Symbol{1};
    if (a != b) return a < b ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

double code_metric(const AddressPrefix& p, const AddressPrefix& q) {
  const std::size_t n = std::max(p.size(), q.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (p.padded(i) != q.padded(i)) return std::ldexp(1.0, -static_cast<int>(i + 1));
  }
  return 0.0;
}

AddressPrefix shift(const AddressPrefix& p) {
  if (p.empty()) return p;
  auto s = p.symbols();
  return AddressPrefix(std::vector<Symbol>(s.begin() + 1, s.end()));
}

AddressPrefix concat(const AddressPrefix& p, const AddressPrefix& q) {
  std::vector<Symbol> out(p.symbols().begin(), p.symbols().end());
  out.insert(out.end(), q.symbols().begin(), q.symbols().end());
  return AddressPrefix(std::move(out));
}

BoundedConcat concat_bounded(const AddressPrefix& p, const AddressPrefix& q, std::size_t max_depth) {
  AddressPrefix joined = concat(p, q);
  const bool cut = joined.size() > max_depth;
  return {cut ? joined.truncated(max_depth) : std::move(joined), cut};
}

ReverseAccumulator::ReverseAccumulator(std::size_t depth) : padded_(depth, Symbol{1}) {
  if (depth == 0) throw ValidationError("reverse accumulator depth must be >= 1");
}

void ReverseAccumulator::push(Symbol s) {
  std::copy_backward(padded_.begin(), padded_.end() - 1, padded_.end());
  padded_.front() = s;
  if (size_ < padded_.size()) ++size_;
}

AddressPrefix ReverseAccumulator::read() const {
  return AddressPrefix(std::vector<Symbol>(padded_.begin(), padded_.begin() + size_));
}

ReverseAccumulator acc_push(ReverseAccumulator acc, Symbol s) {
  acc.push(s);
  return acc;
}

}  // namespace fractops
