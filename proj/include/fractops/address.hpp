#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fractops {

/// A code-space symbol, 1..N. Zero is never a valid symbol.
using Symbol = std::uint8_t;

inline constexpr std::size_t kDefaultMaxDepth = 48;
inline constexpr std::size_t kMaxAlphabet = 255;

/// A finite symbol string standing for the infinite address obtained by
/// padding it with 1s. The empty prefix stands for 1̄.
class AddressPrefix {
 public:
  AddressPrefix() = default;
  explicit AddressPrefix(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  /// Digits 1-9, e.g. "3122"; the empty string is the empty prefix.
  static AddressPrefix parse(std::string_view text);
  static AddressPrefix repeated(Symbol s, std::size_t count);

  std::string to_string() const;

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  /// Symbol at index i of the padded address.
  Symbol padded(std::size_t i) const { return i < symbols_.size() ? symbols_[i] : Symbol{1}; }
  std::span<const Symbol> symbols() const { return symbols_; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  AddressPrefix truncated(std::size_t depth) const;

  /// Literal equality of the stored symbols (not of the padded addresses).
  friend bool operator==(const AddressPrefix&, const AddressPrefix&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Tops ordering of padded addresses: at the first differing index the
/// smaller symbol is the greater address, so 1̄ is the maximum.
std::strong_ordering tops_compare(const AddressPrefix& p, const AddressPrefix& q);

/// Same ordering on raw padded symbol spans of equal length.
std::strong_ordering tops_compare(std::span<const Symbol> p, std::span<const Symbol> q);

/// 2^-k for the least (1-based) index k where the padded addresses differ, else 0.
double code_metric(const AddressPrefix& p, const AddressPrefix& q);

/// Drops the first symbol; the empty prefix maps to itself.
AddressPrefix shift(const AddressPrefix& p);

AddressPrefix concat(const AddressPrefix& p, const AddressPrefix& q);

struct BoundedConcat {
  AddressPrefix prefix;
  bool truncated = false;
};

/// Concatenation cut to max_depth symbols, reporting whether anything was dropped.
BoundedConcat concat_bounded(const AddressPrefix& p, const AddressPrefix& q,
                             std::size_t max_depth = kDefaultMaxDepth);

/// The reversed address σ_k σ_{k-1} ... σ_1 of a forward symbol stream, kept
/// to the D most recent symbols. Storage is always padded with 1s to D, so the
/// buffer itself is the padded address and compares with memcmp semantics.
class ReverseAccumulator {
 public:
  explicit ReverseAccumulator(std::size_t depth = kDefaultMaxDepth);

  void push(Symbol s);

  std::size_t depth() const { return padded_.size(); }
  /// Number of real (non-padding) symbols held, at most depth().
  std::size_t size() const { return size_; }
  /// Padded buffer of length depth(), most recent symbol first.
  std::span<const Symbol> padded() const { return padded_; }
  AddressPrefix read() const;

 private:
  std::vector<Symbol> padded_;
  std::size_t size_ = 0;
};

ReverseAccumulator acc_push(ReverseAccumulator acc, Symbol s);

}  // namespace fractops
