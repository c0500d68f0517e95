#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgv/errors.hpp"

namespace lgv {

using Exponent = std::uint16_t;
using ExponentSpan = std::span<const Exponent>;

inline bool is_valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

/// Ordered variable names with positive integer weights (default 1).
class VarTable {
 public:
  VarTable() = default;

  explicit VarTable(std::vector<std::string> names, std::vector<int> weights = {})
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size())
      throw StructuralError("weight list length does not match variable count");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_valid_identifier(names_[i]))
        throw ParseError("invalid variable name '" + names_[i] + "'");
      if (weights_[i] <= 0)
        throw StructuralError("variable weights must be positive ('" + names_[i] + "')");
      if (!index_.emplace(names_[i], i).second)
        throw StructuralError("duplicate variable name '" + names_[i] + "'");
    }
  }

  /// Same names, with the deformation variable `s` (if present) carrying weight 2.
  VarTable with_s_weight_two() const {
    auto w = weights_;
    if (auto i = find("s")) w[*i] = 2;
    return VarTable(names_, std::move(w));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  bool has_unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
  }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(const std::string& name) const {
    auto i = find(name);
    if (!i) throw StructuralError("unknown variable '" + name + "'");
    return *i;
  }

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Exponent vector indexed by a VarTable.
using Monomial = std::vector<Exponent>;

inline long total_degree(ExponentSpan a) { return std::accumulate(a.begin(), a.end(), 0L); }

inline long weighted_degree(ExponentSpan a, std::span<const int> weights) {
  long d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += static_cast<long>(weights[i]) * a[i];
  return d;
}

inline bool divides(ExponentSpan a, ExponentSpan b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool coprime(ExponentSpan a, ExponentSpan b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

inline Monomial lcm(ExponentSpan a, ExponentSpan b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

/// a / b, assuming b divides a.
inline Monomial quotient(ExponentSpan a, ExponentSpan b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = static_cast<Exponent>(a[i] - b[i]);
  return m;
}

inline Monomial product(ExponentSpan a, ExponentSpan b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    unsigned e = unsigned(a[i]) + b[i];
    if (e > 0xFFFFu) throw ResourceError("max_degree", "exponent overflow");
    m[i] = static_cast<Exponent>(e);
  }
  return m;
}

inline bool is_squarefree(ExponentSpan a) {
  return std::all_of(a.begin(), a.end(), [](Exponent e) { return e <= 1; });
}

/// Bitmask of the variables with positive exponent (first 64 variables).
inline std::uint64_t support_mask(ExponentSpan a) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < a.size() && i < 64; ++i)
    if (a[i]) m |= std::uint64_t{1} << i;
  return m;
}

enum class OrderKind { lex, grevlex, weighted_grevlex };

/// A term order assembled from consecutive blocks. Each block lists variable
/// indices (in the order they are scanned) and compares its restriction either
/// lexicographically or by (weighted) degree with reverse-lexicographic ties.
class MonomialOrder {
 public:
  struct Block {
    std::vector<std::size_t> vars;
    OrderKind kind = OrderKind::grevlex;
    std::vector<int> weights;  // parallel to vars; all ones unless weighted

    friend bool operator==(const Block&, const Block&) = default;
  };

  MonomialOrder() = default;
  MonomialOrder(std::size_t nvars, std::vector<Block> blocks) : nvars_(nvars), blocks_(std::move(blocks)) {
    std::vector<int> seen(nvars_, 0);
    for (auto& b : blocks_) {
      if (b.weights.empty()) b.weights.assign(b.vars.size(), 1);
      for (auto v : b.vars) {
        if (v >= nvars_ || seen[v]++) throw StructuralError("monomial order blocks must partition the variables");
      }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
      throw StructuralError("monomial order blocks must partition the variables");
  }

  static MonomialOrder lex(std::size_t n) { return {n, {{iota(n), OrderKind::lex, {}}}}; }
  static MonomialOrder grevlex(std::size_t n) { return {n, {{iota(n), OrderKind::grevlex, {}}}}; }
  static MonomialOrder weighted_grevlex(const std::vector<int>& weights) {
    return {weights.size(), {{iota(weights.size()), OrderKind::weighted_grevlex, weights}}};
  }
  /// grevlex with the variables scanned in the given permuted order.
  static MonomialOrder permuted_grevlex(std::vector<std::size_t> perm) {
    auto n = perm.size();
    return {n, {{std::move(perm), OrderKind::grevlex, {}}}};
  }
  /// Elimination order: `dominant` variables form the first block, the rest the
  /// second; both blocks use `inner`.
  static MonomialOrder elimination(std::size_t n, const std::vector<bool>& dominant,
                                   OrderKind inner = OrderKind::grevlex,
                                   const std::vector<int>& weights = {}) {
    Block first{{}, inner, {}}, second{{}, inner, {}};
    for (std::size_t i = 0; i < n; ++i) {
      auto& b = dominant.at(i) ? first : second;
      b.vars.push_back(i);
      b.weights.push_back(weights.empty() ? 1 : weights[i]);
    }
    std::vector<Block> blocks;
    if (!first.vars.empty()) blocks.push_back(std::move(first));
    if (!second.vars.empty()) blocks.push_back(std::move(second));
    return {n, std::move(blocks)};
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  std::strong_ordering compare(ExponentSpan a, ExponentSpan b) const {
    if (a.size() != nvars_ || b.size() != nvars_)
      throw StructuralError("monomial length does not match the order");
    for (const auto& blk : blocks_) {
      if (blk.kind == OrderKind::lex) {
        for (auto v : blk.vars)
          if (a[v] != b[v]) return a[v] <=> b[v];
        continue;
      }
      long da = 0, db = 0;
      for (std::size_t j = 0; j < blk.vars.size(); ++j) {
        da += static_cast<long>(blk.weights[j]) * a[blk.vars[j]];
        db += static_cast<long>(blk.weights[j]) * b[blk.vars[j]];
      }
      if (da != db) return da <=> db;
      for (std::size_t j = blk.vars.size(); j-- > 0;) {
        auto v = blk.vars[j];
        if (a[v] != b[v]) return b[v] <=> a[v];
      }
    }
    return std::strong_ordering::equal;
  }

  /// Stable textual identity, used as a cache key and in reports.
  std::string key() const {
    std::string k;
    for (const auto& blk : blocks_) {
      k += blk.kind == OrderKind::lex ? "lex(" : blk.kind == OrderKind::grevlex ? "grevlex(" : "wgrevlex(";
      for (std::size_t j = 0; j < blk.vars.size(); ++j) {
        if (j) k += ',';
        k += std::to_string(blk.vars[j]);
        if (blk.weights[j] != 1) k += "^" + std::to_string(blk.weights[j]);
      }
      k += ')';
    }
    return k;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
  }

  std::size_t nvars_ = 0;
  std::vector<Block> blocks_;
};

/// Parses "lex", "grevlex", "wgrevlex" for a given variable table.
inline MonomialOrder order_by_name(const std::string& name, const VarTable& vars) {
  if (name == "lex") return MonomialOrder::lex(vars.size());
  if (name == "grevlex") return MonomialOrder::grevlex(vars.size());
  if (name == "wgrevlex" || name == "weighted_grevlex") return MonomialOrder::weighted_grevlex(vars.weights());
  throw ParseError("unknown monomial order '" + name + "' (expected lex, grevlex or wgrevlex)");
}

}  // namespace lgv
