#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace godel {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class errc { validation, dimension, precondition, resource };

const char* errc_name(errc c);

/// Library-wide error. `subject` is the short machine-readable part
/// ("antisymmetry violated", "chain cap", ...); what() carries the details.
class error : public std::runtime_error {
public:
  error(errc kind, std::string subject, const std::string& detail)
      : std::runtime_error(detail.empty() ? subject : subject + ": " + detail),
        kind_(kind),
        subject_(std::move(subject)) {}

  errc kind() const { return kind_; }
  const std::string& subject() const { return subject_; }

private:
  errc kind_;
  std::string subject_;
};

[[noreturn]] void fail_validation(const std::string& subject, const std::string& detail = "");
[[noreturn]] void fail_dimension(const std::string& subject, const std::string& detail = "");
[[noreturn]] void fail_precondition(const std::string& subject, const std::string& detail = "");
[[noreturn]] void fail_resource(const std::string& cap_name, std::size_t cap, std::size_t reached);

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

struct RunConfig {
  std::size_t chain_cap = 1'000'000;  // max chains enumerated per poset
  std::size_t hom_cap = 100'000;      // max nodes/results in map searches
  std::size_t upset_cap = 100'000;    // max upsets enumerated per poset
  std::size_t algebra_cap = 4'096;    // max elements for materialized operation tables
  std::size_t order_cap = 20'000;     // max chains for a materialized order table
  int generator_cap = 3;              // max free generators (2^k carrier)
  std::uint64_t seed = 0;             // seed for randomized property runs

  void validate() const;  // caps positive
};

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64): identical streams on every platform,
// unlike std::uniform_int_distribution.
// ---------------------------------------------------------------------------

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Bits: fixed-size bit mask over a structure's carrier.
// Binary operations require equal sizes and throw dimension errors otherwise.
// Unused high bits are kept zero so equality and hashing are word-wise.
// ---------------------------------------------------------------------------

class Bits {
public:
  Bits() = default;
  explicit Bits(int size) : n_(size), w_(words(size), 0) {}

  static Bits full(int size) {
    Bits b(size);
    for (int i = 0; i < size; ++i) b.set(i);
    return b;
  }
  static Bits single(int size, int i) {
    Bits b(size);
    b.set(i);
    return b;
  }

  int size() const { return n_; }

  bool test(int i) const {
    range_check(i);
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    range_check(i);
    w_[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63);
  }
  void reset(int i) {
    range_check(i);
    w_[static_cast<std::size_t>(i) >> 6] &= ~(1ULL << (i & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const Bits& o) const {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits& operator&=(const Bits& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator^=(const Bits& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

  /// Set difference.
  friend Bits operator-(Bits a, const Bits& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.w_.size(); ++i) a.w_[i] &= ~b.w_[i];
    return a;
  }

  /// Complement within the carrier.
  Bits operator~() const {
    Bits r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  /// Numeric comparison (element 0 is the lowest bit); canonical sort order.
  bool numeric_less(const Bits& o) const {
    check_same(o);
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[i])));
    return -1;
  }

  std::vector<int> to_list() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(i * 64) + b);
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL ^ static_cast<std::size_t>(n_);
    for (std::uint64_t w : w_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

private:
  static std::size_t words(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

  void range_check(int i) const {
    if (i < 0 || i >= n_) fail_dimension("index out of range");
  }
  void check_same(const Bits& o) const {
    if (n_ != o.n_) fail_dimension("mask size mismatch");
  }
  void trim() {
    if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (~0ULL) >> (64 - n_ % 64);
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

std::string u128_to_string(unsigned __int128 v);

}  // namespace godel
