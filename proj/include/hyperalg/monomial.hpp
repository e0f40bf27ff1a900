#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperalg/chevalley.hpp"
#include "hyperalg/convex_order.hpp"
#include "hyperalg/root_system.hpp"

namespace hyperalg {

enum class Mode { kPlus, kMinus, kFull };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::kPlus: return "plus";
    case Mode::kMinus: return "minus";
    case Mode::kFull: return "full";
  }
  return "?";
}

enum class SlotKind : std::uint8_t { kF, kH, kE };

constexpr int kMaxSlots = 32;

/// Exponent per slot; slots are laid out f-part, then h-part, then e-part.
using Monomial = std::array<std::uint8_t, kMaxSlots>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t w[4];
    std::memcpy(w, m.data(), sizeof w);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

struct Slot {
  SlotKind kind;
  /// Convex index k (beta_{k+1}) for e/f slots, simple index i for h slots.
  int index;
  /// Root id carried by an e/f slot, -1 for h slots.
  int root;
};

/// Fixed convex order and slot layout shared by every element of one algebra.
class PbwLayout {
 public:
  PbwLayout(const RootSystem& rs, const ConvexOrder& co, Mode mode)
      : sc_(build_structure_constants(rs)), co_(co), mode_(mode) {
    const int nu = rs.num_positive();
    const int l = rs.rank();
    const int count = mode == Mode::kFull ? 2 * nu + l : nu;
    if (count > kMaxSlots)
      throw std::invalid_argument(std::string(mode_name(mode)) + " ambient for " + rs.type().name() + " needs " +
                                  std::to_string(count) + " slots, above the limit " + std::to_string(kMaxSlots));
    f_slot_.assign(static_cast<std::size_t>(nu), -1);
    e_slot_.assign(static_cast<std::size_t>(nu), -1);
    h_slot_.assign(static_cast<std::size_t>(l), -1);
    root_slot_.assign(static_cast<std::size_t>(2 * nu), -1);
    if (mode != Mode::kPlus)
      for (int k = nu - 1; k >= 0; --k) add_slot({SlotKind::kF, k, rs.negate(co.root_at(k))});
    if (mode == Mode::kFull)
      for (int i = 0; i < l; ++i) add_slot({SlotKind::kH, i, -1});
    if (mode != Mode::kMinus)
      for (int k = 0; k < nu; ++k) add_slot({SlotKind::kE, k, co.root_at(k)});
  }

  const RootSystem& roots() const { return sc_.roots(); }
  const StructureConstants& constants() const { return sc_; }
  const ConvexOrder& order() const { return co_; }
  Mode mode() const { return mode_; }
  int num_slots() const { return static_cast<int>(slots_.size()); }
  const Slot& slot(int s) const { return slots_[static_cast<std::size_t>(s)]; }
  int e_slot(int k) const { return e_slot_[static_cast<std::size_t>(k)]; }
  int f_slot(int k) const { return f_slot_[static_cast<std::size_t>(k)]; }
  int h_slot(int i) const { return h_slot_[static_cast<std::size_t>(i)]; }
  /// Slot holding the root vector e_id, or -1 when the mode has none.
  int slot_of_root(int id) const { return root_slot_[static_cast<std::size_t>(id)]; }

  bool same_algebra(const PbwLayout& o) const {
    return this == &o || (roots().type() == o.roots().type() && co_.reduced_word == o.co_.reduced_word && mode_ == o.mode_);
  }

  static Monomial unit() { return Monomial{}; }

  int last_slot(const Monomial& m) const {
    for (int s = num_slots() - 1; s >= 0; --s)
      if (m[static_cast<std::size_t>(s)]) return s;
    return -1;
  }

  int degree(const Monomial& m) const {
    int d = 0;
    for (int s = 0; s < num_slots(); ++s) d += m[static_cast<std::size_t>(s)];
    return d;
  }

  /// e-part contributes +, f-part -, h-part 0.
  Coords weight(const Monomial& m) const {
    Coords w(static_cast<std::size_t>(roots().rank()), 0);
    for (int s = 0; s < num_slots(); ++s) {
      const int n = m[static_cast<std::size_t>(s)];
      if (!n || slots_[static_cast<std::size_t>(s)].kind == SlotKind::kH) continue;
      const Coords& c = roots().root(slots_[static_cast<std::size_t>(s)].root).coords;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += n * c[i];
    }
    return w;
  }

  /// Canonical text such as f[0:1]*h[1:2]*e[3:4]; the unit prints as 1.
  std::string to_string(const Monomial& m) const {
    std::string out;
    for (int s = 0; s < num_slots(); ++s) {
      const int n = m[static_cast<std::size_t>(s)];
      if (!n) continue;
      const Slot& sl = slots_[static_cast<std::size_t>(s)];
      if (!out.empty()) out += '*';
      out += sl.kind == SlotKind::kF ? 'f' : sl.kind == SlotKind::kH ? 'h' : 'e';
      out += '[' + std::to_string(sl.index) + ':' + std::to_string(n) + ']';
    }
    return out.empty() ? "1" : out;
  }

  Monomial parse(const std::string& text) const {
    Monomial m{};
    if (text == "1") return m;
    if (text.empty()) throw std::invalid_argument("empty monomial text");
    std::size_t pos = 0;
    int last = -1;
    while (pos < text.size()) {
      const std::size_t end = text.find('*', pos);
      const std::string factor = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      pos = end == std::string::npos ? text.size() : end + 1;
      if (end != std::string::npos && pos == text.size()) throw std::invalid_argument("trailing '*' in " + text);
      const int s = parse_factor(factor, m);
      if (s < 0) continue;
      if (s <= last) throw std::invalid_argument("factors out of canonical order in " + text);
      last = s;
    }
    return m;
  }

 private:
  void add_slot(const Slot& s) {
    const int id = static_cast<int>(slots_.size());
    slots_.push_back(s);
    if (s.kind == SlotKind::kH) {
      h_slot_[static_cast<std::size_t>(s.index)] = id;
      return;
    }
    (s.kind == SlotKind::kE ? e_slot_ : f_slot_)[static_cast<std::size_t>(s.index)] = id;
    root_slot_[static_cast<std::size_t>(s.root)] = id;
  }

  // Returns the slot written, or -1 for an elided zero exponent.
  int parse_factor(const std::string& f, Monomial& m) const {
    auto bad = [&] { return std::invalid_argument("malformed factor '" + f + "'"); };
    if (f.size() < 6 || f[1] != '[' || f.back() != ']') throw bad();
    const std::size_t colon = f.find(':');
    if (colon == std::string::npos) throw bad();
    int index = 0, n = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(f.substr(2, colon - 2), &used);
      if (used != colon - 2) throw bad();
      n = std::stoi(f.substr(colon + 1, f.size() - colon - 2), &used);
      if (used != f.size() - colon - 2) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
    if (index < 0 || n < 0 || n > 255) throw bad();
    int s = -1;
    const int nu = roots().num_positive();
    switch (f[0]) {
      case 'e': s = index < nu ? e_slot(index) : -1; break;
      case 'f': s = index < nu ? f_slot(index) : -1; break;
      case 'h': s = index < roots().rank() ? h_slot(index) : -1; break;
      default: throw bad();
    }
    if (s < 0) throw std::invalid_argument("factor '" + f + "' is not part of the " + mode_name(mode_) + " ambient");
    if (n == 0) return -1;
    m[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(n);
    return s;
  }

  StructureConstants sc_;
  ConvexOrder co_;
  Mode mode_;
  std::vector<Slot> slots_;
  std::vector<int> f_slot_, e_slot_, h_slot_, root_slot_;
};

}  // namespace hyperalg
