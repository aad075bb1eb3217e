#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mps {

/// A dichotomic outcome / coordinate value.
enum class Sign : std::int8_t { plus = +1, minus = -1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus : Sign::minus;
}
constexpr Sign sign_of(int v) { return v >= 0 ? Sign::plus : Sign::minus; }
constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

constexpr char axis_char(Axis a) {
  return a == Axis::x ? 'X' : (a == Axis::y ? 'Y' : 'Z');
}

/// One cube vertex: the complete configuration of an elementary system.
struct OnticState {
  Sign x, y, z;

  constexpr Sign coord(Axis a) const {
    switch (a) {
      case Axis::x: return x;
      case Axis::y: return y;
      case Axis::z: return z;
    }
    throw std::logic_error("bad axis");
  }

  // Encoding: bit order (x, y, z) from most to least significant,
  // sign +1 -> bit 0, -1 -> bit 1. Indices run 0..7.
  constexpr int encode() const {
    auto bit = [](Sign s) { return s == Sign::plus ? 0 : 1; };
    return (bit(x) << 2) | (bit(y) << 1) | bit(z);
  }
  static constexpr OnticState decode(int index) {
    auto sgn = [](int b) { return b == 0 ? Sign::plus : Sign::minus; };
    return OnticState{sgn((index >> 2) & 1), sgn((index >> 1) & 1), sgn(index & 1)};
  }

  friend constexpr bool operator==(const OnticState&, const OnticState&) = default;
  friend constexpr auto operator<=>(const OnticState&, const OnticState&) = default;
};

/// The hidden variable of the bipartite system: a pair of cube vertices.
struct JointOnticState {
  OnticState first, second;

  // 6-bit encoding, order x1 y1 z1 x2 y2 z2, system 1 most significant.
  constexpr int encode() const { return (first.encode() << 3) | second.encode(); }
  static constexpr JointOnticState decode(int index) {
    return JointOnticState{OnticState::decode((index >> 3) & 7),
                           OnticState::decode(index & 7)};
  }

  constexpr Sign coord(int subsystem, Axis a) const {
    return subsystem == 1 ? first.coord(a) : second.coord(a);
  }

  friend constexpr bool operator==(const JointOnticState&, const JointOnticState&) = default;
  friend constexpr auto operator<=>(const JointOnticState&, const JointOnticState&) = default;
};

/// Symbolic dichotomic observable: a single coordinate of one subsystem, or
/// the product of one coordinate from each subsystem.
struct Observable {
  enum class Kind : std::uint8_t { single, product };

  Kind kind;
  int subsystem;  // single only: 1 or 2
  Axis axis1;     // single: the axis; product: axis on system 1
  Axis axis2;     // product only: axis on system 2

  static constexpr Observable single(int subsystem, Axis a) {
    if (subsystem != 1 && subsystem != 2)
      throw std::invalid_argument("Observable: subsystem must be 1 or 2");
    return Observable{Kind::single, subsystem, a, a};
  }
  static constexpr Observable product(Axis a1, Axis a2) {
    return Observable{Kind::product, 0, a1, a2};
  }

  friend constexpr bool operator==(const Observable&, const Observable&) = default;
};

/// The model's eleven observables: X1,Y1,Z1, X2,Y2,Z2, X1X2, Y1Y2, Z1Z2,
/// X1Y2, Y1X2. Anything else (e.g. Z1X2) is representable but not part of
/// the catalog and is rejected by measurement construction.
const std::array<Observable, 11>& observable_catalog();
bool in_catalog(const Observable& obs);

constexpr Sign evaluate_observable(const Observable& obs, const JointOnticState& w) {
  if (obs.kind == Observable::Kind::single)
    return w.coord(obs.subsystem, obs.axis1);
  return w.first.coord(obs.axis1) * w.second.coord(obs.axis2);
}

/// Coordinate products of a joint state: `direct` is (x1x2, y1y2, z1z2),
/// `swapped` is (x1y2, y1x2, z1z2). These are the (in)equality patterns the
/// correlated post-measurement states are defined by.
struct ParityProfile {
  std::array<Sign, 3> direct;
  std::array<Sign, 3> swapped;

  friend constexpr bool operator==(const ParityProfile&, const ParityProfile&) = default;
};

constexpr ParityProfile parity_profile(const JointOnticState& w) {
  return ParityProfile{
      {w.first.x * w.second.x, w.first.y * w.second.y, w.first.z * w.second.z},
      {w.first.x * w.second.y, w.first.y * w.second.x, w.first.z * w.second.z}};
}

inline constexpr int kElementarySpaceSize = 8;
inline constexpr int kJointSpaceSize = 64;

}  // namespace mps
