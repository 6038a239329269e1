// Triangular board geometry, positions, jumps and multi-jump moves.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisolve {

constexpr int kMaxSide = 26;  // labels stay within a..z

constexpr int triangular(int n) { return n * (n + 1) / 2; }

struct BoardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IllegalMoveError : std::runtime_error {
  int hop_index;
  IllegalMoveError(int hop, const std::string& what)
      : std::runtime_error(what), hop_index(hop) {}
};

/// A board hole: x = position within row (1-based), y = row from apex (1-based).
/// The apex is (1,1), labelled "a1"; the label letter encodes x, the digits y.
struct Coord {
  int x = 0;
  int y = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

std::string format_label(Coord c);
Coord parse_label(const std::string& s, int n);

/// One jump: origin hops over `over` into `dest`. Holes as indices.
struct Jump {
  int16_t origin;
  int16_t over;
  int16_t dest;
  friend bool operator==(const Jump&, const Jump&) = default;
  friend auto operator<=>(const Jump&, const Jump&) = default;
};

// The six lattice directions, as (dx, dy) steps in hole coordinates.
inline constexpr std::array<std::pair<int, int>, 6> kDirections{
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}};

/// Immutable Triangle(n) geometry: hole list (row-major from the apex),
/// the complete jump table, and the six dihedral symmetry maps.
/// Shareable across threads once built.
class BoardGeometry {
 public:
  explicit BoardGeometry(int n);

  int side() const { return n_; }
  int hole_count() const { return static_cast<int>(holes_.size()); }
  int word_count() const { return (hole_count() + 63) / 64; }

  const std::vector<Coord>& holes() const { return holes_; }
  Coord coord(int idx) const { return holes_[static_cast<size_t>(idx)]; }
  bool on_board(Coord c) const {
    return c.x >= 1 && c.y >= c.x && c.y <= n_;
  }
  /// Hole index of c, or -1 when off the board.
  int index_of(Coord c) const {
    if (!on_board(c)) return -1;
    return triangular(c.y - 1) + c.x - 1;
  }
  std::string label(int idx) const { return format_label(coord(idx)); }
  Coord parse(const std::string& s) const { return parse_label(s, n_); }

  const std::vector<Jump>& jumps() const { return jumps_; }
  std::span<const Jump> jumps_from(int hole) const {
    return {jumps_.data() + from_offset_[static_cast<size_t>(hole)],
            jumps_.data() + from_offset_[static_cast<size_t>(hole) + 1]};
  }

  /// Hole permutations of the dihedral group, in the fixed order
  /// {id, rho, rho^2, sigma, rho*sigma, rho^2*sigma}.
  const std::array<std::vector<int16_t>, 6>& symmetries() const {
    return symmetry_;
  }

  static Coord rotate(Coord c, int n) { return {n + 1 - c.y, n - c.y + c.x}; }
  static Coord reflect(Coord c, int /*n*/) { return {c.y - c.x + 1, c.y}; }

  bool is_corner(int idx) const {
    Coord c = coord(idx);
    return (c.x == 1 && c.y == 1) || (c.x == 1 && c.y == n_) ||
           (c.x == n_ && c.y == n_);
  }

 private:
  int n_;
  std::vector<Coord> holes_;
  std::vector<Jump> jumps_;           // sorted by (origin, dest)
  std::vector<int32_t> from_offset_;  // per-hole slice bounds into jumps_
  std::array<std::vector<int16_t>, 6> symmetry_;
};

BoardGeometry build_geometry(int n);

/// Occupancy of all T(n) holes as a fixed-width bit vector.
/// Bits beyond the hole count are always zero.
class Position {
 public:
  static constexpr int kMaxWords = (triangular(kMaxSide) + 63) / 64;

  Position() = default;
  static Position empty(const BoardGeometry& g);
  static Position full(const BoardGeometry& g);

  const BoardGeometry& board() const { return *board_; }
  bool valid() const { return board_ != nullptr; }

  bool test(int i) const {
    return (bits_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u;
  }
  void set(int i) { bits_[static_cast<size_t>(i >> 6)] |= 1ull << (i & 63); }
  void reset(int i) {
    bits_[static_cast<size_t>(i >> 6)] &= ~(1ull << (i & 63));
  }

  int peg_count() const;
  uint64_t word(int k) const { return bits_[static_cast<size_t>(k)]; }
  void set_word(int k, uint64_t w) { bits_[static_cast<size_t>(k)] = w; }

  Position complemented() const;

  bool operator==(const Position& o) const { return bits_ == o.bits_; }
  /// Total order on the occupancy vector (hole i = bit i of the multiword
  /// integer); used for canonicalization and deterministic tie-breaks.
  bool less_than(const Position& o) const;

  size_t hash() const;

 private:
  const BoardGeometry* board_ = nullptr;
  std::array<uint64_t, kMaxWords> bits_{};
};

struct PositionHash {
  size_t operator()(const Position& p) const { return p.hash(); }
};

/// A chain of one or more consecutive jumps by one peg.
/// path holds the holes visited (>= 2); removed holds the jumped holes,
/// one per hop. An i-sweep has removed.size() == i.
struct Move {
  std::vector<int16_t> path;
  std::vector<int16_t> removed;

  int hops() const { return static_cast<int>(removed.size()); }
  friend bool operator==(const Move&, const Move&) = default;
};

std::string move_to_string(const BoardGeometry& g, const Move& m);
/// Parses "c5-c3-a1" style move strings; jumped holes are derived from
/// the geometry and validated to be proper jump midpoints.
Move parse_move(const BoardGeometry& g, const std::string& s);

std::vector<Jump> legal_jumps(const Position& p);

/// Applies a multi-jump move, validating each hop in sequence.
/// Throws IllegalMoveError naming the first illegal hop.
Position apply_move(const Position& p, const Move& m);

/// All legal moves from p: every jump chain from every movable peg,
/// including non-maximal prefixes, in lexicographic path order.
std::vector<Move> enumerate_moves(const Position& p);

Position complement(const Position& p);

/// The lexicographically least image of p under the six symmetries,
/// together with the index of a map achieving it.
std::pair<Position, int> canonicalize(const Position& p);
Position apply_symmetry(const Position& p, int sym);

// --- text / hex interchange formats ---

/// n lines, line y holding y cells from {peg, hole} separated by spaces.
std::string position_to_text(const Position& p, bool centered = true);
Position position_from_text(const BoardGeometry& g, const std::string& text);

/// Hex encoding of the occupancy vector (hole i = bit i), fixed width.
std::string position_to_hex(const Position& p);
Position position_from_hex(const BoardGeometry& g, const std::string& hex);

}  // namespace trisolve
