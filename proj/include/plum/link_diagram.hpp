#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace plum {

/// Opaque crossing identifier, stable under crossing changes and mirroring.
struct CrossingId {
  int value = 0;
  friend auto operator<=>(const CrossingId&, const CrossingId&) = default;
};

/// One end of an arc. end 0 is the tail, end 1 the head.
struct ArcEnd {
  int arc = 0;
  int end = 0;

  ArcEnd twin() const { return {arc, 1 - end}; }
  friend auto operator<=>(const ArcEnd&, const ArcEnd&) = default;
};

/// Knot or link diagram as a 4-valent planar map. Every arc runs from one
/// crossing to the next along its component's orientation. Components that
/// meet no crossing at all are crossing-free circles and carry no arcs.
struct LinkDiagram {
  struct Arc {
    int component = 0;
    int tail = 0;  // crossing index
    int head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
  };
  struct Crossing {
    std::array<ArcEnd, 4> rotation{};  // counterclockwise
    int over = 0;                      // rotation[over], rotation[over + 2] form the over strand
    CrossingId origin{};
    friend bool operator==(const Crossing&, const Crossing&) = default;
  };

  int components = 0;
  std::vector<Arc> arcs;
  std::vector<Crossing> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int node_of(ArcEnd e) const { return e.end == 0 ? arcs[std::size_t(e.arc)].tail : arcs[std::size_t(e.arc)].head; }
  int position(int crossing, ArcEnd e) const;
  int component_at(int crossing, int position) const {
    return arcs[std::size_t(crossings[std::size_t(crossing)].rotation[std::size_t(position)].arc)].component;
  }
  bool over_component_differs(int crossing) const;
  /// +1 for a right-handed crossing: the under strand points along the over
  /// strand rotated a quarter turn counterclockwise.
  int sign(int crossing) const;

  /// Components that meet no crossing.
  std::vector<int> crossing_free_components() const;
  /// Faces of the map, as cyclic lists of departing arc ends.
  std::vector<std::vector<ArcEnd>> faces() const;
  /// Connected pieces of the map with at least one crossing.
  int map_component_count() const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

/// Empty iff arcs chain consistently, each crossing holds two opposite
/// strands each entering and leaving once, and Euler holds per map piece.
std::vector<std::string> validate_link_diagram(const LinkDiagram& d);

/// Closure of the 2-braid sigma_1^c, all crossings right-handed when
/// `right_handed`. One component for odd c, two for even c.
LinkDiagram closed_two_braid(int crossings, bool right_handed = true);

/// Knot from a planar-diagram code: each entry X[i,j,k,l] lists arc labels
/// counterclockwise starting at the incoming under strand; labels 1..2c run
/// along the orientation.
LinkDiagram knot_from_pd(const std::vector<std::array<int, 4>>& code);

LinkDiagram mirror(const LinkDiagram& d);

}  // namespace plum
