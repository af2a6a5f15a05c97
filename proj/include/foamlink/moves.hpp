#pragma once

// Reidemeister moves on surface link diagrams. Every move returns a new
// diagram; the input is untouched. New crossings are appended to the end of
// the crossing order and every strand keeps its total class.

#include <vector>

#include "foamlink/diagram.hpp"
#include "foamlink/states.hpp"

namespace foamlink {

enum class KinkSign { Positive, Negative };

/// Adds a kink on edge `edge`. For a positive kink the positive smoothing of
/// the new crossing splits off a small trivial circle; for a negative kink the
/// negative smoothing does.
[[nodiscard]] Diagram apply_r1(const Diagram& d, int edge, KinkSign sign);

/// Boundary walk of one face of the diagram's ribbon graph, keeping the face
/// on the right (arrive at slot s, leave through slot s+1).
using FaceWalk = std::vector<DirectedEdge>;
[[nodiscard]] std::vector<FaceWalk> face_walks(const Diagram& d);

/// Pushes a finger of edge `a` across edge `b`, creating two crossings. The
/// finger runs inside the face on the right of a traversal of `a` in direction
/// `dir_a` and meets `b` traversed in direction `dir_b` along that face;
/// `finger_label` is the class of the finger's outbound path. The finger
/// passes over `b` when `a_over` is set.
[[nodiscard]] Diagram apply_r2_explicit(const Diagram& d, int a, int dir_a, int b, int dir_b,
                                        const ClassVector& finger_label, bool a_over = true);

/// R2 between two edges on a common face, located by face walks. Throws
/// MoveNotApplicable when no face carries both edges.
[[nodiscard]] Diagram apply_r2(const Diagram& d, int a, int b, bool a_over = true);

/// Pairs of distinct edges sharing a face, each pair once, in a fixed order.
[[nodiscard]] std::vector<std::pair<int, int>> r2_candidates(const Diagram& d);

/// Slides a strand across the crossing of the other two strands of a
/// triangular face bounded by the three crossings. Requires the triangle's
/// edges to carry zero labels and the over/under pattern of an R3 triangle.
[[nodiscard]] Diagram apply_r3(const Diagram& d, const std::vector<int>& triangle);

/// Triples of crossings where apply_r3 succeeds.
[[nodiscard]] std::vector<std::vector<int>> r3_candidates(const Diagram& d);

/// Diagram with the crossing order permuted (perm[k] = new position k's old
/// position).
[[nodiscard]] Diagram with_crossing_order(const Diagram& d, std::vector<int> order);

/// Switches over- and under-strand at a crossing (slot s becomes slot s+1).
[[nodiscard]] Diagram change_crossing(const Diagram& d, int crossing);

/// Disjoint union with a crossingless trivial circle.
[[nodiscard]] Diagram with_trivial_circle(const Diagram& d);

/// Diagram with crossing `crossing` replaced by its smoothing: the two arcs of
/// the smoothing become edges (merged with their neighbours).
[[nodiscard]] Diagram smooth_crossing(const Diagram& d, int crossing, Smoothing s);

}  // namespace foamlink
