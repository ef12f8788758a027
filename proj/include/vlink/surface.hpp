#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vlink/gauss_code.hpp"
#include "vlink/moves.hpp"
#include "vlink/presentation.hpp"

namespace vlink {

struct SurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A double point curve record: the four sheets around the curve, with
// a = under_in, b = over_in, c = over_out, d = under_out.
struct SurfaceCurve {
  std::string id;
  std::string under_in, over_in, over_out, under_out;
  int sign = +1;
};

// Sheets plus double-point-curve records: the combinatorics of a broken
// surface diagram, without any embedding data.
struct SurfacePresentation {
  std::vector<std::string> sheets;
  std::vector<SurfaceCurve> curves;
  std::vector<std::array<std::string, 3>> triples;  // optional triple points
};

std::string surface_presentation_to_json(const SurfacePresentation& sp);
SurfacePresentation surface_presentation_from_json(const std::string& text);

enum class CurveKind { Closed, Cusped };

// A marked curve on the abstract surface: the lift of one side of a double
// point curve, with its pairing, over flag, arrow and normal-marking tags.
struct MarkedCurve {
  std::string id;
  CurveKind kind = CurveKind::Closed;
  std::string partner;
  bool over = false;
  std::string arrow;   // for cusped curves: "toward" or "away" (the cusp)
  std::string normal;
};

struct SurfaceComponent {
  int genus = 0;
};

struct CurveCrossing {
  std::array<std::string, 2> curves;
  std::string triple;  // shared-triple annotation
};

struct SurfaceGaussCode {
  std::vector<SurfaceComponent> components;
  std::vector<MarkedCurve> curves;
  std::vector<CurveCrossing> crossings;
};

std::string surface_gauss_to_json(const SurfaceGaussCode& sgc);
SurfaceGaussCode surface_gauss_from_json(const std::string& text);

struct ClauseViolation {
  int clause = 0;  // 1..4
  std::string message;
};

struct SurfaceValidation {
  bool valid = true;
  std::vector<ClauseViolation> violations;
};

// Checks the four marked-curve conditions: (1) every curve closed or
// cusped, (2) symmetric pairing into distinct partners with exactly one
// over mark and arrow/normal markings present, (3) cusped curves partnered
// together with arrows both toward or both away from the cusp, (4) crossings
// closed under partnering. Throws SurfaceError on dangling curve ids.
SurfaceValidation validate_surface_gauss(const SurfaceGaussCode& sgc);

// The spun surface of a code: same sheets (semi-arcs) and one double point
// curve per crossing, so its presentations agree with the code's.
SurfacePresentation spin(const GaussCode& code);

// The marked-curve lift of the spun diagram: one torus per component, one
// closed partnered curve pair per crossing, no curve crossings.
SurfaceGaussCode spin_surface_gauss(const GaussCode& code);

// --- Yoshikawa diagrams ---------------------------------------------------

// The two planar reconnections of a flat 4-valent vertex; Coherent joins
// in-ends to out-ends across the two strands (1i-2o, 2i-1o), NonCoherent
// joins 1i-2i and 1o-2o, reversing part of the traversal.
enum class MarkerPairing { Coherent, NonCoherent };

struct MarkedVertex {
  int id = 0;
  MarkerPairing a = MarkerPairing::Coherent;
  MarkerPairing b = MarkerPairing::NonCoherent;
};

struct YoshikawaElement {
  bool is_marker = false;
  Passage passage{};   // when !is_marker
  int marker = 0;      // when is_marker
  int marker_pass = 0;  // 0 or 1: first or second passage through the marker
};

struct YoshikawaDiagram {
  std::vector<std::vector<YoshikawaElement>> components;
  std::map<int, int> crossings;        // classical crossing signs
  std::map<int, MarkedVertex> markers;
};

enum class SmoothingChoice { A, B };

// Text format: the Gauss-code grammar extended with marker tokens. First
// occurrence "M<id>{A:1i,2o;B:1i,2i}" (no spaces; braces optional, with the
// default A coherent / B non-coherent), second occurrence "M<id>".
YoshikawaDiagram parse_yoshikawa(const std::string& text);
std::string serialize_yoshikawa(const YoshikawaDiagram& yd);
void validate_yoshikawa_diagram(const YoshikawaDiagram& yd);

// Replaces every marked vertex by its chosen pairing and reconnects. The
// classical crossing set is preserved; signs flip where exactly one strand
// of a crossing has its traversal direction reversed by the reconnection.
GaussCode smooth(const YoshikawaDiagram& yd, SmoothingChoice choice);

enum class ScreenStatus { CertifiedTrivial, Indistinguishable, Separated };

struct ScreenVerdict {
  ScreenStatus status = ScreenStatus::Indistinguishable;
  std::string witness;        // for Separated: which invariant differs
  SearchResult path;          // for CertifiedTrivial
};

// Compares every battery invariant against the same-component-count unlink,
// then tries a bounded move search. Never claims nontriviality without a
// separating witness.
ScreenVerdict screen_unlink(const GaussCode& code, std::uint64_t depth);

struct YoshikawaVerdict {
  ScreenVerdict a, b;
  bool accepted = false;  // neither smoothing separated from an unlink
};

YoshikawaVerdict validate_yoshikawa(const YoshikawaDiagram& yd, std::uint64_t depth);

// The additional moves for marked diagrams, shipped as reference data only.
const std::vector<std::pair<std::string, std::string>>& yoshikawa_move_catalog();

}  // namespace vlink
