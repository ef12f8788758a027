#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlink {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Square operation table over dense elements 0..n-1.
using OpTable = std::vector<std::vector<int>>;

struct FiniteGroup {
  std::string name;
  int order = 0;
  OpTable mul;
  int identity = 0;
  std::vector<int> inverse;

  int op(int a, int b) const { return mul[a][b]; }
  int inv(int a) const { return inverse[a]; }
};

struct FiniteQuandle {
  std::string name;
  int order = 0;
  OpTable star;      // a * b
  OpTable star_inv;  // the inverse in the first argument: star_inv[a][b] * b = a

  int up(int a, int b) const { return star[a][b]; }
  int upbar(int a, int b) const { return star_inv[a][b]; }
};

struct FiniteBiquandle {
  std::string name;
  int order = 0;
  OpTable up;       // a^b
  OpTable down;     // a_b
  OpTable upbar;    // a^{bbar}
  OpTable downbar;  // a_{bbar}
};

// A group G with a subgroup P and an element m of the center of P; the data
// for the coset quandle on P\G.
struct SubgroupWithCenterElement {
  const FiniteGroup* group = nullptr;
  std::vector<int> subgroup;
  int center_element = 0;
};

// One named axiom check; `holds` reports the first violating tuple in
// `detail` when false.
struct AxiomReport {
  std::string axiom;
  bool holds = true;
  std::string detail;
};

std::vector<AxiomReport> group_axiom_reports(const FiniteGroup& g);
std::vector<AxiomReport> quandle_axiom_reports(const OpTable& star);
std::vector<AxiomReport> biquandle_axiom_reports(const FiniteBiquandle& b, bool weak = false);

bool validate_group(const FiniteGroup& g);
bool validate_quandle(const OpTable& star);
bool validate_biquandle(const FiniteBiquandle& b, bool weak = false);

// Builds the derived tables (inverse, star_inv) and checks the axioms.
FiniteGroup make_group(std::string name, OpTable mul);
FiniteQuandle make_quandle(std::string name, OpTable star);

FiniteQuandle dihedral_quandle(int n);
FiniteQuandle conjugation_quandle(const FiniteGroup& g);  // a*b = b^-1 a b
FiniteQuandle coset_quandle(const SubgroupWithCenterElement& ctx);
FiniteBiquandle quandle_to_biquandle(const FiniteQuandle& q);
FiniteBiquandle alexander_biquandle(int n, int s, int t);

// All biquandles of the given order (1..3), up to table isomorphism.
std::vector<FiniteBiquandle> enumerate_biquandles(int order);

bool biquandles_isomorphic(const FiniteBiquandle& a, const FiniteBiquandle& b);

// Built-in groups.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);    // order 2n
FiniteGroup symmetric_group(int n);   // n <= 4 is plenty here
FiniteGroup quaternion_group();       // Q8
FiniteGroup alternating_group_4();
// Every built-in group of order <= max_order (used by validation sweeps).
std::vector<FiniteGroup> builtin_groups(int max_order);

// Table file format: first line "kind order", then the rows of each table,
// tables in fixed order (group: mul; quandle: star; biquandle: up, down,
// upbar, downbar).
enum class TableKind { Group, Quandle, Biquandle };
struct ParsedTable {
  TableKind kind;
  std::optional<FiniteGroup> group;
  std::optional<FiniteQuandle> quandle;
  std::optional<FiniteBiquandle> biquandle;
};
// With validate=false, tables are loaded as-is (with best-effort identity
// and inverse data) so the axiom reporters can name the failing axiom.
ParsedTable parse_table(const std::string& text, bool validate = true);
std::string serialize_group(const FiniteGroup& g);
std::string serialize_quandle(const FiniteQuandle& q);
std::string serialize_biquandle(const FiniteBiquandle& b);

}  // namespace vlink
