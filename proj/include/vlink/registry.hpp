#pragma once

#include <string>
#include <utility>
#include <vector>

namespace vlink {

// Library operation -> the CLI subcommand that exposes it. Checked by a
// test: every operation appears exactly once.
inline const std::vector<std::pair<std::string, std::string>>& operation_registry() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"parse_code", "validate"},
      {"serialize_code", "validate"},
      {"semi_arcs", "present"},
      {"arcs", "present"},
      {"mirror", "mirror"},
      {"reverse", "reverse"},
      {"carrier_genus", "genus"},
      {"is_realizable", "genus"},
      {"corpus", "selftest"},
      {"validate_group", "algebra validate"},
      {"validate_quandle", "algebra validate"},
      {"validate_biquandle", "algebra validate"},
      {"dihedral_quandle", "algebra make"},
      {"conjugation_quandle", "algebra make"},
      {"coset_quandle", "algebra make"},
      {"quandle_to_biquandle", "algebra make"},
      {"alexander_biquandle", "algebra make"},
      {"enumerate_biquandles", "algebra enum"},
      {"wirtinger_group", "present"},
      {"quandle_presentation", "present"},
      {"biquandle_presentation", "present"},
      {"presentation_from_surface", "surface present"},
      {"adconj", "present"},
      {"longitude_word", "present"},
      {"simplify", "present"},
      {"count_colorings", "color"},
      {"count_surjective_colorings", "color"},
      {"abelianization_rank", "report"},
      {"battery", "report"},
      {"report", "report"},
      {"enumerate_sites", "moves sites"},
      {"apply_move", "moves apply"},
      {"canonical_form", "moves canon"},
      {"search_equivalence", "moves search"},
      {"validate_surface_gauss", "surface validate"},
      {"spin", "surface spin"},
      {"spin_surface_gauss", "surface sgc"},
      {"smooth", "yoshikawa smooth"},
      {"screen_unlink", "yoshikawa screen"},
      {"validate_yoshikawa", "yoshikawa validate"},
      {"selftest", "selftest"},
  };
  return table;
}

}  // namespace vlink
