// Fixed constructions: the Ceitin presentation with undecidable word
// problem, two Henkin sentences stating that the choice functions satisfy
// its equations (twelve one-to-one rows, and two universals carrying ten
// and eight existentials), and the finiteness / infinity sentences.

#ifndef HENKIN_FIXTURES_HPP
#define HENKIN_FIXTURES_HPP

#include <string>
#include <vector>

#include "henkin/syntax.hpp"
#include "henkin/words.hpp"

namespace henkin::fixtures {

  // A conjunct of a fixture matrix, tagged for diagnostics.
  struct Clause {
    std::string id;
    Formula     formula;
  };

  // ac=ca, ad=da, bc=cb, bd=db, eca=ce, edb=de, cca=ccae.
  Presentation ceitin_presentation();

  // Rows (x_q, y_q), (x'_q, y'_q) for q in a, b, c, d, e, cc.
  HenkinPrefix        ceitin_h12_prefix();
  // psi_a .. psi_cc, phi, phi0 .. phi6: fourteen clauses.
  std::vector<Clause> ceitin_h12_clauses();
  Formula             ceitin_h12();

  // x1 carries y_a y_ca y_da y_b y_cb y_db y_e y_eca y_de y_cca;
  // x2 carries y_c y_ac y_d y_ad y_bc y_bd y'_e y'_cca.
  HenkinPrefix        ceitin_e10_prefix();
  // gamma_1 .. gamma_13, gamma_0123, gamma_4, gamma_5, gamma_6.
  std::vector<Clause> ceitin_e10_clauses();
  Formula             ceitin_e10();

  // The H12 sentence with the separating gadget for q over its unprimed
  // rows, under a first-order block binding the gadget's witnesses.
  // q may only use the letters a..e.
  Formula ceitin_h12_with_query(Equation const& q);

  // exists t . H{ forall x z ; y(x), w(z) } . (y = w <-> x = z) & t != y
  Formula infinity_sentence();
  Formula ehrenfeucht_finiteness();

  struct ClauseStatus {
    std::string id;
    bool        holds;
  };

  // Checks each clause under the witness in which every existential
  // copies its first dependency (or chooses 0 without dependencies), for
  // all assignments of the universals over {0..m-1}.
  std::vector<ClauseStatus> identity_witness_report(
      HenkinPrefix const&        prefix,
      std::vector<Clause> const& clauses,
      std::uint32_t              m);

}  // namespace henkin::fixtures

#endif  // HENKIN_FIXTURES_HPP
