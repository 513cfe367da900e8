#pragma once

#include "legsurg/classify.hpp"
#include "legsurg/diagram.hpp"
#include "legsurg/front.hpp"
#include "legsurg/surgery.hpp"

#include <string>

namespace legsurg {

struct PresentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parsed presentation file: front word, its traced diagram, and the
// surgery data referring to the traced components.
struct Presentation {
    FrontWord word;
    Diagram diagram;
    SurgeryPresentation surgery;
};

// Sectioned plain-text format with blocks [front], [surgery], [declared],
// [annotations]. The [front] block holds either the word inline or a single
// "file=<path>" line (relative to base_dir). Components are referred to by
// name. [surgery] lines: "<name> +1|-1" plus an optional
// "distinguished <name>". [declared] lines: "<name> key=value ..." with keys
// knot, tau, tau_star, genus, l_space_knot, q, chi, tb_q, rot_q; a global
// "q_scale <k>" line is also accepted. [annotations] lines:
// "fig2_configuration <a> <b>", "fig3_configuration <a> <b>",
// "isolated_summand <host> tb=<r> rot=<r> tau=<r>".
Presentation parse_presentation(const std::string& text, const std::string& base_dir = ".");
Presentation load_presentation_file(const std::string& path);

}  // namespace legsurg
